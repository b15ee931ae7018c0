#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "gentle/classify.hpp"
#include "gentle/invariant.hpp"
#include "fixtures.hpp"

using namespace gentle;

namespace {

PhiInvariant phi_of(std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    return PhiInvariant{std::move(pairs)};
}

GentlePresentation two_cycle_all_zero() {
    Quiver q("two_cycle");
    q.add_vertex("u");
    q.add_vertex("v");
    q.add_arrow("g", "u", "v");
    q.add_arrow("d", "v", "u");
    std::vector<Relation> rels = {fixtures::rel(q, "d", "g"), fixtures::rel(q, "g", "d")};
    return build_presentation(std::move(q), std::move(rels));
}

}  // namespace

TEST_CASE("the worked example yields its published invariant") {
    PhiResult r = compute_phi(fixtures::trace_showcase());
    CHECK(r.phi == phi_of({{2, 3}, {2, 4}, {3, 2}}));
    CHECK(phi_canonical_text(r.phi) == "[(2,3),(2,4),(3,2)]");
    CHECK(check_sums(r.phi, fixtures::trace_showcase()));
}

TEST_CASE("the worked example trace lists three runs in seeding order") {
    GentlePresentation p = fixtures::trace_showcase();
    PhiResult r = compute_phi(p);
    REQUIRE(r.trace.runs.size() == 3);
    CHECK(r.trace.runs[0].pair == std::pair<std::uint32_t, std::uint32_t>{2, 3});
    CHECK(r.trace.runs[1].pair == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(r.trace.runs[2].pair == std::pair<std::uint32_t, std::uint32_t>{2, 4});
    CHECK(r.trace.cycles.empty());

    std::string expected =
        "run 1:\n"
        "  H_0 = a9 a3 a2 a1   Pi_0^-1 = a7^-1\n"
        "  H_1 = 1_c           Pi_1^-1 = a5^-1 a6^-1\n"
        "  H_2 = H_0  -> (2,3)\n"
        "run 2:\n"
        "  H_0 = a5 a4   Pi_0^-1 = *\n"
        "  H_1 = a7 a6   Pi_1^-1 = a9^-1\n"
        "  H_2 = 1_g     Pi_2^-1 = a3^-1\n"
        "  H_3 = H_0  -> (3,2)\n"
        "run 3:\n"
        "  H_0 = a8    Pi_0^-1 = *\n"
        "  H_1 = 1_d   Pi_1^-1 = a2^-1 a4^-1 a1^-1 a8^-1\n"
        "  H_2 = H_0  -> (2,4)\n";
    CHECK(render_trace(p.quiver(), r.trace) == expected);
}

TEST_CASE("run records are step local sound") {
    for (const GentlePresentation& p :
         {fixtures::trace_showcase(), fixtures::threads_showcase(), fixtures::equal_phi_a(),
          fixtures::equal_phi_b()}) {
        const Quiver& q = p.quiver();
        PhiResult r = compute_phi(p);
        std::size_t covered = 0;
        for (const TraceRun& run : r.trace.runs) {
            REQUIRE(run.permitted.size() == run.forbidden.size());
            for (std::size_t i = 0; i < run.permitted.size(); ++i) {
                // The partner ends where H_i ends and the next H starts
                // where the partner starts.
                CHECK(run.forbidden[i].end(q) == run.permitted[i].end(q));
                const Thread& next =
                    run.permitted[(i + 1) % run.permitted.size()];
                CHECK(next.start(q) == run.forbidden[i].start(q));
            }
            covered += run.permitted.size();
        }
        CHECK(covered == permitted_threads(p).size());
    }
}

TEST_CASE("small algebras hit their closed form invariants") {
    CHECK(compute_phi(fixtures::kronecker()).phi == phi_of({{1, 1}, {1, 1}}));
    CHECK(compute_phi(fixtures::single_vertex()).phi == phi_of({{2, 0}}));
    CHECK(compute_phi(fixtures::loop_relation()).phi == phi_of({{0, 1}, {1, 0}}));
    CHECK(compute_phi(fixtures::equal_phi_a()).phi == phi_of({{3, 5}}));
    CHECK(compute_phi(fixtures::equal_phi_b()).phi == phi_of({{3, 5}}));
    CHECK(compute_phi(fixtures::threads_showcase()).phi == phi_of({{8, 10}}));
    CHECK(compute_phi(build_family(An{2})).phi == phi_of({{3, 1}}));
    CHECK(compute_phi(build_family(An{5})).phi == phi_of({{6, 4}}));
}

TEST_CASE("relation cycles contribute zero front pairs") {
    GentlePresentation p = two_cycle_all_zero();
    PhiResult r = compute_phi(p);
    CHECK(r.phi == phi_of({{0, 2}, {2, 0}}));
    REQUIRE(r.trace.cycles.size() == 1);
    CHECK(r.trace.cycles[0].first.size() == 2);
    CHECK(r.trace.cycles[0].second == std::pair<std::uint32_t, std::uint32_t>{0, 2});
    CHECK(check_sums(r.phi, p));

    CHECK(relation_cycles(p).size() == 1);
    CHECK(relation_cycles(fixtures::trace_showcase()).empty());
    auto loop_cycles = relation_cycles(fixtures::loop_relation());
    REQUIRE(loop_cycles.size() == 1);
    CHECK(loop_cycles[0].size() == 1);
}

TEST_CASE("check_sums rejects a short multiset") {
    GentlePresentation p = fixtures::trace_showcase();
    CHECK(check_sums(compute_phi(p).phi, p));
    CHECK(!check_sums(phi_of({{3, 2}}), p));
    CHECK(!check_sums(phi_of({{7, 8}}), p));
    CHECK(check_sums(phi_of({{7, 9}}), p));
}

TEST_CASE("canonical text renders pairs compactly and keeps multiplicities") {
    CHECK(phi_canonical_text(phi_of({{2, 3}, {2, 4}, {3, 2}})) == "[(2,3),(2,4),(3,2)]");
    CHECK(phi_canonical_text(phi_of({})) == "[]");
    CHECK(phi_canonical_text(phi_of({{1, 1}, {1, 1}})) == "[(1,1),(1,1)]");
}

TEST_CASE("computed invariants come out in ascending order") {
    for (const GentlePresentation& p :
         {fixtures::trace_showcase(), fixtures::threads_showcase(), fixtures::equal_phi_b(),
          fixtures::loop_relation()}) {
        PhiInvariant phi = compute_phi(p).phi;
        CHECK(std::is_sorted(phi.pairs.begin(), phi.pairs.end()));
    }
}

TEST_CASE("the invariant ignores the seeding order") {
    for (const GentlePresentation& p :
         {fixtures::trace_showcase(), fixtures::threads_showcase(), fixtures::equal_phi_a(),
          fixtures::equal_phi_b(), fixtures::kronecker(), fixtures::single_vertex(),
          fixtures::loop_relation()}) {
        PhiInvariant reference = compute_phi(p).phi;
        std::size_t count = permitted_threads(p).size();
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            auto order = fixtures::shuffled_indices(count, seed);
            CHECK(compute_phi(p, order).phi == reference);
        }
    }
}

TEST_CASE("the invariant ignores labels and declaration order") {
    for (const GentlePresentation& p :
         {fixtures::trace_showcase(), fixtures::threads_showcase(), fixtures::equal_phi_a(),
          fixtures::equal_phi_b(), fixtures::loop_relation()}) {
        PhiInvariant reference = compute_phi(p).phi;
        for (std::uint64_t seed = 11; seed <= 13; ++seed) {
            GentlePresentation copy = fixtures::permuted_copy(p, seed);
            CHECK(compute_phi(copy).phi == reference);
        }
    }
}

TEST_CASE("every permitted thread is seeded exactly once across runs") {
    GentlePresentation p = fixtures::threads_showcase();
    PhiResult r = compute_phi(p);
    std::size_t total = 0;
    for (const TraceRun& run : r.trace.runs) total += run.permitted.size();
    CHECK(total == permitted_threads(p).size());
    std::uint32_t n_sum = 0;
    std::uint32_t m_sum = 0;
    for (const auto& [n, m] : r.phi.pairs) {
        n_sum += n;
        m_sum += m;
    }
    CHECK(n_sum == permitted_threads(p).size());
    CHECK(m_sum == p.quiver().arrow_count());
}
