// Acceptance gate for the gentle-algebra invariant library. Each criterion
// prints one PASS/FAIL line; the process exits nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gentle/classify.hpp"
#include "gentle/cli.hpp"
#include "gentle/generate.hpp"
#include "gentle/invariant.hpp"
#include "gentle/io.hpp"
#include "gentle/repetitive.hpp"
#include "gentle/threads.hpp"
#include "fixtures.hpp"

using namespace gentle;

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

PhiInvariant phi_of(std::vector<Pair> pairs) { return PhiInvariant{std::move(pairs)}; }

Thread make_thread(const Quiver& q, ThreadKind kind, const std::vector<const char*>& labels) {
    Thread t;
    t.kind = kind;
    for (const char* label : labels) t.body.push_back(q.find_arrow(label).value());
    return t;
}

Thread make_trivial(const Quiver& q, ThreadKind kind, const char* vertex) {
    Thread t;
    t.kind = kind;
    t.at = q.find_vertex(vertex).value();
    return t;
}

/// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }

    void expect_phi(const PhiInvariant& got, const PhiInvariant& want,
                    const std::string& what) {
        if (!(got == want)) {
            failures.push_back(what + ": got " + phi_canonical_text(got) + ", want " +
                               phi_canonical_text(want));
        }
    }
};

/// Samples with a deterministic retry ladder so one unlucky seed cannot
/// sink a corpus criterion; every retry seed is fixed in advance.
GentlePresentation sample_with_retries(GeneratorParams params, Check& check,
                                       const std::string& what) {
    const std::uint64_t base = params.seed;
    for (int k = 0; k < 5; ++k) {
        params.seed = base + static_cast<std::uint64_t>(k) * 100000;
        try {
            return random_gentle(params);
        } catch (const GenerationFailedError&) {
            continue;
        }
    }
    check.expect(false, what + ": no sample after 5 seed retries");
    return build_family(An{1});
}

const char* kTraceGolden =
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

// ---------------------------------------------------------------------------

Check worked_example_invariant_and_trace() {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();

    GentlePresentation p =
        presentation_from_file(fixtures::fixture_path("trace_showcase"));
    check.expect_phi(compute_phi(p).phi, phi_of({{2, 3}, {2, 4}, {3, 2}}),
                     "invariant of the worked example");

    std::ostringstream out;
    std::ostringstream err;
    int code = cli_main({"phi", "--trace", fixtures::fixture_path("trace_showcase")}, out,
                        err);
    check.expect(code == 0, "phi --trace exited with code " + std::to_string(code));
    const std::string want = std::string("[(2,3),(2,4),(3,2)]\n") + kTraceGolden;
    check.expect(out.str() == want, "trace output differs from the published protocol");

    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    check.expect(ms < 1000.0, "took " + std::to_string(ms) + " ms, bound is 1000");
    return check;
}

Check thread_inventory_of_the_showcase() {
    Check check;
    GentlePresentation p = fixtures::threads_showcase();
    const Quiver& q = p.quiver();

    const std::vector<Thread> expected = {
        make_thread(q, ThreadKind::Permitted, {"a1"}),
        make_thread(q, ThreadKind::Permitted, {"a2", "a9", "a10", "a4"}),
        make_thread(q, ThreadKind::Permitted, {"a3", "a5", "a6"}),
        make_thread(q, ThreadKind::Permitted, {"a7"}),
        make_thread(q, ThreadKind::Permitted, {"a8"}),
        make_trivial(q, ThreadKind::Permitted, "v1"),
        make_trivial(q, ThreadKind::Permitted, "v5"),
        make_trivial(q, ThreadKind::Permitted, "v7"),
    };
    std::vector<Thread> got = permitted_threads(p);
    check.expect(got.size() == expected.size(),
                 "expected 8 permitted threads, got " + std::to_string(got.size()));
    check.expect(got == expected, "permitted threads differ from the published list");
    for (const Thread& t : expected) {
        check.expect(std::count(got.begin(), got.end(), t) == 1,
                     "thread " + render_thread(q, t) + " missing or duplicated");
    }
    return check;
}

Check equal_invariant_pair_stays_indeterminate() {
    Check check;
    GentlePresentation a = fixtures::equal_phi_a();
    GentlePresentation b = fixtures::equal_phi_b();
    check.expect_phi(compute_phi(a).phi, phi_of({{3, 5}}), "first of the equal pair");
    check.expect_phi(compute_phi(b).phi, phi_of({{3, 5}}), "second of the equal pair");

    EquivalenceResult res = derived_equivalent(a, b);
    check.expect(res.verdict == Verdict::Indeterminate,
                 "verdict is not indeterminate");
    check.expect(res.cycles_a == 2 && res.cycles_b == 2,
                 "cycle numbers are " + std::to_string(res.cycles_a) + " and " +
                     std::to_string(res.cycles_b) + ", want 2 and 2");
    return check;
}

Check random_tree_invariants() {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    const double densities[] = {0.0, 0.25, 0.5, 0.75, 1.0};

    for (int i = 0; i < 200; ++i) {
        GeneratorParams params;
        params.vertex_count = 1 + static_cast<std::uint32_t>(i % 12);
        params.cycle_target = 0;
        params.relation_density = densities[i % 5];
        params.seed = 500 + static_cast<std::uint64_t>(i);
        GentlePresentation p = random_gentle(params);
        const std::uint32_t n = params.vertex_count;
        check.expect_phi(compute_phi(p).phi, phi_of({{n + 1, n - 1}}),
                         "tree seed " + std::to_string(params.seed) + " on " +
                             std::to_string(n) + " vertices");
        if (!check.failures.empty()) break;
    }

    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    check.expect(ms < 5000.0, "took " + std::to_string(ms) + " ms, bound is 5000");
    return check;
}

Check family_closed_forms_and_classification() {
    Check check;

    for (std::uint32_t p = 1; p <= 11; ++p) {
        for (std::uint32_t q = 1; q <= p && p + q <= 12; ++q) {
            GentlePresentation rep = build_family(ATilde{p, q});
            check.expect_phi(compute_phi(rep).phi, phi_of({{q, q}, {p, p}}),
                             "two-path cycle (" + std::to_string(p) + "," +
                                 std::to_string(q) + ")");
            check.expect(classify(rep) == NormalForm{ATilde{p, q}},
                         "classification does not invert the (" + std::to_string(p) + "," +
                             std::to_string(q) + ") cycle representative");
        }
    }

    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (std::uint32_t r = 1; r <= n; ++r) {
            for (std::uint32_t m = 0; m <= 4; ++m) {
                GentlePresentation rep = build_family(Lambda{r, n, m});
                std::vector<Pair> want = {{n - r, n}, {r + m, m}};
                std::sort(want.begin(), want.end());
                const std::string name = "relation cycle (" + std::to_string(r) + "," +
                                         std::to_string(n) + "," + std::to_string(m) + ")";
                check.expect_phi(compute_phi(rep).phi, phi_of(want), name);
                check.expect(classify(rep) == NormalForm{Lambda{r, n, m}},
                             "classification does not invert the " + name +
                                 " representative");
            }
        }
    }
    return check;
}

std::vector<GentlePresentation> the_corpus;  // filled by the agreement criterion

Check oracle_agreement_corpus() {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    const double densities[] = {0.0, 0.25, 0.5, 0.75, 1.0};

    the_corpus.clear();
    the_corpus.reserve(300);
    for (int i = 0; i < 300; ++i) {
        GeneratorParams params;
        params.vertex_count = 1 + static_cast<std::uint32_t>(i % 10);
        params.cycle_target =
            std::min<std::uint32_t>((static_cast<std::uint32_t>(i) / 10) % 4,
                                    params.vertex_count);
        params.relation_density = densities[i % 5];
        params.seed = 1000 + static_cast<std::uint64_t>(i);
        const std::string name = "corpus instance " + std::to_string(i);
        GentlePresentation p = sample_with_retries(params, check, name);
        if (!check.failures.empty()) break;

        PhiInvariant phi = compute_phi(p).phi;
        PhiInvariant oracle = compute_N(p);
        if (!(phi == oracle)) {
            check.expect(false, name + ": walk gives " + phi_canonical_text(phi) +
                                    ", orbits give " + phi_canonical_text(oracle));
            break;
        }
        check.expect(check_sums(phi, p), name + ": component sums are off");
        the_corpus.push_back(std::move(p));
    }

    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    check.expect(ms < 60000.0, "took " + std::to_string(ms) + " ms, bound is 60000");
    return check;
}

Check small_algebra_pins() {
    Check check;

    GentlePresentation kron = fixtures::kronecker();
    check.expect_phi(compute_phi(kron).phi, phi_of({{1, 1}, {1, 1}}), "double arrow");
    check.expect(classify(kron) == NormalForm{ATilde{1, 1}},
                 "double arrow classifies as " + render_normal_form(classify(kron)));

    check.expect_phi(compute_phi(fixtures::single_vertex()).phi, phi_of({{2, 0}}),
                     "single vertex");

    // The loop value was produced by the orbit oracle first; the walk must
    // reproduce it as a frozen expectation.
    GentlePresentation loop = fixtures::loop_relation();
    PhiInvariant oracle = compute_N(loop);
    check.expect_phi(oracle, phi_of({{0, 1}, {1, 0}}), "loop orbit decomposition");
    check.expect_phi(compute_phi(loop).phi, oracle, "loop matching walk vs orbits");
    return check;
}

Check seed_order_and_relabeling_invariance() {
    Check check;
    const double densities[] = {0.0, 0.25, 0.5, 0.75, 1.0};

    for (int i = 0; i < 50; ++i) {
        GeneratorParams params;
        params.vertex_count = 2 + static_cast<std::uint32_t>(i % 9);
        params.cycle_target =
            std::min<std::uint32_t>(static_cast<std::uint32_t>(i) % 3, params.vertex_count);
        params.relation_density = densities[i % 5];
        params.seed = 3000 + static_cast<std::uint64_t>(i);
        const std::string name = "invariance instance " + std::to_string(i);
        GentlePresentation p = sample_with_retries(params, check, name);
        if (!check.failures.empty()) break;

        const PhiInvariant base = compute_phi(p).phi;
        const std::size_t count = permitted_threads(p).size();
        for (int s = 0; s < 10; ++s) {
            auto order = fixtures::shuffled_indices(
                count, 77 + static_cast<std::uint64_t>(13 * s + i));
            PhiInvariant shuffled = compute_phi(p, order).phi;
            if (!(shuffled == base)) {
                check.expect(false, name + ": seed order " + std::to_string(s) +
                                        " gives " + phi_canonical_text(shuffled) +
                                        " instead of " + phi_canonical_text(base));
                break;
            }
        }
        GentlePresentation renamed =
            fixtures::permuted_copy(p, 9000 + static_cast<std::uint64_t>(i));
        check.expect_phi(compute_phi(renamed).phi, base, name + " after relabeling");
        if (!check.failures.empty()) break;
    }
    return check;
}

Check sign_constraints_across_the_corpus() {
    Check check;
    check.expect(!the_corpus.empty(), "agreement corpus was not built");

    for (std::size_t i = 0; i < the_corpus.size(); ++i) {
        const GentlePresentation& p = the_corpus[i];
        const std::string name = "corpus instance " + std::to_string(i);
        SignAssignment sa = assign_signs(p);
        auto violations = sign_violations(p, sa);
        if (!violations.empty()) {
            check.expect(false, name + ": " + violations.front());
            break;
        }

        ThreadTable table(p);
        for (const Thread& h : table.permitted()) {
            const Thread& pi = table.match_end(h);
            if (!h.trivial() && !pi.trivial()) {
                if (thread_signs(p, sa, h).second != -thread_signs(p, sa, pi).second) {
                    check.expect(false, name + ": matched pair without eps opposition");
                    break;
                }
            }
            const Thread& next = table.match_start(pi);
            if (!pi.trivial() && !next.trivial()) {
                if (thread_signs(p, sa, next).first != -thread_signs(p, sa, pi).first) {
                    check.expect(false, name + ": matched pair without sigma opposition");
                    break;
                }
            }
        }
        if (!check.failures.empty()) break;
    }
    return check;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {"worked example invariant and trace", worked_example_invariant_and_trace},
        {"thread inventory of the showcase", thread_inventory_of_the_showcase},
        {"equal-invariant pair stays indeterminate",
         equal_invariant_pair_stays_indeterminate},
        {"random tree invariants", random_tree_invariants},
        {"family closed forms and classification",
         family_closed_forms_and_classification},
        {"oracle agreement corpus", oracle_agreement_corpus},
        {"small algebra pins", small_algebra_pins},
        {"seed order and relabeling invariance", seed_order_and_relabeling_invariance},
        {"sign constraints across the corpus", sign_constraints_across_the_corpus},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Check result;
        double ms = 0.0;
        try {
            const auto t0 = std::chrono::steady_clock::now();
            result = criterion.run();
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           t0)
                     .count();
        } catch (const std::exception& e) {
            result.failures.push_back(std::string("unexpected exception: ") + e.what());
        }
        if (result.failures.empty()) {
            std::cout << "PASS  " << criterion.name << "  (" << std::fixed
                      << std::setprecision(1) << ms << " ms)\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << criterion.name << "\n";
            for (const std::string& f : result.failures) {
                std::cout << "      " << f << "\n";
            }
        }
    }
    if (failed == 0) {
        std::cout << "all 9 acceptance criteria pass\n";
        return 0;
    }
    std::cout << failed << " criterion(s) failed\n";
    return 1;
}
