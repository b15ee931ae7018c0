#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/generate.hpp"
#include "gentle/quiver.hpp"

namespace gentle::fixtures {

inline Relation rel(const Quiver& q, const char* second, const char* first) {
    return Relation{q.find_arrow(second).value(), q.find_arrow(first).value()};
}

/// Eight vertices, two independent cycles, three matching runs of different
/// shapes. phi = [(2,3),(2,4),(3,2)].
inline GentlePresentation trace_showcase() {
    Quiver q("trace_showcase");
    for (const char* v : {"a", "b", "c", "d", "e", "f", "g", "h"}) q.add_vertex(v);
    q.add_arrow("a1", "a", "e");
    q.add_arrow("a2", "e", "f");
    q.add_arrow("a3", "f", "g");
    q.add_arrow("a4", "f", "a");
    q.add_arrow("a5", "a", "b");
    q.add_arrow("a6", "b", "c");
    q.add_arrow("a7", "c", "h");
    q.add_arrow("a8", "e", "d");
    q.add_arrow("a9", "g", "h");
    std::vector<Relation> rels = {rel(q, "a1", "a4"), rel(q, "a4", "a2"),
                                  rel(q, "a8", "a1"), rel(q, "a6", "a5")};
    return build_presentation(std::move(q), std::move(rels));
}

/// Nine vertices, ten arrows, eight permitted threads; the example whose
/// published sign table the sign tests pin down.
inline GentlePresentation threads_showcase() {
    Quiver q("threads_showcase");
    for (const char* v : {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"}) {
        q.add_vertex(v);
    }
    q.add_arrow("a1", "v1", "v2");
    q.add_arrow("a2", "v2", "v3");
    q.add_arrow("a3", "v3", "v4");
    q.add_arrow("a4", "v4", "v8");
    q.add_arrow("a5", "v4", "v5");
    q.add_arrow("a6", "v5", "v6");
    q.add_arrow("a7", "v9", "v8");
    q.add_arrow("a8", "v9", "v6");
    q.add_arrow("a9", "v3", "v7");
    q.add_arrow("a10", "v7", "v4");
    std::vector<Relation> rels = {rel(q, "a4", "a3"), rel(q, "a5", "a10"),
                                  rel(q, "a3", "a2"), rel(q, "a2", "a1")};
    return build_presentation(std::move(q), std::move(rels));
}

/// First member of the equal-invariant pair: a double arrow into a fork.
/// phi = [(3,5)] with cycle number 2.
inline GentlePresentation equal_phi_a() {
    Quiver q("equal_phi_a");
    for (const char* v : {"v1", "v2", "v3", "v4"}) q.add_vertex(v);
    q.add_arrow("a1", "v1", "v2");
    q.add_arrow("a2", "v1", "v2");
    q.add_arrow("a3", "v2", "v3");
    q.add_arrow("a4", "v2", "v4");
    q.add_arrow("a5", "v3", "v4");
    std::vector<Relation> rels = {rel(q, "a3", "a1"), rel(q, "a4", "a2"),
                                  rel(q, "a5", "a3")};
    return build_presentation(std::move(q), std::move(rels));
}

/// Second member of the pair: a directed 4-cycle with a doubled edge and a
/// four-relation chain. Same invariant, not known to be derived equivalent
/// to equal_phi_a.
inline GentlePresentation equal_phi_b() {
    Quiver q("equal_phi_b");
    for (const char* v : {"v1", "v2", "v3", "v4"}) q.add_vertex(v);
    q.add_arrow("b1", "v1", "v2");
    q.add_arrow("b2", "v2", "v4");
    q.add_arrow("b3", "v2", "v4");
    q.add_arrow("b4", "v3", "v1");
    q.add_arrow("b5", "v4", "v3");
    std::vector<Relation> rels = {rel(q, "b4", "b5"), rel(q, "b1", "b4"),
                                  rel(q, "b2", "b1"), rel(q, "b5", "b3")};
    return build_presentation(std::move(q), std::move(rels));
}

/// Two parallel arrows, no relations. phi = [(1,1),(1,1)].
inline GentlePresentation kronecker() {
    Quiver q("kronecker");
    q.add_vertex("v1");
    q.add_vertex("v2");
    q.add_arrow("a", "v1", "v2");
    q.add_arrow("b", "v1", "v2");
    return build_presentation(std::move(q), {});
}

/// One vertex, no arrows. phi = [(2,0)].
inline GentlePresentation single_vertex() {
    Quiver q("single_vertex");
    q.add_vertex("v");
    return build_presentation(std::move(q), {});
}

/// One loop whose square is zero. phi = [(0,1),(1,0)].
inline GentlePresentation loop_relation() {
    Quiver q("loop_relation");
    q.add_vertex("v");
    q.add_arrow("a", "v", "v");
    std::vector<Relation> rels = {rel(q, "a", "a")};
    return build_presentation(std::move(q), std::move(rels));
}

inline std::vector<std::size_t> shuffled_indices(std::size_t count, std::uint64_t seed) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    XorShift64Star rng(seed);
    for (std::size_t i = count; i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    return order;
}

/// Structurally identical presentation with vertices and arrows renamed and
/// re-declared in a seed-dependent order. Invariants must not change.
inline GentlePresentation permuted_copy(const GentlePresentation& p, std::uint64_t seed) {
    const Quiver& q = p.quiver();
    std::vector<std::size_t> vperm = shuffled_indices(q.vertex_count(), seed);
    std::vector<std::size_t> aperm = shuffled_indices(q.arrow_count(), seed ^ 0x5bd1e995ULL);

    Quiver out(q.name() + "_relabeled");
    std::vector<VertexId> new_vertex(q.vertex_count());
    for (std::size_t i = 0; i < vperm.size(); ++i) {
        new_vertex[vperm[i]] = out.add_vertex("w" + std::to_string(i + 1));
    }
    std::vector<ArrowId> new_arrow(q.arrow_count());
    for (std::size_t i = 0; i < aperm.size(); ++i) {
        const Arrow& a = q.arrow(static_cast<ArrowId>(aperm[i]));
        new_arrow[aperm[i]] = out.add_arrow("c" + std::to_string(i + 1),
                                            new_vertex[a.source], new_vertex[a.target]);
    }
    std::vector<Relation> rels;
    rels.reserve(p.relations().size());
    for (std::size_t i : shuffled_indices(p.relations().size(), seed ^ 0x9e3779b9ULL)) {
        const Relation& r = p.relations()[i];
        rels.push_back(Relation{new_arrow[r.second], new_arrow[r.first]});
    }
    return build_presentation(std::move(out), std::move(rels));
}

/// Directory holding the .quiver twins of the fixtures above, exported by
/// the test harness.
inline std::string fixture_dir() {
    const char* dir = std::getenv("GENTLE_FIXTURE_DIR");
    if (dir == nullptr || *dir == '\0') {
        throw std::runtime_error("GENTLE_FIXTURE_DIR is not set");
    }
    return dir;
}

inline std::string fixture_path(const std::string& name) {
    return fixture_dir() + "/" + name + ".quiver";
}

}  // namespace gentle::fixtures
