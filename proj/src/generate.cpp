#include "gentle/generate.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace gentle {

std::uint64_t XorShift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ULL;
}

std::uint64_t XorShift64Star::below(std::uint64_t n) {
    if (n == 0) throw InternalError("cannot sample below zero");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % n;
}

bool XorShift64Star::chance(double prob) {
    if (prob <= 0.0) return false;
    if (prob >= 1.0) return true;
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < prob;
}

namespace {

struct DraftArrow {
    VertexId source = 0;
    VertexId target = 0;
};

/// One sampling round. Returns nothing when the draft ran into a dead end:
/// no vertex with free degree slots, or a relation-free cycle that no
/// reclassification can break.
std::optional<GentlePresentation> try_sample(const GeneratorParams& params,
                                             XorShift64Star& rng) {
    const std::uint32_t n = params.vertex_count;
    std::vector<DraftArrow> arrows;
    std::vector<std::uint32_t> out_deg(n, 0);
    std::vector<std::uint32_t> in_deg(n, 0);

    for (VertexId v = 1; v < n; ++v) {
        std::vector<VertexId> candidates;
        for (VertexId u = 0; u < v; ++u) {
            if (out_deg[u] < 2 || in_deg[u] < 2) candidates.push_back(u);
        }
        if (candidates.empty()) return std::nullopt;
        VertexId u = candidates[rng.below(candidates.size())];
        const bool can_out = out_deg[u] < 2;
        const bool can_in = in_deg[u] < 2;
        if (can_out && (!can_in || rng.chance(0.5))) {
            arrows.push_back(DraftArrow{u, v});
            ++out_deg[u];
            ++in_deg[v];
        } else {
            arrows.push_back(DraftArrow{v, u});
            ++out_deg[v];
            ++in_deg[u];
        }
    }
    for (std::uint32_t k = 0; k < params.cycle_target; ++k) {
        std::vector<VertexId> sources;
        std::vector<VertexId> targets;
        for (VertexId v = 0; v < n; ++v) {
            if (out_deg[v] < 2) sources.push_back(v);
            if (in_deg[v] < 2) targets.push_back(v);
        }
        if (sources.empty() || targets.empty()) return std::nullopt;
        VertexId s = sources[rng.below(sources.size())];
        VertexId t = targets[rng.below(targets.size())];
        arrows.push_back(DraftArrow{s, t});
        ++out_deg[s];
        ++in_deg[t];
    }

    const auto arrow_count = static_cast<ArrowId>(arrows.size());
    std::vector<std::vector<ArrowId>> outs(n);
    std::vector<std::vector<ArrowId>> ins(n);
    for (ArrowId a = 0; a < arrow_count; ++a) {
        outs[arrows[a].source].push_back(a);
        ins[arrows[a].target].push_back(a);
    }

    std::vector<std::pair<ArrowId, ArrowId>> rels;  // (second, first)
    std::vector<std::optional<ArrowId>> perm_succ(arrow_count);
    std::vector<std::optional<ArrowId>> rel_succ(arrow_count);
    std::vector<std::optional<ArrowId>> rel_pred(arrow_count);
    auto set_perm = [&](ArrowId first, ArrowId second) { perm_succ[first] = second; };
    auto set_rel = [&](ArrowId first, ArrowId second) {
        rel_succ[first] = second;
        rel_pred[second] = first;
        rels.emplace_back(second, first);
    };

    // Classify every length-two composition as permitted or zero. Where one
    // side has two arrows, each arrow on the other side must take exactly
    // one of each; a loop composed with itself must be zero, which forces
    // the split at its vertex.
    for (VertexId v = 0; v < n; ++v) {
        const auto& in = ins[v];
        const auto& out = outs[v];
        if (in.empty() || out.empty()) continue;
        if (in.size() == 1 && out.size() == 1) {
            if (in[0] == out[0] || rng.chance(params.relation_density)) {
                set_rel(in[0], out[0]);
            } else {
                set_perm(in[0], out[0]);
            }
        } else if (in.size() == 1) {
            const ArrowId a = in[0];
            std::size_t rel_idx;
            if (a == out[0]) {
                rel_idx = 0;
            } else if (a == out[1]) {
                rel_idx = 1;
            } else {
                rel_idx = static_cast<std::size_t>(rng.below(2));
            }
            set_rel(a, out[rel_idx]);
            set_perm(a, out[1 - rel_idx]);
        } else if (out.size() == 1) {
            const ArrowId b = out[0];
            std::size_t rel_idx;
            if (b == in[0]) {
                rel_idx = 0;
            } else if (b == in[1]) {
                rel_idx = 1;
            } else {
                rel_idx = static_cast<std::size_t>(rng.below(2));
            }
            set_rel(in[rel_idx], b);
            set_perm(in[1 - rel_idx], b);
        } else {
            bool straight;
            if (in[0] == out[0] || in[1] == out[1]) {
                straight = true;
            } else if (in[0] == out[1] || in[1] == out[0]) {
                straight = false;
            } else {
                straight = rng.chance(0.5);
            }
            if (straight) {
                set_rel(in[0], out[0]);
                set_rel(in[1], out[1]);
                set_perm(in[0], out[1]);
                set_perm(in[1], out[0]);
            } else {
                set_rel(in[0], out[1]);
                set_rel(in[1], out[0]);
                set_perm(in[0], out[0]);
                set_perm(in[1], out[1]);
            }
        }
    }

    // A directed cycle of permitted compositions would make the algebra
    // infinite dimensional. Break each one by turning some composition on
    // it into a zero relation; that is only legal where neither arrow
    // already carries a relation on the affected side.
    auto break_cycle = [&](const std::vector<ArrowId>& cycle) {
        for (ArrowId x : cycle) {
            const ArrowId y = *perm_succ[x];
            if (!rel_succ[x] && !rel_pred[y]) {
                perm_succ[x] = std::nullopt;
                set_rel(x, y);
                return true;
            }
        }
        return false;
    };
    std::vector<int> color(arrow_count, 0);
    for (ArrowId a0 = 0; a0 < arrow_count; ++a0) {
        if (color[a0] != 0) continue;
        std::vector<ArrowId> path;
        ArrowId cur = a0;
        while (true) {
            if (color[cur] == 1) {
                auto it = std::find(path.begin(), path.end(), cur);
                if (!break_cycle(std::vector<ArrowId>(it, path.end()))) return std::nullopt;
                break;
            }
            if (color[cur] == 2) break;
            color[cur] = 1;
            path.push_back(cur);
            if (!perm_succ[cur]) break;
            cur = *perm_succ[cur];
        }
        for (ArrowId a : path) color[a] = 2;
    }

    Quiver q("sample_" + std::to_string(params.seed));
    for (VertexId v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v + 1));
    for (ArrowId a = 0; a < arrow_count; ++a) {
        q.add_arrow("a" + std::to_string(a + 1), arrows[a].source, arrows[a].target);
    }
    std::vector<Relation> relations;
    relations.reserve(rels.size());
    for (const auto& [second, first] : rels) relations.push_back(Relation{second, first});
    return build_presentation(std::move(q), std::move(relations));
}

}  // namespace

GentlePresentation random_gentle(const GeneratorParams& params) {
    const std::uint32_t n = params.vertex_count;
    if (n == 0) {
        throw GenerationFailedError("need at least one vertex", 0);
    }
    if (params.relation_density < 0.0 || params.relation_density > 1.0) {
        throw GenerationFailedError("relation density must lie in [0,1]", 0);
    }
    const std::uint64_t wanted = static_cast<std::uint64_t>(n) - 1 + params.cycle_target;
    if (wanted > 2ULL * n) {
        throw GenerationFailedError("a gentle quiver on " + std::to_string(n) +
                                        " vertices holds at most " + std::to_string(2 * n) +
                                        " arrows, cannot fit " + std::to_string(wanted),
                                    0);
    }

    XorShift64Star rng(params.seed);
    constexpr std::size_t kAttempts = 64;
    for (std::size_t attempt = 1; attempt <= kAttempts; ++attempt) {
        if (auto p = try_sample(params, rng)) return std::move(*p);
    }
    throw GenerationFailedError(
        "no gentle presentation with " + std::to_string(n) + " vertices and cycle number " +
            std::to_string(params.cycle_target) + " found after " +
            std::to_string(kAttempts) + " attempts",
        kAttempts);
}

}  // namespace gentle
