#include "gentle/classify.hpp"

#include <algorithm>
#include <vector>

namespace gentle {

std::string render_normal_form(const NormalForm& form) {
    struct Renderer {
        std::string operator()(const An& f) const {
            return "A_n(" + std::to_string(f.n) + ")";
        }
        std::string operator()(const ATilde& f) const {
            return "A_tilde(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
        }
        std::string operator()(const Lambda& f) const {
            return "Lambda(" + std::to_string(f.r) + "," + std::to_string(f.n) + "," +
                   std::to_string(f.m) + ")";
        }
        std::string operator()(const BeyondOneCycle& f) const {
            return "beyond_one_cycle(cycles=" + std::to_string(f.cycles) + ")";
        }
    };
    return std::visit(Renderer{}, form);
}

namespace {

VertexId other_endpoint(const Quiver& q, ArrowId a, VertexId v) {
    const Arrow& ar = q.arrow(a);
    return ar.source == v ? ar.target : ar.source;
}

}  // namespace

ClockCount clock_condition(const GentlePresentation& p) {
    if (p.cycle_number() != 1) {
        throw NotOneCycleError("clock counts need exactly one cycle, this quiver has " +
                               std::to_string(p.cycle_number()));
    }
    const Quiver& q = p.quiver();

    std::vector<char> vertex_alive(q.vertex_count(), 1);
    std::vector<char> arrow_alive(q.arrow_count(), 1);
    std::vector<std::uint32_t> degree(q.vertex_count(), 0);
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        ++degree[q.arrow(a).source];
        ++degree[q.arrow(a).target];
    }

    std::vector<VertexId> pending;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (degree[v] <= 1) pending.push_back(v);
    }
    while (!pending.empty()) {
        VertexId v = pending.back();
        pending.pop_back();
        if (!vertex_alive[v] || degree[v] > 1) continue;
        vertex_alive[v] = 0;
        for (const auto* list : {&q.arrows_out(v), &q.arrows_in(v)}) {
            for (ArrowId a : *list) {
                if (!arrow_alive[a]) continue;
                arrow_alive[a] = 0;
                VertexId other = other_endpoint(q, a, v);
                --degree[v];
                --degree[other];
                if (vertex_alive[other] && degree[other] <= 1) pending.push_back(other);
            }
        }
    }

    std::vector<ArrowId> alive;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (arrow_alive[a]) alive.push_back(a);
    }
    if (alive.empty()) throw InternalError("one-cycle quiver pruned down to nothing");

    // Walk the remaining simple cycle once and record, per arrow, whether it
    // points along the walk (+1) or against it (-1).
    std::vector<int> walk_dir(q.arrow_count(), 0);
    if (alive.size() == 1) {
        walk_dir[alive.front()] = 1;
    } else {
        auto incident_alive = [&](VertexId v) {
            std::vector<ArrowId> inc;
            for (ArrowId a : q.arrows_out(v)) {
                if (arrow_alive[a]) inc.push_back(a);
            }
            for (ArrowId a : q.arrows_in(v)) {
                if (arrow_alive[a] && q.arrow(a).source != v) inc.push_back(a);
            }
            std::sort(inc.begin(), inc.end());
            return inc;
        };

        VertexId start = 0;
        while (start < q.vertex_count() && !vertex_alive[start]) ++start;
        if (start == q.vertex_count()) throw InternalError("cycle without alive vertices");

        auto first_inc = incident_alive(start);
        if (first_inc.size() != 2) throw InternalError("cycle walk expected degree 2");
        ArrowId prev = first_inc.front();
        walk_dir[prev] = q.arrow(prev).source == start ? 1 : -1;
        VertexId cur = other_endpoint(q, prev, start);
        std::size_t steps = 1;
        while (cur != start) {
            if (++steps > alive.size()) throw InternalError("cycle walk failed to close");
            auto inc = incident_alive(cur);
            if (inc.size() != 2) throw InternalError("cycle walk expected degree 2");
            ArrowId nxt = inc[0] == prev ? inc[1] : inc[0];
            walk_dir[nxt] = q.arrow(nxt).source == cur ? 1 : -1;
            cur = other_endpoint(q, nxt, cur);
            prev = nxt;
        }
        for (ArrowId a : alive) {
            if (walk_dir[a] == 0) throw InternalError("cycle walk missed an arrow");
        }
    }

    ClockCount count;
    for (const Relation& rel : p.relations()) {
        if (!arrow_alive[rel.first] || !arrow_alive[rel.second]) continue;
        int df = walk_dir[rel.first];
        int ds = walk_dir[rel.second];
        if (df == 0 || ds == 0 || df != ds) {
            throw InternalError("relation on the cycle with mixed walk direction");
        }
        if (df > 0) {
            ++count.clockwise;
        } else {
            ++count.counterclockwise;
        }
    }
    return count;
}

NormalForm classify(const GentlePresentation& p) {
    const auto cycles = static_cast<std::uint32_t>(p.cycle_number());
    if (cycles >= 2) return BeyondOneCycle{cycles};

    const auto n0 = static_cast<std::uint32_t>(p.quiver().vertex_count());
    const PhiInvariant phi = compute_phi(p).phi;

    if (cycles == 0) {
        const PhiInvariant expected{{{n0 + 1, n0 - 1}}};
        if (phi != expected) {
            throw InconsistentInvariantError("tree presentation with invariant " +
                                             phi_canonical_text(phi) + ", expected " +
                                             phi_canonical_text(expected));
        }
        return An{n0};
    }

    if (phi.pairs.size() != 2) {
        throw InconsistentInvariantError("one-cycle presentation with invariant " +
                                         phi_canonical_text(phi) +
                                         ", expected exactly two components");
    }
    const ClockCount clock = clock_condition(p);
    const auto& [x1, y1] = phi.pairs[0];
    const auto& [x2, y2] = phi.pairs[1];

    if (x1 == y1 && x2 == y2) {
        ATilde form{std::max(x1, x2), std::min(x1, x2)};
        if (form.p + form.q != n0) {
            throw InconsistentInvariantError(
                "balanced invariant " + phi_canonical_text(phi) +
                " does not add up to the vertex count " + std::to_string(n0));
        }
        if (clock.clockwise != clock.counterclockwise) {
            throw InconsistentInvariantError(
                "balanced invariant " + phi_canonical_text(phi) +
                " with unbalanced cycle relations (" + std::to_string(clock.clockwise) +
                " vs " + std::to_string(clock.counterclockwise) + ")");
        }
        return form;
    }

    const auto* lesser = &phi.pairs[0];
    const auto* greater = &phi.pairs[1];
    if (lesser->first > lesser->second && greater->first < greater->second) {
        std::swap(lesser, greater);
    }
    if (lesser->first >= lesser->second || greater->first <= greater->second) {
        throw InconsistentInvariantError("one-cycle presentation with invariant " +
                                         phi_canonical_text(phi) +
                                         ", which fits no known family");
    }
    Lambda form;
    form.n = lesser->second;
    form.m = greater->second;
    form.r = lesser->second - lesser->first;
    const std::uint32_t r_check = greater->first - greater->second;
    if (form.r != r_check) {
        throw InconsistentInvariantError("invariant " + phi_canonical_text(phi) +
                                         " with mismatched defects " +
                                         std::to_string(form.r) + " and " +
                                         std::to_string(r_check));
    }
    if (form.n + form.m != n0) {
        throw InconsistentInvariantError("invariant " + phi_canonical_text(phi) +
                                         " does not add up to the vertex count " +
                                         std::to_string(n0));
    }
    const std::uint32_t clock_defect = clock.clockwise > clock.counterclockwise
                                           ? clock.clockwise - clock.counterclockwise
                                           : clock.counterclockwise - clock.clockwise;
    if (clock_defect != form.r) {
        throw InconsistentInvariantError(
            "invariant defect " + std::to_string(form.r) +
            " disagrees with the cycle relation defect " + std::to_string(clock_defect));
    }
    return form;
}

GentlePresentation build_family(const NormalForm& form) {
    if (const auto* f = std::get_if<An>(&form)) {
        if (f->n < 1) throw BadParametersError("linear family needs at least one vertex");
        Quiver q("A_" + std::to_string(f->n));
        std::vector<VertexId> vs;
        vs.reserve(f->n);
        for (std::uint32_t i = 1; i <= f->n; ++i) {
            vs.push_back(q.add_vertex("v" + std::to_string(i)));
        }
        for (std::uint32_t i = 1; i < f->n; ++i) {
            q.add_arrow("a" + std::to_string(i), vs[i - 1], vs[i]);
        }
        return build_presentation(std::move(q), {});
    }

    if (const auto* f = std::get_if<ATilde>(&form)) {
        if (f->q < 1 || f->p < f->q) {
            throw BadParametersError("cycle family needs p >= q >= 1");
        }
        const std::uint32_t n = f->p + f->q;
        Quiver q("A_tilde_" + std::to_string(f->p) + "_" + std::to_string(f->q));
        std::vector<VertexId> vs;
        vs.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            vs.push_back(q.add_vertex("c" + std::to_string(i)));
        }
        // Two relation-free directed paths from c0 to cp, of lengths p and q.
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i < f->p) {
                q.add_arrow("a" + std::to_string(i), vs[i], vs[i + 1]);
            } else {
                q.add_arrow("a" + std::to_string(i), vs[(i + 1) % n], vs[i]);
            }
        }
        return build_presentation(std::move(q), {});
    }

    if (const auto* f = std::get_if<Lambda>(&form)) {
        if (f->r < 1 || f->r > f->n) {
            throw BadParametersError("relation count must satisfy 1 <= r <= n");
        }
        const std::uint32_t n = f->n;
        Quiver q("Lambda_" + std::to_string(f->r) + "_" + std::to_string(n) + "_" +
                 std::to_string(f->m));
        std::vector<VertexId> cycle;
        cycle.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            cycle.push_back(q.add_vertex("c" + std::to_string(i)));
        }
        std::vector<ArrowId> arrows;
        arrows.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            arrows.push_back(q.add_arrow("a" + std::to_string(i), cycle[i],
                                         cycle[(i + 1) % n]));
        }
        VertexId hook = cycle[0];
        for (std::uint32_t j = 1; j <= f->m; ++j) {
            VertexId t = q.add_vertex("t" + std::to_string(j));
            q.add_arrow("b" + std::to_string(j), t, hook);
            hook = t;
        }
        // r consecutive zero relations ending at the tail hook c0.
        std::vector<Relation> rels;
        rels.reserve(f->r);
        for (std::uint32_t k = 0; k < f->r; ++k) {
            rels.push_back(Relation{arrows[(n - k) % n], arrows[n - 1 - k]});
        }
        return build_presentation(std::move(q), std::move(rels));
    }

    const auto& f = std::get<BeyondOneCycle>(form);
    throw BadParametersError("no canonical representative for " +
                             render_normal_form(BeyondOneCycle{f.cycles}));
}

EquivalenceResult derived_equivalent(const GentlePresentation& a,
                                     const GentlePresentation& b) {
    EquivalenceResult res;
    res.cycles_a = static_cast<std::uint32_t>(a.cycle_number());
    res.cycles_b = static_cast<std::uint32_t>(b.cycle_number());
    res.phi_a = compute_phi(a).phi;
    res.phi_b = compute_phi(b).phi;

    if (a.quiver().vertex_count() != b.quiver().vertex_count()) {
        res.verdict = Verdict::NotEquivalent;
        res.witness = Witness::VertexCount;
        return res;
    }
    if (a.quiver().arrow_count() != b.quiver().arrow_count()) {
        res.verdict = Verdict::NotEquivalent;
        res.witness = Witness::ArrowCount;
        return res;
    }
    if (!(res.phi_a == res.phi_b)) {
        res.verdict = Verdict::NotEquivalent;
        res.witness = Witness::Phi;
        return res;
    }
    res.verdict = (res.cycles_a <= 1 && res.cycles_b <= 1) ? Verdict::Equivalent
                                                           : Verdict::Indeterminate;
    return res;
}

}  // namespace gentle
