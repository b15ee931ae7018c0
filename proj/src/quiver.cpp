#include "gentle/quiver.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace gentle {

VertexId Quiver::add_vertex(std::string label) {
    if (vertex_index_.count(label) != 0) {
        throw DuplicateLabelError("duplicate vertex label '" + label + "'");
    }
    auto id = static_cast<VertexId>(vertex_labels_.size());
    vertex_index_.emplace(label, id);
    vertex_labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

ArrowId Quiver::add_arrow(std::string label, std::string_view source, std::string_view target) {
    auto s = find_vertex(source);
    if (!s) {
        throw UnknownEndpointError("arrow '" + label + "': unknown source vertex '" +
                                   std::string(source) + "'");
    }
    auto t = find_vertex(target);
    if (!t) {
        throw UnknownEndpointError("arrow '" + label + "': unknown target vertex '" +
                                   std::string(target) + "'");
    }
    return add_arrow(std::move(label), *s, *t);
}

ArrowId Quiver::add_arrow(std::string label, VertexId source, VertexId target) {
    if (source >= vertex_count() || target >= vertex_count()) {
        throw UnknownEndpointError("arrow '" + label + "': endpoint id out of range");
    }
    if (arrow_index_.count(label) != 0) {
        throw DuplicateLabelError("duplicate arrow label '" + label + "'");
    }
    auto id = static_cast<ArrowId>(arrows_.size());
    arrow_index_.emplace(label, id);
    arrows_.push_back(Arrow{std::move(label), source, target});
    out_[source].push_back(id);
    in_[target].push_back(id);
    return id;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view label) const {
    auto it = vertex_index_.find(std::string(label));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view label) const {
    auto it = arrow_index_.find(std::string(label));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

bool Quiver::connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        auto visit = [&](VertexId w) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        };
        for (ArrowId a : out_[v]) visit(arrows_[a].target);
        for (ArrowId a : in_[v]) visit(arrows_[a].source);
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

namespace {

std::string arrow_ref(const Quiver& q, ArrowId a) {
    return "'" + q.arrow(a).label + "'";
}

std::string vertex_ref(const Quiver& q, VertexId v) {
    return "'" + q.vertex_label(v) + "'";
}

}  // namespace

std::vector<ValidationIssue> validate_gentle(const Quiver& quiver,
                                             const std::vector<Relation>& relations) {
    std::vector<ValidationIssue> issues;
    auto add = [&](std::string code, std::string message) {
        issues.push_back(ValidationIssue{std::move(code), std::move(message)});
    };

    if (quiver.vertex_count() == 0) {
        add("empty-quiver", "a presentation needs at least one vertex");
        return issues;
    }

    const auto arrow_count = quiver.arrow_count();
    std::vector<Relation> usable;
    std::set<std::pair<ArrowId, ArrowId>> seen_rels;
    for (const auto& r : relations) {
        if (r.second >= arrow_count || r.first >= arrow_count) {
            add("unknown-arrow", "relation references an arrow id out of range");
            continue;
        }
        if (quiver.arrow(r.second).source != quiver.arrow(r.first).target) {
            add("non-composable-relation",
                "relation " + arrow_ref(quiver, r.second) + " * " + arrow_ref(quiver, r.first) +
                    " does not compose: " + arrow_ref(quiver, r.first) + " ends at " +
                    vertex_ref(quiver, quiver.arrow(r.first).target) + " but " +
                    arrow_ref(quiver, r.second) + " starts at " +
                    vertex_ref(quiver, quiver.arrow(r.second).source));
            continue;
        }
        if (!seen_rels.insert({r.second, r.first}).second) {
            add("duplicate-relation", "relation " + arrow_ref(quiver, r.second) + " * " +
                                          arrow_ref(quiver, r.first) + " is declared twice");
            continue;
        }
        usable.push_back(r);
    }

    for (VertexId v = 0; v < quiver.vertex_count(); ++v) {
        if (quiver.arrows_out(v).size() > 2) {
            add("out-degree", "vertex " + vertex_ref(quiver, v) + " has " +
                                  std::to_string(quiver.arrows_out(v).size()) +
                                  " outgoing arrows; at most 2 allowed");
        }
        if (quiver.arrows_in(v).size() > 2) {
            add("in-degree", "vertex " + vertex_ref(quiver, v) + " has " +
                                 std::to_string(quiver.arrows_in(v).size()) +
                                 " incoming arrows; at most 2 allowed");
        }
    }

    auto in_rels = [&](ArrowId second, ArrowId first) {
        return seen_rels.count({second, first}) != 0;
    };

    // Uniqueness of the four partial successor/predecessor maps. Arrows b
    // with source(b) == target(a) split into relation-free ("permitted")
    // and relation ("forbidden") continuations of a; gentleness demands at
    // most one of each, in both directions.
    for (ArrowId a = 0; a < arrow_count; ++a) {
        std::vector<ArrowId> perm_succ, rel_succ, perm_pred, rel_pred;
        VertexId head = quiver.arrow(a).target;
        for (ArrowId b : quiver.arrows_out(head)) {
            (in_rels(b, a) ? rel_succ : perm_succ).push_back(b);
        }
        VertexId tail = quiver.arrow(a).source;
        for (ArrowId b : quiver.arrows_in(tail)) {
            (in_rels(a, b) ? rel_pred : perm_pred).push_back(b);
        }
        auto list = [&](const std::vector<ArrowId>& v) {
            std::string s;
            for (ArrowId b : v) {
                if (!s.empty()) s += ", ";
                s += arrow_ref(quiver, b);
            }
            return s;
        };
        if (perm_succ.size() > 1) {
            add("permitted-branching", "arrow " + arrow_ref(quiver, a) +
                                           " has multiple relation-free successors: " +
                                           list(perm_succ));
        }
        if (rel_succ.size() > 1) {
            add("relation-branching", "arrow " + arrow_ref(quiver, a) +
                                          " has multiple relation successors: " + list(rel_succ));
        }
        if (perm_pred.size() > 1) {
            add("permitted-merging", "arrow " + arrow_ref(quiver, a) +
                                         " has multiple relation-free predecessors: " +
                                         list(perm_pred));
        }
        if (rel_pred.size() > 1) {
            add("relation-merging", "arrow " + arrow_ref(quiver, a) +
                                        " has multiple relation predecessors: " + list(rel_pred));
        }
    }

    // A directed cycle of relation-free compositions makes arbitrarily long
    // nonzero paths, hence an infinite-dimensional algebra. Detect cycles in
    // the graph whose nodes are arrows and whose edges are relation-free
    // compositions; this needs no uniqueness assumptions.
    {
        std::vector<std::vector<ArrowId>> next(arrow_count);
        for (ArrowId a = 0; a < arrow_count; ++a) {
            for (ArrowId b : quiver.arrows_out(quiver.arrow(a).target)) {
                if (!in_rels(b, a)) next[a].push_back(b);
            }
        }
        std::vector<char> state(arrow_count, 0);
        std::vector<ArrowId> cycle_witness;
        auto dfs = [&](auto&& self, ArrowId a) -> bool {
            state[a] = 1;
            for (ArrowId b : next[a]) {
                if (state[b] == 1) {
                    cycle_witness.push_back(b);
                    return true;
                }
                if (state[b] == 0 && self(self, b)) return true;
            }
            state[a] = 2;
            return false;
        };
        for (ArrowId a = 0; a < arrow_count && cycle_witness.empty(); ++a) {
            if (state[a] == 0) dfs(dfs, a);
        }
        if (!cycle_witness.empty()) {
            add("relation-free-cycle",
                "relation-free compositions close a directed cycle through arrow " +
                    arrow_ref(quiver, cycle_witness.front()) +
                    "; the algebra would be infinite dimensional");
        }
    }

    if (!quiver.connected()) {
        add("disconnected", "the underlying graph of " + quiver.name() + " is not connected");
    }

    return issues;
}

GentlePresentation GentlePresentation::build(Quiver quiver, std::vector<Relation> relations) {
    for (const auto& r : relations) {
        if (r.second >= quiver.arrow_count() || r.first >= quiver.arrow_count()) {
            throw NonComposableRelationError("relation references an arrow id out of range");
        }
        if (quiver.arrow(r.second).source != quiver.arrow(r.first).target) {
            throw NonComposableRelationError(
                "relation '" + quiver.arrow(r.second).label + "' * '" +
                quiver.arrow(r.first).label + "' does not compose: '" +
                quiver.arrow(r.first).label + "' ends at '" +
                quiver.vertex_label(quiver.arrow(r.first).target) + "' but '" +
                quiver.arrow(r.second).label + "' starts at '" +
                quiver.vertex_label(quiver.arrow(r.second).source) + "'");
        }
    }

    auto issues = validate_gentle(quiver, relations);
    if (!issues.empty()) {
        std::string msg = "presentation '" + quiver.name() + "' is not gentle: " +
                          issues.front().message;
        if (issues.size() > 1) {
            msg += " (and " + std::to_string(issues.size() - 1) + " more issue(s))";
        }
        throw ValidationError(msg, std::move(issues));
    }

    GentlePresentation p;
    p.quiver_ = std::move(quiver);
    p.relations_ = std::move(relations);
    const auto n = p.quiver_.arrow_count();
    p.perm_succ_.assign(n, kNone);
    p.perm_pred_.assign(n, kNone);
    p.rel_succ_.assign(n, kNone);
    p.rel_pred_.assign(n, kNone);
    for (ArrowId a = 0; a < n; ++a) {
        for (ArrowId b : p.quiver_.arrows_out(p.quiver_.arrow(a).target)) {
            if (p.in_relations(b, a)) {
                p.rel_succ_[a] = b;
                p.rel_pred_[b] = a;
            } else {
                p.perm_succ_[a] = b;
                p.perm_pred_[b] = a;
            }
        }
    }
    return p;
}

bool GentlePresentation::in_relations(ArrowId second, ArrowId first) const {
    return std::find(relations_.begin(), relations_.end(), Relation{second, first}) !=
           relations_.end();
}

std::optional<ArrowId> GentlePresentation::permitted_successor(ArrowId a) const {
    ArrowId b = perm_succ_.at(a);
    if (b == kNone) return std::nullopt;
    return b;
}

std::optional<ArrowId> GentlePresentation::permitted_predecessor(ArrowId a) const {
    ArrowId b = perm_pred_.at(a);
    if (b == kNone) return std::nullopt;
    return b;
}

std::optional<ArrowId> GentlePresentation::relation_successor(ArrowId a) const {
    ArrowId b = rel_succ_.at(a);
    if (b == kNone) return std::nullopt;
    return b;
}

std::optional<ArrowId> GentlePresentation::relation_predecessor(ArrowId a) const {
    ArrowId b = rel_pred_.at(a);
    if (b == kNone) return std::nullopt;
    return b;
}

std::size_t GentlePresentation::cycle_number() const {
    // Connectivity guarantees #arrows + 1 >= #vertices, so this cannot wrap.
    return quiver_.arrow_count() + 1 - quiver_.vertex_count();
}

}  // namespace gentle
