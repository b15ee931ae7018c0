#include "gentle/threads.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace gentle {

std::string render_thread(const Quiver& q, const Thread& t) {
    if (t.trivial()) {
        std::string s = "1_" + q.vertex_label(t.at);
        if (t.orient > 0) s += '+';
        if (t.orient < 0) s += '-';
        return s;
    }
    std::string s;
    for (auto it = t.body.rbegin(); it != t.body.rend(); ++it) {
        if (!s.empty()) s += ' ';
        s += q.arrow(*it).label;
    }
    return s;
}

std::string render_thread_inverse(const Quiver& q, const Thread& t) {
    if (t.trivial()) return "*";
    std::string s;
    for (ArrowId a : t.body) {
        if (!s.empty()) s += ' ';
        s += q.arrow(a).label;
        s += "^-1";
    }
    return s;
}

namespace {

// Union-find tracking sign parity relative to the component root
// (0 = same sign, 1 = opposite).
class ParityForest {
public:
    explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::pair<std::size_t, unsigned> find(std::size_t x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }

    // Links x and y with the given parity (1 = opposite signs). Returns
    // false when this contradicts the links made so far.
    bool link(std::size_t x, std::size_t y, unsigned parity) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == parity;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ parity;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> parity_;
};

std::size_t sigma_node(ArrowId a) { return 2 * static_cast<std::size_t>(a); }
std::size_t eps_node(ArrowId a) { return 2 * static_cast<std::size_t>(a) + 1; }

}  // namespace

SignAssignment assign_signs(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    const std::size_t n = q.arrow_count();
    ParityForest forest(2 * n);
    auto fail = [&](const std::string& where) {
        throw InconsistentSignsError("sign constraints are unsatisfiable at " + where);
    };

    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const auto& out = q.arrows_out(v);
        if (out.size() == 2 && !forest.link(sigma_node(out[0]), sigma_node(out[1]), 1)) {
            fail("vertex '" + q.vertex_label(v) + "' (shared source)");
        }
        const auto& in = q.arrows_in(v);
        if (in.size() == 2 && !forest.link(eps_node(in[0]), eps_node(in[1]), 1)) {
            fail("vertex '" + q.vertex_label(v) + "' (shared target)");
        }
    }
    for (ArrowId a = 0; a < n; ++a) {
        if (auto g = p.permitted_successor(a)) {
            if (!forest.link(sigma_node(*g), eps_node(a), 1)) {
                fail("composition '" + q.arrow(*g).label + "' after '" + q.arrow(a).label + "'");
            }
        }
    }

    std::vector<ArrowId> order(n);
    std::iota(order.begin(), order.end(), ArrowId{0});
    std::sort(order.begin(), order.end(), [&](ArrowId x, ArrowId y) {
        return q.arrow(x).label < q.arrow(y).label;
    });

    SignAssignment sa;
    sa.sigma.assign(n, 0);
    sa.eps.assign(n, 0);
    std::vector<int> root_sign(2 * n, 0);
    for (ArrowId a : order) {
        for (std::size_t node : {sigma_node(a), eps_node(a)}) {
            auto [root, parity] = forest.find(node);
            if (root_sign[root] == 0) root_sign[root] = parity ? -1 : +1;
            int value = parity ? -root_sign[root] : root_sign[root];
            (node % 2 == 0 ? sa.sigma : sa.eps)[node / 2] = value;
        }
    }
    return sa;
}

std::vector<std::string> sign_violations(const GentlePresentation& p, const SignAssignment& sa) {
    const Quiver& q = p.quiver();
    std::vector<std::string> out;
    if (sa.sigma.size() != q.arrow_count() || sa.eps.size() != q.arrow_count()) {
        out.push_back("assignment size does not match the arrow count");
        return out;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (sa.sigma[a] != 1 && sa.sigma[a] != -1) {
            out.push_back("sigma('" + q.arrow(a).label + "') is not +1 or -1");
        }
        if (sa.eps[a] != 1 && sa.eps[a] != -1) {
            out.push_back("eps('" + q.arrow(a).label + "') is not +1 or -1");
        }
    }
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const auto& o = q.arrows_out(v);
        if (o.size() == 2 && sa.sigma[o[0]] == sa.sigma[o[1]]) {
            out.push_back("arrows '" + q.arrow(o[0]).label + "' and '" + q.arrow(o[1]).label +
                          "' share source '" + q.vertex_label(v) + "' but have equal sigma");
        }
        const auto& i = q.arrows_in(v);
        if (i.size() == 2 && sa.eps[i[0]] == sa.eps[i[1]]) {
            out.push_back("arrows '" + q.arrow(i[0]).label + "' and '" + q.arrow(i[1]).label +
                          "' share target '" + q.vertex_label(v) + "' but have equal eps");
        }
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (auto g = p.permitted_successor(a)) {
            if (sa.sigma[*g] != -sa.eps[a]) {
                out.push_back("relation-free composition '" + q.arrow(*g).label + "' after '" +
                              q.arrow(a).label + "' violates sigma = -eps");
            }
        }
    }
    return out;
}

std::pair<int, int> thread_signs(const GentlePresentation& p, const SignAssignment& sa,
                                 const Thread& t) {
    const Quiver& q = p.quiver();
    if (!t.trivial()) {
        return {sa.sigma.at(t.body.front()), sa.eps.at(t.body.back())};
    }
    const auto& in = q.arrows_in(t.at);
    const auto& out = q.arrows_out(t.at);
    if (in.empty() && out.empty()) {
        throw IsolatedVertexError("vertex '" + q.vertex_label(t.at) +
                                  "' has no incident arrow to take a sign from");
    }
    if (t.kind == ThreadKind::Permitted) {
        int s = in.empty() ? -sa.sigma.at(out.front()) : sa.eps.at(in.front());
        return {s, -s};
    }
    int s = out.empty() ? -sa.eps.at(in.front()) : -sa.sigma.at(out.front());
    return {s, s};
}

ThreadTable::ThreadTable(const GentlePresentation& p) : p_(&p) {
    const Quiver& q = p.quiver();
    const std::size_t arrows = q.arrow_count();
    perm_start_.assign(arrows, kMiss);
    forb_end_.assign(arrows, kMiss);
    triv_perm_.assign(q.vertex_count(), kMiss);
    triv_forb_.assign(q.vertex_count(), kMiss);

    if (arrows == 0) {
        // Single vertex (connectivity is validated). Each kind contributes
        // a +1 and a -1 tagged trivial thread; the tag replaces the arrow
        // signs the matching would otherwise separate partners by.
        for (int tag : {+1, -1}) {
            permitted_.push_back(Thread{ThreadKind::Permitted, {}, 0, tag});
            forbidden_.push_back(Thread{ThreadKind::Forbidden, {}, 0, tag});
        }
        triv_perm_[0] = 0;
        triv_forb_[0] = 0;
        return;
    }

    for (ArrowId a = 0; a < arrows; ++a) {
        if (p.permitted_predecessor(a)) continue;
        Thread t{ThreadKind::Permitted, {}, 0, 0};
        for (std::optional<ArrowId> cur = a; cur; cur = p.permitted_successor(*cur)) {
            t.body.push_back(*cur);
        }
        perm_start_[a] = permitted_.size();
        permitted_.push_back(std::move(t));
    }

    std::vector<char> on_chain(arrows, 0);
    for (ArrowId a = 0; a < arrows; ++a) {
        if (p.relation_predecessor(a)) continue;
        Thread t{ThreadKind::Forbidden, {}, 0, 0};
        for (std::optional<ArrowId> cur = a; cur; cur = p.relation_successor(*cur)) {
            t.body.push_back(*cur);
            on_chain[*cur] = 1;
        }
        forb_end_[t.body.back()] = forbidden_.size();
        forbidden_.push_back(std::move(t));
    }

    // Everything not reached from a chain start sits on a pure relation
    // cycle. Scanning by ascending id makes each cycle start at its least
    // arrow.
    std::vector<char> visited = on_chain;
    for (ArrowId a = 0; a < arrows; ++a) {
        if (visited[a]) continue;
        std::vector<ArrowId> cycle;
        ArrowId cur = a;
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            auto nxt = p.relation_successor(cur);
            if (!nxt) throw InternalError("relation chain escaped its cycle");
            cur = *nxt;
        } while (cur != a);
        cycles_.push_back(std::move(cycle));
    }

    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        const auto& in = q.arrows_in(v);
        const auto& out = q.arrows_out(v);
        if (in.size() > 1 || out.size() > 1) continue;
        bool both = !in.empty() && !out.empty();
        bool through_relation = both && p.in_relations(out.front(), in.front());
        if (!both || !through_relation) {
            triv_perm_[v] = permitted_.size();
            permitted_.push_back(Thread{ThreadKind::Permitted, {}, v, 0});
        }
        if (!both || through_relation) {
            triv_forb_[v] = forbidden_.size();
            forbidden_.push_back(Thread{ThreadKind::Forbidden, {}, v, 0});
        }
    }
}

std::optional<std::size_t> ThreadTable::permitted_starting_with(ArrowId a) const {
    std::size_t i = perm_start_.at(a);
    if (i == kMiss) return std::nullopt;
    return i;
}

std::optional<std::size_t> ThreadTable::forbidden_ending_with(ArrowId a) const {
    std::size_t i = forb_end_.at(a);
    if (i == kMiss) return std::nullopt;
    return i;
}

std::optional<std::size_t> ThreadTable::trivial_permitted_at(VertexId v) const {
    std::size_t i = triv_perm_.at(v);
    if (i == kMiss) return std::nullopt;
    return i;
}

std::optional<std::size_t> ThreadTable::trivial_forbidden_at(VertexId v) const {
    std::size_t i = triv_forb_.at(v);
    if (i == kMiss) return std::nullopt;
    return i;
}

const Thread& ThreadTable::match_end(const Thread& h) const {
    const Quiver& q = p_->quiver();
    auto fail = [&](const std::string& why) -> void {
        throw MatchFailureError("match_end(" + render_thread(q, h) + "): " + why);
    };
    if (q.arrow_count() == 0) {
        for (const Thread& t : forbidden_) {
            if (t.orient == h.orient) return t;
        }
        fail("no forbidden thread with the same tag");
    }
    if (h.trivial()) {
        const auto& in = q.arrows_in(h.at);
        if (!in.empty()) {
            auto idx = forbidden_ending_with(in.front());
            if (!idx) fail("no forbidden thread ends with the incoming arrow");
            return forbidden_[*idx];
        }
        auto idx = trivial_forbidden_at(h.at);
        if (!idx) fail("no trivial forbidden thread at the source vertex");
        return forbidden_[*idx];
    }
    ArrowId last = h.body.back();
    VertexId v = q.arrow(last).target;
    for (ArrowId b : q.arrows_in(v)) {
        if (b == last) continue;
        auto idx = forbidden_ending_with(b);
        if (!idx) fail("the second incoming arrow ends no forbidden thread");
        return forbidden_[*idx];
    }
    auto idx = trivial_forbidden_at(v);
    if (!idx) fail("no trivial forbidden thread at the end vertex");
    return forbidden_[*idx];
}

const Thread& ThreadTable::match_start(const Thread& pi) const {
    const Quiver& q = p_->quiver();
    auto fail = [&](const std::string& why) -> void {
        throw MatchFailureError("match_start(" + render_thread(q, pi) + "): " + why);
    };
    if (q.arrow_count() == 0) {
        for (const Thread& t : permitted_) {
            if (t.orient == -pi.orient) return t;
        }
        fail("no permitted thread with the flipped tag");
    }
    if (pi.trivial()) {
        const auto& out = q.arrows_out(pi.at);
        if (!out.empty()) {
            auto idx = permitted_starting_with(out.front());
            if (!idx) fail("no permitted thread starts with the outgoing arrow");
            return permitted_[*idx];
        }
        auto idx = trivial_permitted_at(pi.at);
        if (!idx) fail("no trivial permitted thread at the sink vertex");
        return permitted_[*idx];
    }
    ArrowId first = pi.body.front();
    VertexId v = q.arrow(first).source;
    for (ArrowId b : q.arrows_out(v)) {
        if (b == first) continue;
        auto idx = permitted_starting_with(b);
        if (!idx) fail("the second outgoing arrow starts no permitted thread");
        return permitted_[*idx];
    }
    auto idx = trivial_permitted_at(v);
    if (!idx) fail("no trivial permitted thread at the start vertex");
    return permitted_[*idx];
}

std::vector<Thread> permitted_threads(const GentlePresentation& p) {
    return ThreadTable(p).permitted();
}

ForbiddenThreads forbidden_threads(const GentlePresentation& p) {
    ThreadTable table(p);
    return ForbiddenThreads{table.forbidden(), table.relation_cycles()};
}

Thread match_end(const GentlePresentation& p, const Thread& h) {
    return ThreadTable(p).match_end(h);
}

Thread match_start(const GentlePresentation& p, const Thread& pi) {
    return ThreadTable(p).match_start(pi);
}

}  // namespace gentle
