#include "gentle/repetitive.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gentle {

HatThread shifted(const HatThread& h, std::int32_t dz) {
    HatThread out = h;
    out.z += dz;
    return out;
}

ExpansionWindow::ExpansionWindow(const GentlePresentation& p, std::uint32_t depth)
    : p_(&p), depth_(static_cast<std::int32_t>(depth)) {
    if (depth < 2) {
        throw DepthTooSmallError("window depth " + std::to_string(depth) +
                                 " is too small: one cosyzygy step from level 0 already "
                                 "consults level 2");
    }
    const Quiver& q = p.quiver();
    arrow_thread_.assign(q.arrow_count(), 0);
    arrow_pos_.assign(q.arrow_count(), 0);
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (p.permitted_predecessor(a)) continue;
        Thread t{ThreadKind::Permitted, {}, 0, 0};
        std::uint32_t pos = 0;
        for (std::optional<ArrowId> cur = a; cur; cur = p.permitted_successor(*cur)) {
            t.body.push_back(*cur);
            arrow_thread_[*cur] = static_cast<std::uint32_t>(threads_.size());
            arrow_pos_[*cur] = ++pos;
        }
        threads_.push_back(std::move(t));
    }

    conn_in_.assign(q.vertex_count(), {});
    conn_out_.assign(q.vertex_count(), {});
    for (std::uint32_t i = 0; i < threads_.size(); ++i) {
        conn_in_[threads_[i].start(q)].push_back(i);
        conn_out_[threads_[i].end(q)].push_back(i);
    }

    transition_.assign(q.vertex_count(), 0);
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        std::size_t in_deg = q.arrows_in(v).size() + conn_in_[v].size();
        std::size_t out_deg = q.arrows_out(v).size() + conn_out_[v].size();
        if (in_deg != out_deg || in_deg > 2) {
            throw InternalError("expansion degree invariant broken at vertex '" +
                                q.vertex_label(v) + "'");
        }
        transition_[v] = (in_deg == 1) ? 1 : 0;
    }
}

std::size_t ExpansionWindow::transition_count() const {
    return static_cast<std::size_t>(std::count(transition_.begin(), transition_.end(), 1));
}

void ExpansionWindow::require_vertex(std::int32_t z) const {
    if (z < 0 || z > depth_) {
        throw WindowExhaustedError("vertex level " + std::to_string(z) +
                                   " lies outside the window [0," + std::to_string(depth_) +
                                   "]");
    }
}

void ExpansionWindow::require_arrow(const HatArrow& a) const {
    if (a.connection) {
        if (a.z < 0 || a.z + 1 > depth_) {
            throw WindowExhaustedError("connection arrow spanning levels " +
                                       std::to_string(a.z) + ".." + std::to_string(a.z + 1) +
                                       " lies outside the window [0," +
                                       std::to_string(depth_) + "]");
        }
    } else {
        require_vertex(a.z);
    }
}

std::vector<HatArrow> ExpansionWindow::out_arrows(VertexId v, std::int32_t z) const {
    require_vertex(z);
    std::vector<HatArrow> out;
    for (ArrowId a : p_->quiver().arrows_out(v)) {
        out.push_back(HatArrow{false, a, z});
    }
    for (std::uint32_t i : conn_out_[v]) {
        HatArrow c{true, i, z - 1};
        require_arrow(c);
        out.push_back(c);
    }
    return out;
}

std::vector<HatArrow> ExpansionWindow::in_arrows(VertexId v, std::int32_t z) const {
    require_vertex(z);
    std::vector<HatArrow> in;
    for (ArrowId a : p_->quiver().arrows_in(v)) {
        in.push_back(HatArrow{false, a, z});
    }
    for (std::uint32_t i : conn_in_[v]) {
        HatArrow c{true, i, z};
        require_arrow(c);
        in.push_back(c);
    }
    return in;
}

std::pair<VertexId, std::int32_t> ExpansionWindow::hat_source(const HatArrow& a) const {
    require_arrow(a);
    const Quiver& q = p_->quiver();
    if (a.connection) return {threads_.at(a.index).end(q), a.z + 1};
    return {q.arrow(a.index).source, a.z};
}

std::pair<VertexId, std::int32_t> ExpansionWindow::hat_target(const HatArrow& a) const {
    require_arrow(a);
    const Quiver& q = p_->quiver();
    if (a.connection) return {threads_.at(a.index).start(q), a.z};
    return {q.arrow(a.index).target, a.z};
}

std::uint32_t ExpansionWindow::thread_of(const HatArrow& a) const {
    return a.connection ? a.index : arrow_thread_.at(a.index);
}

HatArrow ExpansionWindow::spiral_pred(const HatArrow& a) const {
    if (a.connection) {
        const Thread& t = threads_.at(a.index);
        return HatArrow{false, t.body.back(), a.z + 1};
    }
    std::uint32_t i = arrow_thread_.at(a.index);
    std::uint32_t pos = arrow_pos_.at(a.index);
    if (pos >= 2) return HatArrow{false, threads_[i].body[pos - 2], a.z};
    return HatArrow{true, i, a.z};
}

HatArrow ExpansionWindow::spiral_succ(const HatArrow& a) const {
    if (a.connection) {
        const Thread& t = threads_.at(a.index);
        return HatArrow{false, t.body.front(), a.z};
    }
    std::uint32_t i = arrow_thread_.at(a.index);
    std::uint32_t pos = arrow_pos_.at(a.index);
    if (pos < threads_[i].body.size()) return HatArrow{false, threads_[i].body[pos], a.z};
    return HatArrow{true, i, a.z - 1};
}

std::vector<HatArrow> ExpansionWindow::full_path(const HatArrow& first) const {
    require_arrow(first);
    std::vector<HatArrow> path{first};
    const std::size_t len = threads_.at(thread_of(first)).body.size() + 1;
    while (path.size() < len) {
        HatArrow nxt = spiral_succ(path.back());
        require_arrow(nxt);
        path.push_back(nxt);
    }
    return path;
}

HatThread ExpansionWindow::from_deleted(const HatArrow& deleted) const {
    if (deleted.connection) {
        return HatThread{HatThread::Variant::Copy, deleted.index, deleted.z + 1, 0};
    }
    return HatThread{HatThread::Variant::ArrowInverse, deleted.index, deleted.z, 0};
}

HatArrow ExpansionWindow::deleted_arrow(const HatThread& h) const {
    switch (h.variant) {
        case HatThread::Variant::Copy:
            return HatArrow{true, h.index, h.z - 1};
        case HatThread::Variant::ArrowInverse:
            return HatArrow{false, h.index, h.z};
        case HatThread::Variant::TrivialAt:
            break;
    }
    throw InternalError("trivial hat threads delete no arrow");
}

std::size_t ExpansionWindow::slice_arrow_count() const {
    return p_->quiver().arrow_count() + threads_.size();
}

std::string render_hat_thread(const ExpansionWindow& w, const HatThread& h) {
    const Quiver& q = w.presentation().quiver();
    std::string tag = h.orient > 0 ? "+" : (h.orient < 0 ? "-" : "");
    switch (h.variant) {
        case HatThread::Variant::TrivialAt:
            return "TrivialAt(" + q.vertex_label(h.index) + tag + ", " + std::to_string(h.z) +
                   ")";
        case HatThread::Variant::Copy:
            return "Copy(" + render_thread(q, w.threads().at(h.index)) + ", " +
                   std::to_string(h.z) + ")";
        case HatThread::Variant::ArrowInverse:
            return "ArrowInverse(" + q.arrow(h.index).label + ", " + std::to_string(h.z) + ")";
    }
    throw InternalError("unreachable hat thread variant");
}

namespace {

// The hat thread whose body starts with delta: its full path deletes the
// shifted-down spiral predecessor of delta.
HatThread thread_from_start(const ExpansionWindow& w, const HatArrow& delta) {
    HatArrow del = w.spiral_pred(delta);
    del.z -= 1;
    return w.from_deleted(del);
}

// The hat thread whose body ends with gamma: its full path continues for
// exactly one more arrow.
HatThread thread_from_end(const ExpansionWindow& w, const HatArrow& gamma) {
    return w.from_deleted(w.spiral_succ(gamma));
}

}  // namespace

HatThread omega_inverse(const ExpansionWindow& w, const HatThread& h) {
    const GentlePresentation& p = w.presentation();
    const Quiver& q = p.quiver();
    if (q.arrow_count() == 0) {
        // Single-vertex algebra: climbing one level flips the tag, the
        // degenerate image of the tagged matching downstairs.
        w.out_arrows(0, h.z + 1);
        HatThread out = shifted(h, 1);
        out.orient = -h.orient;
        return out;
    }
    if (h.variant == HatThread::Variant::TrivialAt) {
        auto outs = w.out_arrows(h.index, h.z + 1);
        if (outs.size() != 1) {
            throw InternalError("transition vertex without a unique outgoing hat arrow");
        }
        return thread_from_start(w, outs.front());
    }
    HatArrow beta = w.deleted_arrow(h);
    beta.z += 1;
    auto [x, zx] = w.hat_source(beta);
    if (w.transition(x)) {
        return HatThread{HatThread::Variant::TrivialAt, x, zx, 0};
    }
    auto outs = w.out_arrows(x, zx);
    if (outs.size() != 2 || (outs[0] != beta && outs[1] != beta)) {
        throw InternalError("cosyzygy step lost its bearing at a non-transition vertex");
    }
    return thread_from_start(w, outs[0] == beta ? outs[1] : outs[0]);
}

HatThread omega_inverse(const GentlePresentation& p, const HatThread& h) {
    ExpansionWindow w(p, static_cast<std::uint32_t>(std::max(2, h.z + 2)));
    return omega_inverse(w, h);
}

std::vector<HatThread> hat_threads_slice(const GentlePresentation& p) {
    const Quiver& q = p.quiver();
    std::vector<HatThread> slice;
    if (q.arrow_count() == 0) {
        slice.push_back(HatThread{HatThread::Variant::TrivialAt, 0, 0, +1});
        slice.push_back(HatThread{HatThread::Variant::TrivialAt, 0, 0, -1});
        return slice;
    }
    ExpansionWindow w(p, 2);
    for (std::uint32_t i = 0; i < w.threads().size(); ++i) {
        slice.push_back(HatThread{HatThread::Variant::Copy, i, 0, 0});
    }
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (w.transition(v)) {
            slice.push_back(HatThread{HatThread::Variant::TrivialAt, v, 0, 0});
        }
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        slice.push_back(HatThread{HatThread::Variant::ArrowInverse, a, 0, 0});
    }
    return slice;
}

namespace {

bool same_underlying(const HatThread& a, const HatThread& b) {
    return a.variant == b.variant && a.index == b.index && a.orient == b.orient;
}

std::uint32_t default_depth_bound(const GentlePresentation& p) {
    if (p.quiver().arrow_count() == 0) return 2;
    ExpansionWindow probe(p, 2);
    // Orbit levels climb once per non-inverse element, so by at most the
    // permitted thread count; two extra levels cover each step's lookahead.
    return static_cast<std::uint32_t>(probe.threads().size() + probe.transition_count() +
                                      p.quiver().arrow_count() + 2);
}

struct OrbitWalk {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::vector<HatThread> elements;
};

OrbitWalk walk_orbit(const ExpansionWindow& w, const HatThread& start, std::size_t limit) {
    OrbitWalk walk;
    HatThread cur = start;
    while (true) {
        if (cur.variant == HatThread::Variant::ArrowInverse) {
            ++walk.m;
        } else {
            ++walk.n;
        }
        walk.elements.push_back(cur);
        if (walk.elements.size() > limit) {
            throw InternalError("cosyzygy orbit failed to close");
        }
        HatThread nxt = omega_inverse(w, cur);
        if (same_underlying(nxt, start)) {
            if (nxt.z - start.z != static_cast<std::int32_t>(walk.n)) {
                throw InternalError(
                    "orbit closed with a level shift different from its thread count");
            }
            break;
        }
        cur = nxt;
    }
    return walk;
}

std::size_t underlying_count(const GentlePresentation& p) {
    return hat_threads_slice(p).size();
}

}  // namespace

OrbitInvariant orbit_invariant(const GentlePresentation& p, const HatThread& start,
                               std::optional<std::uint32_t> depth) {
    ExpansionWindow w(p, depth.value_or(default_depth_bound(p)));
    OrbitWalk walk = walk_orbit(w, start, underlying_count(p));
    OrbitInvariant inv;
    inv.pair = {walk.n, walk.m};
    if (walk.n == walk.m) {
        inv.tube_rank = walk.n;
    } else {
        inv.series_size = walk.n > walk.m ? walk.n - walk.m : walk.m - walk.n;
    }
    return inv;
}

PhiInvariant compute_N(const GentlePresentation& p) {
    const auto slice = hat_threads_slice(p);
    const std::uint32_t bound = default_depth_bound(p);
    std::uint32_t depth = std::min<std::uint32_t>(4, bound);
    while (true) {
        try {
            ExpansionWindow w(p, depth);
            PhiInvariant result;
            std::set<std::tuple<int, std::uint32_t, int>> visited;
            std::size_t covered = 0;
            for (const HatThread& start : slice) {
                if (visited.count({static_cast<int>(start.variant), start.index,
                                   start.orient}) != 0) {
                    continue;
                }
                OrbitWalk walk = walk_orbit(w, start, slice.size());
                for (const HatThread& el : walk.elements) {
                    visited.insert({static_cast<int>(el.variant), el.index, el.orient});
                }
                covered += walk.elements.size();
                result.pairs.emplace_back(walk.n, walk.m);
            }
            if (covered != slice.size() || visited.size() != slice.size()) {
                throw InternalError("orbit decomposition did not partition the slice");
            }
            std::sort(result.pairs.begin(), result.pairs.end());
            return result;
        } catch (const WindowExhaustedError&) {
            if (depth >= bound) throw;
            depth = std::min(depth * 2, bound);
        }
    }
}

namespace {

HatThread frak_v(const ExpansionWindow& w, const HatArrow& beta) {
    auto [x, zx] = w.hat_source(beta);
    if (w.transition(x)) return HatThread{HatThread::Variant::TrivialAt, x, zx, 0};
    auto outs = w.out_arrows(x, zx);
    if (outs.size() != 2 || (outs[0] != beta && outs[1] != beta)) {
        throw InternalError("left neighbor query lost its bearing");
    }
    return thread_from_start(w, outs[0] == beta ? outs[1] : outs[0]);
}

HatThread frak_u(const ExpansionWindow& w, const HatArrow& beta) {
    auto [y, zy] = w.hat_target(beta);
    if (w.transition(y)) return HatThread{HatThread::Variant::TrivialAt, y, zy, 0};
    auto ins = w.in_arrows(y, zy);
    if (ins.size() != 2 || (ins[0] != beta && ins[1] != beta)) {
        throw InternalError("right neighbor query lost its bearing");
    }
    return thread_from_end(w, ins[0] == beta ? ins[1] : ins[0]);
}

}  // namespace

namespace detail {

bool tau_check_with(const GentlePresentation& p, const OmegaFn& omega, std::string* witness) {
    const Quiver& q = p.quiver();
    if (q.arrow_count() == 0) {
        // No slice arrows and no transition vertices: nothing to compare.
        return true;
    }
    ExpansionWindow w(p, 6);
    const std::int32_t z0 = 1;
    auto agree = [&](const HatThread& r, const HatThread& u, const std::string& what) {
        HatThread lhs = omega(w, omega(w, u));
        HatThread rhs = shifted(r, 1);
        if (lhs == rhs) return true;
        if (witness) {
            *witness = what + ": omega^-2 of " + render_hat_thread(w, u) + " is " +
                       render_hat_thread(w, lhs) + " but the translate requires " +
                       render_hat_thread(w, rhs);
        }
        return false;
    };

    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        HatArrow beta{false, a, z0};
        if (!agree(frak_v(w, beta), frak_u(w, beta), "arrow '" + q.arrow(a).label + "'")) {
            return false;
        }
    }
    for (std::uint32_t i = 0; i < w.threads().size(); ++i) {
        HatArrow beta{true, i, z0};
        if (!agree(frak_v(w, beta), frak_u(w, beta),
                   "connection arrow of " + render_thread(q, w.threads()[i]))) {
            return false;
        }
    }
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        if (!w.transition(v)) continue;
        auto outs = w.out_arrows(v, z0);
        auto ins = w.in_arrows(v, z0 - 1);
        if (outs.size() != 1 || ins.size() != 1) {
            throw InternalError("transition vertex with unexpected hat degree");
        }
        HatThread r = thread_from_start(w, outs.front());
        HatThread u = thread_from_end(w, ins.front());
        if (!agree(r, u, "transition vertex '" + q.vertex_label(v) + "'")) return false;
    }
    return true;
}

}  // namespace detail

bool tau_check(const GentlePresentation& p, std::string* witness) {
    return detail::tau_check_with(
        p,
        [](const ExpansionWindow& w, const HatThread& h) { return omega_inverse(w, h); },
        witness);
}

}  // namespace gentle
