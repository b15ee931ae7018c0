#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/invariant.hpp"
#include "gentle/quiver.hpp"
#include "gentle/threads.hpp"

namespace gentle {

/// Arrow of the doubled-up expansion: a level copy alpha[z] of a base
/// arrow, or the connection arrow of one thread gluing level z+1 to level
/// z (it runs from the thread's end vertex at z+1 to its start vertex
/// at z).
struct HatArrow {
    bool connection = false;
    /// Base arrow id, or an index into ExpansionWindow::threads() for
    /// connection arrows.
    std::uint32_t index = 0;
    std::int32_t z = 0;

    friend bool operator==(const HatArrow&, const HatArrow&) = default;
};

/// Element of the expansion's thread set, identified by the arrow its full
/// path deletes: Copy(i, z) is the level-z copy of base thread i (deleted
/// connection arrow at z-1), ArrowInverse(a, z) the thread whose full path
/// ends with a[z], TrivialAt(v, z) the trivial thread at a transition
/// vertex. `orient` tags the two elements of the single-vertex algebra.
struct HatThread {
    enum class Variant : std::uint8_t { TrivialAt, Copy, ArrowInverse };

    Variant variant = Variant::TrivialAt;
    std::uint32_t index = 0;
    std::int32_t z = 0;
    int orient = 0;

    friend bool operator==(const HatThread&, const HatThread&) = default;
};

/// The same element one level up (the expansion's shift automorphism
/// applied dz times).
HatThread shifted(const HatThread& h, std::int32_t dz);

/// Finite window of the infinite expansion, holding vertex levels
/// 0..depth. Queries whose answer would involve structure outside the
/// window throw WindowExhaustedError; callers retry with a deeper window.
/// Immutable after construction.
class ExpansionWindow {
public:
    /// Throws DepthTooSmallError for depth < 2 (one cosyzygy step from
    /// level 0 already consults level 2).
    ExpansionWindow(const GentlePresentation& p, std::uint32_t depth);

    const GentlePresentation& presentation() const { return *p_; }
    std::int32_t depth() const { return depth_; }

    /// Non-trivial permitted threads of the base presentation, the spirals
    /// the expansion is glued from, in canonical enumeration order.
    const std::vector<Thread>& threads() const { return threads_; }

    /// Thread membership of a base arrow and its 1-based position inside
    /// that thread.
    std::uint32_t thread_of_arrow(ArrowId a) const { return arrow_thread_.at(a); }
    std::uint32_t position_of_arrow(ArrowId a) const { return arrow_pos_.at(a); }

    /// Transition vertices carry exactly one incoming and one outgoing hat
    /// arrow per level (level independent). Equivalent to the base vertex
    /// admitting relation-free through-flow.
    bool transition(VertexId v) const { return transition_.at(v); }
    std::size_t transition_count() const;

    /// Hat arrows leaving / entering v[z]: level copies of base arrows
    /// first (by arrow id), then connection arrows (by thread index).
    /// Throws WindowExhaustedError when part of the answer lies outside
    /// the window.
    std::vector<HatArrow> out_arrows(VertexId v, std::int32_t z) const;
    std::vector<HatArrow> in_arrows(VertexId v, std::int32_t z) const;

    /// Endpoints of a hat arrow as (vertex, level).
    std::pair<VertexId, std::int32_t> hat_source(const HatArrow& a) const;
    std::pair<VertexId, std::int32_t> hat_target(const HatArrow& a) const;

    /// Thread membership label of a hat arrow.
    std::uint32_t thread_of(const HatArrow& a) const;

    /// Neighbors along the spiral of an arrow's thread. Per level the
    /// spiral runs alpha_1[z], ..., alpha_l[z], connection[z-1] and then
    /// continues one level down.
    HatArrow spiral_pred(const HatArrow& a) const;
    HatArrow spiral_succ(const HatArrow& a) const;

    /// The maximal relation-free hat path starting with `first`: length
    /// l+1 spiral arrows leading from some v[z] to v[z-1].
    std::vector<HatArrow> full_path(const HatArrow& first) const;

    /// Identification of non-trivial hat threads by their deleted arrow.
    /// from_deleted is purely symbolic (the deleted arrow may stick out of
    /// the window); deleted_arrow throws InternalError for TrivialAt.
    HatThread from_deleted(const HatArrow& deleted) const;
    HatArrow deleted_arrow(const HatThread& h) const;

    /// Hat arrows per level: #arrows + #threads.
    std::size_t slice_arrow_count() const;

private:
    void require_vertex(std::int32_t z) const;
    void require_arrow(const HatArrow& a) const;

    const GentlePresentation* p_;
    std::int32_t depth_ = 0;
    std::vector<Thread> threads_;
    std::vector<std::uint32_t> arrow_thread_;
    std::vector<std::uint32_t> arrow_pos_;
    std::vector<char> transition_;
    // Per-vertex adjacency shape, identical at every level.
    std::vector<std::vector<std::uint32_t>> conn_in_;   // threads starting at v
    std::vector<std::vector<std::uint32_t>> conn_out_;  // threads ending at v
};

std::string render_hat_thread(const ExpansionWindow& w, const HatThread& h);

/// The inverse cosyzygy: maps a hat thread to the one whose full path
/// continues past its start, one level up. A bijection on underlying
/// elements modulo shift.
HatThread omega_inverse(const ExpansionWindow& w, const HatThread& h);
/// Convenience overload building a window deep enough for one step.
HatThread omega_inverse(const GentlePresentation& p, const HatThread& h);

/// Canonical level-0 slice of hat threads: Copy per thread, TrivialAt per
/// transition vertex (two tagged ones for the single-vertex algebra),
/// ArrowInverse per arrow. Total #permitted-threads + #arrows.
std::vector<HatThread> hat_threads_slice(const GentlePresentation& p);

/// Invariant of one omega_inverse orbit: n counts Copy/TrivialAt elements,
/// m counts ArrowInverse elements, from the start (inclusive) to the first
/// return to the same underlying element (exclusive). The level shift at
/// closure always equals n. series_size is |n-m| when they differ,
/// tube_rank is n when they agree.
struct OrbitInvariant {
    std::pair<std::uint32_t, std::uint32_t> pair;
    std::optional<std::uint32_t> series_size;
    std::optional<std::uint32_t> tube_rank;
};

/// Walks one orbit. depth defaults to a bound that no orbit can exhaust;
/// smaller explicit values make WindowExhaustedError reachable.
OrbitInvariant orbit_invariant(const GentlePresentation& p, const HatThread& start,
                               std::optional<std::uint32_t> depth = std::nullopt);

/// Full orbit decomposition of the slice: the multiset of (n, m) pairs in
/// canonical order. Starts from a shallow window and doubles the depth on
/// exhaustion, up to the guaranteed bound. Computed without consulting the
/// matching walk, so it serves as an independent check of compute_phi.
PhiInvariant compute_N(const GentlePresentation& p);

/// Verifies that the combinatorial Auslander-Reiten translate (built from
/// neighbor threads in the window) agrees with omega-squared followed by
/// the shift, on every slice arrow and transition vertex. On failure the
/// optional witness describes the first disagreement.
bool tau_check(const GentlePresentation& p, std::string* witness = nullptr);

namespace detail {

using OmegaFn = std::function<HatThread(const ExpansionWindow&, const HatThread&)>;

/// tau_check against a caller-supplied cosyzygy, used to verify that the
/// check actually catches a drifted implementation.
bool tau_check_with(const GentlePresentation& p, const OmegaFn& omega, std::string* witness);

}  // namespace detail

}  // namespace gentle
