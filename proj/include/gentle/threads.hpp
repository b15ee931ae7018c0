#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

enum class ThreadKind : std::uint8_t { Permitted, Forbidden };

/// A permitted or forbidden thread.
///
/// `body` lists arrows in composition order: body.front() acts first, so the
/// conventional product notation writes body.back() leftmost. Trivial
/// threads have an empty body and sit at vertex `at`. `orient` is 0 except
/// for the single-vertex algebra, whose trivial threads come in +1/-1
/// tagged pairs.
struct Thread {
    ThreadKind kind = ThreadKind::Permitted;
    std::vector<ArrowId> body;
    VertexId at = 0;
    int orient = 0;

    bool trivial() const { return body.empty(); }

    VertexId start(const Quiver& q) const {
        return trivial() ? at : q.arrow(body.front()).source;
    }
    VertexId end(const Quiver& q) const {
        return trivial() ? at : q.arrow(body.back()).target;
    }

    friend bool operator==(const Thread&, const Thread&) = default;
};

/// Product notation: last arrow leftmost, e.g. "a7 a6" for the path that
/// does a6 and then a7. Trivial threads render as 1_v, plus a +/- suffix
/// when orientation-tagged.
std::string render_thread(const Quiver& q, const Thread& t);

/// Formal inverse: first arrow leftmost, each label suffixed with ^-1.
/// Trivial threads render as "*".
std::string render_thread_inverse(const Quiver& q, const Thread& t);

/// Arrow signs, indexed by arrow id. sigma separates the (at most two)
/// arrows leaving a shared source, eps the arrows entering a shared target;
/// additionally sigma(g) = -eps(a) whenever "a then g" is relation free.
struct SignAssignment {
    std::vector<int> sigma;
    std::vector<int> eps;
};

/// Computes a valid sign assignment by parity propagation over the three
/// constraint families. Deterministic: the first node of each unconstrained
/// component, in arrow-label order (sigma before eps per arrow), gets +1.
/// Throws InconsistentSignsError if the constraints are unsatisfiable,
/// which cannot happen for validated input.
SignAssignment assign_signs(const GentlePresentation& p);

/// Returns one message per violated sign constraint (empty means valid).
std::vector<std::string> sign_violations(const GentlePresentation& p,
                                         const SignAssignment& sa);

/// (sigma, eps) of a thread: for a non-trivial thread the sigma of its
/// first and the eps of its last arrow. Trivial threads take their value
/// from an incident arrow by convention:
///   permitted 1_v: sigma = eps(b) for the incoming arrow b, falling back
///     to -sigma(g) for the outgoing arrow g at a source; eps = -sigma.
///   forbidden 1_v: sigma = eps = -sigma(g) for the outgoing arrow g,
///     falling back to -eps(b) at a sink.
/// Throws IsolatedVertexError for trivial threads of the single-vertex
/// algebra (their orientation tag stands in for a sign).
std::pair<int, int> thread_signs(const GentlePresentation& p, const SignAssignment& sa,
                                 const Thread& t);

/// Non-trivial forbidden threads plus the relation cycles that are excluded
/// from the thread list and tracked separately.
struct ForbiddenThreads {
    std::vector<Thread> threads;
    std::vector<std::vector<ArrowId>> cycles;
};

/// Complete thread enumeration for one presentation, with the lookups the
/// matching needs. Immutable after construction and therefore safe for
/// concurrent readers; build it once and share it by reference.
class ThreadTable {
public:
    explicit ThreadTable(const GentlePresentation& p);

    const GentlePresentation& presentation() const { return *p_; }

    /// Thread order is canonical: non-trivial threads by the id of their
    /// first arrow, then trivial threads by vertex id (for the
    /// single-vertex algebra the +1 tagged one first).
    const std::vector<Thread>& permitted() const { return permitted_; }

    /// Forbidden threads, same order. Arrows on relation cycles appear in
    /// relation_cycles() instead, each cycle listed once starting from its
    /// least arrow id.
    const std::vector<Thread>& forbidden() const { return forbidden_; }
    const std::vector<std::vector<ArrowId>>& relation_cycles() const { return cycles_; }

    std::optional<std::size_t> permitted_starting_with(ArrowId a) const;
    std::optional<std::size_t> forbidden_ending_with(ArrowId a) const;
    std::optional<std::size_t> trivial_permitted_at(VertexId v) const;
    std::optional<std::size_t> trivial_forbidden_at(VertexId v) const;

    /// The forbidden thread sharing its end vertex with h and lying on the
    /// opposite eps side, selected structurally:
    ///   - h ends with arrow a: the forbidden thread ending with the other
    ///     incoming arrow at that vertex, or the trivial one if a is alone.
    ///   - h trivial with an incoming arrow b: the forbidden thread ending
    ///     with b.
    ///   - h trivial at a source: the trivial forbidden thread there.
    ///   - single-vertex algebra: the forbidden thread with the same tag.
    /// Total for gentle input; throws MatchFailureError on corruption.
    const Thread& match_end(const Thread& h) const;

    /// Dual partner map on start vertices and sigma sides:
    ///   - pi starts with arrow a: the permitted thread starting with the
    ///     other outgoing arrow, or the trivial one if a is alone.
    ///   - pi trivial with an outgoing arrow g: the permitted thread
    ///     starting with g.
    ///   - pi trivial at a sink: the trivial permitted thread there.
    ///   - single-vertex algebra: the permitted thread with the flipped tag.
    const Thread& match_start(const Thread& pi) const;

private:
    static constexpr std::size_t kMiss = static_cast<std::size_t>(-1);

    const GentlePresentation* p_;
    std::vector<Thread> permitted_;
    std::vector<Thread> forbidden_;
    std::vector<std::vector<ArrowId>> cycles_;
    std::vector<std::size_t> perm_start_;
    std::vector<std::size_t> forb_end_;
    std::vector<std::size_t> triv_perm_;
    std::vector<std::size_t> triv_forb_;
};

/// One-shot conveniences; for repeated queries build a ThreadTable.
std::vector<Thread> permitted_threads(const GentlePresentation& p);
ForbiddenThreads forbidden_threads(const GentlePresentation& p);
Thread match_end(const GentlePresentation& p, const Thread& h);
Thread match_start(const GentlePresentation& p, const Thread& pi);

}  // namespace gentle
