#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gentle/threads.hpp"

namespace gentle {

/// The derived-equivalence invariant: a multiset of (n, m) pairs held in
/// canonical ascending lexicographic order.
struct PhiInvariant {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    friend bool operator==(const PhiInvariant&, const PhiInvariant&) = default;
};

/// One closed run of the matching walk: permitted[i] is H_i, forbidden[i]
/// its end partner; the walk closes back at permitted[0]. pair holds
/// (#permitted threads, summed forbidden length).
struct TraceRun {
    std::vector<Thread> permitted;
    std::vector<Thread> forbidden;
    std::pair<std::uint32_t, std::uint32_t> pair;
};

/// Complete record of one phi computation: the runs in execution order plus
/// one entry per relation cycle.
struct AlgorithmTrace {
    std::vector<TraceRun> runs;
    std::vector<std::pair<std::vector<ArrowId>, std::pair<std::uint32_t, std::uint32_t>>> cycles;
};

struct PhiResult {
    PhiInvariant phi;
    AlgorithmTrace trace;
};

/// Pure relation cycles (see ThreadTable::relation_cycles).
std::vector<std::vector<ArrowId>> relation_cycles(const GentlePresentation& p);

/// Computes the invariant by walking match_end / match_start from each
/// unused permitted thread until the run closes, emitting one (n, m) pair
/// per run and one (0, length) pair per relation cycle.
///
/// Runs seed at the least unused permitted thread in canonical table order.
/// The seed_order overloads accept any permutation of permitted-thread
/// indices instead; the invariant is independent of the choice (the trace
/// is not).
PhiResult compute_phi(const GentlePresentation& p);
PhiResult compute_phi(const GentlePresentation& p, std::span<const std::size_t> seed_order);
PhiResult compute_phi(const ThreadTable& table, std::span<const std::size_t> seed_order);

/// Sum identities satisfied by every compute_phi output: the n components
/// add up to the number of permitted threads and the m components to the
/// number of arrows.
bool check_sums(const PhiInvariant& phi, const GentlePresentation& p);

/// "[(0,1),(1,0)]" with no whitespace; "[]" when empty.
std::string phi_canonical_text(const PhiInvariant& phi);

/// Two-column rendering of the runs (H_i left, formal inverse of the
/// partner right), then one line per relation cycle.
std::string render_trace(const Quiver& q, const AlgorithmTrace& trace);

}  // namespace gentle
