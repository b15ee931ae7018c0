#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gentle/invariant.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

/// Normal forms of the derived-equivalence classes reachable from gentle
/// presentations whose underlying graph has at most one independent cycle.

/// Linear quiver with n vertices and no relations.
struct An {
    std::uint32_t n = 0;

    friend bool operator==(const An&, const An&) = default;
};

/// Non-oriented cycle: two parallel directed paths of lengths p and q from a
/// shared source to a shared sink, no relations. Normalized to p >= q >= 1.
struct ATilde {
    std::uint32_t p = 0;
    std::uint32_t q = 0;

    friend bool operator==(const ATilde&, const ATilde&) = default;
};

/// Oriented n-cycle with r consecutive zero relations on it and a linear
/// m-vertex tail grafted onto the cycle; 1 <= r <= n, m >= 0.
struct Lambda {
    std::uint32_t r = 0;
    std::uint32_t n = 0;
    std::uint32_t m = 0;

    friend bool operator==(const Lambda&, const Lambda&) = default;
};

/// Marker for presentations outside the classified range.
struct BeyondOneCycle {
    std::uint32_t cycles = 0;

    friend bool operator==(const BeyondOneCycle&, const BeyondOneCycle&) = default;
};

using NormalForm = std::variant<An, ATilde, Lambda, BeyondOneCycle>;

/// Compact text form: "A_n(4)", "A_tilde(2,1)", "Lambda(2,3,1)",
/// "beyond_one_cycle(cycles=3)".
std::string render_normal_form(const NormalForm& form);

/// Relations sitting on the unique cycle, split by the direction of their
/// arrows relative to a fixed traversal of that cycle.
struct ClockCount {
    std::uint32_t clockwise = 0;
    std::uint32_t counterclockwise = 0;

    friend bool operator==(const ClockCount&, const ClockCount&) = default;
};

/// Prunes tree branches until only the cycle is left, walks it once, and
/// counts the relations whose arrows both survive, keyed by whether they
/// point along or against the walk. Which direction is called clockwise is
/// determined by vertex and arrow ids, so the pair is only meaningful up to
/// swapping; callers compare the two components or their difference.
/// Throws NotOneCycleError unless the cycle number is exactly 1.
ClockCount clock_condition(const GentlePresentation& p);

/// Names the derived-equivalence class of a presentation with at most one
/// cycle; beyond that range it returns BeyondOneCycle without deciding
/// anything. The result is cross-checked against the vertex count and the
/// cycle relation counts; a mismatch throws InconsistentInvariantError.
NormalForm classify(const GentlePresentation& p);

/// Builds the canonical representative of a normal form. Throws
/// BadParametersError for out-of-range parameters and for BeyondOneCycle,
/// which has no representative.
GentlePresentation build_family(const NormalForm& form);

enum class Verdict : std::uint8_t { Equivalent, NotEquivalent, Indeterminate };

/// Which comparison separated the two presentations, when one did.
enum class Witness : std::uint8_t { None, VertexCount, ArrowCount, Phi };

struct EquivalenceResult {
    Verdict verdict = Verdict::Indeterminate;
    Witness witness = Witness::None;
    PhiInvariant phi_a;
    PhiInvariant phi_b;
    std::uint32_t cycles_a = 0;
    std::uint32_t cycles_b = 0;
};

/// Decides derived equivalence as far as the invariant can. Distinct vertex
/// counts, arrow counts, or invariants always separate; matching data proves
/// equivalence only when both cycle numbers are at most 1, and is reported
/// Indeterminate beyond that range.
EquivalenceResult derived_equivalent(const GentlePresentation& a,
                                     const GentlePresentation& b);

}  // namespace gentle
