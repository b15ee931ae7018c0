#pragma once

#include <cstdint>

#include "gentle/quiver.hpp"

namespace gentle {

/// xorshift64* stream. Deterministic across platforms. Seed 0 is remapped to
/// a fixed odd constant because the all-zero state is a fixed point of the
/// recurrence.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next();

    /// Uniform value in [0, n), n > 0. Rejection sampled, exactly uniform.
    std::uint64_t below(std::uint64_t n);

    /// True with the given probability; arguments outside [0,1] clamp.
    bool chance(double prob);

private:
    std::uint64_t state_;
};

struct GeneratorParams {
    std::uint32_t vertex_count = 4;

    /// Arrows beyond the spanning tree; equals the cycle number of the
    /// resulting quiver.
    std::uint32_t cycle_target = 1;

    /// Probability that a composition free of structural constraints is
    /// declared zero.
    double relation_density = 0.5;

    std::uint64_t seed = 1;
};

/// Samples a connected gentle presentation with the requested shape; the
/// same params always produce the same presentation. Throws
/// GenerationFailedError with attempts() == 0 when the parameters are
/// impossible outright and with the full attempt count when every sampled
/// draft ended in an unrepairable dead end.
GentlePresentation random_gentle(const GeneratorParams& params);

}  // namespace gentle
