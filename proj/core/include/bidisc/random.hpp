#pragma once

#include "bidisc/disc.hpp"

#include <cstdint>
#include <random>

namespace bidisc {

/// Seeded generator whose output is identical on every platform.
///
/// std::uniform_real_distribution is implementation-defined, so doubles are
/// produced directly from the top 53 bits of mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return engine_(); }

    /// Uniform by area in the disc of the given radius.
    Complex in_disc(double radius = 1.0);
    /// Uniform by area in the open unit disc, returned with its exact gap.
    DiscPoint disc_point(double max_modulus = 0.999);

    /// Derives an independent stream, e.g. one per task.
    Rng split(std::uint64_t salt) { return Rng(engine_() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

private:
    std::mt19937_64 engine_;
};

} // namespace bidisc
