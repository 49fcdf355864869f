#pragma once

#include <cstdint>
#include <random>

namespace cba {

// Seeded random stream with explicitly implemented samplers.
//
// The standard <random> distributions are implementation-defined, so two
// standard libraries can produce different draws from the same engine state.
// All fixtures and the byte-identical-CSV contract of the harness depend on
// the draw sequence, so the samplers are spelled out here on top of a
// mt19937_64 engine.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos()
    {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Index in [0, n).
    std::size_t uniform_index(std::size_t n);

    // Standard normal via Box-Muller with one cached value.
    double normal();

    double normal(double mean, double sd) { return mean + sd * normal(); }

    double exponential(double mean) { return -mean * std::log(uniform_pos()); }

    // Gamma(shape, rate) in the shape-rate parametrization,
    // Marsaglia-Tsang squeeze with the usual boost for shape < 1.
    double gamma(double shape, double rate);

    // Split off an independent stream; advances this stream.
    Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ULL); }

  private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace cba
