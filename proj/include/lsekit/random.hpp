#pragma once

#include <cstdint>
#include <random>

namespace lsekit {

/// Seedable stream of uniform and Gaussian doubles with a fully pinned
/// algorithm, so identical seeds give identical streams on every platform
/// and standard library. The engine is std::mt19937_64 (its sequence is
/// fixed by the standard); the distributions are implemented here instead
/// of through std::*_distribution, whose sequences are not.
///
///   uniform():  (x >> 11) * 2^-53                  in [0, 1)
///   normal():   Box-Muller, consuming exactly two engine draws:
///               u1 = ((x1 >> 11) + 1) * 2^-53       in (0, 1]
///               u2 = (x2 >> 11) * 2^-53             in [0, 1)
///               z  = sqrt(-2 ln u1) * cos(2 pi u2)
class Prng {
public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal();

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace lsekit
