#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace turan {

/**
 * Seeded 64-bit generator with a fixed, documented output mapping.
 *
 * The engine is std::mt19937_64 (its output sequence is fixed by the C++ standard). The
 * standard distributions are implementation-defined, so bounded integers and unit reals
 * are derived here explicitly:
 *   - uniform01():   (next() >> 11) * 2^-53, a double in [0, 1)
 *   - below(n):      rejection sampling on next() against the largest multiple of n
 * Any implementation following these rules reproduces every trace bit for bit.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform01();
    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent child seeds from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace turan
