#pragma once

#include <cstdint>

#include "turan/complex.hpp"

namespace turan {

/// Parameters of the Linial-Meshulam model Y_d(n, p) on vertex set {0, ..., n-1}.
struct LMParams {
    std::uint32_t n = 0;
    int d = 2;
    double p = 0.0;
    std::uint64_t seed = 0;

    /// Throws ComplexError unless 0 <= p <= 1, d >= 0 and n >= d + 1.
    void validate() const;
};

enum class SamplingMode {
    Auto,   ///< Dense when C(n, d+1) <= kDenseLimit, sparse otherwise
    Dense,  ///< one uniform per (d+1)-subset in lexicographic order; include iff u < p
    Sparse, ///< binomial facet count, then that many distinct subsets uniformly at random
};

inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

/// Samples the d-faces of Y_d(n, p). The complete (d-1)-skeleton is implicit: only the
/// sampled facets are stored.
Complex sample_lm(const LMParams& params, SamplingMode mode = SamplingMode::Auto);

/// epsilon * n^(-(d+1)/(2^(d+1)-2)), clamped to [0, 1].
double turan_probability(std::uint32_t n, int d, double epsilon);

/// C(n, d+1) * p.
double expected_facets(const LMParams& params);

/// Lexicographic rank -> k-subset of {0..n-1}.
Face unrank_subset(std::uint64_t rank, std::uint32_t n, std::uint32_t k);

} // namespace turan
