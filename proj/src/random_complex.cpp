#include "turan/random_complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "turan/rng.hpp"

namespace turan {

namespace {

// Number of successes among `trials` Bernoulli(p) draws, by summing geometric gaps.
std::uint64_t binomial_count(Rng& rng, std::uint64_t trials, double p)
{
    if (p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return trials;
    }
    const double log_q = std::log1p(-p);
    std::uint64_t count = 0;
    double position = -1.0;
    while (true) {
        const double gap = std::floor(std::log1p(-rng.uniform01()) / log_q);
        position += gap + 1.0;
        if (position >= static_cast<double>(trials)) {
            return count;
        }
        ++count;
    }
}

Complex sample_dense(const LMParams& params)
{
    Rng rng(params.seed);
    const auto k = static_cast<std::uint32_t>(params.d + 1);
    Face subset(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        subset[i] = i;
    }
    std::vector<Face> facets;
    while (true) {
        if (rng.uniform01() < params.p) {
            facets.push_back(subset);
        }
        std::uint32_t i = k;
        while (i > 0 && subset[i - 1] == params.n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++subset[i - 1];
        for (std::uint32_t j = i; j < k; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
    return Complex(params.d, std::move(facets));
}

Complex sample_sparse(const LMParams& params)
{
    Rng rng(params.seed);
    const auto k = static_cast<std::uint32_t>(params.d + 1);
    const std::uint64_t total = binomial(params.n, k);
    const std::uint64_t count = binomial_count(rng, total, params.p);
    // Floyd's algorithm: `count` distinct ranks, uniformly.
    std::set<std::uint64_t> ranks;
    for (std::uint64_t j = total - count; j < total; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!ranks.insert(t).second) {
            ranks.insert(j);
        }
    }
    std::vector<Face> facets;
    facets.reserve(ranks.size());
    for (std::uint64_t r : ranks) {
        facets.push_back(unrank_subset(r, params.n, k));
    }
    return Complex(params.d, std::move(facets));
}

} // namespace

void LMParams::validate() const
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ComplexError("probability must lie in [0, 1]");
    }
    if (d < 0) {
        throw ComplexError("dimension must be non-negative");
    }
    if (n < static_cast<std::uint32_t>(d + 1)) {
        throw ComplexError("need n >= d + 1 vertices, got n = " + std::to_string(n));
    }
}

Complex sample_lm(const LMParams& params, SamplingMode mode)
{
    params.validate();
    if (mode == SamplingMode::Auto) {
        mode = binomial(params.n, static_cast<std::uint64_t>(params.d + 1)) <= kDenseLimit
                   ? SamplingMode::Dense
                   : SamplingMode::Sparse;
    }
    return mode == SamplingMode::Dense ? sample_dense(params) : sample_sparse(params);
}

double turan_probability(std::uint32_t n, int d, double epsilon)
{
    if (!(epsilon > 0.0)) {
        throw ComplexError("epsilon must be positive");
    }
    const double denom = std::ldexp(1.0, d + 1) - 2.0;
    const double p = epsilon * std::pow(static_cast<double>(n), -(d + 1) / denom);
    return std::clamp(p, 0.0, 1.0);
}

double expected_facets(const LMParams& params)
{
    return static_cast<double>(binomial(params.n, static_cast<std::uint64_t>(params.d + 1))) * params.p;
}

Face unrank_subset(std::uint64_t rank, std::uint32_t n, std::uint32_t k)
{
    Face out;
    out.reserve(k);
    std::uint32_t v = 0;
    for (std::uint32_t slot = 0; slot < k; ++slot) {
        while (true) {
            const std::uint64_t with_v = binomial(n - v - 1, k - slot - 1);
            if (rank < with_v) {
                break;
            }
            rank -= with_v;
            ++v;
        }
        out.push_back(v++);
    }
    return out;
}

} // namespace turan
