#include "turan/bounds.hpp"

#include <cmath>
#include <string>

#include "turan/complex.hpp"

namespace turan {

namespace {

std::int64_t pow2(int e)
{
    if (e < 0 || e > 60) {
        throw ComplexError("dimension out of supported range");
    }
    return std::int64_t{1} << e;
}

} // namespace

std::int64_t flip_facet_gain(int d)
{
    return pow2(d + 1) - 2;
}

Rational critical_exponent(int d)
{
    return Rational(d + 1, flip_facet_gain(d));
}

std::int64_t gkn_min_facets(int d, std::int64_t n)
{
    if (d < 1) {
        throw ComplexError("gkn_min_facets: d must be >= 1");
    }
    if (n < 2 * (d + 1)) {
        throw ComplexError("gkn_min_facets: a balanced " + std::to_string(d) +
                           "-sphere has at least " + std::to_string(2 * (d + 1)) + " vertices");
    }
    const std::int64_t num = flip_facet_gain(d) * n;
    const std::int64_t den = d + 1;
    const std::int64_t ceil_term = (num + den - 1) / den;
    return ceil_term - pow2(d + 1) + 4;
}

std::int64_t max_vertices_for_facets(int d, std::int64_t m)
{
    if (d < 1) {
        throw ComplexError("max_vertices_for_facets: d must be >= 1");
    }
    if (m < pow2(d + 1)) {
        throw ComplexError("max_vertices_for_facets: a balanced " + std::to_string(d) +
                           "-sphere has at least " + std::to_string(pow2(d + 1)) + " facets");
    }
    return (m + pow2(d + 1) - 4) * (d + 1) / flip_facet_gain(d);
}

double log_labeled_copies_bound(int d, std::int64_t m, double n, double c)
{
    if (c < 1.0) {
        throw ComplexError("labeled_copies_bound: C must be >= 1");
    }
    if (m < pow2(d + 1)) {
        throw ComplexError("labeled_copies_bound: m below the minimum balanced facet count");
    }
    const double gain = static_cast<double>(flip_facet_gain(d));
    const double exponent = (d + 1) * static_cast<double>(m) / gain +
                            (d + 1) * static_cast<double>(pow2(d + 1) - 4) / gain;
    return static_cast<double>(m) * std::log(c) + exponent * std::log(n);
}

double labeled_copies_bound(int d, std::int64_t m, double n, double c)
{
    const double log_bound = log_labeled_copies_bound(d, m, n, c);
    const double gain = static_cast<double>(flip_facet_gain(d));
    const double exponent = (d + 1) * (static_cast<double>(m) + static_cast<double>(pow2(d + 1) - 4)) / gain;
    if (log_bound > 700.0) {
        return HUGE_VAL;
    }
    return std::pow(c, static_cast<double>(m)) * std::pow(n, exponent);
}

ExponentTable exponents(int d)
{
    if (d < 2) {
        throw ComplexError("exponents: d must be >= 2");
    }
    ExponentTable t;
    t.d = d;
    t.lower = Rational(d + 1) - critical_exponent(d);
    t.upper = Rational(d + 1) - Rational(1, pow2(d - 1));
    return t;
}

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace turan
