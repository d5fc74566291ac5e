#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace turan {

using Rational = boost::rational<std::int64_t>;

/// 2^(d+1) - 2.
std::int64_t flip_facet_gain(int d);

/// (d+1) / (2^(d+1) - 2): the probability exponent of the random construction.
Rational critical_exponent(int d);

/// Smallest facet count allowed for a balanced d-sphere on n vertices:
/// ceil((2^(d+1)-2)/(d+1) * n) - 2^(d+1) + 4. Throws for n < 2(d+1).
std::int64_t gkn_min_facets(int d, std::int64_t n);

/// floor((m + 2^(d+1) - 4)(d+1) / (2^(d+1) - 2)): the most vertices a balanced d-sphere
/// with m facets can have. Throws for m < 2^(d+1).
std::int64_t max_vertices_for_facets(int d, std::int64_t m);

/// C^m * n^((d+1)m/(2^(d+1)-2)) * n^((d+1)(2^(d+1)-4)/(2^(d+1)-2)), an upper bound on
/// labeled copies in the (n-1)-simplex of spheres with m facets from a class of size C^m.
double labeled_copies_bound(int d, std::int64_t m, double n, double c);
double log_labeled_copies_bound(int d, std::int64_t m, double n, double c);

struct ExponentTable {
    int d = 2;
    Rational lower; ///< d + 1 - (d+1)/(2^(d+1)-2)
    Rational upper; ///< d + 1 - 1/2^(d-1)
};

ExponentTable exponents(int d);

double to_double(const Rational& r);

} // namespace turan
