#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/complex.hpp"
#include "turan/sphere_factory.hpp"

namespace turan {

inline constexpr std::size_t kNoCap = static_cast<std::size_t>(-1);

/**
 * Isomorphism-invariant relabeling onto 0..n-1.
 *
 * Vertices are split by an iterated refinement (each vertex's class plus the multiset of
 * class tuples of the facets through it) and the search individualizes vertices of the
 * first non-singleton class until the partition is discrete. The result is the
 * lexicographically least sorted facet list over all those leaves, so two complexes get
 * equal forms iff they are isomorphic.
 */
Complex canonical_form(const Complex& x);

struct CensusRecord {
    int d = 2;
    std::uint64_t key = 0;   ///< vertex count (2-sphere census) or facet count (2-LC census)
    std::uint64_t count = 0; ///< distinct isomorphism classes
    std::vector<Complex> representatives; ///< canonical forms, possibly capped
    bool lower_bound = false; ///< count is only the number of classes reached
    std::uint64_t samples = 0;
};

/// All 2-spheres on n <= n_max vertices (4 <= n, n_max <= 9): grows closed surfaces
/// triangle by triangle over labeled facet sets with 2n-4 triangles, keeps the ones that
/// verify as spheres, and deduplicates by canonical form.
std::vector<CensusRecord> enumerate_2spheres(int n_max, std::size_t keep = kNoCap);

/// All 2-spheres on n <= n_max vertices (n_max <= 12) generated from the tetrahedron by
/// vertex splits, deduplicated by canonical form at each size.
std::vector<CensusRecord> split_2spheres(int n_max, std::size_t keep = kNoCap);

/// Classes reached by two_lc_generate over `sample_budget` derived seeds. The count is a
/// lower bound on the number of 2-LC spheres with m facets.
CensusRecord census_2lc(int d, int m, std::uint64_t sample_budget, std::uint64_t seed,
                        LcMode mode = LcMode::TwoLC, std::size_t keep = kNoCap);

/// count < 2^((d^3/2) m).
bool below_2lc_growth_bound(int d, int m, std::uint64_t count);

} // namespace turan
