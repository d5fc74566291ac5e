#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "turan/complex.hpp"
#include "turan/json_io.hpp"
#include "turan/sphere_check.hpp"

namespace turan {

struct WitnessOptions {
    /// Vertex pairs tried per level, in decreasing common-link order.
    std::size_t pairs_per_level = 16;
    /// Record the double-counting bookkeeping per level and skip levels where no
    /// (d-1)-face has degree >= 2 (no sphere can live there).
    bool min_density_check = false;
    SphereEffort effort{};
};

/// One suspension level of a found witness.
struct WitnessLevel {
    int dim = 0;
    Vertex u = 0;
    Vertex v = 0;
    std::size_t common_link_faces = 0;
    std::size_t facets = 0;
    std::size_t vertices = 0;
    /// Sum over (d-1)-faces of C(deg, 2); equals the sum of all pairwise common-link counts.
    std::uint64_t pair_sum = 0;
    /// pair_sum / C(vertices, 2): the best pair is at least this good.
    double pigeonhole = 0.0;
};

struct Witness {
    Complex sphere;
    std::vector<WitnessLevel> levels; ///< outermost level first
    SphereVerdict verdict;
};

/// Any cycle of a 1-complex, by depth-first search.
std::optional<Complex> find_cycle(const Complex& graph);

/// Finds an iterated suspension of a cycle inside x: pick a vertex pair with a large
/// common link, recurse into the common-link complex, and suspend the sphere found there
/// over the pair. The result is a subcomplex of x and is re-verified before returning.
std::optional<Witness> suspension_witness(const Complex& x, const WitnessOptions& options = {});

json to_json(const Witness& w);

} // namespace turan
