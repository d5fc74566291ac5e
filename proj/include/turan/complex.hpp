#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace turan {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// A face is a strictly increasing list of vertex labels; a k-face has k+1 entries.
using Face = std::vector<Vertex>;

/// Thrown for malformed input: bad facet lists, out-of-range arguments, faces not in a complex.
class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A pure simplicial complex of dimension d, stored as its facets only.
 *
 * Facets are kept sorted and deduplicated, each as a sorted vertex list, so two
 * complexes compare equal iff they have the same facet set. Lower faces are implied by
 * downward closure. The empty complex (no facets) is legal for every dimension >= -1.
 * Instances are immutable.
 */
class Complex {
public:
    Complex() = default;

    /// Canonicalizes the facet list. Throws ComplexError on a facet with the wrong size
    /// or a repeated vertex.
    Complex(int dim, std::vector<Face> facets);

    static Complex empty(int dim) { return Complex(dim, {}); }

    int dim() const { return dim_; }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }

    /// Sorted list of vertices that appear in some facet.
    std::vector<Vertex> vertices() const;
    std::size_t num_vertices() const { return vertices().size(); }

    /// Largest vertex label, or nullopt for the empty complex.
    std::optional<Vertex> max_vertex() const;

    bool has_facet(std::span<const Vertex> face) const;
    /// True iff `face` (sorted) is contained in some facet. The empty face is in every
    /// complex.
    bool has_face(std::span<const Vertex> face) const;

    friend bool operator==(const Complex&, const Complex&) = default;
    friend auto operator<=>(const Complex&, const Complex&) = default;

private:
    int dim_ = 0;
    std::vector<Face> facets_;
};

/// Face counts f_{-1}, f_0, ..., f_d.
class FVector {
public:
    FVector() = default;
    explicit FVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

    /// Count of k-faces, -1 <= k <= dim.
    std::uint64_t operator[](int k) const { return counts_.at(static_cast<std::size_t>(k + 1)); }
    int dim() const { return static_cast<int>(counts_.size()) - 2; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const FVector&, const FVector&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

/// Vertex -> color in {0, ..., d}.
using Coloring = std::map<Vertex, Color>;

Complex new_complex(int dim, std::vector<Face> facets);

/// All k-faces, sorted. k = -1 yields the empty face.
std::vector<Face> faces(const Complex& x, int k);

FVector f_vector(const Complex& x);

std::int64_t euler_characteristic(const Complex& x);
/// Euler characteristic of a d-sphere: 2 for even d, 0 for odd d.
std::int64_t sphere_euler_characteristic(int d);

/// Link of `sigma`: faces tau disjoint from sigma with sigma u tau a face. Returned as a
/// pure complex of dimension d - |sigma| built from the facets that contain sigma.
Complex link(const Complex& x, const Face& sigma);

/// Number of facets containing the (d-1)-face `sigma`.
std::size_t degree(const Complex& x, const Face& sigma);

/// Number of (d-1)-faces lying in both lk(u) and lk(v).
std::size_t common_link_count(const Complex& x, Vertex u, Vertex v);

/// The (d-1)-complex of faces tau with tau+u and tau+v both facets.
Complex common_link(const Complex& x, Vertex u, Vertex v);

/// Map from each (d-1)-face to the vertices completing it to a facet.
std::map<Face, std::vector<Vertex>> ridge_cofaces(const Complex& x);

/// Every vertex pair with a nonzero common-link count, accumulated ridge by ridge.
std::map<std::pair<Vertex, Vertex>, std::size_t> common_link_counts(const Complex& x);

/// Join with two fresh apex vertices above the current maximum label.
Complex suspension(const Complex& x);

struct Subdivision {
    Complex complex;
    Coloring coloring; ///< color = dimension of the subdivided face
    std::map<Face, Vertex> face_vertex;
};

/// Vertices are the nonempty faces of x; facets are maximal chains. Vertices of x keep
/// their labels; higher faces get fresh labels in (dimension, lexicographic) order.
Subdivision barycentric_subdivision_full(const Complex& x);
Complex barycentric_subdivision(const Complex& x);

/// A proper (d+1)-coloring of the 1-skeleton, found by exhaustive backtracking, or
/// nullopt if none exists.
std::optional<Coloring> is_balanced(const Complex& x);

/// True iff `c` is total on the vertices of x, uses colors <= d, and no edge is
/// monochromatic.
bool is_proper_coloring(const Complex& x, const Coloring& c);

/// Facets on which `c` is injective.
Complex rainbow_subcomplex(const Complex& x, const Coloring& c);

/// Glue y onto x by identifying facet sigma_y with facet sigma_x (vertex v of sigma_y goes
/// to matching.at(v)) and delete the glued facet. Non-glued vertices of y get fresh labels
/// above max(x), in increasing order.
Complex connected_sum(const Complex& x, const Complex& y, const Face& sigma_x,
                      const Face& sigma_y, const std::map<Vertex, Vertex>& matching);

/// Apply a vertex relabeling. Throws if the map is not injective on x's vertices.
Complex relabel(const Complex& x, const std::map<Vertex, Vertex>& map);

/// Remove the given facets (those absent are ignored).
Complex remove_facets(const Complex& x, std::span<const Face> gone);

/// Every facet adjacent to some other facet through a shared (d-1)-face forms one class.
bool is_strongly_connected(const Complex& x);

/// Sorted vertex list with v inserted / removed.
Face with_vertex(const Face& f, Vertex v);
Face without_vertex(const Face& f, Vertex v);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace turan
