#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "turan/complex.hpp"

namespace turan {

struct FaceHash {
    std::size_t operator()(const Face& f) const { return boost::hash_range(f.begin(), f.end()); }
};

/// Adjacency tables over some of the host's facets, in dense vertex ids.
struct HostView {
    std::vector<std::vector<std::uint32_t>> incident; ///< vertex -> facet indices
    std::unordered_map<Face, std::vector<std::uint32_t>, FaceHash> ridge_apexes;
    std::unordered_set<Face, FaceHash> facets;

    std::size_t vertex_degree(std::uint32_t id) const { return incident[id].size(); }
    /// Dense vertices completing the dense (d-1)-face `ridge` to a facet.
    const std::vector<std::uint32_t>* apexes(const Face& ridge) const;
    bool has_facet(const Face& f) const { return facets.contains(f); }
};

/// Lookup tables over an immutable host complex, shared by every pattern searched in it.
class EmbeddingIndex {
public:
    explicit EmbeddingIndex(Complex host);

    const Complex& host() const { return host_; }

    // Dense host vertex ids 0..n-1 (sorted label order).
    std::size_t num_vertices() const { return labels_.size(); }
    Vertex label(std::uint32_t id) const { return labels_[id]; }
    const std::vector<Face>& dense_facets() const { return facets_; }

    /// Every host facet.
    const HostView& all() const { return all_; }
    /// Facets left after repeatedly deleting facets with a (d-1)-face of degree < 2.
    /// A pattern whose (d-1)-faces all have degree >= 2 can only map into these.
    const HostView& core() const { return core_; }

private:
    Complex host_;
    std::vector<Vertex> labels_;
    std::vector<Face> facets_;
    HostView all_;
    HostView core_;
};

/// An injective vertex map pattern -> host sending every pattern facet to a host facet.
struct Embedding {
    std::vector<std::pair<Vertex, Vertex>> map; ///< (pattern vertex, host vertex), sorted
    std::vector<Face> image;                    ///< sorted image facets (host labels)
};

struct EmbeddingSearch {
    std::vector<Embedding> copies; ///< one representative per distinct image facet set
    std::uint64_t labeled = 0;     ///< vertex maps visited (all of them unless truncated)
    bool truncated = false;        ///< stopped at the copy limit
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Backtracking over vertex maps, one pattern facet at a time in ridge-adjacent order;
/// candidate images come from host facets through the shared ridge or vertex. Copies are
/// deduplicated by image so automorphisms of the pattern are not double counted.
EmbeddingSearch search_embeddings(const EmbeddingIndex& host, const Complex& pattern,
                                  std::size_t limit = kNoLimit);

std::vector<Embedding> find_embedded_copies(const EmbeddingIndex& host, const Complex& pattern,
                                            std::size_t limit = kNoLimit);
std::vector<Embedding> find_embedded_copies(const Complex& host, const Complex& pattern,
                                            std::size_t limit = kNoLimit);

/// Number of facet-preserving vertex permutations.
std::uint64_t automorphism_count(const Complex& x);

} // namespace turan
