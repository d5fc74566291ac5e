#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "turan/complex.hpp"
#include "turan/rng.hpp"

namespace turan::test {

inline Complex octahedron()
{
    // antipodal pairs {0,1}, {2,3}, {4,5}
    std::vector<Face> f;
    for (Vertex a : {0u, 1u}) {
        for (Vertex b : {2u, 3u}) {
            for (Vertex c : {4u, 5u}) {
                f.push_back({a, b, c});
            }
        }
    }
    return Complex(2, f);
}

/// All (d+1)-subsets of {0..n-1}.
inline Complex complete_complex(std::uint32_t n, int d)
{
    std::vector<Face> facets;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + d + 1, true);
    do {
        Face f;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (pick[i]) {
                f.push_back(i);
            }
        }
        facets.push_back(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return Complex(d, facets);
}

/// Uniform random relabeling onto labels offset..offset+n-1 (scrambled).
inline Complex shuffle_labels(const Complex& x, Rng& rng, Vertex offset = 0)
{
    const auto verts = x.vertices();
    std::vector<Vertex> images(verts.size());
    std::iota(images.begin(), images.end(), offset);
    rng.shuffle(std::span<Vertex>(images));
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        m[verts[i]] = images[i];
    }
    return relabel(x, m);
}

inline std::uint64_t factorial(std::uint64_t n)
{
    std::uint64_t r = 1;
    for (std::uint64_t k = 2; k <= n; ++k) {
        r *= k;
    }
    return r;
}

} // namespace turan::test
