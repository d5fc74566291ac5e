#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"

// Brute-force counts shared by the unit tests and the acceptance gate. They use only
// vertex/edge bookkeeping, none of the library's search code.
namespace turan::test {

// Octahedra in a triangle set, by brute force over 6-vertex subsets and their 8-triangle
// subsets: eight triangles on six vertices with every vertex in four of them and every
// edge in two form a closed surface with chi = 6 - 12 + 8 = 2 and all vertex degrees 4,
// which is the octahedron.
inline std::uint64_t brute_force_octahedra(const Complex& host)
{
    std::uint64_t total = 0;
    const auto verts = host.vertices();
    std::vector<bool> pick6(verts.size(), false);
    std::fill(pick6.begin(), pick6.begin() + 6, true);
    do {
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (pick6[i]) {
                s.push_back(verts[i]);
            }
        }
        std::vector<Face> tris;
        for (const auto& f : host.facets()) {
            if (std::includes(s.begin(), s.end(), f.begin(), f.end())) {
                tris.push_back(f);
            }
        }
        if (tris.size() < 8) {
            continue;
        }
        std::vector<bool> pick8(tris.size(), false);
        std::fill(pick8.begin(), pick8.begin() + 8, true);
        do {
            std::map<Vertex, int> vdeg;
            std::map<std::pair<Vertex, Vertex>, int> edeg;
            for (std::size_t i = 0; i < tris.size(); ++i) {
                if (!pick8[i]) {
                    continue;
                }
                const auto& t = tris[i];
                for (Vertex v : t) {
                    ++vdeg[v];
                }
                ++edeg[{t[0], t[1]}];
                ++edeg[{t[0], t[2]}];
                ++edeg[{t[1], t[2]}];
            }
            bool ok = vdeg.size() == 6;
            for (const auto& [v, k] : vdeg) {
                ok = ok && k == 4;
            }
            for (const auto& [e, k] : edeg) {
                ok = ok && k == 2;
            }
            total += ok;
        } while (std::prev_permutation(pick8.begin(), pick8.end()));
    } while (std::prev_permutation(pick6.begin(), pick6.end()));
    return total;
}

// Closed surface with chi = 2 on all n labels, each vertex link one cycle.
inline bool is_labeled_sphere(const std::vector<Face>& tris, int n)
{
    std::map<std::pair<Vertex, Vertex>, int> edges;
    std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> links;
    for (const auto& t : tris) {
        ++edges[{t[0], t[1]}];
        ++edges[{t[0], t[2]}];
        ++edges[{t[1], t[2]}];
        links[t[0]].emplace_back(t[1], t[2]);
        links[t[1]].emplace_back(t[0], t[2]);
        links[t[2]].emplace_back(t[0], t[1]);
    }
    if (static_cast<int>(links.size()) != n) {
        return false;
    }
    for (const auto& [e, k] : edges) {
        if (k != 2) {
            return false;
        }
    }
    if (n - static_cast<int>(edges.size()) + static_cast<int>(tris.size()) != 2) {
        return false;
    }
    for (const auto& [v, segs] : links) {
        // walk the link from one segment; it must return after visiting every segment
        std::set<std::size_t> used{0};
        Vertex start = segs[0].first;
        Vertex cur = segs[0].second;
        while (cur != start) {
            bool moved = false;
            for (std::size_t i = 0; i < segs.size() && !moved; ++i) {
                if (used.count(i) == 0 && (segs[i].first == cur || segs[i].second == cur)) {
                    used.insert(i);
                    cur = segs[i].first == cur ? segs[i].second : segs[i].first;
                    moved = true;
                }
            }
            if (!moved) {
                return false;
            }
        }
        if (used.size() != segs.size()) {
            return false;
        }
    }
    return true;
}

inline std::uint64_t labeled_spheres_brute_force(int n)
{
    const auto all = complete_complex(static_cast<std::uint32_t>(n), 2).facets();
    const std::size_t k = 2 * static_cast<std::size_t>(n) - 4;
    std::vector<bool> pick(all.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::uint64_t total = 0;
    do {
        std::vector<Face> tris;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (pick[i]) {
                tris.push_back(all[i]);
            }
        }
        total += is_labeled_sphere(tris, n);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

} // namespace turan::test
