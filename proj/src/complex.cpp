#include "turan/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace turan {

namespace {

void sort_face(Face& f)
{
    std::sort(f.begin(), f.end());
}

bool has_repeat(const Face& sorted)
{
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// Calls fn(subset) for every size-`size` subset of `f` (f sorted, subsets sorted).
template <typename Fn>
void for_each_subset(const Face& f, std::size_t size, Fn&& fn)
{
    if (size > f.size()) {
        return;
    }
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    Face sub(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) {
            sub[i] = f[idx[i]];
        }
        fn(sub);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == f.size() - size + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a)
    {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

Complex::Complex(int dim, std::vector<Face> facets) : dim_(dim)
{
    if (dim < -1) {
        throw ComplexError("complex dimension must be >= -1, got " + std::to_string(dim));
    }
    const auto size = static_cast<std::size_t>(dim + 1);
    for (auto& f : facets) {
        if (f.size() != size) {
            throw ComplexError("facet has " + std::to_string(f.size()) + " vertices, expected " +
                               std::to_string(size));
        }
        sort_face(f);
        if (has_repeat(f)) {
            throw ComplexError("facet has a repeated vertex");
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    facets_ = std::move(facets);
}

std::vector<Vertex> Complex::vertices() const
{
    std::vector<Vertex> out;
    out.reserve(facets_.size() * static_cast<std::size_t>(dim_ + 1));
    for (const auto& f : facets_) {
        out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Vertex> Complex::max_vertex() const
{
    std::optional<Vertex> best;
    for (const auto& f : facets_) {
        if (!f.empty() && (!best || f.back() > *best)) {
            best = f.back();
        }
    }
    return best;
}

bool Complex::has_facet(std::span<const Vertex> face) const
{
    return std::binary_search(facets_.begin(), facets_.end(), face,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(),
                                                                      b.begin(), b.end());
                              });
}

bool Complex::has_face(std::span<const Vertex> face) const
{
    if (face.empty()) {
        return true;
    }
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
        return std::includes(f.begin(), f.end(), face.begin(), face.end());
    });
}

Complex new_complex(int dim, std::vector<Face> facets)
{
    return Complex(dim, std::move(facets));
}

std::vector<Face> faces(const Complex& x, int k)
{
    if (k < -1 || k > x.dim()) {
        throw ComplexError("face dimension " + std::to_string(k) + " out of range for a " +
                           std::to_string(x.dim()) + "-complex");
    }
    if (k == -1) {
        return {Face{}};
    }
    std::set<Face> acc;
    for (const auto& f : x.facets()) {
        for_each_subset(f, static_cast<std::size_t>(k + 1), [&](const Face& s) { acc.insert(s); });
    }
    return {acc.begin(), acc.end()};
}

FVector f_vector(const Complex& x)
{
    std::vector<std::uint64_t> counts{1};
    for (int k = 0; k <= x.dim(); ++k) {
        counts.push_back(faces(x, k).size());
    }
    return FVector(std::move(counts));
}

std::int64_t euler_characteristic(const Complex& x)
{
    const auto f = f_vector(x);
    std::int64_t chi = 0;
    for (int k = 0; k <= x.dim(); ++k) {
        const auto fk = static_cast<std::int64_t>(f[k]);
        chi += (k % 2 == 0) ? fk : -fk;
    }
    return chi;
}

std::int64_t sphere_euler_characteristic(int d)
{
    return d % 2 == 0 ? 2 : 0;
}

Complex link(const Complex& x, const Face& sigma)
{
    Face s = sigma;
    sort_face(s);
    if (has_repeat(s) || !x.has_face(s)) {
        throw ComplexError("link: argument is not a face of the complex");
    }
    const int ldim = x.dim() - static_cast<int>(s.size());
    std::vector<Face> out;
    for (const auto& f : x.facets()) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) {
            continue;
        }
        Face rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        if (!rest.empty()) {
            out.push_back(std::move(rest));
        }
    }
    return Complex(ldim, std::move(out));
}

std::size_t degree(const Complex& x, const Face& sigma)
{
    Face s = sigma;
    sort_face(s);
    if (static_cast<int>(s.size()) != x.dim() || has_repeat(s)) {
        throw ComplexError("degree: argument must be a (d-1)-face");
    }
    return static_cast<std::size_t>(std::count_if(
        x.facets().begin(), x.facets().end(),
        [&](const Face& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); }));
}

Complex common_link(const Complex& x, Vertex u, Vertex v)
{
    if (u == v) {
        throw ComplexError("common_link: vertices must be distinct");
    }
    std::vector<Face> out;
    for (const auto& f : x.facets()) {
        if (!std::binary_search(f.begin(), f.end(), u) || std::binary_search(f.begin(), f.end(), v)) {
            continue;
        }
        Face tau = without_vertex(f, u);
        if (x.has_facet(with_vertex(tau, v))) {
            out.push_back(std::move(tau));
        }
    }
    return Complex(x.dim() - 1, std::move(out));
}

std::size_t common_link_count(const Complex& x, Vertex u, Vertex v)
{
    return common_link(x, u, v).num_facets();
}

std::map<Face, std::vector<Vertex>> ridge_cofaces(const Complex& x)
{
    std::map<Face, std::vector<Vertex>> out;
    for (const auto& f : x.facets()) {
        for (Vertex v : f) {
            out[without_vertex(f, v)].push_back(v);
        }
    }
    return out;
}

std::map<std::pair<Vertex, Vertex>, std::size_t> common_link_counts(const Complex& x)
{
    std::map<std::pair<Vertex, Vertex>, std::size_t> out;
    for (const auto& [ridge, apexes] : ridge_cofaces(x)) {
        for (std::size_t i = 0; i < apexes.size(); ++i) {
            for (std::size_t j = i + 1; j < apexes.size(); ++j) {
                ++out[std::minmax(apexes[i], apexes[j])];
            }
        }
    }
    return out;
}

Complex suspension(const Complex& x)
{
    const Vertex base = x.max_vertex() ? *x.max_vertex() + 1 : 0;
    std::vector<Face> out;
    out.reserve(2 * x.num_facets());
    for (const auto& f : x.facets()) {
        for (Vertex apex : {base, base + 1}) {
            Face g = f;
            g.push_back(apex);
            out.push_back(std::move(g));
        }
    }
    return Complex(x.dim() + 1, std::move(out));
}

Subdivision barycentric_subdivision_full(const Complex& x)
{
    Subdivision out;
    Vertex next = x.max_vertex() ? *x.max_vertex() + 1 : 0;
    for (int k = 0; k <= x.dim(); ++k) {
        for (auto& face : faces(x, k)) {
            const Vertex label = (k == 0) ? face[0] : next++;
            out.coloring[label] = static_cast<Color>(k);
            out.face_vertex.emplace(std::move(face), label);
        }
    }
    std::vector<Face> chains;
    for (const auto& f : x.facets()) {
        Face perm = f;
        do {
            Face chain;
            Face prefix;
            for (Vertex v : perm) {
                prefix = with_vertex(prefix, v);
                chain.push_back(out.face_vertex.at(prefix));
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = Complex(x.dim(), std::move(chains));
    return out;
}

Complex barycentric_subdivision(const Complex& x)
{
    return barycentric_subdivision_full(x).complex;
}

std::optional<Coloring> is_balanced(const Complex& x)
{
    const auto verts = x.vertices();
    const std::size_t n = verts.size();
    if (n == 0) {
        return Coloring{};
    }
    const auto ncolors = static_cast<std::size_t>(x.dim() + 1);
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& f : x.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                adj[index(f[i])].push_back(index(f[j]));
                adj[index(f[j])].push_back(index(f[i]));
            }
        }
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (a.size() + 1 > n) {
            return std::nullopt;
        }
    }

    // Backtracking; the next vertex is the one with the most distinct neighbor colors,
    // ties broken by larger degree. Colors are interchangeable, so a vertex may only open
    // the lowest unused color.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> color(n, kNone);
    std::vector<std::vector<std::uint32_t>> seen(n, std::vector<std::uint32_t>(ncolors, 0));
    std::vector<std::size_t> saturation(n, 0);

    auto paint = [&](std::size_t v, std::size_t c, int delta) {
        for (std::size_t u : adj[v]) {
            auto& cnt = seen[u][c];
            if (delta > 0) {
                if (cnt++ == 0) {
                    ++saturation[u];
                }
            } else if (--cnt == 0) {
                --saturation[u];
            }
        }
    };

    auto solve = [&](auto&& self, std::size_t placed, std::size_t used) -> bool {
        if (placed == n) {
            return true;
        }
        std::size_t best = kNone;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] != kNone) {
                continue;
            }
            if (best == kNone || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && adj[v].size() > adj[best].size())) {
                best = v;
            }
        }
        if (saturation[best] == ncolors) {
            return false;
        }
        const std::size_t limit = std::min(ncolors, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (seen[best][c] != 0) {
                continue;
            }
            color[best] = c;
            paint(best, c, +1);
            if (self(self, placed + 1, std::max(used, c + 1))) {
                return true;
            }
            paint(best, c, -1);
            color[best] = kNone;
        }
        return false;
    };
    if (!solve(solve, 0, 0)) {
        return std::nullopt;
    }
    Coloring out;
    for (std::size_t i = 0; i < n; ++i) {
        out[verts[i]] = static_cast<Color>(color[i]);
    }
    return out;
}

bool is_proper_coloring(const Complex& x, const Coloring& c)
{
    for (const auto& f : x.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto it = c.find(f[i]);
            if (it == c.end() || it->second > static_cast<Color>(x.dim())) {
                return false;
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (c.at(f[j]) == it->second) {
                    return false;
                }
            }
        }
    }
    return true;
}

Complex rainbow_subcomplex(const Complex& x, const Coloring& c)
{
    std::vector<Face> keep;
    for (const auto& f : x.facets()) {
        std::vector<Color> cols;
        cols.reserve(f.size());
        for (Vertex v : f) {
            cols.push_back(c.at(v));
        }
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) == cols.end()) {
            keep.push_back(f);
        }
    }
    return Complex(x.dim(), std::move(keep));
}

Complex connected_sum(const Complex& x, const Complex& y, const Face& sigma_x,
                      const Face& sigma_y, const std::map<Vertex, Vertex>& matching)
{
    if (x.dim() != y.dim()) {
        throw ComplexError("connected_sum: dimensions differ");
    }
    Face sx = sigma_x;
    Face sy = sigma_y;
    sort_face(sx);
    sort_face(sy);
    if (!x.has_facet(sx) || !y.has_facet(sy)) {
        throw ComplexError("connected_sum: gluing faces must be facets");
    }
    if (matching.size() != sy.size()) {
        throw ComplexError("connected_sum: matching must cover the glued facet");
    }
    Face image;
    for (Vertex v : sy) {
        auto it = matching.find(v);
        if (it == matching.end()) {
            throw ComplexError("connected_sum: matching is not defined on the glued facet");
        }
        image.push_back(it->second);
    }
    sort_face(image);
    if (image != sx) {
        throw ComplexError("connected_sum: matching is not a bijection onto the glued facet");
    }

    std::map<Vertex, Vertex> relabeling = matching;
    Vertex next = *x.max_vertex() + 1;
    for (Vertex v : y.vertices()) {
        if (!relabeling.contains(v)) {
            relabeling[v] = next++;
        }
    }
    std::vector<Face> out;
    for (const auto& f : x.facets()) {
        if (f != sx) {
            out.push_back(f);
        }
    }
    for (const auto& f : y.facets()) {
        if (f == sy) {
            continue;
        }
        Face g;
        for (Vertex v : f) {
            g.push_back(relabeling.at(v));
        }
        out.push_back(std::move(g));
    }
    return Complex(x.dim(), std::move(out));
}

Complex relabel(const Complex& x, const std::map<Vertex, Vertex>& map)
{
    std::set<Vertex> image;
    const auto verts = x.vertices();
    for (Vertex v : verts) {
        auto it = map.find(v);
        image.insert(it == map.end() ? v : it->second);
    }
    if (image.size() != verts.size()) {
        throw ComplexError("relabel: map is not injective on the vertex set");
    }
    std::vector<Face> out;
    out.reserve(x.num_facets());
    for (const auto& f : x.facets()) {
        Face g;
        for (Vertex v : f) {
            auto it = map.find(v);
            g.push_back(it == map.end() ? v : it->second);
        }
        out.push_back(std::move(g));
    }
    return Complex(x.dim(), std::move(out));
}

Complex remove_facets(const Complex& x, std::span<const Face> gone)
{
    std::set<Face> drop(gone.begin(), gone.end());
    std::vector<Face> keep;
    for (const auto& f : x.facets()) {
        if (!drop.contains(f)) {
            keep.push_back(f);
        }
    }
    return Complex(x.dim(), std::move(keep));
}

bool is_strongly_connected(const Complex& x)
{
    if (x.num_facets() <= 1) {
        return true;
    }
    std::map<Face, std::size_t> first_owner;
    DisjointSets sets(x.num_facets());
    for (std::size_t i = 0; i < x.num_facets(); ++i) {
        const auto& f = x.facets()[i];
        for (Vertex v : f) {
            auto [it, inserted] = first_owner.emplace(without_vertex(f, v), i);
            if (!inserted) {
                sets.unite(i, it->second);
            }
        }
    }
    const auto root = sets.find(0);
    for (std::size_t i = 1; i < x.num_facets(); ++i) {
        if (sets.find(i) != root) {
            return false;
        }
    }
    return true;
}

Face with_vertex(const Face& f, Vertex v)
{
    Face out;
    out.reserve(f.size() + 1);
    auto pos = std::lower_bound(f.begin(), f.end(), v);
    out.insert(out.end(), f.begin(), pos);
    out.push_back(v);
    out.insert(out.end(), pos, f.end());
    return out;
}

Face without_vertex(const Face& f, Vertex v)
{
    Face out;
    out.reserve(f.size());
    for (Vertex w : f) {
        if (w != v) {
            out.push_back(w);
        }
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace turan
