#include "turan/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "turan/rng.hpp"
#include "turan/sphere_check.hpp"

namespace turan {

namespace {

constexpr int kMaxGrowVertices = 9;
constexpr int kMaxSplitVertices = 12;

// Grows closed triangulated surfaces on exactly n vertices. The smallest open edge is
// always closed next; a vertex not used yet may only enter as the next unused label,
// and the first triangle is fixed to {0, 1, 2}.
class SurfaceGrower {
public:
    explicit SurfaceGrower(int n) : n_(n), max_triangles_(2 * n - 4) {}

    std::set<Complex> run()
    {
        add({0, 1, 2});
        used_ = 3;
        grow();
        return found_;
    }

private:
    using Tri = std::array<int, 3>;

    int& edge(int a, int b) { return edge_degree_[std::min(a, b)][std::max(a, b)]; }

    // Adding edge (p, q) to the link of v keeps it a disjoint union of paths, or closes
    // the whole link into a single cycle.
    bool link_ok(int v, int p, int q) const
    {
        const auto& edges = link_[v];
        std::array<bool, kMaxGrowVertices> seen{};
        std::array<int, kMaxGrowVertices> stack{};
        int top = 0;
        stack[top++] = p;
        seen[p] = true;
        while (top > 0) {
            const int a = stack[--top];
            for (const auto& [x, y] : edges) {
                const int other = x == a ? y : (y == a ? x : -1);
                if (other >= 0 && !seen[other]) {
                    seen[other] = true;
                    stack[top++] = other;
                }
            }
        }
        if (!seen[q]) {
            return true;
        }
        std::array<bool, kMaxGrowVertices> present{};
        int vertices = 0;
        for (const auto& [x, y] : edges) {
            for (int w : {x, y}) {
                if (!present[w]) {
                    present[w] = true;
                    ++vertices;
                }
            }
        }
        const bool connected = std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return seen[e.first]; });
        return connected && static_cast<int>(edges.size()) == vertices - 1;
    }

    void add(const Tri& t)
    {
        const auto [a, b, c] = t;
        ++edge(a, b);
        ++edge(b, c);
        ++edge(a, c);
        link_[a].emplace_back(b, c);
        link_[b].emplace_back(a, c);
        link_[c].emplace_back(a, b);
        triangles_.push_back(t);
    }

    void remove()
    {
        const auto [a, b, c] = triangles_.back();
        --edge(a, b);
        --edge(b, c);
        --edge(a, c);
        link_[a].pop_back();
        link_[b].pop_back();
        link_[c].pop_back();
        triangles_.pop_back();
    }

    void grow()
    {
        int open = 0;
        int oa = -1;
        int ob = -1;
        for (int a = 0; a < used_; ++a) {
            for (int b = a + 1; b < used_; ++b) {
                if (edge_degree_[a][b] == 1) {
                    if (open++ == 0) {
                        oa = a;
                        ob = b;
                    }
                }
            }
        }
        const int count = static_cast<int>(triangles_.size());
        if (open == 0) {
            if (used_ == n_ && count == max_triangles_) {
                record();
            }
            return;
        }
        if (count + (open + 2) / 3 > max_triangles_) {
            return;
        }
        const int limit = std::min(used_ + 1, n_);
        for (int w = 0; w < limit; ++w) {
            if (w == oa || w == ob || edge(oa, w) >= 2 || edge(ob, w) >= 2) {
                continue;
            }
            if (w < used_) {
                const bool duplicate = std::any_of(triangles_.begin(), triangles_.end(), [&](const Tri& t) {
                    return std::count(t.begin(), t.end(), oa) && std::count(t.begin(), t.end(), ob) &&
                           std::count(t.begin(), t.end(), w);
                });
                if (duplicate || !link_ok(oa, ob, w) || !link_ok(ob, oa, w) || !link_ok(w, oa, ob)) {
                    continue;
                }
            }
            Tri t{oa, ob, w};
            std::sort(t.begin(), t.end());
            const bool fresh = w == used_;
            if (fresh) {
                ++used_;
            }
            add(t);
            grow();
            remove();
            if (fresh) {
                --used_;
            }
        }
    }

    void record()
    {
        std::vector<Face> facets;
        for (const auto& t : triangles_) {
            facets.push_back({static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), static_cast<Vertex>(t[2])});
        }
        Complex x(2, std::move(facets));
        if (verify_sphere(x, SphereEffort{0}).status == SphereStatus::Yes) {
            found_.insert(canonical_form(x));
        }
    }

    int n_;
    int max_triangles_;
    int used_ = 0;
    std::array<std::array<int, kMaxGrowVertices>, kMaxGrowVertices> edge_degree_{};
    std::array<std::vector<std::pair<int, int>>, kMaxGrowVertices> link_;
    std::vector<Tri> triangles_;
    std::set<Complex> found_;
};

// Link of v in a 2-sphere as a cyclic vertex sequence.
std::vector<Vertex> link_cycle(const Complex& x, Vertex v)
{
    const Complex lk = link(x, {v});
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : lk.facets()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<Vertex> out{adj.begin()->first};
    Vertex prev = out[0];
    Vertex cur = adj.begin()->second[0];
    while (cur != out[0]) {
        out.push_back(cur);
        const auto& nb = adj.at(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return out;
}

CensusRecord make_record(int d, std::uint64_t key, const std::set<Complex>& classes, std::size_t keep)
{
    CensusRecord r;
    r.d = d;
    r.key = key;
    r.count = classes.size();
    for (const auto& c : classes) {
        if (r.representatives.size() >= keep) {
            break;
        }
        r.representatives.push_back(c);
    }
    return r;
}

} // namespace

std::vector<CensusRecord> enumerate_2spheres(int n_max, std::size_t keep)
{
    if (n_max > kMaxGrowVertices) {
        throw ComplexError("enumerate_2spheres: n_max " + std::to_string(n_max) + " exceeds the supported " +
                           std::to_string(kMaxGrowVertices));
    }
    std::vector<CensusRecord> out;
    for (int n = 4; n <= n_max; ++n) {
        out.push_back(make_record(2, static_cast<std::uint64_t>(n), SurfaceGrower(n).run(), keep));
    }
    return out;
}

std::vector<CensusRecord> split_2spheres(int n_max, std::size_t keep)
{
    if (n_max > kMaxSplitVertices) {
        throw ComplexError("split_2spheres: n_max " + std::to_string(n_max) + " exceeds the supported " +
                           std::to_string(kMaxSplitVertices));
    }
    std::vector<CensusRecord> out;
    if (n_max < 4) {
        return out;
    }
    std::set<Complex> level{canonical_form(boundary_simplex(2))};
    out.push_back(make_record(2, 4, level, keep));
    for (int n = 5; n <= n_max; ++n) {
        std::set<Complex> next;
        for (const auto& x : level) {
            const auto fresh = static_cast<Vertex>(n - 1);
            for (Vertex v : x.vertices()) {
                const auto ring = link_cycle(x, v);
                const std::size_t k = ring.size();
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = i + 1; j < k; ++j) {
                        // v keeps the arc ring[i..j]; the new vertex takes ring[j..i].
                        std::vector<Face> facets;
                        for (const auto& f : x.facets()) {
                            if (!std::binary_search(f.begin(), f.end(), v)) {
                                facets.push_back(f);
                            }
                        }
                        for (std::size_t t = 0; t < k; ++t) {
                            const Vertex a = ring[t];
                            const Vertex b = ring[(t + 1) % k];
                            const bool keeps = t >= i && t < j;
                            facets.push_back({keeps ? v : fresh, a, b});
                        }
                        facets.push_back({v, fresh, ring[i]});
                        facets.push_back({v, fresh, ring[j]});
                        next.insert(canonical_form(Complex(2, std::move(facets))));
                    }
                }
            }
        }
        out.push_back(make_record(2, static_cast<std::uint64_t>(n), next, keep));
        level = std::move(next);
    }
    return out;
}

CensusRecord census_2lc(int d, int m, std::uint64_t sample_budget, std::uint64_t seed, LcMode mode,
                        std::size_t keep)
{
    if (d < 2 || d > 3) {
        throw ComplexError("census_2lc: d must be 2 or 3");
    }
    if (m < 1 || m > (d == 2 ? 20 : 16)) {
        throw ComplexError("census_2lc: m out of the supported range");
    }
    TwoLcOptions options;
    options.mode = mode;
    options.max_attempts = 1;
    std::set<Complex> classes;
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
        if (auto r = two_lc_generate(d, m, derive_seed(seed, i), options)) {
            classes.insert(canonical_form(r->first));
        }
    }
    auto rec = make_record(d, static_cast<std::uint64_t>(m), classes, keep);
    rec.lower_bound = true;
    rec.samples = sample_budget;
    return rec;
}

bool below_2lc_growth_bound(int d, int m, std::uint64_t count)
{
    if (count == 0) {
        return true;
    }
    return std::log2(static_cast<double>(count)) < (d * d * d / 2.0) * m;
}

} // namespace turan
