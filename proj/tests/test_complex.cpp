#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "turan/complex.hpp"
#include "turan/rng.hpp"
#include "turan/sphere_factory.hpp"

using namespace turan;
using turan::test::complete_complex;
using turan::test::octahedron;

namespace {

// Faces by brute force: every subset of every facet, by bitmask.
std::set<Face> all_faces(const Complex& x, int k)
{
    std::set<Face> out;
    for (const auto& f : x.facets()) {
        for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
            if (std::popcount(mask) != k + 1) {
                continue;
            }
            Face g;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (mask & (1u << i)) {
                    g.push_back(f[i]);
                }
            }
            out.insert(g);
        }
    }
    return out;
}

Complex random_complex(Rng& rng, std::uint32_t n, int d, double p)
{
    std::vector<Face> facets;
    const auto all = complete_complex(n, d);
    for (const auto& f : all.facets()) {
        if (rng.uniform01() < p) {
            facets.push_back(f);
        }
    }
    return Complex(d, facets);
}

} // namespace

TEST_CASE("new_complex sorts and deduplicates", "[complex]")
{
    const auto x = new_complex(2, {{0, 1, 2}, {2, 1, 0}});
    REQUIRE(x.facets() == std::vector<Face>{{0, 1, 2}});
    REQUIRE_THROWS_AS(new_complex(2, {{0, 1, 1}}), ComplexError);
    REQUIRE_THROWS_AS(new_complex(2, {{0, 1}}), ComplexError);
    REQUIRE(f_vector(boundary_simplex(3)).counts() == std::vector<std::uint64_t>{1, 5, 10, 10, 5});
}

TEST_CASE("faces and f-vectors", "[complex]")
{
    REQUIRE(faces(boundary_simplex(2), 1).size() == 6);
    REQUIRE(faces(octahedron(), 1).size() == 12);
    REQUIRE(faces(octahedron(), -1) == std::vector<Face>{Face{}});
    REQUIRE_THROWS_AS(faces(octahedron(), 3), ComplexError);
    REQUIRE_THROWS_AS(faces(octahedron(), -2), ComplexError);

    REQUIRE(f_vector(boundary_simplex(2)).counts() == std::vector<std::uint64_t>{1, 4, 6, 4});
    REQUIRE(f_vector(octahedron()).counts() == std::vector<std::uint64_t>{1, 6, 12, 8});
    REQUIRE(f_vector(suspension(cycle(5))).counts() == std::vector<std::uint64_t>{1, 7, 15, 10});
}

TEST_CASE("faces agree with bitmask enumeration", "[complex][property]")
{
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const auto x = random_complex(rng, 7, d, 0.3);
        std::int64_t alternating = 0;
        for (int k = 0; k <= d; ++k) {
            const auto expect = all_faces(x, k);
            const auto got = faces(x, k);
            REQUIRE(std::set<Face>(got.begin(), got.end()) == expect);
            REQUIRE(f_vector(x)[k] == expect.size());
            alternating += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(expect.size());
        }
        REQUIRE(euler_characteristic(x) == alternating);
        REQUIRE(f_vector(x)[d] == x.num_facets());
    }
}

TEST_CASE("Euler characteristic", "[complex]")
{
    REQUIRE(euler_characteristic(octahedron()) == 2);
    REQUIRE(euler_characteristic(boundary_simplex(3)) == 0);
    REQUIRE(euler_characteristic(new_complex(2, {{0, 1, 2}})) == 1);
    // a 2-sphere with k vertices has 2k - 4 triangles
    for (int k = 3; k <= 12; ++k) {
        const auto s = suspension(cycle(k));
        REQUIRE(euler_characteristic(s) == 2);
        REQUIRE(s.num_facets() == 2 * s.num_vertices() - 4);
    }
}

TEST_CASE("links", "[complex]")
{
    const auto oct = octahedron();
    const auto lk = link(oct, {0});
    REQUIRE(lk.dim() == 1);
    REQUIRE(lk.num_facets() == 4);
    REQUIRE(lk.num_vertices() == 4);
    for (Vertex v : lk.vertices()) {
        REQUIRE(degree(lk, {v}) == 2);
    }
    REQUIRE(link(boundary_simplex(2), {3}) == cycle(3));
    const auto facet_link = link(oct, {0, 2, 4});
    REQUIRE(facet_link.empty());
    REQUIRE(facet_link.dim() == -1);
    REQUIRE_THROWS_AS(link(oct, {0, 1}), ComplexError);
    REQUIRE(link(oct, {}) == oct);
}

TEST_CASE("ridge degrees", "[complex]")
{
    const auto oct = octahedron();
    for (const auto& e : faces(oct, 1)) {
        REQUIRE(degree(oct, e) == 2);
    }
    const auto k5 = complete_complex(5, 2);
    for (const auto& e : faces(k5, 1)) {
        REQUIRE(degree(k5, e) == 3);
    }
    const auto tree = new_complex(2, {{0, 1, 2}, {1, 2, 3}});
    REQUIRE(degree(tree, {1, 2}) == 2);
    REQUIRE(degree(tree, {0, 1}) == 1);
    REQUIRE_THROWS_AS(degree(tree, {1}), ComplexError);

    // link/degree duality
    Rng rng(5);
    const auto x = random_complex(rng, 8, 2, 0.4);
    for (const auto& r : faces(x, 1)) {
        REQUIRE(degree(x, r) == link(x, r).num_facets());
    }
}

TEST_CASE("common link counts", "[complex]")
{
    const auto oct = octahedron();
    REQUIRE(common_link_count(oct, 0, 1) == 4);
    // lk(0) and lk(2) are 4-cycles on {2,3,4,5} and {0,1,4,5}: they share the vertices
    // 4 and 5 but no edge
    REQUIRE(common_link_count(oct, 0, 2) == 0);
    REQUIRE(common_link_count(new_complex(2, {{0, 1, 2}, {3, 4, 5}}), 0, 3) == 0);
    REQUIRE_THROWS_AS(common_link_count(oct, 1, 1), ComplexError);
}

TEST_CASE("double counting identity", "[complex][property]")
{
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + static_cast<int>(rng.below(3));
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(8));
        const auto x = random_complex(rng, n, d, 0.2 + 0.5 * rng.uniform01());
        std::uint64_t lhs = 0;
        const auto verts = x.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                lhs += common_link_count(x, verts[i], verts[j]);
            }
        }
        std::uint64_t rhs = 0;
        if (d >= 1) {
            for (const auto& r : faces(x, d - 1)) {
                rhs += binomial(degree(x, r), 2);
            }
        }
        REQUIRE(lhs == rhs);
        std::uint64_t fast = 0;
        for (const auto& [pair, count] : common_link_counts(x)) {
            REQUIRE(count == common_link_count(x, pair.first, pair.second));
            fast += count;
        }
        REQUIRE(fast == rhs);
    }
}

TEST_CASE("suspension", "[complex]")
{
    const auto s = suspension(cycle(4));
    REQUIRE(f_vector(s).counts() == f_vector(octahedron()).counts());
    REQUIRE(is_balanced(s).has_value());
    for (int k = 3; k <= 9; ++k) {
        const auto sk = suspension(cycle(k));
        REQUIRE(sk.num_vertices() == static_cast<std::size_t>(k + 2));
        REQUIRE(sk.num_facets() == static_cast<std::size_t>(2 * k));
    }
    const auto s4 = suspension(octahedron());
    REQUIRE(s4.dim() == 3);
    REQUIRE(s4.num_vertices() == 8);
    REQUIRE(s4.num_facets() == 16);
    REQUIRE(s4.vertices().back() == 7);

    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_complex(rng, 7, 1 + static_cast<int>(rng.below(2)), 0.5);
        const auto sx = suspension(x);
        REQUIRE(sx.num_facets() == 2 * x.num_facets());
        // chi(SX) = 2 - chi(X) for a nonempty X
        if (!x.empty()) {
            REQUIRE(euler_characteristic(sx) == 2 - euler_characteristic(x));
        }
    }
}

TEST_CASE("barycentric subdivision", "[complex]")
{
    const auto one = barycentric_subdivision_full(new_complex(2, {{0, 1, 2}}));
    REQUIRE(one.complex.num_facets() == 6);
    REQUIRE(one.complex.num_vertices() == 7);
    REQUIRE(is_proper_coloring(one.complex, one.coloring));

    const auto t = barycentric_subdivision_full(boundary_simplex(2));
    REQUIRE(t.complex.num_facets() == 24);
    REQUIRE(t.complex.num_vertices() == 14);
    REQUIRE(euler_characteristic(t.complex) == 2);
    REQUIRE(is_proper_coloring(t.complex, t.coloring));
    REQUIRE(is_balanced(t.complex).has_value());

    // original vertices keep their labels and color 0
    for (Vertex v : {0u, 1u, 2u, 3u}) {
        REQUIRE(t.face_vertex.at({v}) == v);
        REQUIRE(t.coloring.at(v) == 0);
    }
    const auto bsd3 = barycentric_subdivision(boundary_simplex(3));
    REQUIRE(bsd3.num_facets() == 5 * 24);
    REQUIRE(euler_characteristic(bsd3) == 0);
}

TEST_CASE("balancedness", "[complex]")
{
    const auto c = is_balanced(octahedron());
    REQUIRE(c.has_value());
    REQUIRE(is_proper_coloring(octahedron(), *c));
    REQUIRE(c->at(0) == c->at(1));
    REQUIRE_FALSE(is_balanced(boundary_simplex(2)).has_value());
    REQUIRE_FALSE(is_balanced(suspension(cycle(5))).has_value());
    REQUIRE(is_balanced(suspension(cycle(6))).has_value());
    REQUIRE(is_balanced(boundary_cross_polytope(4)).has_value());
}

TEST_CASE("balancedness matches exhaustive coloring", "[complex][property]")
{
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(4));
        const auto x = random_complex(rng, n, 2, 0.15 + 0.2 * rng.uniform01());
        const auto verts = x.vertices();
        const auto edges = faces(x, 1);
        bool exists = false;
        std::vector<Color> col(verts.size(), 0);
        const std::size_t total = static_cast<std::size_t>(std::pow(3, verts.size()));
        for (std::size_t code = 0; code < total && !exists; ++code) {
            std::size_t c = code;
            for (auto& v : col) {
                v = static_cast<Color>(c % 3);
                c /= 3;
            }
            exists = std::all_of(edges.begin(), edges.end(), [&](const Face& e) {
                const auto a = std::lower_bound(verts.begin(), verts.end(), e[0]) - verts.begin();
                const auto b = std::lower_bound(verts.begin(), verts.end(), e[1]) - verts.begin();
                return col[a] != col[b];
            });
        }
        const auto found = is_balanced(x);
        REQUIRE(found.has_value() == exists);
        if (found) {
            REQUIRE(is_proper_coloring(x, *found));
        }
    }
}

TEST_CASE("rainbow subcomplex", "[complex]")
{
    const auto oct = octahedron();
    REQUIRE(rainbow_subcomplex(oct, *is_balanced(oct)) == oct);
    Coloring constant;
    for (Vertex v : oct.vertices()) {
        constant[v] = 0;
    }
    REQUIRE(rainbow_subcomplex(oct, constant).empty());

    Coloring mod3;
    for (Vertex v = 0; v < 6; ++v) {
        mod3[v] = v % 3;
    }
    const auto r = rainbow_subcomplex(complete_complex(6, 2), mod3);
    REQUIRE(r.num_facets() == 8);
    for (const auto& f : r.facets()) {
        REQUIRE(std::set<Color>{mod3[f[0]], mod3[f[1]], mod3[f[2]]}.size() == 3);
    }
}

TEST_CASE("rainbow retention under random colorings", "[complex][statistics]")
{
    for (int d : {2, 3}) {
        const auto x = complete_complex(d == 2 ? 9 : 8, d);
        double expect = 1.0;
        for (int i = 1; i <= d + 1; ++i) {
            expect *= static_cast<double>(i) / (d + 1);
        }
        Rng rng(static_cast<std::uint64_t>(100 + d));
        const int trials = 2000;
        double sum = 0;
        double sq = 0;
        for (int t = 0; t < trials; ++t) {
            Coloring c;
            for (Vertex v : x.vertices()) {
                c[v] = static_cast<Color>(rng.below(static_cast<std::uint64_t>(d + 1)));
            }
            const double frac =
                static_cast<double>(rainbow_subcomplex(x, c).num_facets()) / static_cast<double>(x.num_facets());
            sum += frac;
            sq += frac * frac;
        }
        const double mean = sum / trials;
        const double se = std::sqrt((sq / trials - mean * mean) / (trials - 1));
        INFO("d=" << d << " mean=" << mean << " expect=" << expect << " se=" << se);
        REQUIRE(std::abs(mean - expect) <= 3 * se);
    }
}

TEST_CASE("connected sum", "[complex]")
{
    const auto t = boundary_simplex(2);
    const auto bip = connected_sum(t, t, {0, 1, 2}, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}});
    REQUIRE(bip.num_vertices() == 5);
    REQUIRE(bip.num_facets() == 6);
    REQUIRE(euler_characteristic(bip) == 2);

    const auto oct = octahedron();
    const auto flipped = connected_sum(oct, oct, {0, 2, 4}, {1, 3, 5}, {{1, 0}, {3, 2}, {5, 4}});
    REQUIRE(flipped.num_facets() == oct.num_facets() + 6);
    REQUIRE(flipped.num_vertices() == oct.num_vertices() + 3);
    REQUIRE(euler_characteristic(flipped) == 2);

    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto y = suspension(cycle(3 + static_cast<int>(rng.below(5))));
        const auto& fx = oct.facets()[rng.below(oct.num_facets())];
        const auto& fy = y.facets()[rng.below(y.num_facets())];
        const auto s = connected_sum(oct, y, fx, fy, {{fy[0], fx[0]}, {fy[1], fx[1]}, {fy[2], fx[2]}});
        REQUIRE(s.num_facets() == oct.num_facets() + y.num_facets() - 2);
        REQUIRE(euler_characteristic(s) == 2);
    }

    REQUIRE_THROWS_AS(connected_sum(t, t, {0, 1, 4}, {0, 1, 2}, {{0, 0}, {1, 1}, {2, 4}}), ComplexError);
    REQUIRE_THROWS_AS(connected_sum(t, t, {0, 1, 2}, {0, 1, 2}, {{0, 0}, {1, 0}, {2, 2}}), ComplexError);
}

TEST_CASE("relabel and remove facets", "[complex]")
{
    const auto oct = octahedron();
    REQUIRE_THROWS_AS(relabel(oct, {{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}), ComplexError);
    const std::vector<Face> gone{{0, 2, 4}, {7, 8, 9}};
    REQUIRE(remove_facets(oct, gone).num_facets() == 7);
    REQUIRE(is_strongly_connected(oct));
    REQUIRE_FALSE(is_strongly_connected(new_complex(2, {{0, 1, 2}, {2, 3, 4}})));
    REQUIRE(binomial(10, 3) == 120);
    REQUIRE(binomial(3, 5) == 0);
}
