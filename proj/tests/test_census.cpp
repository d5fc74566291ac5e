#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "turan/census.hpp"
#include "turan/embedding.hpp"
#include "turan/sphere_check.hpp"

using namespace turan;
using turan::test::complete_complex;
using turan::test::labeled_spheres_brute_force;
using turan::test::octahedron;

namespace {

const std::vector<std::uint64_t> kSphereCounts{1, 1, 2, 5, 14, 50, 233, 1249, 7595}; // n = 4..12

} // namespace

TEST_CASE("canonical forms", "[census]")
{
    Rng rng(11);
    const auto oct = octahedron();
    const auto base = canonical_form(oct);
    REQUIRE(canonical_form(base) == base);
    REQUIRE(base.vertices() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    for (const auto& x : {oct, iterated_suspension_sphere(5, 2), boundary_cross_polytope(3),
                          new_complex(2, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 4, 5}})}) {
        const auto c = canonical_form(x);
        REQUIRE(canonical_form(c) == c);
        for (int t = 0; t < 100; ++t) {
            REQUIRE(canonical_form(turan::test::shuffle_labels(x, rng, 3)) == c);
        }
    }
    // non-isomorphic pair with the same f-vector
    const auto a = new_complex(2, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
    const auto b = new_complex(2, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    REQUIRE(f_vector(a) == f_vector(b));
    REQUIRE(canonical_form(a) != canonical_form(b));
}

TEST_CASE("2-sphere census by growth", "[census]")
{
    const auto recs = enumerate_2spheres(9);
    REQUIRE(recs.size() == 6);
    for (const auto& r : recs) {
        INFO("n = " << r.key);
        REQUIRE(r.count == kSphereCounts[r.key - 4]);
        REQUIRE(r.representatives.size() == r.count);
        REQUIRE_FALSE(r.lower_bound);
        std::set<Complex> distinct(r.representatives.begin(), r.representatives.end());
        REQUIRE(distinct.size() == r.count);
        for (const auto& x : r.representatives) {
            REQUIRE(x.num_vertices() == r.key);
            REQUIRE(x.num_facets() == 2 * r.key - 4);
            REQUIRE(canonical_form(x) == x);
        }
    }
    REQUIRE_THROWS_AS(enumerate_2spheres(10), ComplexError);
}

TEST_CASE("growth and splitting agree", "[census]")
{
    const auto grown = enumerate_2spheres(9);
    const auto split = split_2spheres(9);
    REQUIRE(grown.size() == split.size());
    for (std::size_t i = 0; i < grown.size(); ++i) {
        const std::set<Complex> a(grown[i].representatives.begin(), grown[i].representatives.end());
        const std::set<Complex> b(split[i].representatives.begin(), split[i].representatives.end());
        REQUIRE(a == b);
    }
    const auto capped = split_2spheres(8, 3);
    REQUIRE(capped.back().count == 14);
    REQUIRE(capped.back().representatives.size() == 3);
}

TEST_CASE("split census reaches 12 vertices", "[census][slow]")
{
    const auto recs = split_2spheres(12, 0);
    REQUIRE(recs.size() == 9);
    for (const auto& r : recs) {
        REQUIRE(r.count == kSphereCounts[r.key - 4]);
    }
}

TEST_CASE("labeled counts agree with automorphism groups", "[census]")
{
    for (const auto& r : enumerate_2spheres(6)) {
        const auto n = static_cast<int>(r.key);
        std::uint64_t by_orbits = 0;
        for (const auto& x : r.representatives) {
            by_orbits += turan::test::factorial(n) / automorphism_count(x);
        }
        INFO("n = " << n);
        REQUIRE(by_orbits == labeled_spheres_brute_force(n));
    }
}

TEST_CASE("2-LC census", "[census]")
{
    const auto m4 = census_2lc(2, 4, 20, 1);
    REQUIRE(m4.count == 1);
    REQUIRE(m4.lower_bound);
    REQUIRE(m4.representatives.front() == canonical_form(boundary_simplex(2)));

    const auto m8 = census_2lc(2, 8, 200, 1);
    REQUIRE(m8.count >= 2);
    REQUIRE(std::find(m8.representatives.begin(), m8.representatives.end(), canonical_form(octahedron())) !=
            m8.representatives.end());
    for (const auto& x : m8.representatives) {
        REQUIRE(x.num_facets() == 8);
        REQUIRE(verify_sphere(x).status == SphereStatus::Yes);
    }
    // at most the two 6-vertex spheres exist with eight triangles
    REQUIRE(m8.count <= 2);

    const auto d3 = census_2lc(3, 8, 50, 4);
    REQUIRE(d3.count >= 1);
    // 3-spheres with eight facets have six vertices and f = (6, 14, 16, 8)
    for (const auto& x : d3.representatives) {
        REQUIRE(f_vector(x).counts() == std::vector<std::uint64_t>{1, 6, 14, 16, 8});
        REQUIRE(verify_sphere(x).status == SphereStatus::Yes);
    }
    const auto d3_16 = census_2lc(3, 16, 20, 4);
    REQUIRE(below_2lc_growth_bound(3, 16, d3_16.count));
    REQUIRE(below_2lc_growth_bound(2, 8, 2));
    REQUIRE_FALSE(below_2lc_growth_bound(2, 1, 16));
}
