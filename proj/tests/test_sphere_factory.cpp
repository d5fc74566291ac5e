#include <catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "turan/bounds.hpp"
#include "turan/census.hpp"
#include "turan/sphere_check.hpp"
#include "turan/sphere_factory.hpp"

using namespace turan;
using turan::test::octahedron;

TEST_CASE("simplex boundaries", "[factory]")
{
    REQUIRE(boundary_simplex(1) == cycle(3));
    REQUIRE(f_vector(boundary_simplex(2)).counts() == std::vector<std::uint64_t>{1, 4, 6, 4});
    const auto s3 = boundary_simplex(3);
    REQUIRE(s3.num_vertices() == 5);
    REQUIRE(s3.num_facets() == 5);
    REQUIRE(euler_characteristic(s3) == 0);
    REQUIRE_THROWS_AS(boundary_simplex(0), ComplexError);
}

TEST_CASE("cross-polytope boundaries", "[factory]")
{
    REQUIRE(canonical_form(boundary_cross_polytope(1)) == canonical_form(cycle(4)));
    REQUIRE(canonical_form(boundary_cross_polytope(2)) == canonical_form(octahedron()));
    const auto c3 = boundary_cross_polytope(3);
    REQUIRE(c3.num_vertices() == 8);
    REQUIRE(c3.num_facets() == 16);
    REQUIRE(gkn_min_facets(3, 8) == 16);
    for (int d = 1; d <= 6; ++d) {
        const auto x = boundary_cross_polytope(d);
        REQUIRE(x.num_vertices() == static_cast<std::size_t>(2 * (d + 1)));
        REQUIRE(x.num_facets() == (std::size_t{1} << (d + 1)));
        REQUIRE(is_balanced(x).has_value());
        REQUIRE(is_proper_coloring(x, cross_polytope_coloring(d)));
    }
    REQUIRE_THROWS_AS(boundary_cross_polytope(0), ComplexError);
}

TEST_CASE("cycles and iterated suspensions", "[factory]")
{
    for (int k = 3; k <= 8; ++k) {
        REQUIRE(f_vector(cycle(k)).counts() == std::vector<std::uint64_t>{1, std::uint64_t(k), std::uint64_t(k)});
    }
    REQUIRE_THROWS_AS(cycle(2), ComplexError);
    REQUIRE(canonical_form(iterated_suspension_sphere(4, 1)) == canonical_form(octahedron()));
    const auto s51 = iterated_suspension_sphere(5, 1);
    REQUIRE(s51.num_vertices() == 7);
    REQUIRE(s51.num_facets() == 10);
    const auto s32 = iterated_suspension_sphere(3, 2);
    REQUIRE(s32.dim() == 3);
    REQUIRE(s32.num_vertices() == 7);
    REQUIRE(s32.num_facets() == 12);
    REQUIRE(euler_characteristic(s32) == 0);
    REQUIRE(iterated_suspension_sphere(6, 0) == cycle(6));
}

TEST_CASE("octahedral flips", "[factory]")
{
    const auto oct = boundary_cross_polytope(2);
    for (const auto& sigma : oct.facets()) {
        const auto y = octahedral_flip(oct, sigma);
        REQUIRE(y.num_vertices() == 9);
        REQUIRE(y.num_facets() == 14);
        REQUIRE(gkn_min_facets(2, 9) == 14);
        REQUIRE(is_balanced(y).has_value());
        REQUIRE(verify_sphere(y).status == SphereStatus::Yes);
    }
    const auto c3 = boundary_cross_polytope(3);
    const auto y3 = octahedral_flip(c3, c3.facets().front());
    REQUIRE(y3.num_vertices() == 12);
    REQUIRE(y3.num_facets() == 30);
    REQUIRE_THROWS_AS(octahedral_flip(oct, {0, 1, 2}), ComplexError);

    // the coloring carries over: fresh vertices take the color of their pair
    const auto coloring = cross_polytope_coloring(2);
    const auto r = octahedral_flip(oct, oct.facets().back(), &coloring);
    REQUIRE(r.step.fresh.size() == 3);
    Coloring extended = coloring;
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(coloring.at(r.step.matched[i]) == i);
        extended[r.step.fresh[i]] = static_cast<Color>(i);
    }
    REQUIRE(is_proper_coloring(r.complex, extended));

    // unbalanced host: sorted matching, still a sphere
    const auto t = boundary_simplex(2);
    const auto ft = octahedral_flip(t, {0, 1, 2});
    REQUIRE(ft.num_facets() == 10);
    REQUIRE(verify_sphere(ft).status == SphereStatus::Yes);
}

TEST_CASE("flip sequences follow exact flip arithmetic", "[factory]")
{
    for (int d : {2, 3}) {
        const auto x0 = boundary_cross_polytope(d);
        const auto f0 = static_cast<std::uint64_t>(x0.num_vertices());
        const auto fd = static_cast<std::uint64_t>(x0.num_facets());
        const std::uint64_t gain = (std::uint64_t{1} << (d + 1)) - 2;
        const int steps = 60;
        const auto [x, trace] = flip_sequence(x0, steps, 17);
        REQUIRE(trace.density.size() == static_cast<std::size_t>(steps));
        const Rational limit(static_cast<std::int64_t>(gain), d + 1);
        Rational previous(static_cast<std::int64_t>(fd), static_cast<std::int64_t>(f0));
        for (int l = 1; l <= steps; ++l) {
            const auto [facets, verts] = trace.density[static_cast<std::size_t>(l - 1)];
            REQUIRE(facets == fd + static_cast<std::uint64_t>(l) * gain);
            REQUIRE(verts == f0 + static_cast<std::uint64_t>(l) * static_cast<std::uint64_t>(d + 1));
            const Rational density(static_cast<std::int64_t>(facets), static_cast<std::int64_t>(verts));
            REQUIRE(abs(limit - density) <= abs(limit - previous));
            previous = density;
        }
        REQUIRE(x.num_facets() == trace.density.back().first);
        REQUIRE(x.num_vertices() == trace.density.back().second);
        REQUIRE(is_balanced(x).has_value());
    }
    const auto [x, trace] = flip_sequence(octahedron(), 100, 5);
    const double density = static_cast<double>(x.num_facets()) / static_cast<double>(x.num_vertices());
    REQUIRE(std::abs(density - 2.0) < 0.1);
}

TEST_CASE("traces replay exactly", "[factory]")
{
    const auto [flipped, ft] = flip_sequence(boundary_cross_polytope(3), 12, 3);
    REQUIRE(replay(ft) == flipped);
    REQUIRE(replay(trace_from_json(to_json(ft))) == flipped);
    REQUIRE(trace_from_json(to_json(ft)).density == ft.density);

    const auto [tree, tt] = tree_of_simplices_traced(3, 9, 4);
    REQUIRE(replay(trace_from_json(to_json(tt))) == tree);

    const auto lc = two_lc_generate(2, 12, 8, 50);
    REQUIRE(lc.has_value());
    REQUIRE(replay(lc->second) == lc->first);
    REQUIRE(replay(trace_from_json(to_json(lc->second))) == lc->first);
    REQUIRE(to_json(trace_from_json(to_json(lc->second))) == to_json(lc->second));

    // same seed, same output
    REQUIRE(flip_sequence(boundary_cross_polytope(3), 12, 3).first == flipped);
    REQUIRE(tree_of_simplices(3, 9, 4) == tree);
}

TEST_CASE("trees of simplices", "[factory]")
{
    const auto one = tree_of_simplices(2, 1, 0);
    REQUIRE(one.num_facets() == 1);
    REQUIRE(boundary_faces(one).size() == 3);
    REQUIRE(boundary_faces(tree_of_simplices(2, 3, 1)).size() == 5);
    REQUIRE(boundary_faces(tree_of_simplices(3, 5, 1)).size() == 12);
    for (int d = 1; d <= 4; ++d) {
        for (int m = 1; m <= 12; ++m) {
            const auto t = tree_of_simplices(d, m, static_cast<std::uint64_t>(d * 100 + m));
            REQUIRE(t.num_facets() == static_cast<std::size_t>(m));
            REQUIRE(t.num_vertices() == static_cast<std::size_t>(d + m));
            std::size_t interior = 0;
            for (const auto& [ridge, apexes] : ridge_cofaces(t)) {
                REQUIRE(apexes.size() <= 2);
                interior += apexes.size() == 2;
            }
            REQUIRE(interior == static_cast<std::size_t>(m - 1));
            REQUIRE(boundary_faces(t).size() == static_cast<std::size_t>((d - 1) * m + 2));
        }
    }
    REQUIRE_THROWS_AS(tree_of_simplices(2, 0, 0), ComplexError);
}

TEST_CASE("2-LC generation", "[factory]")
{
    std::set<Complex> m4;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        if (auto r = two_lc_generate(2, 4, seed, 20)) {
            m4.insert(canonical_form(r->first));
        }
    }
    REQUIRE(m4 == std::set<Complex>{canonical_form(boundary_simplex(2))});

    for (int d : {2, 3}) {
        for (int m : {6, 8, 10, 12, 14, 16}) {
            if (d == 2 && m % 2) {
                continue;
            }
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                const auto r = two_lc_generate(d, m, seed, 100);
                if (!r) {
                    continue;
                }
                const auto& x = r->first;
                REQUIRE(x.num_facets() == static_cast<std::size_t>(m));
                REQUIRE(is_closed_pseudomanifold(x));
                REQUIRE(euler_characteristic(x) == sphere_euler_characteristic(d));
                REQUIRE(verify_sphere(x).status == SphereStatus::Yes);
                for (const auto& step : r->second.steps) {
                    const auto& id = std::get<IdentifyStep>(step);
                    REQUIRE(id.intersection_dim >= d - 3);
                }
            }
        }
    }
}

TEST_CASE("LC mode and identification arithmetic", "[factory]")
{
    TwoLcOptions opts;
    opts.mode = LcMode::LC;
    int closed = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto r = two_lc_generate(3, 16, seed, opts);
        if (!r) {
            continue;
        }
        ++closed;
        REQUIRE(is_closed_pseudomanifold(r->first));
        for (Vertex v : r->first.vertices()) {
            REQUIRE(verify_sphere(link(r->first, {v})).status == SphereStatus::Yes);
        }
        for (const auto& step : r->second.steps) {
            const auto& id = std::get<IdentifyStep>(step);
            REQUIRE(id.intersection_dim >= 1);
            // the shared part stays put; every other vertex pair is merged
            REQUIRE(id.merges.size() == static_cast<std::size_t>(3 - (id.intersection_dim + 1)));
        }
    }
    REQUIRE(closed > 0);

    // two edges of a tree sharing a vertex: identifying them merges exactly one pair
    const auto r = two_lc_generate(2, 6, 3, 50);
    REQUIRE(r.has_value());
    for (const auto& step : r->second.steps) {
        const auto& id = std::get<IdentifyStep>(step);
        if (id.intersection_dim == 0) {
            REQUIRE(id.merges.size() == 1);
        }
    }
}
