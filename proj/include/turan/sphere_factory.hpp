#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "turan/complex.hpp"
#include "turan/json_io.hpp"
#include "turan/sphere_check.hpp"

namespace turan {

Complex boundary_simplex(int d);

/// Vertices 2i and 2i+1 form the i-th antipodal pair; 2(d+1) vertices, 2^(d+1) facets.
Complex boundary_cross_polytope(int d);
/// The pair coloring v -> v / 2 of boundary_cross_polytope.
Coloring cross_polytope_coloring(int d);

Complex cycle(int k);

/// cycle(k) suspended t times: a (t+1)-sphere with k + 2t vertices and k * 2^t facets.
Complex iterated_suspension_sphere(int k, int t);

enum class TraceKind { FlipSequence, TwoLC, LC, Tree };

std::string to_string(TraceKind k);

/// One octahedral flip: host vertex matched with the i-th cross-polytope pair, and the
/// fresh label given to the other vertex of that pair.
struct FlipStep {
    Face facet;
    std::vector<Vertex> matched;
    std::vector<Vertex> fresh;
};

/// Identification of two boundary (d-1)-faces. Each merge (from, to) replaces label
/// `from` by `to` everywhere.
struct IdentifyStep {
    Face first;
    Face second;
    int intersection_dim = -1;
    std::vector<std::pair<Vertex, Vertex>> merges;
};

/// Stacking a fresh simplex with apex `apex` onto the free (d-1)-face `face`.
struct StackStep {
    Face face;
    Vertex apex = 0;
};

using TraceStep = std::variant<FlipStep, IdentifyStep, StackStep>;

struct BuildTrace {
    TraceKind kind = TraceKind::FlipSequence;
    std::uint64_t seed = 0;
    Complex start;
    std::vector<TraceStep> steps;
    /// (f_d, f_0) after each step.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> density;
};

json to_json(const BuildTrace& t);
BuildTrace trace_from_json(const json& j);

/// Applies every step to `start`; reproduces the traced complex exactly.
Complex replay(const BuildTrace& t);

struct FlipResult {
    Complex complex;
    FlipStep step;
};

/// Connected sum with boundary_cross_polytope(d) at the facet sigma. With a proper
/// coloring the i-th pair is matched to the vertex of color i (and the fresh vertex of
/// pair i also gets color i); otherwise pairs follow the sorted order of sigma.
FlipResult octahedral_flip(const Complex& x, const Face& sigma, const Coloring* coloring);
/// Uses a balanced coloring of x for the matching when one exists.
Complex octahedral_flip(const Complex& x, const Face& sigma);
Complex apply_step(const Complex& x, const TraceStep& step);

/// L flips at uniformly chosen facets.
std::pair<Complex, BuildTrace> flip_sequence(const Complex& x0, int steps, std::uint64_t seed);

/// m d-simplices stacked one at a time onto uniformly chosen free (d-1)-faces.
Complex tree_of_simplices(int d, int m, std::uint64_t seed);
std::pair<Complex, BuildTrace> tree_of_simplices_traced(int d, int m, std::uint64_t seed);

/// Free (degree one) (d-1)-faces.
std::vector<Face> boundary_faces(const Complex& x);

enum class LcMode { TwoLC, LC };

struct TwoLcOptions {
    LcMode mode = LcMode::TwoLC;
    int max_attempts = 100;
    /// Backtracking allowance: an attempt restarts after this many dead ends.
    std::size_t dead_ends_per_attempt = 1;
    SphereEffort effort{5};
    /// Sees every dead end: closed non-spheres and stuck complexes that still have
    /// boundary.
    std::function<void(const Complex&)> on_reject;
};

/// Closes tree_of_simplices(d, m, seed) by identifying pairs of boundary (d-1)-faces
/// whose intersection has dimension >= d-3 (TwoLC) or >= d-2 (LC). Each attempt is a
/// randomized depth-first search that backtracks out of dead ends until its allowance
/// runs out. Returns nullopt when no attempt closes up into a verified sphere.
std::optional<std::pair<Complex, BuildTrace>> two_lc_generate(int d, int m, std::uint64_t seed,
                                                              const TwoLcOptions& options);
std::optional<std::pair<Complex, BuildTrace>> two_lc_generate(int d, int m, std::uint64_t seed,
                                                              int max_attempts);

} // namespace turan
