#include "turan/sphere_factory.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "turan/rng.hpp"

namespace turan {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw ComplexError(what);
    }
}

std::pair<std::uint64_t, std::uint64_t> density_point(const Complex& x)
{
    return {x.num_facets(), x.num_vertices()};
}

// Applies vertex merges to a facet list. Fails if a facet collapses, two facets coincide,
// or some (d-1)-face ends up in more than two facets.
std::optional<std::vector<Face>> merge_vertices(const std::vector<Face>& facets,
                                                const std::vector<std::pair<Vertex, Vertex>>& merges)
{
    std::vector<Face> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        Face g = f;
        for (auto& v : g) {
            for (const auto& [from, to] : merges) {
                if (v == from) {
                    v = to;
                }
            }
        }
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end()) {
            return std::nullopt;
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        return std::nullopt;
    }
    std::map<Face, int> ridge_degree;
    for (const auto& f : out) {
        for (Vertex v : f) {
            if (++ridge_degree[without_vertex(f, v)] > 2) {
                return std::nullopt;
            }
        }
    }
    return out;
}

Face face_from_json(const json& j)
{
    return j.get<Face>();
}

} // namespace

Complex boundary_simplex(int d)
{
    require(d >= 1, "boundary_simplex: d must be >= 1");
    std::vector<Face> facets;
    for (int skip = 0; skip <= d + 1; ++skip) {
        Face f;
        for (int v = 0; v <= d + 1; ++v) {
            if (v != skip) {
                f.push_back(static_cast<Vertex>(v));
            }
        }
        facets.push_back(std::move(f));
    }
    return Complex(d, std::move(facets));
}

Complex boundary_cross_polytope(int d)
{
    require(d >= 1, "boundary_cross_polytope: d must be >= 1");
    require(d <= 20, "boundary_cross_polytope: d too large");
    std::vector<Face> facets;
    const std::uint64_t total = std::uint64_t{1} << (d + 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Face f;
        for (int i = 0; i <= d; ++i) {
            f.push_back(static_cast<Vertex>(2 * i + ((mask >> i) & 1U)));
        }
        facets.push_back(std::move(f));
    }
    return Complex(d, std::move(facets));
}

Coloring cross_polytope_coloring(int d)
{
    Coloring c;
    for (int v = 0; v < 2 * (d + 1); ++v) {
        c[static_cast<Vertex>(v)] = static_cast<Color>(v / 2);
    }
    return c;
}

Complex cycle(int k)
{
    require(k >= 3, "cycle: k must be >= 3");
    std::vector<Face> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)});
    }
    return Complex(1, std::move(edges));
}

Complex iterated_suspension_sphere(int k, int t)
{
    require(t >= 0, "iterated_suspension_sphere: t must be >= 0");
    Complex x = cycle(k);
    for (int i = 0; i < t; ++i) {
        x = suspension(x);
    }
    return x;
}

std::string to_string(TraceKind k)
{
    switch (k) {
    case TraceKind::FlipSequence:
        return "flip-sequence";
    case TraceKind::TwoLC:
        return "2lc";
    case TraceKind::LC:
        return "lc";
    case TraceKind::Tree:
        break;
    }
    return "tree";
}

FlipResult octahedral_flip(const Complex& x, const Face& sigma, const Coloring* coloring)
{
    Face s = sigma;
    std::sort(s.begin(), s.end());
    require(x.has_facet(s), "octahedral_flip: sigma is not a facet");
    FlipStep step;
    step.facet = s;
    if (coloring) {
        step.matched.assign(s.size(), 0);
        std::vector<bool> hit(s.size(), false);
        for (Vertex v : s) {
            auto it = coloring->find(v);
            require(it != coloring->end() && it->second < s.size() && !hit[it->second],
                    "octahedral_flip: coloring is not rainbow on sigma");
            hit[it->second] = true;
            step.matched[it->second] = v;
        }
    } else {
        step.matched = s;
    }
    const Vertex base = *x.max_vertex() + 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        step.fresh.push_back(base + static_cast<Vertex>(i));
    }
    Complex out = apply_step(x, step);
    return {std::move(out), std::move(step)};
}

Complex octahedral_flip(const Complex& x, const Face& sigma)
{
    const auto coloring = is_balanced(x);
    return octahedral_flip(x, sigma, coloring ? &*coloring : nullptr).complex;
}

Complex apply_step(const Complex& x, const TraceStep& step)
{
    if (const auto* flip = std::get_if<FlipStep>(&step)) {
        require(x.has_facet(flip->facet), "flip step: facet not present");
        const std::size_t width = flip->matched.size();
        require(width == flip->fresh.size() && width == static_cast<std::size_t>(x.dim() + 1),
                "flip step: malformed matching");
        std::vector<Face> facets;
        for (const auto& f : x.facets()) {
            if (f != flip->facet) {
                facets.push_back(f);
            }
        }
        const std::uint64_t total = std::uint64_t{1} << width;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            Face f;
            for (std::size_t i = 0; i < width; ++i) {
                f.push_back(((mask >> i) & 1U) ? flip->fresh[i] : flip->matched[i]);
            }
            facets.push_back(std::move(f));
        }
        return Complex(x.dim(), std::move(facets));
    }
    if (const auto* id = std::get_if<IdentifyStep>(&step)) {
        auto merged = merge_vertices(x.facets(), id->merges);
        require(merged.has_value(), "identify step: degenerate identification");
        return Complex(x.dim(), std::move(*merged));
    }
    const auto& stack = std::get<StackStep>(step);
    auto facets = x.facets();
    facets.push_back(with_vertex(stack.face, stack.apex));
    return Complex(x.dim(), std::move(facets));
}

std::pair<Complex, BuildTrace> flip_sequence(const Complex& x0, int steps, std::uint64_t seed)
{
    require(steps >= 0, "flip_sequence: negative step count");
    require(!x0.empty(), "flip_sequence: empty start complex");
    BuildTrace trace;
    trace.kind = TraceKind::FlipSequence;
    trace.seed = seed;
    trace.start = x0;
    Rng rng(seed);
    auto coloring = is_balanced(x0);
    Complex cur = x0;
    for (int i = 0; i < steps; ++i) {
        const auto& sigma = cur.facets()[rng.below(cur.num_facets())];
        auto flipped = octahedral_flip(cur, sigma, coloring ? &*coloring : nullptr);
        if (coloring) {
            for (std::size_t c = 0; c < flipped.step.fresh.size(); ++c) {
                (*coloring)[flipped.step.fresh[c]] = static_cast<Color>(c);
            }
        }
        cur = std::move(flipped.complex);
        trace.steps.emplace_back(std::move(flipped.step));
        trace.density.push_back(density_point(cur));
    }
    return {std::move(cur), std::move(trace)};
}

std::pair<Complex, BuildTrace> tree_of_simplices_traced(int d, int m, std::uint64_t seed)
{
    require(d >= 1, "tree_of_simplices: d must be >= 1");
    require(m >= 1, "tree_of_simplices: m must be >= 1");
    BuildTrace trace;
    trace.kind = TraceKind::Tree;
    trace.seed = seed;
    Face first;
    for (int v = 0; v <= d; ++v) {
        first.push_back(static_cast<Vertex>(v));
    }
    trace.start = Complex(d, {first});
    std::set<Face> free;
    for (Vertex v : first) {
        free.insert(without_vertex(first, v));
    }
    std::vector<Face> facets{first};
    Rng rng(seed);
    Vertex next = static_cast<Vertex>(d + 1);
    for (int i = 1; i < m; ++i) {
        auto it = free.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(rng.below(free.size())));
        Face face = *it;
        free.erase(it);
        const Vertex apex = next++;
        Face facet = with_vertex(face, apex);
        for (Vertex v : face) {
            free.insert(without_vertex(facet, v));
        }
        facets.push_back(facet);
        trace.steps.emplace_back(StackStep{std::move(face), apex});
        trace.density.emplace_back(facets.size(), next);
    }
    return {Complex(d, std::move(facets)), std::move(trace)};
}

Complex tree_of_simplices(int d, int m, std::uint64_t seed)
{
    return tree_of_simplices_traced(d, m, seed).first;
}

std::vector<Face> boundary_faces(const Complex& x)
{
    std::vector<Face> out;
    for (const auto& [ridge, apexes] : ridge_cofaces(x)) {
        if (apexes.size() == 1) {
            out.push_back(ridge);
        }
    }
    return out;
}

std::optional<std::pair<Complex, BuildTrace>> two_lc_generate(int d, int m, std::uint64_t seed,
                                                              const TwoLcOptions& options)
{
    require(d >= 2, "two_lc_generate: d must be >= 2");
    const auto [tree, tree_trace] = tree_of_simplices_traced(d, m, seed);
    const std::size_t min_common = static_cast<std::size_t>(
        std::max(0, options.mode == LcMode::LC ? d - 1 : d - 2));
    Rng rng(derive_seed(seed, 1));

    // Randomized depth-first search over identifications; every dead end is reported and
    // counted, and an attempt restarts once it has seen dead_ends_per_attempt of them.
    BuildTrace trace;
    std::size_t dead_ends = 0;
    const auto reject = [&](const Complex& x) {
        ++dead_ends;
        if (options.on_reject) {
            options.on_reject(x);
        }
    };
    std::function<std::optional<Complex>(const std::vector<Face>&)> dfs =
        [&](const std::vector<Face>& facets) -> std::optional<Complex> {
        const Complex cur(d, facets);
        const auto boundary = boundary_faces(cur);
        if (boundary.empty()) {
            if (verify_sphere(cur, options.effort).status == SphereStatus::Yes) {
                return cur;
            }
            reject(cur);
            return std::nullopt;
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < boundary.size(); ++a) {
            for (std::size_t b = a + 1; b < boundary.size(); ++b) {
                Face common;
                std::set_intersection(boundary[a].begin(), boundary[a].end(), boundary[b].begin(),
                                      boundary[b].end(), std::back_inserter(common));
                if (common.size() >= min_common) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        rng.shuffle(std::span(pairs));
        // Candidate moves, tried in order of the boundary they leave (fewest first).
        struct Move {
            std::size_t boundary;
            std::vector<Face> facets;
            IdentifyStep step;
        };
        std::vector<Move> moves;
        for (const auto& [a, b] : pairs) {
            const Face& fa = boundary[a];
            const Face& fb = boundary[b];
            Face common;
            Face rest_a;
            Face rest_b;
            std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(common));
            std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(rest_a));
            std::set_difference(fb.begin(), fb.end(), fa.begin(), fa.end(), std::back_inserter(rest_b));
            std::vector<Face> bijections;
            do {
                bijections.push_back(rest_b);
            } while (std::next_permutation(rest_b.begin(), rest_b.end()));
            rng.shuffle(std::span(bijections));
            for (const auto& image : bijections) {
                std::vector<std::pair<Vertex, Vertex>> merges;
                for (std::size_t i = 0; i < rest_a.size(); ++i) {
                    merges.emplace_back(std::max(rest_a[i], image[i]), std::min(rest_a[i], image[i]));
                }
                auto merged = merge_vertices(facets, merges);
                if (!merged) {
                    continue;
                }
                const std::size_t left = boundary_faces(Complex(d, *merged)).size();
                moves.push_back({left, std::move(*merged),
                                 IdentifyStep{fa, fb, static_cast<int>(common.size()) - 1, std::move(merges)}});
            }
        }
        std::stable_sort(moves.begin(), moves.end(),
                         [](const Move& x, const Move& y) { return x.boundary < y.boundary; });
        const bool moved = !moves.empty();
        for (auto& mv : moves) {
            trace.steps.emplace_back(mv.step);
            trace.density.push_back(density_point(Complex(d, mv.facets)));
            if (auto done = dfs(mv.facets)) {
                return done;
            }
            trace.steps.pop_back();
            trace.density.pop_back();
            if (dead_ends >= options.dead_ends_per_attempt) {
                return std::nullopt;
            }
        }
        if (!moved) {
            reject(cur);
        }
        return std::nullopt;
    };

    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        trace = BuildTrace{};
        trace.kind = options.mode == LcMode::LC ? TraceKind::LC : TraceKind::TwoLC;
        trace.seed = seed;
        trace.start = tree;
        dead_ends = 0;
        if (auto x = dfs(tree.facets())) {
            return std::make_pair(std::move(*x), std::move(trace));
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Complex, BuildTrace>> two_lc_generate(int d, int m, std::uint64_t seed,
                                                              int max_attempts)
{
    TwoLcOptions options;
    options.max_attempts = max_attempts;
    return two_lc_generate(d, m, seed, options);
}

json to_json(const BuildTrace& t)
{
    json steps = json::array();
    for (const auto& step : t.steps) {
        if (const auto* flip = std::get_if<FlipStep>(&step)) {
            steps.push_back({{"facet", flip->facet}, {"matched", flip->matched}, {"fresh", flip->fresh}});
        } else if (const auto* id = std::get_if<IdentifyStep>(&step)) {
            json merges = json::array();
            for (const auto& [from, to] : id->merges) {
                merges.push_back({from, to});
            }
            steps.push_back({{"faces", {id->first, id->second}},
                             {"intersection_dim", id->intersection_dim},
                             {"merges", std::move(merges)}});
        } else {
            const auto& st = std::get<StackStep>(step);
            steps.push_back({{"face", st.face}, {"apex", st.apex}});
        }
    }
    json density = json::array();
    for (const auto& [fd, f0] : t.density) {
        density.push_back({fd, f0});
    }
    return json{{"kind", to_string(t.kind)}, {"seed", t.seed},   {"start", to_json(t.start)},
                {"steps", std::move(steps)},  {"density", std::move(density)}};
}

BuildTrace trace_from_json(const json& j)
{
    BuildTrace t;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "flip-sequence") {
        t.kind = TraceKind::FlipSequence;
    } else if (kind == "2lc") {
        t.kind = TraceKind::TwoLC;
    } else if (kind == "lc") {
        t.kind = TraceKind::LC;
    } else if (kind == "tree") {
        t.kind = TraceKind::Tree;
    } else {
        throw ComplexError("unknown trace kind " + kind);
    }
    t.seed = j.at("seed").get<std::uint64_t>();
    t.start = complex_from_json(j.at("start"));
    for (const auto& s : j.at("steps")) {
        if (s.contains("matched")) {
            t.steps.emplace_back(FlipStep{face_from_json(s.at("facet")), s.at("matched").get<std::vector<Vertex>>(),
                                          s.at("fresh").get<std::vector<Vertex>>()});
        } else if (s.contains("merges")) {
            IdentifyStep id;
            id.first = face_from_json(s.at("faces").at(0));
            id.second = face_from_json(s.at("faces").at(1));
            id.intersection_dim = s.at("intersection_dim").get<int>();
            for (const auto& mrg : s.at("merges")) {
                id.merges.emplace_back(mrg.at(0).get<Vertex>(), mrg.at(1).get<Vertex>());
            }
            t.steps.emplace_back(std::move(id));
        } else {
            t.steps.emplace_back(StackStep{face_from_json(s.at("face")), s.at("apex").get<Vertex>()});
        }
    }
    for (const auto& p : j.at("density")) {
        t.density.emplace_back(p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>());
    }
    return t;
}

Complex replay(const BuildTrace& t)
{
    Complex cur = t.start;
    for (const auto& step : t.steps) {
        cur = apply_step(cur, step);
    }
    return cur;
}

} // namespace turan
