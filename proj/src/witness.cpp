#include "turan/witness.hpp"

#include <algorithm>
#include <map>

namespace turan {

namespace {

std::optional<Complex> search(const Complex& x, const WitnessOptions& options,
                              std::vector<WitnessLevel>& levels)
{
    if (x.dim() == 1) {
        return find_cycle(x);
    }
    const auto counts = common_link_counts(x);
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    WitnessLevel level;
    level.dim = x.dim();
    level.facets = x.num_facets();
    level.vertices = x.num_vertices();
    if (options.min_density_check) {
        for (const auto& [pair, c] : ranked) {
            level.pair_sum += c;
        }
        const auto n = static_cast<double>(level.vertices);
        level.pigeonhole = n > 1 ? static_cast<double>(level.pair_sum) / (n * (n - 1) / 2) : 0.0;
        if (level.pair_sum == 0) {
            return std::nullopt;
        }
    }
    const std::size_t tries = std::min(options.pairs_per_level, ranked.size());
    for (std::size_t i = 0; i < tries; ++i) {
        const auto [u, v] = ranked[i].first;
        const Complex common = common_link(x, u, v);
        std::vector<WitnessLevel> inner;
        auto sub = search(common, options, inner);
        if (!sub) {
            continue;
        }
        std::vector<Face> facets;
        for (const auto& tau : sub->facets()) {
            facets.push_back(with_vertex(tau, u));
            facets.push_back(with_vertex(tau, v));
        }
        level.u = u;
        level.v = v;
        level.common_link_faces = ranked[i].second;
        levels.push_back(level);
        levels.insert(levels.end(), inner.begin(), inner.end());
        return Complex(x.dim(), std::move(facets));
    }
    return std::nullopt;
}

} // namespace

std::optional<Complex> find_cycle(const Complex& graph)
{
    if (graph.dim() != 1) {
        throw ComplexError("find_cycle: expected a 1-complex");
    }
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : graph.facets()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::map<Vertex, Vertex> parent;
    for (const auto& [root, unused] : adj) {
        if (parent.contains(root)) {
            continue;
        }
        parent[root] = root;
        // Iterative DFS; the first edge to an already visited vertex other than the
        // parent closes a cycle.
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next == adj[node].size()) {
                stack.pop_back();
                continue;
            }
            const Vertex w = adj[node][next++];
            if (w == parent[node]) {
                continue;
            }
            if (parent.contains(w)) {
                std::vector<Face> edges{{std::min(node, w), std::max(node, w)}};
                for (Vertex a = node; a != w; a = parent[a]) {
                    const Vertex b = parent[a];
                    edges.push_back({std::min(a, b), std::max(a, b)});
                }
                return Complex(1, std::move(edges));
            }
            parent[w] = node;
            stack.emplace_back(w, 0);
        }
    }
    return std::nullopt;
}

std::optional<Witness> suspension_witness(const Complex& x, const WitnessOptions& options)
{
    if (x.dim() < 1) {
        throw ComplexError("suspension_witness: complex must have dimension >= 1");
    }
    std::vector<WitnessLevel> levels;
    auto sphere = search(x, options, levels);
    if (!sphere) {
        return std::nullopt;
    }
    Witness w{std::move(*sphere), std::move(levels), {}};
    w.verdict = verify_sphere(w.sphere, options.effort);
    if (w.verdict.status != SphereStatus::Yes) {
        return std::nullopt;
    }
    return w;
}

json to_json(const Witness& w)
{
    json levels = json::array();
    for (const auto& l : w.levels) {
        levels.push_back({{"dim", l.dim},
                          {"pair", {l.u, l.v}},
                          {"common_link_faces", l.common_link_faces},
                          {"facets", l.facets},
                          {"vertices", l.vertices},
                          {"pair_sum", l.pair_sum},
                          {"pigeonhole", l.pigeonhole}});
    }
    return json{{"sphere", to_json(w.sphere)}, {"levels", std::move(levels)}, {"verdict", to_json(w.verdict)}};
}

} // namespace turan
