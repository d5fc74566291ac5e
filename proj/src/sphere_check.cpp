#include "turan/sphere_check.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace turan {

namespace {

struct ShellingState {
    const Complex& x;
    std::size_t m;
    // neighbors[i][p]: facets (j, position in j) sharing the ridge of i opposite position p
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> neighbors;
    std::vector<std::vector<std::size_t>> incident; // by dense vertex index
    std::vector<Vertex> verts;
    std::vector<std::vector<std::uint32_t>> placed_on_ridge;
    std::vector<std::uint32_t> touched;
    std::vector<bool> placed;
    std::set<std::size_t> frontier;

    explicit ShellingState(const Complex& complex) : x(complex), m(complex.num_facets())
    {
        verts = x.vertices();
        incident.resize(verts.size());
        const auto width = static_cast<std::size_t>(x.dim() + 1);
        neighbors.assign(m, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>(width));
        placed_on_ridge.assign(m, std::vector<std::uint32_t>(width, 0));
        touched.assign(m, 0);
        placed.assign(m, false);
        std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& f = x.facets()[i];
            for (std::size_t p = 0; p < width; ++p) {
                incident[vertex_index(f[p])].push_back(i);
                ridges[without_vertex(f, f[p])].emplace_back(i, p);
            }
        }
        for (const auto& [ridge, owners] : ridges) {
            for (const auto& [i, p] : owners) {
                for (const auto& other : owners) {
                    if (other.first != i) {
                        neighbors[i][p].push_back(other);
                    }
                }
            }
        }
    }

    std::size_t vertex_index(Vertex v) const
    {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }

    void place(std::size_t i)
    {
        placed[i] = true;
        frontier.erase(i);
        for (std::size_t p = 0; p < neighbors[i].size(); ++p) {
            for (const auto& [j, q] : neighbors[i][p]) {
                if (placed_on_ridge[j][q]++ == 0 && touched[j]++ == 0 && !placed[j]) {
                    frontier.insert(j);
                }
            }
        }
    }

    void unplace(std::size_t i)
    {
        for (std::size_t p = 0; p < neighbors[i].size(); ++p) {
            for (const auto& [j, q] : neighbors[i][p]) {
                if (--placed_on_ridge[j][q] == 0 && --touched[j] == 0) {
                    frontier.erase(j);
                }
            }
        }
        placed[i] = false;
        if (touched[i] > 0) {
            frontier.insert(i);
        }
    }

    // The intersection of facet i with the placed facets is pure (d-1)-dimensional iff
    // every placed facet g meeting i misses some vertex v of i whose opposite ridge is
    // already covered.
    bool attachable(std::size_t i) const
    {
        if (touched[i] == 0) {
            return false;
        }
        const auto& f = x.facets()[i];
        for (Vertex v : f) {
            for (std::size_t g : incident[vertex_index(v)]) {
                if (!placed[g]) {
                    continue;
                }
                const auto& gf = x.facets()[g];
                bool ok = false;
                for (std::size_t p = 0; p < f.size() && !ok; ++p) {
                    ok = placed_on_ridge[i][p] > 0 && !std::binary_search(gf.begin(), gf.end(), f[p]);
                }
                if (!ok) {
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<std::size_t> candidates() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i : frontier) {
            if (attachable(i)) {
                out.push_back(i);
            }
        }
        std::stable_sort(out.begin(), out.end(),
                         [&](std::size_t a, std::size_t b) { return touched[a] > touched[b]; });
        return out;
    }
};

bool all_ridges_degree_two(const Complex& x, std::string* why)
{
    for (const auto& [ridge, apexes] : ridge_cofaces(x)) {
        if (apexes.size() != 2) {
            if (why) {
                *why = "a (d-1)-face has degree " + std::to_string(apexes.size());
            }
            return false;
        }
    }
    return true;
}

SphereVerdict verify_impl(const Complex& x, SphereEffort effort, bool want_certificate)
{
    SphereVerdict out;
    const int d = x.dim();
    auto reject = [&](std::string why) {
        out.status = SphereStatus::No;
        out.reason = std::move(why);
        return out;
    };
    if (x.empty() || d < 0) {
        return reject("empty complex");
    }
    if (d == 0) {
        if (x.num_facets() != 2) {
            return reject("a 0-sphere has exactly two points");
        }
        out.status = SphereStatus::Yes;
        out.reason = "two points";
        out.shelling = x.facets();
        return out;
    }
    std::string why;
    if (!all_ridges_degree_two(x, &why)) {
        return reject("not a closed pseudomanifold: " + why);
    }
    if (!is_strongly_connected(x)) {
        return reject("not a closed pseudomanifold: facets are disconnected");
    }
    const auto chi = euler_characteristic(x);
    if (chi != sphere_euler_characteristic(d)) {
        return reject("Euler characteristic " + std::to_string(chi) + " differs from " +
                      std::to_string(sphere_euler_characteristic(d)));
    }
    if (d >= 2) {
        for (Vertex v : x.vertices()) {
            auto lv = verify_impl(link(x, {v}), effort.lower(), false);
            out.effort_used += lv.effort_used;
            if (lv.status == SphereStatus::No) {
                return reject("link of vertex " + std::to_string(v) + " is not a sphere: " + lv.reason);
            }
        }
    }
    if (d <= 2) {
        out.status = SphereStatus::Yes;
        out.reason = d == 1 ? "connected cycle" : "closed connected surface with circle links and Euler characteristic 2";
        if (want_certificate) {
            auto search = find_shelling_search(x, effort.budget());
            out.effort_used += search.nodes;
            out.shelling = std::move(search.order);
        }
        return out;
    }
    auto search = find_shelling_search(x, effort.budget());
    out.effort_used += search.nodes;
    if (search.order) {
        out.status = SphereStatus::Yes;
        out.reason = "shellable closed pseudomanifold";
        out.shelling = std::move(search.order);
        return out;
    }
    out.status = SphereStatus::Unknown;
    out.reason = search.budget_exhausted ? "shelling search budget exhausted"
                                         : "no shelling exists; sphere status undecided";
    return out;
}

} // namespace

std::string to_string(SphereStatus s)
{
    switch (s) {
    case SphereStatus::Yes:
        return "yes";
    case SphereStatus::No:
        return "no";
    case SphereStatus::Unknown:
        break;
    }
    return "unknown";
}

std::uint64_t SphereEffort::budget() const
{
    std::uint64_t b = 1;
    for (int i = 0; i < level && i < 18; ++i) {
        b *= 10;
    }
    return b;
}

json to_json(const SphereVerdict& v)
{
    json j{{"status", to_string(v.status)}, {"reason", v.reason}, {"effort_used", v.effort_used}};
    if (v.shelling) {
        j["shelling"] = *v.shelling;
    }
    return j;
}

bool is_closed_pseudomanifold(const Complex& x)
{
    return !x.empty() && all_ridges_degree_two(x, nullptr) && is_strongly_connected(x);
}

ShellingSearch find_shelling_search(const Complex& x, std::uint64_t budget)
{
    ShellingSearch result;
    if (x.empty()) {
        return result;
    }
    ShellingState state(x);
    std::vector<std::size_t> order;
    struct Frame {
        std::vector<std::size_t> options;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    {
        Frame root;
        root.options.resize(state.m);
        for (std::size_t i = 0; i < state.m; ++i) {
            root.options[i] = i;
        }
        stack.push_back(std::move(root));
    }
    while (!stack.empty()) {
        auto& top = stack.back();
        if (top.next == top.options.size()) {
            stack.pop_back();
            if (!order.empty()) {
                state.unplace(order.back());
                order.pop_back();
            }
            continue;
        }
        if (result.nodes >= budget) {
            result.budget_exhausted = true;
            return result;
        }
        const std::size_t pick = top.options[top.next++];
        ++result.nodes;
        state.place(pick);
        order.push_back(pick);
        if (order.size() == state.m) {
            std::vector<Face> out;
            out.reserve(order.size());
            for (std::size_t i : order) {
                out.push_back(x.facets()[i]);
            }
            result.order = std::move(out);
            return result;
        }
        stack.push_back(Frame{state.candidates(), 0});
    }
    return result;
}

std::optional<std::vector<Face>> find_shelling(const Complex& x, std::uint64_t budget)
{
    return find_shelling_search(x, budget).order;
}

bool is_shelling_order(const Complex& x, std::span<const Face> order)
{
    if (order.size() != x.num_facets() || order.empty()) {
        return false;
    }
    std::set<Face> seen;
    for (const auto& f : order) {
        if (!x.has_facet(f) || !seen.insert(f).second) {
            return false;
        }
    }
    const auto ridge_size = static_cast<std::size_t>(x.dim());
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& f = order[k];
        std::vector<Face> meets;
        for (std::size_t j = 0; j < k; ++j) {
            Face common;
            std::set_intersection(f.begin(), f.end(), order[j].begin(), order[j].end(),
                                  std::back_inserter(common));
            meets.push_back(std::move(common));
        }
        // Each maximal piece of the intersection must sit inside a (d-1)-dimensional piece.
        for (const auto& piece : meets) {
            const bool covered = std::any_of(meets.begin(), meets.end(), [&](const Face& big) {
                return big.size() == ridge_size &&
                       std::includes(big.begin(), big.end(), piece.begin(), piece.end());
            });
            if (!covered) {
                return false;
            }
        }
    }
    return true;
}

SphereVerdict verify_sphere(const Complex& x, SphereEffort effort)
{
    return verify_impl(x, effort, true);
}

} // namespace turan
