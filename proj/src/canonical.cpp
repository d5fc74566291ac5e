#include <algorithm>
#include <numeric>

#include "turan/census.hpp"

namespace turan {

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(const Complex& x) : dim_(x.dim())
    {
        const auto verts = x.vertices();
        n_ = static_cast<std::uint32_t>(verts.size());
        incident_.resize(n_);
        for (const auto& f : x.facets()) {
            std::vector<std::uint32_t> g;
            for (Vertex v : f) {
                g.push_back(static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
            }
            for (auto v : g) {
                incident_[v].push_back(facets_.size());
            }
            facets_.push_back(std::move(g));
        }
        orbit_.resize(n_);
        std::iota(orbit_.begin(), orbit_.end(), 0);
    }

    Complex run()
    {
        if (n_ == 0) {
            return Complex::empty(dim_);
        }
        std::vector<std::uint32_t> colors(n_, 0);
        search(std::move(colors), 0);
        std::vector<Face> out;
        out.reserve(best_.size());
        for (const auto& f : best_) {
            out.emplace_back(f.begin(), f.end());
        }
        return Complex(dim_, std::move(out));
    }

private:
    using Form = std::vector<std::vector<std::uint32_t>>;

    // Splits classes until stable; returns the number of classes. Class numbers stay
    // ordered consistently with the input classes, so the result is label-invariant.
    std::uint32_t refine(std::vector<std::uint32_t>& colors) const
    {
        std::uint32_t cells = count_cells(colors);
        std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> sig(n_);
        std::vector<std::vector<std::uint32_t>> tuples;
        while (cells < n_) {
            for (std::uint32_t v = 0; v < n_; ++v) {
                tuples.clear();
                for (auto fi : incident_[v]) {
                    std::vector<std::uint32_t> t;
                    for (auto w : facets_[fi]) {
                        if (w != v) {
                            t.push_back(colors[w]);
                        }
                    }
                    std::sort(t.begin(), t.end());
                    tuples.push_back(std::move(t));
                }
                std::sort(tuples.begin(), tuples.end());
                auto& s = sig[v].first;
                s.clear();
                s.push_back(colors[v]);
                for (const auto& t : tuples) {
                    s.insert(s.end(), t.begin(), t.end());
                }
                sig[v].second = v;
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            std::uint32_t rank = 0;
            for (std::uint32_t i = 0; i < n_; ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) {
                    ++rank;
                }
                colors[sorted[i].second] = rank;
            }
            const std::uint32_t next = rank + 1;
            if (next == cells) {
                break;
            }
            cells = next;
        }
        return cells;
    }

    static std::uint32_t count_cells(const std::vector<std::uint32_t>& colors)
    {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    }

    std::uint32_t find(std::uint32_t a)
    {
        while (orbit_[a] != a) {
            orbit_[a] = orbit_[orbit_[a]];
            a = orbit_[a];
        }
        return a;
    }

    void search(std::vector<std::uint32_t> colors, int depth)
    {
        if (refine(colors) == n_) {
            leaf(colors);
            return;
        }
        std::vector<std::uint32_t> size(n_, 0);
        for (auto c : colors) {
            ++size[c];
        }
        std::uint32_t target = 0;
        while (size[target] < 2) {
            ++target;
        }
        std::vector<std::uint32_t> explored;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (colors[v] != target) {
                continue;
            }
            // At the root every automorphism preserves the refined partition, so a vertex
            // in the orbit of an explored one yields the same leaves.
            if (depth == 0 && std::any_of(explored.begin(), explored.end(),
                                          [&](std::uint32_t e) { return find(e) == find(v); })) {
                continue;
            }
            explored.push_back(v);
            auto next = colors;
            for (auto& c : next) {
                if (c > target) {
                    ++c;
                }
            }
            for (std::uint32_t u = 0; u < n_; ++u) {
                if (colors[u] == target && u != v) {
                    next[u] = target + 1;
                }
            }
            search(std::move(next), depth + 1);
        }
    }

    void leaf(const std::vector<std::uint32_t>& colors)
    {
        Form form;
        form.reserve(facets_.size());
        for (const auto& f : facets_) {
            std::vector<std::uint32_t> g;
            g.reserve(f.size());
            for (auto v : f) {
                g.push_back(colors[v]);
            }
            std::sort(g.begin(), g.end());
            form.push_back(std::move(g));
        }
        std::sort(form.begin(), form.end());
        if (!have_best_ || form < best_) {
            best_ = std::move(form);
            best_inverse_.assign(n_, 0);
            for (std::uint32_t v = 0; v < n_; ++v) {
                best_inverse_[colors[v]] = v;
            }
            have_best_ = true;
        } else if (form == best_) {
            for (std::uint32_t v = 0; v < n_; ++v) {
                const auto image = best_inverse_[colors[v]];
                orbit_[find(v)] = find(image);
            }
        }
    }

    int dim_;
    std::uint32_t n_ = 0;
    std::vector<std::vector<std::uint32_t>> facets_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::uint32_t> orbit_;
    Form best_;
    std::vector<std::uint32_t> best_inverse_;
    bool have_best_ = false;
};

} // namespace

Complex canonical_form(const Complex& x)
{
    return Canonicalizer(x).run();
}

} // namespace turan
