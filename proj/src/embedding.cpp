#include "turan/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace turan {

namespace {

void add_facet(HostView& view, const Face& g, std::uint32_t idx)
{
    for (Vertex v : g) {
        view.incident[v].push_back(idx);
        view.ridge_apexes[without_vertex(g, v)].push_back(v);
    }
    view.facets.insert(g);
}

} // namespace

const std::vector<std::uint32_t>* HostView::apexes(const Face& ridge) const
{
    auto it = ridge_apexes.find(ridge);
    return it == ridge_apexes.end() ? nullptr : &it->second;
}

EmbeddingIndex::EmbeddingIndex(Complex host) : host_(std::move(host))
{
    labels_ = host_.vertices();
    all_.incident.resize(labels_.size());
    core_.incident.resize(labels_.size());
    auto dense = [&](Vertex v) {
        return static_cast<std::uint32_t>(std::lower_bound(labels_.begin(), labels_.end(), v) - labels_.begin());
    };
    facets_.reserve(host_.num_facets());
    for (const auto& f : host_.facets()) {
        Face g;
        g.reserve(f.size());
        for (Vertex v : f) {
            g.push_back(dense(v));
        }
        add_facet(all_, g, static_cast<std::uint32_t>(facets_.size()));
        facets_.push_back(std::move(g));
    }

    std::unordered_map<Face, std::vector<std::uint32_t>, FaceHash> ridge_facets;
    for (std::uint32_t i = 0; i < facets_.size(); ++i) {
        for (Vertex v : facets_[i]) {
            ridge_facets[without_vertex(facets_[i], v)].push_back(i);
        }
    }
    std::unordered_map<Face, std::size_t, FaceHash> live;
    for (const auto& [r, owners] : ridge_facets) {
        live[r] = owners.size();
    }
    std::vector<bool> alive(facets_.size(), true);
    std::vector<std::uint32_t> queue;
    auto weak = [&](std::uint32_t i) {
        return std::any_of(facets_[i].begin(), facets_[i].end(),
                           [&](Vertex v) { return live[without_vertex(facets_[i], v)] < 2; });
    };
    for (std::uint32_t i = 0; i < facets_.size(); ++i) {
        if (weak(i)) {
            alive[i] = false;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const auto i = queue.back();
        queue.pop_back();
        for (Vertex v : facets_[i]) {
            const Face r = without_vertex(facets_[i], v);
            --live[r];
            for (auto j : ridge_facets[r]) {
                if (alive[j] && weak(j)) {
                    alive[j] = false;
                    queue.push_back(j);
                }
            }
        }
    }
    for (std::uint32_t i = 0; i < facets_.size(); ++i) {
        if (alive[i]) {
            add_facet(core_, facets_[i], i);
        }
    }
}

namespace {

struct Step {
    std::vector<std::uint32_t> facet;       // pattern facet (dense pattern ids)
    std::vector<std::uint32_t> mapped;      // its vertices mapped by earlier steps
    std::vector<std::uint32_t> fresh;       // its vertices mapped here
    std::vector<std::vector<std::uint32_t>> checks; // facets completed here, besides `facet`
};

class Searcher {
public:
    Searcher(const EmbeddingIndex& host, const Complex& pattern, std::size_t limit)
        : host_(host), limit_(limit)
    {
        labels_ = pattern.vertices();
        auto dense = [&](Vertex v) {
            return static_cast<std::uint32_t>(std::lower_bound(labels_.begin(), labels_.end(), v) - labels_.begin());
        };
        for (const auto& f : pattern.facets()) {
            std::vector<std::uint32_t> g;
            for (Vertex v : f) {
                g.push_back(dense(v));
            }
            facets_.push_back(std::move(g));
        }
        degree_.assign(labels_.size(), 0);
        for (const auto& f : facets_) {
            for (auto v : f) {
                ++degree_[v];
            }
        }
        std::map<std::vector<std::uint32_t>, std::size_t> ridge_degree;
        for (const auto& f : facets_) {
            for (auto v : f) {
                std::vector<std::uint32_t> r;
                std::copy_if(f.begin(), f.end(), std::back_inserter(r), [&](auto w) { return w != v; });
                ++ridge_degree[r];
            }
        }
        const bool closed = std::all_of(ridge_degree.begin(), ridge_degree.end(),
                                        [](const auto& e) { return e.second >= 2; });
        view_ = closed ? &host_.core() : &host_.all();
        plan();
        image_.assign(labels_.size(), kUnmapped);
        used_.assign(host_.num_vertices(), false);
    }

    EmbeddingSearch run()
    {
        if (!facets_.empty()) {
            descend(0);
        }
        return std::move(result_);
    }

private:
    static constexpr std::uint32_t kUnmapped = static_cast<std::uint32_t>(-1);

    // Greedy most-constrained order: the next facet is one with a single unmapped
    // vertex whose mapping completes the most facets; the completed ones become checks.
    void plan()
    {
        const std::size_t m = facets_.size();
        std::vector<bool> mapped(labels_.size(), false);
        std::vector<bool> done(m, false);
        auto unmapped = [&](std::size_t g) {
            return std::count_if(facets_[g].begin(), facets_[g].end(), [&](auto v) { return !mapped[v]; });
        };
        for (std::size_t placed = 0; placed < m;) {
            std::size_t best = m;
            long best_score = -1;
            long best_free = 0;
            for (std::size_t g = 0; g < m; ++g) {
                if (done[g]) {
                    continue;
                }
                const long free = unmapped(g);
                if (free == 1) {
                    const auto w = *std::find_if(facets_[g].begin(), facets_[g].end(), [&](auto v) { return !mapped[v]; });
                    long score = 0;
                    for (std::size_t h = 0; h < m; ++h) {
                        if (!done[h] && unmapped(h) == 1 &&
                            std::find(facets_[h].begin(), facets_[h].end(), w) != facets_[h].end()) {
                            ++score;
                        }
                    }
                    if (best == m || best_free != 1 || score > best_score) {
                        best = g;
                        best_score = score;
                        best_free = 1;
                    }
                } else if (best == m || (best_free != 1 && free < best_free)) {
                    best = g;
                    best_free = free;
                }
            }
            Step step;
            step.facet = facets_[best];
            for (auto v : facets_[best]) {
                (mapped[v] ? step.mapped : step.fresh).push_back(v);
            }
            for (auto v : step.fresh) {
                mapped[v] = true;
            }
            done[best] = true;
            ++placed;
            for (std::size_t g = 0; g < m; ++g) {
                if (!done[g] && unmapped(g) == 0) {
                    done[g] = true;
                    ++placed;
                    step.checks.push_back(facets_[g]);
                }
            }
            steps_.push_back(std::move(step));
        }
    }

    bool stopped() const { return result_.truncated; }

    bool checks_pass(const Step& step)
    {
        for (const auto& f : step.checks) {
            scratch_.clear();
            for (auto v : f) {
                scratch_.push_back(image_[v]);
            }
            std::sort(scratch_.begin(), scratch_.end());
            if (!view_->has_facet(scratch_)) {
                return false;
            }
        }
        return true;
    }

    bool assignable(std::uint32_t pattern_v, std::uint32_t host_v) const
    {
        return !used_[host_v] && view_->vertex_degree(host_v) >= degree_[pattern_v];
    }

    void descend(std::size_t s)
    {
        if (s == steps_.size()) {
            leaf();
            return;
        }
        const Step& step = steps_[s];
        Face anchor;
        for (auto v : step.mapped) {
            anchor.push_back(image_[v]);
        }
        std::sort(anchor.begin(), anchor.end());

        if (step.fresh.size() == 1 && !anchor.empty() && anchor.size() + 1 == step.facet.size()) {
            const auto* apexes = view_->apexes(anchor);
            if (!apexes) {
                return;
            }
            const auto v = step.fresh[0];
            for (auto w : *apexes) {
                if (!assignable(v, w)) {
                    continue;
                }
                assign(v, w);
                if (checks_pass(step)) {
                    descend(s + 1);
                }
                unassign(v, w);
                if (stopped()) {
                    return;
                }
            }
            return;
        }

        auto try_facet = [&](const Face& g) {
            if (!std::includes(g.begin(), g.end(), anchor.begin(), anchor.end())) {
                return;
            }
            std::vector<std::uint32_t> rest;
            std::set_difference(g.begin(), g.end(), anchor.begin(), anchor.end(), std::back_inserter(rest));
            if (std::any_of(rest.begin(), rest.end(), [&](auto w) { return used_[w]; })) {
                return;
            }
            do {
                bool ok = true;
                std::size_t k = 0;
                for (; k < rest.size(); ++k) {
                    if (!assignable(step.fresh[k], rest[k])) {
                        ok = false;
                        break;
                    }
                    assign(step.fresh[k], rest[k]);
                }
                if (ok && checks_pass(step)) {
                    descend(s + 1);
                }
                while (k > 0) {
                    --k;
                    unassign(step.fresh[k], rest[k]);
                }
                if (stopped()) {
                    return;
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
        };

        if (anchor.empty()) {
            for (const auto& g : host_.dense_facets()) {
                if (view_ != &host_.all() && !view_->has_facet(g)) {
                    continue;
                }
                try_facet(g);
                if (stopped()) {
                    return;
                }
            }
            return;
        }
        auto pivot = *std::min_element(anchor.begin(), anchor.end(), [&](auto a, auto b) {
            return view_->vertex_degree(a) < view_->vertex_degree(b);
        });
        for (auto fi : view_->incident[pivot]) {
            try_facet(host_.dense_facets()[fi]);
            if (stopped()) {
                return;
            }
        }
    }

    void assign(std::uint32_t v, std::uint32_t w)
    {
        image_[v] = w;
        used_[w] = true;
    }

    void unassign(std::uint32_t v, std::uint32_t w)
    {
        image_[v] = kUnmapped;
        used_[w] = false;
    }

    void leaf()
    {
        ++result_.labeled;
        std::vector<Face> image;
        image.reserve(facets_.size());
        for (const auto& f : facets_) {
            Face g;
            for (auto v : f) {
                g.push_back(host_.label(image_[v]));
            }
            std::sort(g.begin(), g.end());
            image.push_back(std::move(g));
        }
        std::sort(image.begin(), image.end());
        if (!seen_.insert(image).second) {
            return;
        }
        Embedding e;
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            e.map.emplace_back(labels_[v], host_.label(image_[v]));
        }
        e.image = std::move(image);
        result_.copies.push_back(std::move(e));
        if (result_.copies.size() >= limit_) {
            result_.truncated = true;
        }
    }

    const EmbeddingIndex& host_;
    const HostView* view_ = nullptr;
    std::size_t limit_;
    std::vector<Vertex> labels_;
    std::vector<std::vector<std::uint32_t>> facets_;
    std::vector<std::size_t> degree_;
    std::vector<Step> steps_;
    std::vector<std::uint32_t> image_;
    std::vector<bool> used_;
    Face scratch_;
    std::set<std::vector<Face>> seen_;
    EmbeddingSearch result_;
};

} // namespace

EmbeddingSearch search_embeddings(const EmbeddingIndex& host, const Complex& pattern, std::size_t limit)
{
    if (limit == 0 || pattern.dim() != host.host().dim()) {
        return {};
    }
    if (pattern.empty()) {
        EmbeddingSearch out;
        out.copies.push_back({});
        out.labeled = 1;
        return out;
    }
    return Searcher(host, pattern, limit).run();
}

std::vector<Embedding> find_embedded_copies(const EmbeddingIndex& host, const Complex& pattern, std::size_t limit)
{
    return search_embeddings(host, pattern, limit).copies;
}

std::vector<Embedding> find_embedded_copies(const Complex& host, const Complex& pattern, std::size_t limit)
{
    return find_embedded_copies(EmbeddingIndex(host), pattern, limit);
}

std::uint64_t automorphism_count(const Complex& x)
{
    return search_embeddings(EmbeddingIndex(x), x).labeled;
}

} // namespace turan
