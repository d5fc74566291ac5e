#include "turan/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "turan/census.hpp"
#include "turan/embedding.hpp"
#include "turan/random_complex.hpp"
#include "turan/rng.hpp"
#include "turan/sphere_check.hpp"

namespace turan {

int SphereCatalog::dim() const
{
    return entries.empty() ? -1 : entries.front().complex.dim();
}

std::size_t SphereCatalog::max_facets() const
{
    std::size_t m = 0;
    for (const auto& e : entries) {
        m = std::max(m, e.complex.num_facets());
    }
    return m;
}

CatalogEntry make_catalog_entry(std::string name, const Complex& x)
{
    const auto verdict = verify_sphere(x);
    if (verdict.status != SphereStatus::Yes) {
        throw ComplexError("catalog entry '" + name + "' is not a verified sphere: " + verdict.reason);
    }
    CatalogEntry e;
    e.name = std::move(name);
    e.complex = x;
    e.balanced = is_balanced(x).has_value();
    e.f = f_vector(x);
    e.automorphisms = automorphism_count(x);
    std::uint64_t factorial = 1;
    for (std::uint64_t k = 2; k <= x.num_vertices(); ++k) {
        factorial *= k;
    }
    e.labelings = factorial / e.automorphisms;
    return e;
}

json to_json(const SphereCatalog& c)
{
    json entries = json::array();
    for (const auto& e : c.entries) {
        entries.push_back({{"name", e.name},
                           {"complex", to_json(e.complex)},
                           {"balanced", e.balanced},
                           {"f_vector", e.f.counts()},
                           {"automorphisms", e.automorphisms},
                           {"labelings", e.labelings}});
    }
    return {{"growth_constant", c.growth_constant}, {"entries", std::move(entries)}};
}

SphereCatalog catalog_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array()) {
        throw ComplexError("catalog: expected an object with an \"entries\" array");
    }
    SphereCatalog c;
    if (j.contains("growth_constant")) {
        const auto& g = j.at("growth_constant");
        if (!g.is_number() || g.get<double>() < 1.0) {
            throw ComplexError("catalog: growth_constant must be a number >= 1");
        }
        c.growth_constant = g.get<double>();
    }
    std::set<std::string> names;
    for (const auto& item : j.at("entries")) {
        if (!item.is_object() || !item.contains("name") || !item.at("name").is_string() ||
            !item.contains("complex")) {
            throw ComplexError("catalog: each entry needs \"name\" and \"complex\"");
        }
        auto name = item.at("name").get<std::string>();
        if (!names.insert(name).second) {
            throw ComplexError("catalog: duplicate entry name '" + name + "'");
        }
        c.entries.push_back(make_catalog_entry(std::move(name), complex_from_json(item.at("complex"))));
        if (c.entries.back().complex.dim() != c.entries.front().complex.dim()) {
            throw ComplexError("catalog: entries of different dimensions");
        }
    }
    return c;
}

SphereCatalog census_catalog(int n_max)
{
    SphereCatalog c;
    for (const auto& rec : split_2spheres(n_max)) {
        std::size_t i = 0;
        for (const auto& x : rec.representatives) {
            c.entries.push_back(
                make_catalog_entry("s2-n" + std::to_string(rec.key) + "-" + std::to_string(i++), x));
        }
    }
    return c;
}

json to_json(const PipelineReport& r)
{
    json copies = json::array();
    for (const auto& e : r.copies) {
        copies.push_back({{"name", e.name},
                          {"balanced", e.balanced},
                          {"found", e.found},
                          {"labeled", e.labeled},
                          {"destroyed", e.destroyed},
                          {"after", e.after}});
    }
    return {{"schema", kReportSchema},
            {"params", {{"n", r.n}, {"d", r.d}, {"epsilon", r.epsilon}, {"p", r.p}, {"seed", r.seed}}},
            {"growth_constant", r.growth_constant},
            {"supercritical", r.supercritical},
            {"stages", {{"sampled", r.sampled}, {"altered", r.altered}, {"rainbow", r.rainbow}}},
            {"facets_deleted", r.deleted},
            {"copies", std::move(copies)},
            {"rainbow_fraction", r.rainbow_fraction},
            {"lower_exponent",
             {{"num", r.lower_exponent.numerator()}, {"den", r.lower_exponent.denominator()}}},
            {"density", r.density},
            {"coloring", to_json(r.coloring)}};
}

namespace {

// Searches every pattern in the same host, spreading patterns over worker threads;
// results land in pattern order.
std::vector<EmbeddingSearch> search_all(const EmbeddingIndex& host, const std::vector<const Complex*>& patterns)
{
    std::vector<EmbeddingSearch> out(patterns.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < patterns.size(); i = next++) {
            out[i] = search_embeddings(host, *patterns[i]);
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), patterns.size());
    if (workers <= 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    pool.clear();
    return out;
}

} // namespace

PipelineResult lower_bound_construct(const PipelineParams& params, const SphereCatalog& catalog)
{
    const int d = params.d;
    if (d < 1) {
        throw ComplexError("pipeline: d must be >= 1");
    }
    if (params.n < static_cast<std::uint32_t>(d + 1)) {
        throw ComplexError("pipeline: n must be at least d + 1");
    }
    if (!catalog.entries.empty() && catalog.dim() != d) {
        throw ComplexError("pipeline: catalog dimension differs from d");
    }
    if (params.m_max != 0 && catalog.max_facets() > params.m_max) {
        throw ComplexError("pipeline: catalog has an entry with more than m_max facets");
    }
    const double epsilon = params.epsilon.value_or(0.3 / catalog.growth_constant);
    if (!(epsilon > 0.0)) {
        throw ComplexError("pipeline: epsilon must be positive");
    }

    PipelineReport r;
    r.n = params.n;
    r.d = d;
    r.epsilon = epsilon;
    r.p = turan_probability(params.n, d, epsilon);
    r.seed = params.seed;
    r.growth_constant = catalog.growth_constant;
    r.supercritical = epsilon * catalog.growth_constant >= 1.0;

    const Complex sampled = sample_lm({params.n, d, r.p, derive_seed(params.seed, 0)});
    r.sampled = sampled.num_facets();

    std::vector<const Complex*> balanced;
    for (const auto& e : catalog.entries) {
        if (e.balanced) {
            balanced.push_back(&e.complex);
        }
    }
    const auto found = search_all(EmbeddingIndex(sampled), balanced);

    std::set<Face> deleted;
    std::size_t b = 0;
    for (const auto& e : catalog.entries) {
        EntryCopies ec;
        ec.name = e.name;
        ec.balanced = e.balanced;
        if (e.balanced) {
            const auto& s = found[b++];
            ec.found = s.copies.size();
            ec.labeled = s.labeled;
            for (const auto& copy : s.copies) {
                const bool intact = std::none_of(copy.image.begin(), copy.image.end(),
                                                 [&](const Face& f) { return deleted.contains(f); });
                if (intact) {
                    deleted.insert(copy.image.front());
                    ++ec.destroyed;
                }
            }
        }
        r.copies.push_back(std::move(ec));
    }
    r.deleted = deleted.size();
    const std::vector<Face> gone(deleted.begin(), deleted.end());
    const Complex altered = remove_facets(sampled, gone);
    r.altered = altered.num_facets();

    // With nothing deleted the altered complex is the sample, whose copies were all
    // found above (and there were none).
    if (!deleted.empty()) {
        const auto after = search_all(EmbeddingIndex(altered), balanced);
        b = 0;
        for (auto& ec : r.copies) {
            if (ec.balanced) {
                ec.after = after[b++].copies.size();
            }
        }
    }

    Rng colors(derive_seed(params.seed, 1));
    for (std::uint32_t v = 0; v < params.n; ++v) {
        r.coloring[v] = static_cast<Color>(colors.below(static_cast<std::uint64_t>(d) + 1));
    }
    Complex rainbow = rainbow_subcomplex(altered, r.coloring);
    r.rainbow = rainbow.num_facets();
    r.rainbow_fraction = r.altered == 0 ? 0.0 : static_cast<double>(r.rainbow) / static_cast<double>(r.altered);
    r.lower_exponent = exponents(std::max(d, 2)).lower;
    if (d < 2) {
        r.lower_exponent = Rational(d + 1) - critical_exponent(d);
    }
    r.density = static_cast<double>(r.rainbow) / std::pow(static_cast<double>(params.n), to_double(r.lower_exponent));
    return {std::move(rainbow), std::move(r)};
}

Complex partite_construction(std::uint32_t n, int d)
{
    if (d < 0 || n < static_cast<std::uint32_t>(d + 1)) {
        throw ComplexError("partite_construction: need n >= d + 1");
    }
    const auto parts = static_cast<std::uint32_t>(d + 1);
    std::vector<std::vector<Vertex>> part(parts);
    for (Vertex v = 0; v < n; ++v) {
        part[v % parts].push_back(v);
    }
    std::vector<Face> facets;
    Face current;
    auto build = [&](auto&& self, std::uint32_t i) -> void {
        if (i == parts) {
            facets.push_back(current);
            return;
        }
        for (Vertex v : part[i]) {
            current.push_back(v);
            self(self, i + 1);
            current.pop_back();
        }
    };
    build(build, 0);
    return Complex(d, std::move(facets));
}

Coloring partite_coloring(std::uint32_t n, int d)
{
    Coloring c;
    for (Vertex v = 0; v < n; ++v) {
        c[v] = v % static_cast<Color>(d + 1);
    }
    return c;
}

std::optional<double> loglog_slope(const std::vector<std::pair<double, double>>& points)
{
    std::set<double> xs;
    double sx = 0;
    double sy = 0;
    for (const auto& [x, y] : points) {
        xs.insert(x);
        sx += std::log(x);
        sy += std::log(y);
    }
    if (xs.size() < 2) {
        return std::nullopt;
    }
    const double k = static_cast<double>(points.size());
    const double mx = sx / k;
    const double my = sy / k;
    double sxy = 0;
    double sxx = 0;
    for (const auto& [x, y] : points) {
        sxy += (std::log(x) - mx) * (std::log(y) - my);
        sxx += (std::log(x) - mx) * (std::log(x) - mx);
    }
    return sxy / sxx;
}

SweepResult sweep(int d, const std::vector<std::uint32_t>& ns, int reps, std::optional<double> epsilon,
                  const SphereCatalog& catalog, std::uint64_t seed)
{
    if (ns.empty() || reps < 1) {
        throw ComplexError("sweep: need at least one n and one repetition");
    }
    SweepResult out;
    out.theory = exponents(d).lower;
    for (auto n : ns) {
        for (int rep = 0; rep < reps; ++rep) {
            out.rows.push_back({n, rep, derive_seed(seed, static_cast<std::uint64_t>(rep)), 0});
        }
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < out.rows.size(); i = next++) {
            PipelineParams p;
            p.n = out.rows[i].n;
            p.d = d;
            p.epsilon = epsilon;
            p.seed = out.rows[i].seed;
            out.rows[i].facets = lower_bound_construct(p, catalog).report.rainbow;
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        for (unsigned t = 1; t < workers; ++t) {
            pool.emplace_back(work);
        }
        work();
    }
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < out.rows.size(); i += static_cast<std::size_t>(reps)) {
        double total = 0;
        for (int rep = 0; rep < reps; ++rep) {
            total += static_cast<double>(out.rows[i + static_cast<std::size_t>(rep)].facets);
        }
        const double mean = total / reps;
        out.means.emplace_back(out.rows[i].n, mean);
        if (mean > 0) {
            points.emplace_back(out.rows[i].n, mean);
        }
    }
    out.slope = loglog_slope(points);
    return out;
}

} // namespace turan
