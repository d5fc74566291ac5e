#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/complex.hpp"
#include "turan/json_io.hpp"

namespace turan {

struct CatalogEntry {
    std::string name;
    Complex complex;
    bool balanced = false;
    FVector f;
    std::uint64_t automorphisms = 0;
    /// Distinct labelings on its own vertex set: n! / automorphisms.
    std::uint64_t labelings = 0;
};

struct SphereCatalog {
    std::vector<CatalogEntry> entries;
    /// The class constant C: at most C^m members with m facets.
    double growth_constant = 1.0;

    int dim() const;
    std::size_t max_facets() const;
};

/// Verifies x as a sphere (throws ComplexError otherwise) and fills in the metadata.
CatalogEntry make_catalog_entry(std::string name, const Complex& x);

/// {"growth_constant": C, "entries": [{"name": ..., "complex": {...}}, ...]}. Metadata is
/// recomputed on load, never trusted.
json to_json(const SphereCatalog& c);
SphereCatalog catalog_from_json(const json& j);

/// Every 2-sphere with at most n_max vertices, named "s2-n<k>-<i>".
SphereCatalog census_catalog(int n_max);

inline constexpr char kReportSchema[] = "turan.pipeline/1";

struct PipelineParams {
    std::uint32_t n = 0;
    int d = 2;
    /// Unset means 0.3 / C.
    std::optional<double> epsilon;
    std::uint64_t seed = 0;
    /// Largest catalog facet count allowed; 0 means no limit.
    std::size_t m_max = 0;
};

struct EntryCopies {
    std::string name;
    bool balanced = false;
    std::uint64_t found = 0;     ///< unlabeled copies in the sampled complex
    std::uint64_t labeled = 0;   ///< labeled maps behind them
    std::uint64_t destroyed = 0; ///< copies that lost a facet to the alteration
    std::uint64_t after = 0;     ///< copies left in the altered complex
};

struct PipelineReport {
    std::uint32_t n = 0;
    int d = 2;
    double epsilon = 0.0;
    double p = 0.0;
    std::uint64_t seed = 0;
    double growth_constant = 1.0;
    bool supercritical = false; ///< epsilon * C >= 1: the copy-count sum is not controlled
    std::uint64_t sampled = 0;
    std::uint64_t altered = 0;
    std::uint64_t rainbow = 0;
    std::uint64_t deleted = 0;
    std::vector<EntryCopies> copies;
    double rainbow_fraction = 0.0; ///< rainbow / altered
    Rational lower_exponent;
    double density = 0.0; ///< rainbow / n^lower_exponent
    Coloring coloring;
};

json to_json(const PipelineReport& r);

struct PipelineResult {
    Complex complex;
    PipelineReport report;
};

/**
 * Samples Y_d(n, p) at p = epsilon * n^(-(d+1)/(2^(d+1)-2)), deletes the smallest facet of
 * every copy of a balanced catalog entry (copies taken entry by entry in discovery order,
 * skipping copies already broken), then colors the vertices uniformly with d+1 colors
 * and keeps the rainbow facets.
 */
PipelineResult lower_bound_construct(const PipelineParams& params, const SphereCatalog& catalog);

/// Complete (d+1)-partite d-complex; vertex v lies in part v mod (d+1).
Complex partite_construction(std::uint32_t n, int d);
Coloring partite_coloring(std::uint32_t n, int d);

struct SweepRow {
    std::uint32_t n = 0;
    int rep = 0;
    std::uint64_t seed = 0;
    std::uint64_t facets = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;         ///< ordered by (n, rep)
    std::vector<std::pair<std::uint32_t, double>> means;
    std::optional<double> slope;        ///< least-squares slope of log mean vs log n
    Rational theory;
};

/// Repetition r at every n uses seed derive_seed(seed, r).
SweepResult sweep(int d, const std::vector<std::uint32_t>& ns, int reps, std::optional<double> epsilon,
                  const SphereCatalog& catalog, std::uint64_t seed);

/// Least-squares slope of log y against log x; nullopt with fewer than two distinct x.
std::optional<double> loglog_slope(const std::vector<std::pair<double, double>>& points);

} // namespace turan
