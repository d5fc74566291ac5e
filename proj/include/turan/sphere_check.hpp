#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/complex.hpp"
#include "turan/json_io.hpp"

namespace turan {

enum class SphereStatus { Yes, No, Unknown };

std::string to_string(SphereStatus s);

/// Effort level L allows 10^L shelling-search nodes; vertex links are checked at L-1.
struct SphereEffort {
    int level = 6;
    std::uint64_t budget() const;
    SphereEffort lower() const { return {level > 0 ? level - 1 : 0}; }
};

struct SphereVerdict {
    SphereStatus status = SphereStatus::Unknown;
    std::string reason;
    /// Shelling order certifying a yes (always present for d != 2; for d = 2 when the
    /// search finished inside the budget).
    std::optional<std::vector<Face>> shelling;
    std::uint64_t effort_used = 0;
};

json to_json(const SphereVerdict& v);

/// Every (d-1)-face lies in exactly two facets and the facets are connected through
/// shared (d-1)-faces.
bool is_closed_pseudomanifold(const Complex& x);

struct ShellingSearch {
    std::optional<std::vector<Face>> order;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

/// Depth-first search for an order in which each facet meets the union of its
/// predecessors in a pure (d-1)-dimensional complex. Candidates sharing more (d-1)-faces
/// with the placed facets are tried first.
ShellingSearch find_shelling_search(const Complex& x, std::uint64_t budget);
std::optional<std::vector<Face>> find_shelling(const Complex& x, std::uint64_t budget);

/// Checks the shelling condition directly from the definition.
bool is_shelling_order(const Complex& x, std::span<const Face> order);

/// Graded recognition: exact for d <= 2, shelling-certified yes for d >= 3.
SphereVerdict verify_sphere(const Complex& x, SphereEffort effort = {});

} // namespace turan
