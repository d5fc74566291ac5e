#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "turan/complex.hpp"

namespace turan {

using json = nlohmann::json;

/// {"d": <int>, "facets": [[v, ...], ...]} with sorted facets and vertex lists.
json to_json(const Complex& x);
/// Parses the complex format; throws ComplexError on schema or facet violations.
Complex complex_from_json(const json& j);

json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
/// Pretty-prints with a trailing newline; output is a pure function of `j`.
void write_json_file(const std::filesystem::path& path, const json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace turan
