#include "turan/json_io.hpp"

#include <fstream>
#include <sstream>

namespace turan {

json to_json(const Complex& x)
{
    json facets = json::array();
    for (const auto& f : x.facets()) {
        facets.push_back(f);
    }
    return json{{"d", x.dim()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("d") || !j.contains("facets") ||
        !j.at("d").is_number_integer() || !j.at("facets").is_array()) {
        throw ComplexError("complex JSON must be an object with integer \"d\" and array \"facets\"");
    }
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        if (!f.is_array()) {
            throw ComplexError("each facet must be an array of vertex labels");
        }
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
                throw ComplexError("vertex labels must be non-negative integers");
            }
            face.push_back(v.get<Vertex>());
        }
        facets.push_back(std::move(face));
    }
    return Complex(j.at("d").get<int>(), std::move(facets));
}

json to_json(const Coloring& c)
{
    json out = json::array();
    for (const auto& [v, col] : c) {
        out.push_back({v, col});
    }
    return out;
}

Coloring coloring_from_json(const json& j)
{
    Coloring c;
    for (const auto& pair : j) {
        c[pair.at(0).get<Vertex>()] = pair.at(1).get<Color>();
    }
    return c;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ComplexError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ComplexError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace turan
