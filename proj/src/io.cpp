#include "cellmac/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cellmac/errors.hpp"

namespace cellmac {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    if (!obj.is_object())
        throw MalformedSpec(where + " must be an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            throw MalformedSpec("unknown field '" + key + "' in " + where);
}

std::vector<std::string> string_list(const json& obj, const char* key, const std::string& where, bool required)
{
    std::vector<std::string> out;
    if (!obj.contains(key))
    {
        if (required)
            throw MalformedSpec(where + " lacks '" + key + "'");
        return out;
    }
    const json& arr = obj.at(key);
    if (!arr.is_array())
        throw MalformedSpec("'" + std::string(key) + "' in " + where + " must be an array");
    for (const auto& item : arr)
    {
        if (!item.is_string())
            throw MalformedSpec("'" + std::string(key) + "' in " + where + " must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

ComplexSpec parse_complex_json(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw MalformedSpec(std::string("invalid JSON: ") + e.what());
    }
    only_keys(doc, {"vertices", "cells"}, "complex");
    ComplexSpec spec;
    spec.vertices = string_list(doc, "vertices", "complex", true);
    if (!doc.contains("cells") || !doc.at("cells").is_array())
        throw MalformedSpec("complex lacks a 'cells' array");
    std::size_t index = 0;
    for (const auto& cell : doc.at("cells"))
    {
        const std::string where = "cell " + std::to_string(index++);
        only_keys(cell, {"id", "dim", "vertices", "facets"}, where);
        if (!cell.contains("id") || !cell.at("id").is_string())
            throw MalformedSpec(where + " needs a string 'id'");
        if (!cell.contains("dim") || !cell.at("dim").is_number_integer())
            throw MalformedSpec(where + " needs an integer 'dim'");
        CellSpec c;
        c.id = cell.at("id").get<std::string>();
        c.dim = cell.at("dim").get<int>();
        c.vertices = string_list(cell, "vertices", where, true);
        c.facets = string_list(cell, "facets", where, false);
        spec.cells.push_back(std::move(c));
    }
    return spec;
}

ComplexSpec read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading '" + path + "'");
    return parse_complex_json(buffer.str());
}

std::string complex_to_json(const CellComplex& complex)
{
    const ComplexSpec spec = to_spec(complex);
    json doc;
    doc["vertices"] = spec.vertices;
    doc["cells"] = json::array();
    for (const auto& c : spec.cells)
        doc["cells"].push_back({{"id", c.id}, {"dim", c.dim}, {"vertices", c.vertices}, {"facets", c.facets}});
    return doc.dump(2);
}

} // namespace cellmac
