#include "cellmac/builtins.hpp"

#include <functional>
#include <map>

#include "cellmac/errors.hpp"

namespace cellmac {

namespace {

const std::map<std::string, std::function<CellComplex()>>& registry()
{
    static const std::map<std::string, std::function<CellComplex()>> table = [] {
        std::map<std::string, std::function<CellComplex()>> t;
        t["vertex"] = [] { return simplex(0); };
        t["edge"] = [] { return simplex(1); };
        for (int k = 0; k <= 4; ++k)
            t["simplex-" + std::to_string(k)] = [k] { return simplex(k); };
        for (int k = 1; k <= 4; ++k)
            t["boundary-simplex-" + std::to_string(k)] = [k] { return boundary_simplex(k); };
        t["solid-square"] = [] { return polygon(4); };
        t["square-boundary"] = [] { return polygon_boundary(4); };
        t["cube-boundary"] = [] { return cube_boundary(3); };
        t["cross-polytope-boundary-3"] = [] { return cross_polytope_boundary(3); };
        t["triangular-prism-boundary"] = [] { return boundary_of_cell(prism(simplex(2))); };
        t["triangle-wedge"] = [] {
            return simplicial_from_facets({"s", "a", "b", "c", "d"}, {{"s", "a", "b"}, {"s", "c", "d"}});
        };
        t["triangle-plus-edge"] = [] {
            return simplicial_from_facets({"1", "2", "3", "4", "5"}, {{"1", "2", "3"}, {"4", "5"}});
        };
        t["bowtie-graph"] = [] {
            return simplicial_from_facets({"s", "a", "b", "c", "d"},
                                          {{"s", "a"}, {"s", "b"}, {"a", "b"}, {"s", "c"}, {"s", "d"}, {"c", "d"}});
        };
        return t;
    }();
    return table;
}

} // namespace

CellComplex builtin(const std::string& name)
{
    const auto it = registry().find(name);
    if (it == registry().end())
        throw MalformedSpec("unknown builtin '" + name + "'");
    return it->second();
}

std::vector<std::string> builtin_names()
{
    std::vector<std::string> out;
    for (const auto& [name, make] : registry())
        out.push_back(name);
    return out;
}

} // namespace cellmac
