#include <catch_amalgamated.hpp>

#include "cellmac/builtins.hpp"
#include "cellmac/errors.hpp"
#include "cellmac/homology.hpp"
#include "cellmac/poset.hpp"
#include "oracles.hpp"

using namespace cellmac;

TEST_CASE("simplicial complexes from facets")
{
    const auto sc = SimplicialComplex::from_facets(4, {0b0111, 0b1100});
    CHECK(sc.faces().size() == 1 + 4 + 4 + 1);
    CHECK(sc.dim() == 2);
    CHECK(sc.facets() == std::vector<Face>{0b1100, 0b0111});
    CHECK(sc.contains(0b0011));
    CHECK_FALSE(sc.contains(0b1001));
    CHECK(SimplicialComplex::void_complex(3).is_void());
    CHECK(SimplicialComplex::from_facets(3, {}).faces() == std::vector<Face>{0});
    CHECK(simplicial_link(sc, 0b1001).is_void());
    CHECK(simplicial_link(sc, 0b0100).facets() == std::vector<Face>{0b1000, 0b0011});
    CHECK(restriction(sc, 0b0101).facets() == std::vector<Face>{0b0101});
    CHECK(deletion(sc, 0b0100).facets() == std::vector<Face>{0b1000, 0b0011});
}

TEST_CASE("graded posets and ranks")
{
    // chain 0 < 1 < 2 and an isolated element 3
    const Poset p(4, {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.is_graded());
    CHECK(p.rank() == 2);
    const Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(diamond.is_graded());
    CHECK(is_lattice(diamond));
    CHECK(open_interval(diamond, 0, 3).size() == 2);
    CHECK(filter(diamond, {1}) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), PreconditionError);
    // 0, 1 < 2, 3 has no joins
    CHECK_FALSE(is_lattice(Poset(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));
}

TEST_CASE("face posets of builtins are graded lattices once bounded")
{
    for (const auto& name : builtin_names())
    {
        INFO(name);
        const auto cx = builtin(name);
        const auto fp = face_poset(cx);
        CHECK(fp.size() == int(cx.size()) - 1);
        CHECK(fp.rank() == cx.dim());
        if (cx.facets().size() == 1 || name.find("boundary") != std::string::npos)
            CHECK(fp.is_graded());
    }
    CHECK(is_lattice(with_bounds(face_poset(builtin("simplex-3")))));
}

TEST_CASE("order complex of a face poset is the barycentric subdivision")
{
    for (const char* name : {"square-boundary", "boundary-simplex-3", "solid-square", "triangle-wedge"})
    {
        INFO(name);
        const auto cx = builtin(name);
        const auto oc = order_complex(face_poset(cx));
        const auto mine = reduced_homology_dims<Rational>(oc);
        const auto theirs = oracle::cell_homology(cx, full_set(cx.ambient_size()));
        for (int p = -1; p <= 3; ++p)
            CHECK(homology_at(mine, p) == oracle::at(theirs, p));
    }
}
