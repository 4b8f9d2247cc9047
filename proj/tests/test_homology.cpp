#include <catch_amalgamated.hpp>

#include "cellmac/builtins.hpp"
#include "cellmac/homology.hpp"
#include "oracles.hpp"

using namespace cellmac;

TEST_CASE("reduced homology of spheres and balls")
{
    for (int d = 0; d <= 4; ++d)
    {
        CHECK(is_acyclic(reduced_homology_dims<Rational>(simplex(d))));
        const auto sphere = reduced_homology_dims<Rational>(boundary_simplex(d == 0 ? 1 : d));
        CHECK(homology_at(sphere, (d == 0 ? 1 : d) - 1) == 1);
    }
    CHECK(homology_at(reduced_homology_dims<Rational>(cube_boundary(3)), 2) == 1);
    CHECK(is_acyclic(reduced_homology_dims<Rational>(polygon(4))));
    // the void complex has no homology; {∅} has H̃_{-1} = k
    CHECK(homology_at(reduced_homology_dims<Rational>(restriction(simplex(2), 0)), -1) == 1);
    CHECK(is_acyclic(reduced_homology_dims<Rational>(SimplicialComplex::void_complex(2))));
}

TEST_CASE("enriched homology tables agree with the chain-poset oracle")
{
    for (const auto& name : builtin_names())
    {
        INFO(name);
        const auto cx = builtin(name);
        const int n = cx.ambient_size();
        const auto table = enriched_homology_table<Rational>(cx, 2);
        for (Subset r = 0; r <= full_set(n); ++r)
        {
            const auto expected = oracle::cell_homology(cx, r);
            for (int p = -1; p <= cx.dim() + 1; ++p)
                CHECK(table.at(p, r) == oracle::at(expected, p));
            if (r == full_set(n)) break;
        }
    }
}

TEST_CASE("simplicial homology agrees with the simplicial oracle")
{
    for (const char* name : {"boundary-simplex-3", "cross-polytope-boundary-3", "triangle-wedge", "bowtie-graph",
                             "triangle-plus-edge"})
    {
        INFO(name);
        const auto sc = as_simplicial(builtin(name));
        const auto faces = oracle::faces_of(builtin(name));
        for (Face r = 0; r < (Face(1) << sc.num_vertices()); ++r)
        {
            const auto mine = reduced_homology_dims<Rational>(simplicial_link(sc, r));
            const auto theirs = oracle::simplicial_homology(oracle::link(faces, r));
            for (int p = -1; p <= 3; ++p)
                CHECK(homology_at(mine, p) == oracle::at(theirs, p));
        }
    }
}

TEST_CASE("prime characteristic agrees with the rationals on torsion-free inputs")
{
    ScopedCharacteristic guard(2);
    for (const auto& name : builtin_names())
    {
        INFO(name);
        const auto cx = builtin(name);
        CHECK(enriched_homology_table<Zp>(cx) == enriched_homology_table<Rational>(cx));
    }
}
