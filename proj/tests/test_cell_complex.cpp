#include <catch_amalgamated.hpp>

#include "cellmac/builtins.hpp"
#include "cellmac/cell_complex.hpp"
#include "cellmac/errors.hpp"
#include "oracles.hpp"

using namespace cellmac;

namespace {

int count_dim(const CellComplex& cx, int d) { return int(cx.cells_of_dim(d).size()); }

ComplexSpec parallel_edges()
{
    // two edges on the same pair of vertices meet in two 0-cells
    ComplexSpec s;
    s.vertices = {"a", "b", "c"};
    s.cells = {{"a", 0, {"a"}, {}},
               {"b", 0, {"b"}, {}},
               {"c", 0, {"c"}, {}},
               {"e1", 1, {"a", "b"}, {"a", "b"}},
               {"e2", 1, {"a", "b"}, {"a", "b"}}};
    return s;
}

} // namespace

TEST_CASE("f-vectors of standard complexes")
{
    const auto c3 = cube_boundary(3);
    CHECK(count_dim(c3, 0) == 8);
    CHECK(count_dim(c3, 1) == 12);
    CHECK(count_dim(c3, 2) == 6);
    CHECK(c3.size() == 27);
    CHECK(c3.dim() == 2);

    const auto oct = cross_polytope_boundary(3);
    CHECK(count_dim(oct, 0) == 6);
    CHECK(count_dim(oct, 1) == 12);
    CHECK(count_dim(oct, 2) == 8);
    CHECK(is_simplicial(oct));
    CHECK_FALSE(is_simplicial(c3));

    const auto sq = polygon(4);
    CHECK(count_dim(sq, 2) == 1);
    CHECK(count_dim(sq, 1) == 4);

    const auto s3 = simplex(3);
    CHECK(s3.size() == 16);
    CHECK(boundary_simplex(3).size() == 15);

    const auto prism_boundary = builtin("triangular-prism-boundary");
    CHECK(count_dim(prism_boundary, 0) == 6);
    CHECK(count_dim(prism_boundary, 1) == 9);
    CHECK(count_dim(prism_boundary, 2) == 5);
}

TEST_CASE("every builtin is valid and its boundary squares to zero")
{
    for (const auto& name : builtin_names())
    {
        INFO(name);
        const auto cx = builtin(name);
        CHECK(boundary_squares_to_zero(cx));
        for (const auto& c : cx.cells())
            for (int s : c.signs)
                CHECK((s == 1 || s == -1));
        // round trip through the unvalidated description
        const auto again = build_complex(to_spec(cx));
        CHECK(again.size() == cx.size());
        CHECK(again.vertex_set() == cx.vertex_set());
    }
    CHECK_THROWS_AS(builtin("no-such-complex"), MalformedSpec);
}

TEST_CASE("intersection property violations are rejected")
{
    CHECK_THROWS_AS(build_complex(parallel_edges()), IntersectionPropertyViolation);
}

TEST_CASE("malformed descriptions are rejected")
{
    ComplexSpec s;
    s.vertices = {"a", "b"};
    s.cells = {{"a", 0, {"a"}, {}}, {"b", 0, {"b"}, {}}, {"e", 1, {"a", "b"}, {"a", "x"}}};
    CHECK_THROWS_AS(build_complex(s), MalformedSpec);

    s.cells = {{"a", 0, {"a"}, {}}};
    CHECK_THROWS_AS(build_complex(s), MalformedSpec);   // vertex b has no 0-cell

    s.cells = {{"a", 0, {"a"}, {}}, {"b", 0, {"b"}, {}}, {"e", 1, {"a"}, {"a", "b"}}};
    CHECK_THROWS_AS(build_complex(s), MalformedSpec);   // vertex set mismatch

    s.vertices = {"a", "b", "c"};
    s.cells = {{"a", 0, {"a"}, {}},
               {"b", 0, {"b"}, {}},
               {"c", 0, {"c"}, {}},
               {"e", 1, {"a", "b"}, {"a", "b"}},
               {"t", 2, {"a", "b", "c"}, {"e", "c"}}};
    CHECK_THROWS_AS(build_complex(s), NonGraded);

    // a 2-cell whose boundary is only two edges is not a sphere
    s.cells = {{"a", 0, {"a"}, {}},
               {"b", 0, {"b"}, {}},
               {"c", 0, {"c"}, {}},
               {"ab", 1, {"a", "b"}, {"a", "b"}},
               {"bc", 1, {"b", "c"}, {"b", "c"}},
               {"t", 2, {"a", "b", "c"}, {"ab", "bc"}}};
    CHECK_THROWS_AS(build_complex(s), BoundaryNotSphere);
}

TEST_CASE("restriction, deletion and skeleta")
{
    const auto c3 = cube_boundary(3);
    CHECK(skeleton(c3, 1).size() == 21);
    CHECK(skeleton(c3, -1).size() == 1);
    const auto one = restriction(c3, c3.cell(c3.cells_of_dim(2).front()).vertices);
    CHECK(one.size() == 10);   // a square with its edges and vertices and the empty cell
    const auto del = deletion(c3, singleton(0));
    CHECK(count_dim(del, 0) == 7);
    CHECK(count_dim(del, 2) == 3);
}

TEST_CASE("face order agrees with the oracle")
{
    for (const auto& name : builtin_names())
    {
        INFO(name);
        const auto cx = builtin(name);
        const auto below = oracle::face_order(cx);
        for (std::size_t a = 0; a < cx.size(); ++a)
            for (std::size_t b = 0; b < cx.size(); ++b)
                CHECK(cx.is_face(a, b) == bool(below[b][a]));
    }
}
