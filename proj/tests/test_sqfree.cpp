#include <catch_amalgamated.hpp>

#include "cellmac/builtins.hpp"
#include "cellmac/errors.hpp"
#include "cellmac/sqfree.hpp"
#include "oracles.hpp"

using namespace cellmac;
using Q = Rational;

namespace {

SqModMorphism<Q> inclusion(const SquareFreeModule<Q>& source, const SquareFreeModule<Q>& target)
{
    SqModMorphism<Q> phi = SqModMorphism<Q>::zero(source, target);
    for (Subset f = 0; f < Subset(source.dims().size()); ++f)
        if (source.dim(f) == 1) phi.maps[f] = Matrix<Q>::Identity(1, 1);
    return phi;
}

} // namespace

TEST_CASE("standard modules")
{
    const auto s = polynomial_ring<Q>(3);
    CHECK(s.total_dim() == 8);
    CHECK(minimal_generators(s)[0] == 1);
    CHECK(minimal_generators(s)[0b111] == 0);
    CHECK(residue_field<Q>(3).total_dim() == 1);
    CHECK(free_module<Q>(3, 0b010).total_dim() == 4);

    const auto ideal = monomial_ideal<Q>(3, {0b011, 0b110});
    CHECK(ideal.total_dim() == 3);
    const auto gens = minimal_generators(ideal);
    CHECK(gens[0b011] == 1);
    CHECK(gens[0b110] == 1);
    CHECK(gens[0b111] == 0);
    CHECK(rank<Q>(ideal.structure_map(0b011, 0b111)) == 1);

    const auto sr = stanley_reisner<Q>(as_simplicial(builtin("triangle-plus-edge")));
    const auto faces = oracle::faces_of(builtin("triangle-plus-edge"));
    for (Subset f = 0; f < 32; ++f)
        CHECK(sr.dim(f) == Index(faces.count(f)));
}

TEST_CASE("k^i modules")
{
    const auto sq = builtin("solid-square");
    // k^0 is supported on simplicial faces; the square contributes to k^1
    const auto k0 = k_i_module<Q>(sq, 0);
    CHECK(k0.total_dim() == 1 + 4 + 4);
    const auto k1 = k_i_module<Q>(sq, 1);
    CHECK(k1.total_dim() == 1);
    CHECK(k1.dim(0b1111) == 1);
    CHECK(k_i_module<Q>(sq, 2).is_zero());
}

TEST_CASE("non-commuting multiplication is rejected")
{
    auto bad = polynomial_ring<Q>(2);
    bad.set_mult(0, 0b10, Matrix<Q>::Zero(1, 1));
    CHECK_THROWS_AS(bad.validate(), NonCommutingMorphism);
}

TEST_CASE("Alexander duality is an involution")
{
    const auto m = monomial_ideal<Q>(4, {0b0011, 0b1100, 0b0110});
    const auto dual = alexander_dual(m);
    for (Subset f = 0; f < 16; ++f)
        CHECK(dual.dim(f) == m.dim(complement(f, 4)));
    dual.validate();
    CHECK(same_invariants(alexander_dual(dual), m));
    CHECK(same_invariants(alexander_dual(polynomial_ring<Q>(3)), polynomial_ring<Q>(3)));
    const auto top = alexander_dual(residue_field<Q>(3));
    CHECK(top.total_dim() == 1);
    CHECK(top.dim(0b111) == 1);
}

TEST_CASE("kernel, image and cokernel of an inclusion")
{
    const auto ideal = free_module<Q>(3, 0b001);
    const auto s = polynomial_ring<Q>(3);
    const auto phi = inclusion(ideal, s);
    REQUIRE(phi.is_natural(ideal, s));
    CHECK(kernel(phi, ideal, s).is_zero());
    CHECK(same_invariants(image(phi, ideal, s), ideal));
    const auto quotient = cokernel(phi, ideal, s);
    for (Subset f = 0; f < 8; ++f)
        CHECK(quotient.dim(f) == (has(f, 0) ? 0 : 1));
    quotient.validate();

    SqModComplex<Q> c;
    c.lowest = -1;
    c.terms = {ideal, s};
    c.differentials = {phi};
    const auto h = homology_of_sqmod_complex(c);
    CHECK(h[0].is_zero());
    CHECK(same_invariants(h[1], quotient));
}

TEST_CASE("morphisms that do not commute are detected")
{
    const auto s = polynomial_ring<Q>(2);
    auto phi = SqModMorphism<Q>::zero(s, s);
    phi.maps[0] = Matrix<Q>::Identity(1, 1);
    CHECK_FALSE(phi.is_natural(s, s));
    CHECK_THROWS_AS(kernel(phi, s, s), NonCommutingMorphism);
}
