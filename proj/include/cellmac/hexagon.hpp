/**
 * The enriched chain complex E[-1] of a cell complex and the hexagon
 *
 *     E[-1] -A-> G^v -D-> G -A-> F^v -D-> F,   E^v[-1] = D(E[-1]),
 *
 * together with checks of the relations between its corners.
 */
#ifndef CELLMAC_HEXAGON_HPP
#define CELLMAC_HEXAGON_HPP

#include <array>
#include <string>

#include "cellmac/cm.hpp"
#include "cellmac/resolution.hpp"

namespace cellmac {

/// Corners in hexagon order; each one is A or D of the previous.
enum class Corner { E, GDual, G, FDual, F, EDual };

inline constexpr std::array<Corner, 6> kCorners = {Corner::E,     Corner::GDual, Corner::G,
                                                   Corner::FDual, Corner::F,     Corner::EDual};

inline const char* corner_name(Corner c)
{
    switch (c)
    {
    case Corner::E: return "E[-1]";
    case Corner::GDual: return "G^v";
    case Corner::G: return "G";
    case Corner::FDual: return "F^v";
    case Corner::F: return "F";
    case Corner::EDual: return "E^v[-1]";
    }
    return "?";
}

/**
 * E[-1]: one generator per cell, of degree its vertex set, at level
 * -(dim + 1); the differential carries the incidence signs.
 */
template <typename Scalar>
FreeSqComplex<Scalar> enriched_complex(const CellComplex& complex)
{
    const int n = complex.ambient_size();
    const int top = complex.dim();
    std::vector<std::vector<Subset>> degrees(std::size_t(top + 2));
    std::vector<Index> position(complex.size());
    // level -(d+1) is index top - d
    for (std::size_t i = 0; i < complex.size(); ++i)
    {
        const Cell& c = complex.cell(i);
        auto& level = degrees[std::size_t(top - c.dim)];
        position[i] = Index(level.size());
        level.push_back(c.vertices);
    }
    std::vector<Matrix<Scalar>> diffs;
    for (int k = 0; k + 1 < int(degrees.size()); ++k)
        diffs.push_back(Matrix<Scalar>::Zero(Index(degrees[std::size_t(k + 1)].size()),
                                             Index(degrees[std::size_t(k)].size())));
    for (std::size_t i = 0; i < complex.size(); ++i)
    {
        const Cell& c = complex.cell(i);
        for (std::size_t j = 0; j < c.facets.size(); ++j)
            diffs[std::size_t(top - c.dim)](position[c.facets[j]], position[i]) =
                FieldTraits<Scalar>::from_int(c.signs[j]);
    }
    return FreeSqComplex<Scalar>(n, -(top + 1), std::move(degrees), std::move(diffs));
}

/// Entry (i, T) = dim H^i(Γ)_T, read off as H^{i+1}(E^v[-1]).
template <typename Scalar>
GradedPieceTable enriched_cohomology_table(const CellComplex& complex, int jobs = 1)
{
    const auto dual = enriched_complex<Scalar>(complex).dual();
    const auto h = dual.homology_table(jobs);
    GradedPieceTable out(complex.ambient_size(), -1, std::max(complex.dim(), -1));
    for (const auto& [level, t, value] : h.nonzero())
        out.set(level - 1, t, value);
    return out;
}

template <typename Scalar>
struct HexagonBundle
{
    int n = 0;
    std::string field;
    std::array<FreeSqComplex<Scalar>, 6> corners;

    const FreeSqComplex<Scalar>& at(Corner c) const { return corners[std::size_t(c)]; }
};

template <typename Scalar>
HexagonBundle<Scalar> build_hexagon(const CellComplex& complex, int jobs = 1)
{
    HexagonBundle<Scalar> h;
    h.n = complex.ambient_size();
    h.field = field_name<Scalar>();
    auto& c = h.corners;
    c[0] = enriched_complex<Scalar>(complex);
    c[1] = A(c[0], jobs);
    c[2] = D(c[1]);
    c[3] = A(c[2], jobs);
    c[4] = D(c[3]);
    c[5] = D(c[0]);
    return h;
}

/// (D A)^3 (E[-1]) = D A (F), to be compared with E[-1][-n].
template <typename Scalar>
FreeSqComplex<Scalar> hexagon_closure(const HexagonBundle<Scalar>& h, int jobs = 1)
{
    return D(A(h.at(Corner::F), jobs));
}

template <typename Scalar>
bool verify_hexagon_identity(const HexagonBundle<Scalar>& h, int jobs = 1)
{
    const auto closed = hexagon_closure(h, jobs);
    return closed.is_minimal() && closed.squares_to_zero() &&
           same_tables(closed, h.at(Corner::E).shift(-h.n), jobs);
}

template <typename Scalar>
bool verify_hexagon_identity(const CellComplex& complex, int jobs = 1)
{
    return verify_hexagon_identity(build_hexagon<Scalar>(complex, jobs), jobs);
}

/**
 * For Q = A D A (P): the i'th linear strand of P is Hom(L(H^{-i}(Q)), ω_S)[-i],
 * which on dimensions reads dim B^j_F(P) = dim H^{-(j + |F|)}(Q)_F.
 */
template <typename Scalar>
bool strand_duality_holds(const FreeSqComplex<Scalar>& p, const FreeSqComplex<Scalar>& q, int jobs = 1)
{
    const auto betti = p.betti_table();
    std::vector<std::tuple<int, Subset, Index>> expected;
    for (const auto& [j, f, value] : betti.nonzero())
        expected.emplace_back(-(j + cardinality(f)), f, value);
    std::sort(expected.begin(), expected.end());
    return expected == q.homology_table(jobs).nonzero();
}

/// Opposite corner of `c` as it appears in A D A (corner c), shifts included.
template <typename Scalar>
FreeSqComplex<Scalar> opposite_corner(const HexagonBundle<Scalar>& h, Corner c)
{
    switch (c)
    {
    case Corner::E: return h.at(Corner::FDual);
    case Corner::FDual: return h.at(Corner::E);
    case Corner::G: return h.at(Corner::EDual).shift(h.n);
    case Corner::EDual: return h.at(Corner::G).shift(h.n);
    case Corner::GDual: return h.at(Corner::F).shift(h.n);
    case Corner::F: return h.at(Corner::GDual).shift(h.n);
    }
    throw std::logic_error("unknown corner");
}

inline bool are_opposite(Corner a, Corner b)
{
    return (int(a) + 3) % 6 == int(b);
}

template <typename Scalar>
bool verify_strand_duality(const HexagonBundle<Scalar>& h, Corner p, Corner q, int jobs = 1)
{
    if (!are_opposite(p, q))
        throw PreconditionError(std::string("corners ") + corner_name(p) + " and " + corner_name(q) +
                                " are not opposite");
    return strand_duality_holds(h.at(p), opposite_corner(h, p), jobs);
}

/// Cohomology modules of a free complex, keyed by level.
template <typename Scalar>
std::map<int, SquareFreeModule<Scalar>> cohomology_modules(const FreeSqComplex<Scalar>& p)
{
    std::map<int, SquareFreeModule<Scalar>> out;
    if (p.empty())
        return out;
    const auto mods = homology_of_sqmod_complex(p.evaluate());
    for (std::size_t k = 0; k < mods.size(); ++k)
        out.emplace(p.lowest() + int(k), mods[k]);
    return out;
}

/// H^{-i}(F^v) has the dimension table of k^i[Γ] for every i.
template <typename Scalar>
bool verify_f_dual_homology(const HexagonBundle<Scalar>& h, const CellComplex& complex, int jobs = 1)
{
    const auto table = h.at(Corner::FDual).homology_table(jobs);
    const int n = complex.ambient_size();
    Index matched = 0;
    for (int i = 0; i <= n; ++i)
    {
        const auto k = k_i_module<Scalar>(complex, i);
        for (Subset t = 0; t < Subset(k.dims().size()); ++t)
        {
            if (table.at(-i, t) != k.dim(t))
                return false;
            matched += k.dim(t);
        }
    }
    Index total = 0;
    for (const auto& entry : table.nonzero())
        total += std::get<2>(entry);
    return total == matched;
}

/// ω_Γ: Alexander dual of the top cohomology module H^{dim Γ}(Γ).
template <typename Scalar>
SquareFreeModule<Scalar> canonical_module(const CellComplex& complex, int jobs = 1)
{
    if (!is_cm_cell<Scalar>(complex, jobs).cm)
        throw NotCohenMacaulay("complex is not Cohen-Macaulay");
    const auto mods = cohomology_modules(enriched_complex<Scalar>(complex).dual());
    const auto it = mods.find(complex.dim() + 1);
    if (it == mods.end())
        return SquareFreeModule<Scalar>::zero(complex.ambient_size());
    return alexander_dual(it->second);
}

/// Square-free ring with k exactly at the subsets of facet vertex sets of the Gorenstein* complex ∂Γ.
template <typename Scalar>
SquareFreeModule<Scalar> polytope_quotient_ring(const CellComplex& boundary, int jobs = 1)
{
    if (!is_gorenstein_star<Scalar>(boundary, jobs))
        throw NotGorensteinStar("complex is not Gorenstein*");
    const int n = boundary.ambient_size();
    std::vector<bool> support(std::size_t(1) << n, false);
    for (std::size_t f : boundary.facets())
        for (Subset t = boundary.cell(f).vertices;; t = (t - 1) & boundary.cell(f).vertices)
        {
            support[t] = true;
            if (t == 0) break;
        }
    auto ring = module_from_support<Scalar>(n, support);
    if (!same_invariants(ring, canonical_module<Scalar>(boundary, jobs)))
        throw std::logic_error("quotient ring differs from the canonical module");
    return ring;
}

} // namespace cellmac

#endif
