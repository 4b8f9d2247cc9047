/**
 * Restriction and link formulas for the Betti and cohomology tables of the
 * six hexagon corners of a simplicial complex, and their comparison with the
 * computed corners.
 */
#ifndef CELLMAC_TABLE_HPP
#define CELLMAC_TABLE_HPP

#include <functional>

#include "cellmac/hexagon.hpp"

namespace cellmac {

struct TableRow
{
    Corner corner;
    GradedPieceTable betti, betti_expected;
    GradedPieceTable homology, homology_expected;

    bool betti_match() const { return betti == betti_expected; }
    bool homology_match() const { return homology == homology_expected; }
};

template <typename Scalar>
class SimplicialOracle
{
public:
    explicit SimplicialOracle(const SimplicialComplex& complex) : delta_(complex), n_(complex.num_vertices()) {}

    Index restriction(Subset t, int p) const { return at(cellmac::restriction(delta_, Face(t)), p); }
    Index link(Subset t, int p) const { return at(simplicial_link(delta_, Face(t)), p); }
    bool face(Subset t) const { return delta_.contains(Face(t)); }

    /// dim B^level_F of the corner.
    Index betti(Corner c, int level, Subset f) const
    {
        const Subset fc = complement(f, n_);
        switch (c)
        {
        case Corner::E: return face(f) && level == -cardinality(f) ? 1 : 0;
        case Corner::GDual: return link(f, level - 1);
        case Corner::G: return link(fc, -level - 1);
        case Corner::FDual: return restriction(f, cardinality(f) + level - 1);
        case Corner::F: return restriction(fc, cardinality(fc) - level - 1);
        case Corner::EDual: return face(fc) && level == cardinality(fc) ? 1 : 0;
        }
        return 0;
    }

    /// dim H^level(corner)_T.
    Index homology(Corner c, int level, Subset t) const
    {
        const Subset tc = complement(t, n_);
        switch (c)
        {
        case Corner::E: return restriction(t, -level - 1);
        case Corner::GDual: return restriction(tc, level - 1);
        case Corner::G: return level == 0 && face(tc) ? 1 : 0;
        case Corner::FDual: return level == 0 && face(t) ? 1 : 0;
        case Corner::F: return link(t, n_ - level - 1 - cardinality(t));
        case Corner::EDual: return link(tc, level - 1 - cardinality(tc));
        }
        return 0;
    }

    GradedPieceTable table(Corner c, bool betti_table) const
    {
        GradedPieceTable out(n_, -n_ - 1, n_ + 1);
        for (int level = -n_ - 1; level <= n_ + 1; ++level)
            for (Subset s = 0; s < Subset(1u << n_); ++s)
                out.set(level, s, betti_table ? betti(c, level, s) : homology(c, level, s));
        return out;
    }

private:
    static Index at(const SimplicialComplex& complex, int p)
    {
        return homology_at(reduced_homology_dims<Scalar>(complex), p);
    }

    SimplicialComplex delta_;
    int n_;
};

/// Computed and expected tables for the six corners; throws NonSimplicial.
template <typename Scalar>
std::vector<TableRow> simplicial_table(const CellComplex& complex, const HexagonBundle<Scalar>& h, int jobs = 1)
{
    const SimplicialOracle<Scalar> oracle(as_simplicial(complex));
    std::vector<TableRow> rows;
    for (Corner c : kCorners)
        rows.push_back({c, h.at(c).betti_table(), oracle.table(c, true), h.at(c).homology_table(jobs),
                        oracle.table(c, false)});
    return rows;
}

} // namespace cellmac

#endif
