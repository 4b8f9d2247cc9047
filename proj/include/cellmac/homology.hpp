/**
 * Augmented chain complexes and reduced homology over a field, for cell
 * complexes and simplicial complexes, plus the degreewise tables of the
 * enriched homology modules.
 */
#ifndef CELLMAC_HOMOLOGY_HPP
#define CELLMAC_HOMOLOGY_HPP

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "cellmac/cell_complex.hpp"
#include "cellmac/linalg.hpp"
#include "cellmac/parallel.hpp"
#include "cellmac/poset.hpp"

namespace cellmac {

/**
 * Augmented chain complex in degrees -1 .. top. `basis[d + 1]` labels the
 * generators of degree d (cell indices, or faces for simplicial input) and
 * `boundary(d)` maps degree d to degree d - 1.
 */
template <typename Scalar>
struct ChainComplex
{
    std::vector<std::vector<std::size_t>> basis;
    std::vector<Matrix<Scalar>> boundaries;   ///< boundaries[d] : C_d -> C_{d-1}, d = 0 .. top

    int top_degree() const { return int(basis.size()) - 2; }
    Index size(int d) const
    {
        return d < -1 || d > top_degree() ? 0 : Index(basis[std::size_t(d + 1)].size());
    }
    Matrix<Scalar> boundary(int d) const
    {
        if (d < 0 || d > top_degree())
            return Matrix<Scalar>::Zero(size(d - 1), size(d));
        return boundaries[std::size_t(d)];
    }
};

/// Chain complex of the subcomplex formed by the cells with vertex set inside `r`.
template <typename Scalar>
ChainComplex<Scalar> chain_complex(const CellComplex& complex, Subset r)
{
    ChainComplex<Scalar> cc;
    std::vector<std::ptrdiff_t> position(complex.size(), -1);
    int top = -1;
    for (const Cell& c : complex.cells())
        if (contains(r, c.vertices)) top = std::max(top, c.dim);
    cc.basis.resize(std::size_t(top + 2));
    for (std::size_t i = 0; i < complex.size(); ++i)
    {
        const Cell& c = complex.cell(i);
        if (!contains(r, c.vertices))
            continue;
        auto& slot = cc.basis[std::size_t(c.dim + 1)];
        position[i] = std::ptrdiff_t(slot.size());
        slot.push_back(i);
    }
    for (int d = 0; d <= top; ++d)
    {
        Matrix<Scalar> m = Matrix<Scalar>::Zero(cc.size(d - 1), cc.size(d));
        const auto& cols = cc.basis[std::size_t(d + 1)];
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            const Cell& c = complex.cell(cols[j]);
            for (std::size_t k = 0; k < c.facets.size(); ++k)
                m(Index(position[c.facets[k]]), Index(j)) = FieldTraits<Scalar>::from_int(c.signs[k]);
        }
        cc.boundaries.push_back(std::move(m));
    }
    return cc;
}

template <typename Scalar>
ChainComplex<Scalar> chain_complex(const CellComplex& complex)
{
    return chain_complex<Scalar>(complex, full_set(complex.ambient_size()));
}

/// Simplicial chain complex; basis labels are indices into `complex.faces()`.
template <typename Scalar>
ChainComplex<Scalar> chain_complex(const SimplicialComplex& complex)
{
    ChainComplex<Scalar> cc;
    if (complex.is_void())
        return cc;
    const auto& faces = complex.faces();
    const int top = complex.dim();
    cc.basis.resize(std::size_t(top + 2));
    std::unordered_map<Face, Index> position;
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        auto& slot = cc.basis[std::size_t(std::popcount(faces[i]))];
        position[faces[i]] = Index(slot.size());
        slot.push_back(i);
    }
    for (int d = 0; d <= top; ++d)
    {
        Matrix<Scalar> m = Matrix<Scalar>::Zero(cc.size(d - 1), cc.size(d));
        const auto& cols = cc.basis[std::size_t(d + 1)];
        for (std::size_t j = 0; j < cols.size(); ++j)
        {
            const Face f = faces[cols[j]];
            int sign = 1;
            for (Face rest = f; rest != 0; rest &= rest - 1)
            {
                const Face bit = rest & (~rest + 1);
                m(position.at(f & ~bit), Index(j)) = FieldTraits<Scalar>::from_int(sign);
                sign = -sign;
            }
        }
        cc.boundaries.push_back(std::move(m));
    }
    return cc;
}

/**
 * Reduced homology in degrees -1 .. top of a downward closed family of
 * simplices listed by cardinality; higher faces are ignored.
 */
template <typename Scalar>
std::vector<Index> truncated_homology_dims(const std::vector<Face>& faces, int top)
{
    std::vector<std::vector<Face>> by_size(std::size_t(top + 3));
    for (Face f : faces)
    {
        const int k = std::popcount(f);
        if (k <= top + 2) by_size[std::size_t(k)].push_back(f);
    }
    std::vector<Index> ranks(std::size_t(top + 3), 0);   // ranks[k]: boundary out of faces of size k
    for (int k = 1; k <= top + 2; ++k)
    {
        const auto& lower = by_size[std::size_t(k - 1)];
        const auto& upper = by_size[std::size_t(k)];
        if (lower.empty() || upper.empty())
            continue;
        std::unordered_map<Face, Index> position;
        for (std::size_t i = 0; i < lower.size(); ++i)
            position[lower[i]] = Index(i);
        Matrix<Scalar> m = Matrix<Scalar>::Zero(Index(lower.size()), Index(upper.size()));
        for (std::size_t j = 0; j < upper.size(); ++j)
        {
            int sign = 1;
            for (Face rest = upper[j]; rest != 0; rest &= rest - 1)
            {
                const Face bit = rest & (~rest + 1);
                m(position.at(upper[j] & ~bit), Index(j)) = FieldTraits<Scalar>::from_int(sign);
                sign = -sign;
            }
        }
        ranks[std::size_t(k)] = rank<Scalar>(m);
    }
    std::vector<Index> h(std::size_t(top + 2), 0);
    for (int d = -1; d <= top; ++d)
        h[std::size_t(d + 1)] =
            Index(by_size[std::size_t(d + 1)].size()) - ranks[std::size_t(d + 1)] - ranks[std::size_t(d + 2)];
    return h;
}

/// Reduced homology dimensions indexed by degree + 1 (entry 0 is degree -1).
template <typename Scalar>
std::vector<Index> homology_dims(const ChainComplex<Scalar>& cc)
{
    const int top = cc.top_degree();
    std::vector<Index> ranks(std::size_t(top + 2), 0);   // ranks[d] = rank of boundary(d)
    for (int d = 0; d <= top; ++d)
        ranks[std::size_t(d)] = rank<Scalar>(cc.boundaries[std::size_t(d)]);
    std::vector<Index> h(std::size_t(top + 2), 0);
    for (int d = -1; d <= top; ++d)
    {
        const Index out = d >= 0 ? ranks[std::size_t(d)] : 0;
        const Index in = d + 1 <= top ? ranks[std::size_t(d + 1)] : 0;
        h[std::size_t(d + 1)] = cc.size(d) - out - in;
    }
    return h;
}

template <typename Scalar>
std::vector<Index> reduced_homology_dims(const CellComplex& complex)
{
    return homology_dims(chain_complex<Scalar>(complex));
}

template <typename Scalar>
std::vector<Index> reduced_homology_dims(const SimplicialComplex& complex)
{
    return homology_dims(chain_complex<Scalar>(complex));
}

/// dim H̃_p, zero outside the computed range.
inline Index homology_at(const std::vector<Index>& dims, int p)
{
    return p < -1 || p + 1 >= int(dims.size()) ? 0 : dims[std::size_t(p + 1)];
}

inline bool is_acyclic(const std::vector<Index>& dims)
{
    return std::all_of(dims.begin(), dims.end(), [](Index d) { return d == 0; });
}

/// Dimension per (degree, vertex subset), dense over degrees [lo, hi] and all 2^n subsets.
class GradedPieceTable
{
public:
    GradedPieceTable() = default;
    GradedPieceTable(int n, int lo, int hi)
        : n_(n), lo_(lo), hi_(hi),
          data_(std::size_t(std::max(0, hi - lo + 1)), std::vector<Index>(std::size_t(1) << n, 0))
    {}

    int num_vertices() const { return n_; }
    int lowest() const { return lo_; }
    int highest() const { return hi_; }
    Index at(int i, Subset s) const
    {
        return i < lo_ || i > hi_ ? 0 : data_[std::size_t(i - lo_)][s];
    }
    void set(int i, Subset s, Index value) { data_[std::size_t(i - lo_)][s] = value; }
    /// True iff every entry in degree i is zero.
    bool row_vanishes(int i) const
    {
        if (i < lo_ || i > hi_) return true;
        const auto& row = data_[std::size_t(i - lo_)];
        return std::all_of(row.begin(), row.end(), [](Index v) { return v == 0; });
    }
    /// Nonzero entries as (degree, subset, dimension), sorted by degree then subset.
    std::vector<std::tuple<int, Subset, Index>> nonzero() const
    {
        std::vector<std::tuple<int, Subset, Index>> out;
        for (int i = lo_; i <= hi_; ++i)
            for (Subset s = 0; s < Subset(data_[std::size_t(i - lo_)].size()); ++s)
                if (at(i, s) != 0) out.emplace_back(i, s, at(i, s));
        return out;
    }
    /// Equal as functions on all (degree, subset) pairs.
    friend bool operator==(const GradedPieceTable& a, const GradedPieceTable& b)
    {
        return a.n_ == b.n_ && a.nonzero() == b.nonzero();
    }

    /// TSV rows "degree<TAB>bitstring<TAB>dimension" for nonzero entries.
    void write_tsv(std::ostream& os) const
    {
        for (const auto& [i, s, v] : nonzero())
            os << i << '\t' << to_bitstring(s, n_) << '\t' << v << '\n';
    }

private:
    int n_ = 0, lo_ = 0, hi_ = -1;
    std::vector<std::vector<Index>> data_;
};

/// Entry (i, R) is dim H̃_i(Γ_R); this is the degree-R part of the enriched homology module H_i.
template <typename Scalar>
GradedPieceTable enriched_homology_table(const CellComplex& complex, int jobs = 1)
{
    const int n = complex.ambient_size();
    GradedPieceTable table(n, -1, std::max(complex.dim(), -1));
    const std::size_t count = std::size_t(1) << n;
    std::vector<std::vector<Index>> dims(count);
    parallel_for(count, jobs, [&](std::size_t r) {
        dims[r] = homology_dims(chain_complex<Scalar>(complex, Subset(r)));
    });
    for (std::size_t r = 0; r < count; ++r)
        for (int i = -1; i <= complex.dim(); ++i)
            table.set(i, Subset(r), homology_at(dims[r], i));
    return table;
}

/// S-module rank of H_i, i.e. dim H̃_i(Γ).
template <typename Scalar>
Index enriched_rank(const CellComplex& complex, int i)
{
    return homology_at(reduced_homology_dims<Scalar>(complex), i);
}

} // namespace cellmac

#endif
