/**
 * Cochain complexes of free square-free modules. A generator of degree F
 * stands for a copy of S(-F); a differential entry from a generator of
 * degree F to one of degree G ⊆ F is a scalar times m_{F \ G}.
 */
#ifndef CELLMAC_FREE_COMPLEX_HPP
#define CELLMAC_FREE_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "cellmac/homology.hpp"
#include "cellmac/sqfree.hpp"

namespace cellmac {

template <typename Scalar>
class FreeSqComplex
{
public:
    FreeSqComplex() = default;
    /// Empty complex on n vertices.
    explicit FreeSqComplex(int n) : n_(n) {}

    /**
     * `degrees[k]` lists the generator degrees at level lowest + k;
     * `differentials[k]` maps level lowest + k to lowest + k + 1
     * (rows index the target generators).
     */
    FreeSqComplex(int n, int lowest, std::vector<std::vector<Subset>> degrees,
                  std::vector<Matrix<Scalar>> differentials)
        : n_(n), lowest_(lowest), degrees_(std::move(degrees)), diffs_(std::move(differentials))
    {
        if (degrees_.empty() ? !diffs_.empty() : diffs_.size() + 1 != degrees_.size())
            throw std::invalid_argument("differential count does not match level count");
        for (std::size_t k = 0; k < diffs_.size(); ++k)
            if (diffs_[k].rows() != Index(degrees_[k + 1].size()) || diffs_[k].cols() != Index(degrees_[k].size()))
                throw std::invalid_argument("differential has the wrong shape");
        trim();
    }

    int num_vertices() const { return n_; }
    bool empty() const { return degrees_.empty(); }
    int lowest() const { return lowest_; }
    int highest() const { return lowest_ + int(degrees_.size()) - 1; }

    const std::vector<Subset>& generators(int level) const
    {
        static const std::vector<Subset> none;
        return level < lowest_ || level > highest() ? none : degrees_[std::size_t(level - lowest_)];
    }
    Index rank(int level) const { return Index(generators(level).size()); }
    Index total_rank() const
    {
        Index t = 0;
        for (const auto& level : degrees_) t += Index(level.size());
        return t;
    }

    /// Differential from `level` to `level + 1`.
    Matrix<Scalar> differential(int level) const
    {
        if (level < lowest_ || level >= highest())
            return Matrix<Scalar>::Zero(rank(level + 1), rank(level));
        return diffs_[std::size_t(level - lowest_)];
    }

    /// Entries only from a generator to generators of smaller or equal degree.
    bool degrees_respected() const
    {
        for (int l = lowest_; l < highest(); ++l)
        {
            const auto& d = diffs_[std::size_t(l - lowest_)];
            const auto& src = generators(l);
            const auto& dst = generators(l + 1);
            for (Index c = 0; c < d.cols(); ++c)
                for (Index r = 0; r < d.rows(); ++r)
                    if (!is_zero(d(r, c)) && !contains(src[std::size_t(c)], dst[std::size_t(r)]))
                        return false;
        }
        return true;
    }

    /// d ∘ d = 0; since all monomial factors of a composite agree, this is a scalar check.
    bool squares_to_zero() const
    {
        for (int l = lowest_; l + 1 < highest(); ++l)
            if (!is_zero_matrix<Scalar>(multiply<Scalar>(differential(l + 1), differential(l))))
                return false;
        return true;
    }

    /// No differential entry between generators of equal degree.
    bool is_minimal() const
    {
        for (int l = lowest_; l < highest(); ++l)
        {
            const auto& d = diffs_[std::size_t(l - lowest_)];
            const auto& src = generators(l);
            const auto& dst = generators(l + 1);
            for (Index c = 0; c < d.cols(); ++c)
                for (Index r = 0; r < d.rows(); ++r)
                    if (!is_zero(d(r, c)) && src[std::size_t(c)] == dst[std::size_t(r)])
                        return false;
        }
        return true;
    }

    /// Betti table: entry (level, F) = dim B^level_F.
    GradedPieceTable betti_table() const
    {
        GradedPieceTable t(n_, lowest_, highest());
        for (int l = lowest_; l <= highest(); ++l)
            for (Subset f : generators(l))
                t.set(l, f, t.at(l, f) + 1);
        return t;
    }

    /// Indices of generators at `level` whose degree lies inside T.
    std::vector<Index> generators_within(int level, Subset t) const
    {
        std::vector<Index> out;
        const auto& gens = generators(level);
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (contains(t, gens[g])) out.push_back(Index(g));
        return out;
    }

    /// Differential of the degree-T piece.
    Matrix<Scalar> differential_at(int level, Subset t) const
    {
        const auto cols = generators_within(level, t);
        const auto rows = generators_within(level + 1, t);
        const Matrix<Scalar> d = differential(level);
        Matrix<Scalar> out(Index(rows.size()), Index(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                out(Index(r), Index(c)) = d(rows[r], cols[c]);
        return out;
    }

    /// Cohomology table: entry (level, T) = dim H^level(P)_T.
    GradedPieceTable homology_table(int jobs = 1) const
    {
        GradedPieceTable t(n_, lowest_, highest());
        const std::size_t count = std::size_t(1) << n_;
        const int levels = int(degrees_.size());
        std::vector<std::vector<Index>> dims(count);
        parallel_for(count, jobs, [&](std::size_t ti) {
            const Subset tt = Subset(ti);
            std::vector<Index> ranks(std::size_t(levels) + 1, 0);   // ranks[k] = rank of d at lowest + k
            for (int k = 0; k + 1 < levels; ++k)
                ranks[std::size_t(k)] = cellmac::rank<Scalar>(differential_at(lowest_ + k, tt));
            auto& out = dims[ti];
            out.resize(std::size_t(levels));
            for (int k = 0; k < levels; ++k)
            {
                const Index size = Index(generators_within(lowest_ + k, tt).size());
                out[std::size_t(k)] = size - ranks[std::size_t(k)] - (k > 0 ? ranks[std::size_t(k - 1)] : 0);
            }
        });
        for (std::size_t ti = 0; ti < count; ++ti)
            for (int k = 0; k < levels; ++k)
                t.set(lowest_ + k, Subset(ti), dims[ti][std::size_t(k)]);
        return t;
    }

    /// Degreewise evaluation as a complex of square-free modules.
    SqModComplex<Scalar> evaluate() const
    {
        SqModComplex<Scalar> out;
        out.lowest = lowest_;
        const std::size_t count = std::size_t(1) << n_;
        std::vector<std::vector<std::vector<Index>>> within(degrees_.size(), std::vector<std::vector<Index>>(count));
        for (int l = lowest_; l <= highest(); ++l)
            for (std::size_t t = 0; t < count; ++t)
                within[std::size_t(l - lowest_)][t] = generators_within(l, Subset(t));
        for (int l = lowest_; l <= highest(); ++l)
        {
            const auto& w = within[std::size_t(l - lowest_)];
            std::vector<Index> dims(count);
            for (std::size_t t = 0; t < count; ++t)
                dims[t] = Index(w[t].size());
            SquareFreeModule<Scalar> m(n_, dims);
            for (Subset t = 0; t < Subset(count); ++t)
                for (int v = 0; v < n_; ++v)
                {
                    if (has(t, v))
                        continue;
                    const auto& small = w[t];
                    const auto& big = w[t | singleton(v)];
                    Matrix<Scalar> inc = Matrix<Scalar>::Zero(Index(big.size()), Index(small.size()));
                    for (std::size_t a = 0, b = 0; a < small.size(); ++a)
                    {
                        while (big[b] != small[a]) ++b;
                        inc(Index(b), Index(a)) = Scalar(1);
                    }
                    m.set_mult(v, t, std::move(inc));
                }
            out.terms.push_back(std::move(m));
        }
        for (int l = lowest_; l < highest(); ++l)
        {
            SqModMorphism<Scalar> d;
            for (Subset t = 0; t < Subset(count); ++t)
                d.maps.push_back(differential_at(l, t));
            out.differentials.push_back(std::move(d));
        }
        return out;
    }

    /// P[m]^i = P^{i+m}.
    FreeSqComplex shift(int m) const
    {
        FreeSqComplex out = *this;
        out.lowest_ -= m;
        return out;
    }

    /**
     * D(P) = Hom(P, ω_S): degree F at level i becomes degree F^c at level -i;
     * the block out of level i is transposed and multiplied by (-1)^i.
     */
    FreeSqComplex dual() const
    {
        if (empty())
            return FreeSqComplex(n_);
        std::vector<std::vector<Subset>> degrees;
        for (int l = highest(); l >= lowest_; --l)
        {
            std::vector<Subset> level;
            for (Subset f : generators(l))
                level.push_back(complement(f, n_));
            degrees.push_back(std::move(level));
        }
        std::vector<Matrix<Scalar>> diffs;
        for (int l = highest() - 1; l >= lowest_; --l)
        {
            Matrix<Scalar> d = differential(l).transpose();
            if (l % 2 != 0) d = -d;
            diffs.push_back(std::move(d));
        }
        return FreeSqComplex(n_, -highest(), std::move(degrees), std::move(diffs));
    }

    /// Generators of level j with |F| = i - j and the blocks among them.
    FreeSqComplex linear_strand(int i) const
    {
        if (empty())
            return FreeSqComplex(n_);
        std::vector<std::vector<Index>> keep;
        std::vector<std::vector<Subset>> degrees;
        for (int l = lowest_; l <= highest(); ++l)
        {
            std::vector<Index> idx;
            std::vector<Subset> deg;
            const auto& gens = generators(l);
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (cardinality(gens[g]) == i - l)
                {
                    idx.push_back(Index(g));
                    deg.push_back(gens[g]);
                }
            keep.push_back(std::move(idx));
            degrees.push_back(std::move(deg));
        }
        std::vector<Matrix<Scalar>> diffs;
        for (int l = lowest_; l < highest(); ++l)
        {
            const auto& cols = keep[std::size_t(l - lowest_)];
            const auto& rows = keep[std::size_t(l - lowest_ + 1)];
            const Matrix<Scalar>& d = diffs_[std::size_t(l - lowest_)];
            Matrix<Scalar> block(Index(rows.size()), Index(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < rows.size(); ++r)
                    block(Index(r), Index(c)) = d(rows[r], cols[c]);
            diffs.push_back(std::move(block));
        }
        return FreeSqComplex(n_, lowest_, std::move(degrees), std::move(diffs));
    }

    /// Values i whose linear strand is nonzero, ascending.
    std::vector<int> strand_indices() const
    {
        std::vector<int> out;
        for (int l = lowest_; l <= highest(); ++l)
            for (Subset f : generators(l))
                out.push_back(cardinality(f) + l);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool is_linear() const { return strand_indices().size() == 1; }

private:
    /// Drops empty levels at both ends.
    void trim()
    {
        std::size_t first = 0, last = degrees_.size();
        while (first < last && degrees_[first].empty()) ++first;
        while (last > first && degrees_[last - 1].empty()) --last;
        if (first == last)
        {
            degrees_.clear();
            diffs_.clear();
            lowest_ = 0;
            return;
        }
        degrees_ = std::vector<std::vector<Subset>>(degrees_.begin() + std::ptrdiff_t(first),
                                                    degrees_.begin() + std::ptrdiff_t(last));
        diffs_ = std::vector<Matrix<Scalar>>(diffs_.begin() + std::ptrdiff_t(first),
                                             diffs_.begin() + std::ptrdiff_t(last - 1));
        lowest_ += int(first);
    }

    int n_ = 0;
    int lowest_ = 0;
    std::vector<std::vector<Subset>> degrees_;
    std::vector<Matrix<Scalar>> diffs_;
};

/**
 * L(M): level i has one generator per basis vector of M_R, |R| = i, in degree
 * R^c; the block from M_R to M_{R+j} is (-1)^{α(j,R)} times multiplication by x_j.
 */
template <typename Scalar>
FreeSqComplex<Scalar> L_complex(const SquareFreeModule<Scalar>& m)
{
    const int n = m.num_vertices();
    std::vector<std::vector<Subset>> degrees(std::size_t(n + 1));
    std::vector<Index> offset(m.dims().size());
    for (Subset r : subsets_by_size(n))
    {
        auto& level = degrees[std::size_t(cardinality(r))];
        offset[r] = Index(level.size());
        for (Index k = 0; k < m.dim(r); ++k)
            level.push_back(complement(r, n));
    }
    std::vector<Matrix<Scalar>> diffs;
    for (int i = 0; i < n; ++i)
        diffs.push_back(Matrix<Scalar>::Zero(Index(degrees[std::size_t(i + 1)].size()),
                                             Index(degrees[std::size_t(i)].size())));
    for (Subset r = 0; r < Subset(m.dims().size()); ++r)
        for (int j = 0; j < n; ++j)
        {
            if (has(r, j) || m.dim(r) == 0)
                continue;
            const Subset rj = r | singleton(j);
            if (m.dim(rj) == 0)
                continue;
            const int alpha = cardinality(r & (singleton(j) - 1));
            Matrix<Scalar> block = m.mult(j, r);
            if (alpha % 2 != 0) block = -block;
            diffs[std::size_t(cardinality(r))].block(offset[rj], offset[r], block.rows(), block.cols()) = block;
        }
    return FreeSqComplex<Scalar>(n, 0, std::move(degrees), std::move(diffs));
}

/// Complexes compared by their Betti tables and cohomology tables.
template <typename Scalar>
bool same_tables(const FreeSqComplex<Scalar>& a, const FreeSqComplex<Scalar>& b, int jobs = 1)
{
    return a.betti_table() == b.betti_table() && a.homology_table(jobs) == b.homology_table(jobs);
}

} // namespace cellmac

#endif
