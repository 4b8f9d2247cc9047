/**
 * Minimal free resolutions of bounded complexes of square-free modules, and
 * the functor A.
 *
 * Generators are created degree by degree in order of increasing support.
 * At a degree T the generators of smaller degree already form a complex Q_T
 * with a chain map φ_T : Q_T -> C_T; every cohomology class of the mapping
 * cone of φ_T is killed by one new generator of degree T. The cone at T is
 * then acyclic, and later generators never enter the evaluation at T. New
 * differentials only reach generators of strictly smaller degree, so the
 * result is minimal.
 */
#ifndef CELLMAC_RESOLUTION_HPP
#define CELLMAC_RESOLUTION_HPP

#include <map>
#include <vector>

#include "cellmac/free_complex.hpp"
#include "cellmac/parallel.hpp"

namespace cellmac {

namespace detail {

template <typename Scalar>
struct NewGenerator
{
    int level;
    Vector<Scalar> boundary;   ///< coordinates on the generators of level + 1 inside T
    Vector<Scalar> image;      ///< φ of the generator, in C^level_T
};

} // namespace detail

template <typename Scalar>
FreeSqComplex<Scalar> minimal_free_resolution(const SqModComplex<Scalar>& c, int jobs = 1)
{
    const int n = c.num_vertices();
    if (c.terms.empty())
        return FreeSqComplex<Scalar>(n);
    c.validate();
    const int lo = c.lowest - n - 1;   // no generators can appear below this level
    const int hi = c.highest();
    const int levels = hi - lo + 1;
    const std::size_t count = std::size_t(1) << n;
    auto term_dim = [&](int l, Subset t) -> Index {
        return l < c.lowest || l > hi ? 0 : c.terms[std::size_t(l - c.lowest)].dim(t);
    };
    auto term_diff = [&](int l, Subset t) -> Matrix<Scalar> {
        if (l < c.lowest || l >= hi)
            return Matrix<Scalar>::Zero(term_dim(l + 1, t), term_dim(l, t));
        return c.differentials[std::size_t(l - c.lowest)].maps[t];
    };

    // Generator data per level, in creation order.
    std::vector<std::vector<Subset>> degree(static_cast<std::size_t>(levels));
    std::vector<std::vector<Vector<Scalar>>> boundary(static_cast<std::size_t>(levels));   // coordinates on all gens of level+1 existing then
    // within[t][k]: indices of level lo+k generators with degree inside t; phi[t][k]: φ on them at degree t.
    std::vector<std::vector<std::vector<Index>>> within(count, std::vector<std::vector<Index>>(static_cast<std::size_t>(levels)));
    std::vector<std::vector<Matrix<Scalar>>> phi(count, std::vector<Matrix<Scalar>>(static_cast<std::size_t>(levels)));

    for (int size = 0; size <= n; ++size)
    {
        std::vector<Subset> batch;
        for (Subset t = 0; t < Subset(count); ++t)
            if (cardinality(t) == size) batch.push_back(t);

        // Old generators and φ at each T of this size, then the cone homology.
        std::vector<std::vector<detail::NewGenerator<Scalar>>> created(batch.size());
        parallel_for(batch.size(), jobs, [&](std::size_t bi) {
            const Subset t = batch[bi];
            for (int k = 0; k < levels; ++k)
            {
                auto& idx = within[t][std::size_t(k)];
                const int l = lo + k;
                Matrix<Scalar> m(term_dim(l, t), 0);
                std::vector<Vector<Scalar>> cols;
                for (std::size_t g = 0; g < degree[std::size_t(k)].size(); ++g)
                {
                    const Subset d = degree[std::size_t(k)][g];
                    if (!contains(t, d) || d == t)
                        continue;
                    idx.push_back(Index(g));
                    const int v = std::countr_zero(t & ~d);
                    const Subset below = t & ~singleton(v);
                    const auto& bidx = within[below][std::size_t(k)];
                    const Index pos = Index(std::lower_bound(bidx.begin(), bidx.end(), Index(g)) - bidx.begin());
                    if (term_dim(l, t) == 0)
                    {
                        cols.push_back(Vector<Scalar>(0));
                        continue;
                    }
                    const auto& mult = c.terms[std::size_t(l - c.lowest)].mult(v, below);
                    cols.push_back(multiply<Scalar>(mult, Matrix<Scalar>(phi[below][std::size_t(k)].col(pos))));
                }
                m.resize(term_dim(l, t), Index(cols.size()));
                for (std::size_t j = 0; j < cols.size(); ++j)
                    m.col(Index(j)) = cols[j];
                phi[t][std::size_t(k)] = std::move(m);
            }

            auto q_diff = [&](int k) -> Matrix<Scalar> {   // Q^{lo+k}_T -> Q^{lo+k+1}_T
                const auto& cols = within[t][std::size_t(k)];
                const Index rows = k + 1 < levels ? Index(within[t][std::size_t(k + 1)].size()) : 0;
                Matrix<Scalar> out = Matrix<Scalar>::Zero(rows, Index(cols.size()));
                if (rows == 0)
                    return out;
                const auto& ridx = within[t][std::size_t(k + 1)];
                for (std::size_t j = 0; j < cols.size(); ++j)
                {
                    const auto& b = boundary[std::size_t(k)][std::size_t(cols[j])];
                    for (std::size_t r = 0; r < ridx.size(); ++r)
                        if (ridx[r] < b.size()) out(Index(r), Index(j)) = b(ridx[r]);
                }
                return out;
            };
            // cone^j = Q^{j+1}_T ⊕ C^j_T, d(q, x) = (-dq, φq + δx)
            auto cone_diff = [&](int j) -> Matrix<Scalar> {
                const int kq = j + 1 - lo;           // index of Q^{j+1}
                const Index q0 = kq < levels ? Index(within[t][std::size_t(kq)].size()) : 0;
                const Index q1 = kq + 1 < levels ? Index(within[t][std::size_t(kq + 1)].size()) : 0;
                const Index c0 = term_dim(j, t), c1 = term_dim(j + 1, t);
                Matrix<Scalar> out = Matrix<Scalar>::Zero(q1 + c1, q0 + c0);
                if (kq < levels && q1 > 0 && q0 > 0) out.topLeftCorner(q1, q0) = -q_diff(kq);
                if (kq < levels && c1 > 0 && q0 > 0) out.bottomLeftCorner(c1, q0) = phi[t][std::size_t(kq)];
                if (c1 > 0 && c0 > 0) out.bottomRightCorner(c1, c0) = term_diff(j, t);
                return out;
            };
            for (int j = lo - 1; j <= hi; ++j)
            {
                const Matrix<Scalar> out = cone_diff(j);
                if (out.cols() == 0)
                    continue;
                const Matrix<Scalar> in = cone_diff(j - 1);
                Matrix<Scalar> cycles = kernel_basis<Scalar>(out);
                if (cycles.cols() == 0)
                    continue;
                const auto picked = independent_modulo<Scalar>(in, cycles);
                if (picked.empty())
                    continue;
                if (j < lo)
                    throw std::logic_error("resolution exceeds the expected length");
                Matrix<Scalar> reps(cycles.rows(), Index(picked.size()));
                for (std::size_t p = 0; p < picked.size(); ++p)
                    reps.col(Index(p)) = cycles.col(picked[p]);
                normalize_columns(reps);
                const int kq = j + 1 - lo;
                const Index q0 = kq < levels ? Index(within[t][std::size_t(kq)].size()) : 0;
                for (Index p = 0; p < reps.cols(); ++p)
                {
                    detail::NewGenerator<Scalar> g;
                    g.level = j;
                    g.boundary = reps.col(p).head(q0);
                    g.image = -reps.col(p).tail(reps.rows() - q0);
                    created[bi].push_back(std::move(g));
                }
            }
        });

        // Register the new generators in a fixed order.
        for (std::size_t bi = 0; bi < batch.size(); ++bi)
        {
            const Subset t = batch[bi];
            std::vector<std::vector<Vector<Scalar>>> images(static_cast<std::size_t>(levels));
            for (auto& g : created[bi])
            {
                const std::size_t k = std::size_t(g.level - lo);
                const auto& ridx = within[t][k + 1 < std::size_t(levels) ? k + 1 : k];
                const Index width = k + 1 < std::size_t(levels) ? Index(degree[k + 1].size()) : 0;
                Vector<Scalar> full = Vector<Scalar>::Zero(width);
                for (Index r = 0; r < g.boundary.size(); ++r)
                    full(ridx[std::size_t(r)]) = g.boundary(r);
                within[t][k].push_back(Index(degree[k].size()));
                degree[k].push_back(t);
                boundary[k].push_back(std::move(full));
                images[k].push_back(std::move(g.image));
            }
            for (int k = 0; k < levels; ++k)
            {
                if (images[std::size_t(k)].empty())
                    continue;
                auto& m = phi[t][std::size_t(k)];
                const Index old = m.cols();
                Matrix<Scalar> grown(term_dim(lo + k, t), old + Index(images[std::size_t(k)].size()));
                if (old > 0) grown.leftCols(old) = m;
                for (std::size_t p = 0; p < images[std::size_t(k)].size(); ++p)
                    grown.col(old + Index(p)) = images[std::size_t(k)][p];
                m = std::move(grown);
            }
        }
    }

    std::vector<Matrix<Scalar>> diffs;
    for (int k = 0; k + 1 < levels; ++k)
    {
        Matrix<Scalar> d = Matrix<Scalar>::Zero(Index(degree[std::size_t(k + 1)].size()),
                                                Index(degree[std::size_t(k)].size()));
        for (std::size_t g = 0; g < degree[std::size_t(k)].size(); ++g)
        {
            const auto& b = boundary[std::size_t(k)][g];
            d.col(Index(g)).head(b.size()) = b;
        }
        diffs.push_back(std::move(d));
    }
    return FreeSqComplex<Scalar>(n, lo, std::move(degree), std::move(diffs));
}

/// A(P): minimal free resolution of the Alexander dual of P's evaluation.
template <typename Scalar>
FreeSqComplex<Scalar> A(const FreeSqComplex<Scalar>& p, int jobs = 1)
{
    if (p.empty())
        return FreeSqComplex<Scalar>(p.num_vertices());
    return minimal_free_resolution(alexander_dual(p.evaluate()), jobs);
}

/// D(P) = Hom_S(P, ω_S).
template <typename Scalar>
FreeSqComplex<Scalar> D(const FreeSqComplex<Scalar>& p)
{
    return p.dual();
}

} // namespace cellmac

#endif
