/**
 * Exact dense linear algebra over a field.
 *
 * Eigen supplies storage and products; elimination is done here because
 * Eigen's decompositions are threshold-based and meaningless over exact
 * fields. Pivoting is deterministic: the first nonzero entry at or below the
 * current row in the leftmost remaining column.
 */
#ifndef CELLMAC_LINALG_HPP
#define CELLMAC_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cellmac/field.hpp"

namespace cellmac {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Echelon
{
    Matrix<Scalar> reduced;      ///< reduced row echelon form
    std::vector<Index> pivots;   ///< pivot column of each nonzero row
    Matrix<Scalar> transform;    ///< E with E * input == reduced (only if requested)
};

/**
 * Reduced row echelon form. With `track_transform` the accumulated row
 * operations are returned as an invertible matrix.
 */
template <typename Scalar>
Echelon<Scalar> row_echelon(Matrix<Scalar> m, bool track_transform = false)
{
    const Index rows = m.rows(), cols = m.cols();
    Matrix<Scalar> e;
    if (track_transform)
        e = Matrix<Scalar>::Identity(rows, rows);

    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c)
    {
        Index p = r;
        while (p < rows && is_zero(m(p, c)))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
        {
            m.row(p).swap(m.row(r));
            if (track_transform) e.row(p).swap(e.row(r));
        }
        const Scalar inv = Scalar(1) / m(r, c);
        if (!(inv == Scalar(1)))
        {
            for (Index j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(r, j) *= inv;
            if (track_transform)
                for (Index j = 0; j < rows; ++j)
                    if (!is_zero(e(r, j))) e(r, j) *= inv;
        }
        for (Index i = 0; i < rows; ++i)
        {
            if (i == r || is_zero(m(i, c)))
                continue;
            const Scalar f = m(i, c);
            for (Index j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            if (track_transform)
                for (Index j = 0; j < rows; ++j)
                    if (!is_zero(e(r, j))) e(i, j) -= f * e(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), std::move(e)};
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return static_cast<Index>(row_echelon<Scalar>(m).pivots.size());
}

/// Columns form a basis of the null space; M * K == 0 and K has cols(M) - rank(M) columns.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& m)
{
    const Index cols = m.cols();
    if (m.rows() == 0)
        return Matrix<Scalar>::Identity(cols, cols);
    const auto ech = row_echelon<Scalar>(m);
    std::vector<char> is_pivot(cols, 0);
    for (Index c : ech.pivots)
        is_pivot[c] = 1;
    Matrix<Scalar> k = Matrix<Scalar>::Zero(cols, cols - Index(ech.pivots.size()));
    Index out = 0;
    for (Index free = 0; free < cols; ++free)
    {
        if (is_pivot[free])
            continue;
        k(free, out) = Scalar(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            if (!is_zero(ech.reduced(Index(r), free)))
                k(ech.pivots[r], out) = -ech.reduced(Index(r), free);
        ++out;
    }
    return k;
}

/// Linearly independent columns of M spanning its column space (the pivot columns).
template <typename Scalar>
Matrix<Scalar> image_basis(const Matrix<Scalar>& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return Matrix<Scalar>(m.rows(), 0);
    const auto ech = row_echelon<Scalar>(m);
    Matrix<Scalar> b(m.rows(), Index(ech.pivots.size()));
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
        b.col(Index(i)) = m.col(ech.pivots[i]);
    return b;
}

template <typename Scalar>
Index cokernel_dim(const Matrix<Scalar>& m)
{
    return m.rows() - rank(m);
}

/// Some x with M x == b, or nothing if b is outside the column space.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& b)
{
    Matrix<Scalar> aug(m.rows(), m.cols() + 1);
    aug << m, b;
    const auto ech = row_echelon<Scalar>(aug);
    Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    {
        if (ech.pivots[r] == m.cols())
            return std::nullopt;
        x(ech.pivots[r]) = ech.reduced(Index(r), m.cols());
    }
    return x;
}

/**
 * For M with full column rank, a matrix L with L * M == I. Applying L to any
 * vector of the column space gives its coordinates in the columns of M.
 */
template <typename Scalar>
Matrix<Scalar> left_inverse(const Matrix<Scalar>& m)
{
    const auto ech = row_echelon<Scalar>(m, true);
    if (Index(ech.pivots.size()) != m.cols())
        throw std::invalid_argument("left_inverse: matrix does not have full column rank");
    return ech.transform.topRows(m.cols());
}

/**
 * Indices of the columns of `candidates` that extend a basis of span(base)
 * greedily, left to right. Their images form a basis of a complement of
 * span(base) inside span(base, candidates).
 */
template <typename Scalar>
std::vector<Index> independent_modulo(const Matrix<Scalar>& base, const Matrix<Scalar>& candidates)
{
    std::vector<Index> picked;
    if (candidates.cols() == 0)
        return picked;
    Matrix<Scalar> joint(candidates.rows(), base.cols() + candidates.cols());
    joint << base, candidates;
    for (Index c : row_echelon<Scalar>(joint).pivots)
        if (c >= base.cols())
            picked.push_back(c - base.cols());
    return picked;
}

/**
 * Projection onto a complement of span(sub) in Scalar^dim.
 * `project` has kernel exactly span(sub); `section` satisfies project * section == I.
 */
template <typename Scalar>
struct Quotient
{
    Matrix<Scalar> project;
    Matrix<Scalar> section;
};

template <typename Scalar>
Quotient<Scalar> quotient_by(const Matrix<Scalar>& sub, Index dim)
{
    const Matrix<Scalar> basis = image_basis<Scalar>(sub);
    const Matrix<Scalar> id = Matrix<Scalar>::Identity(dim, dim);
    const auto extra = independent_modulo<Scalar>(basis, id);
    const Index q = Index(extra.size());
    Matrix<Scalar> full(dim, basis.cols() + q);
    Matrix<Scalar> section = Matrix<Scalar>::Zero(dim, q);
    for (Index i = 0; i < q; ++i)
        section(extra[std::size_t(i)], i) = Scalar(1);
    full << basis, section;
    // full is square and invertible; the last q rows of its inverse project away span(sub).
    const Matrix<Scalar> inv = left_inverse<Scalar>(full);
    return {inv.bottomRows(q), std::move(section)};
}

/// Exact equality of two matrices of the same shape.
template <typename Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& a)
{
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!is_zero(a(i, j))) return false;
    return true;
}

/// Exact product that skips zero entries; cheap on the sparse 0/±1 matrices used here.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index k = 0; k < b.rows(); ++k)
        {
            if (is_zero(b(k, j)))
                continue;
            const Scalar& bkj = b(k, j);
            for (Index i = 0; i < a.rows(); ++i)
                if (!is_zero(a(i, k))) c(i, j) += a(i, k) * bkj;
        }
    return c;
}

/**
 * Rescales each column to a canonical representative of its line: over the
 * rationals a primitive integer vector whose first nonzero entry is positive,
 * over prime fields a vector whose first nonzero entry is 1.
 */
void normalize_columns(Matrix<Rational>& m);
void normalize_columns(Matrix<Zp>& m);

} // namespace cellmac

#endif
