/**
 * Square-free modules over S = k[x_v : v in V], stored by their pieces at
 * the 2^n square-free degrees together with the multiplication maps
 * x_v : M_F -> M_{F+v} for v not in F. In-support multiplications are
 * bijections and carry no data.
 */
#ifndef CELLMAC_SQFREE_HPP
#define CELLMAC_SQFREE_HPP

#include <vector>

#include "cellmac/cell_complex.hpp"
#include "cellmac/errors.hpp"
#include "cellmac/linalg.hpp"
#include "cellmac/poset.hpp"

namespace cellmac {

template <typename Scalar>
class SquareFreeModule
{
public:
    SquareFreeModule() = default;

    /// Module with the given piece dimensions and zero multiplications.
    SquareFreeModule(int n, std::vector<Index> dims)
        : n_(n), dims_(std::move(dims)), mult_((std::size_t(1) << n) * std::size_t(n))
    {
        if (n > kMaxVertices)
            throw PreconditionError("too many vertices for square-free data");
        dims_.resize(std::size_t(1) << n, 0);
        for (Subset f = 0; f < Subset(dims_.size()); ++f)
            for (int v = 0; v < n; ++v)
                if (!has(f, v)) slot(v, f) = Matrix<Scalar>::Zero(dim(f | singleton(v)), dim(f));
    }

    static SquareFreeModule zero(int n) { return SquareFreeModule(n, {}); }

    int num_vertices() const { return n_; }
    Index dim(Subset f) const { return dims_[f]; }
    const std::vector<Index>& dims() const { return dims_; }
    Index total_dim() const
    {
        Index t = 0;
        for (Index d : dims_) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    /// Multiplication by x_v from degree F (v not in F) to F + v.
    const Matrix<Scalar>& mult(int v, Subset f) const { return mult_[std::size_t(f) * std::size_t(n_) + std::size_t(v)]; }
    void set_mult(int v, Subset f, Matrix<Scalar> m)
    {
        if (has(f, v) || m.rows() != dim(f | singleton(v)) || m.cols() != dim(f))
            throw std::invalid_argument("multiplication map has the wrong shape");
        slot(v, f) = std::move(m);
    }

    /// Composite multiplication from degree F to a superset T.
    Matrix<Scalar> structure_map(Subset f, Subset t) const
    {
        Matrix<Scalar> m = Matrix<Scalar>::Identity(dim(f), dim(f));
        Subset at = f;
        for (int v : members(t & ~f))
        {
            m = multiply<Scalar>(mult(v, at), m);
            at |= singleton(v);
        }
        return m;
    }

    /// Throws NonCommutingMorphism unless x_w x_v == x_v x_w on every square-free degree.
    void validate() const
    {
        for (Subset f = 0; f < Subset(dims_.size()); ++f)
            for (int v = 0; v < n_; ++v)
                for (int w = v + 1; w < n_; ++w)
                {
                    if (has(f, v) || has(f, w))
                        continue;
                    const auto a = multiply<Scalar>(mult(w, f | singleton(v)), mult(v, f));
                    const auto b = multiply<Scalar>(mult(v, f | singleton(w)), mult(w, f));
                    if (!equal<Scalar>(a, b))
                        throw NonCommutingMorphism("multiplications by x" + std::to_string(v) + " and x" +
                                                   std::to_string(w) + " do not commute at degree " +
                                                   to_bitstring(f, n_));
                }
    }

private:
    Matrix<Scalar>& slot(int v, Subset f) { return mult_[std::size_t(f) * std::size_t(n_) + std::size_t(v)]; }

    int n_ = 0;
    std::vector<Index> dims_;
    std::vector<Matrix<Scalar>> mult_;
};

/// Degreewise linear maps commuting with multiplication.
template <typename Scalar>
struct SqModMorphism
{
    std::vector<Matrix<Scalar>> maps;   ///< maps[F] : source_F -> target_F

    static SqModMorphism zero(const SquareFreeModule<Scalar>& source, const SquareFreeModule<Scalar>& target)
    {
        SqModMorphism out;
        for (Subset f = 0; f < Subset(source.dims().size()); ++f)
            out.maps.push_back(Matrix<Scalar>::Zero(target.dim(f), source.dim(f)));
        return out;
    }

    bool is_natural(const SquareFreeModule<Scalar>& source, const SquareFreeModule<Scalar>& target) const
    {
        const int n = source.num_vertices();
        for (Subset f = 0; f < Subset(maps.size()); ++f)
            for (int v = 0; v < n; ++v)
            {
                if (has(f, v))
                    continue;
                const Subset g = f | singleton(v);
                if (!equal<Scalar>(multiply<Scalar>(target.mult(v, f), maps[f]),
                                   multiply<Scalar>(maps[g], source.mult(v, f))))
                    return false;
            }
        return true;
    }
};

/// Cochain complex of square-free modules: terms[k] sits at level lowest + k.
template <typename Scalar>
struct SqModComplex
{
    int lowest = 0;
    std::vector<SquareFreeModule<Scalar>> terms;
    std::vector<SqModMorphism<Scalar>> differentials;   ///< differentials[k] : terms[k] -> terms[k+1]

    int highest() const { return lowest + int(terms.size()) - 1; }
    int num_vertices() const { return terms.empty() ? 0 : terms.front().num_vertices(); }

    /// Throws unless every differential is natural and consecutive ones compose to zero.
    void validate() const
    {
        for (std::size_t k = 0; k + 1 < terms.size(); ++k)
            if (!differentials[k].is_natural(terms[k], terms[k + 1]))
                throw NonCommutingMorphism("differential at level " + std::to_string(lowest + int(k)) +
                                           " does not commute with multiplication");
        for (std::size_t k = 0; k + 2 < terms.size(); ++k)
            for (std::size_t f = 0; f < differentials[k].maps.size(); ++f)
                if (!is_zero_matrix<Scalar>(multiply<Scalar>(differentials[k + 1].maps[f], differentials[k].maps[f])))
                    throw NonCommutingMorphism("differentials do not compose to zero at level " +
                                               std::to_string(lowest + int(k)));
    }
};

// ---------------------------------------------------------------------------
// Standard modules

template <typename Scalar>
SquareFreeModule<Scalar> module_from_support(int n, const std::vector<bool>& support)
{
    std::vector<Index> dims(std::size_t(1) << n, 0);
    for (std::size_t f = 0; f < dims.size(); ++f)
        dims[f] = support[f] ? 1 : 0;
    SquareFreeModule<Scalar> m(n, dims);
    for (Subset f = 0; f < Subset(dims.size()); ++f)
        for (int v = 0; v < n; ++v)
            if (!has(f, v) && support[f] && support[f | singleton(v)])
                m.set_mult(v, f, Matrix<Scalar>::Identity(1, 1));
    return m;
}

/// S itself: k in every degree, identity multiplications.
template <typename Scalar>
SquareFreeModule<Scalar> polynomial_ring(int n)
{
    return module_from_support<Scalar>(n, std::vector<bool>(std::size_t(1) << n, true));
}

/// S/m: k in degree ∅ only.
template <typename Scalar>
SquareFreeModule<Scalar> residue_field(int n)
{
    std::vector<bool> support(std::size_t(1) << n, false);
    support[0] = true;
    return module_from_support<Scalar>(n, support);
}

/// Free module S(-F).
template <typename Scalar>
SquareFreeModule<Scalar> free_module(int n, Subset generator)
{
    std::vector<bool> support(std::size_t(1) << n, false);
    for (Subset t = 0; t < Subset(support.size()); ++t)
        support[t] = contains(t, generator);
    return module_from_support<Scalar>(n, support);
}

/// Ideal generated by the square-free monomials m_G for G in `generators`.
template <typename Scalar>
SquareFreeModule<Scalar> monomial_ideal(int n, const std::vector<Subset>& generators)
{
    std::vector<bool> support(std::size_t(1) << n, false);
    for (Subset t = 0; t < Subset(support.size()); ++t)
        for (Subset g : generators)
            if (contains(t, g)) support[t] = true;
    return module_from_support<Scalar>(n, support);
}

/// Stanley-Reisner ring k[Δ]: k exactly at the faces.
template <typename Scalar>
SquareFreeModule<Scalar> stanley_reisner(const SimplicialComplex& complex)
{
    const int n = complex.num_vertices();
    std::vector<bool> support(std::size_t(1) << n, false);
    for (Face f : complex.faces())
        support[std::size_t(f)] = true;
    return module_from_support<Scalar>(n, support);
}

/**
 * k^i[Γ]: k at F when F is the vertex set of a face f with |F| = dim f + i + 1,
 * multiplication F -> F + v the identity whenever both pieces are nonzero.
 */
template <typename Scalar>
SquareFreeModule<Scalar> k_i_module(const CellComplex& complex, int i)
{
    const int n = complex.ambient_size();
    std::vector<bool> support(std::size_t(1) << n, false);
    for (const Cell& c : complex.cells())
        if (cardinality(c.vertices) == c.dim + i + 1) support[c.vertices] = true;
    auto m = module_from_support<Scalar>(n, support);
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------
// Duality and subquotients

/// (M*)_T = Hom(M_{T^c}, k); multiplication T -> T+v is the transpose of M's (T+v)^c -> T^c.
template <typename Scalar>
SquareFreeModule<Scalar> alexander_dual(const SquareFreeModule<Scalar>& m)
{
    const int n = m.num_vertices();
    std::vector<Index> dims(m.dims().size());
    for (Subset t = 0; t < Subset(dims.size()); ++t)
        dims[t] = m.dim(complement(t, n));
    SquareFreeModule<Scalar> out(n, dims);
    for (Subset t = 0; t < Subset(dims.size()); ++t)
        for (int v = 0; v < n; ++v)
            if (!has(t, v))
                out.set_mult(v, t, m.mult(v, complement(t | singleton(v), n)).transpose());
    return out;
}

/// Dual morphism N* -> M* of φ : M -> N.
template <typename Scalar>
SqModMorphism<Scalar> alexander_dual(const SqModMorphism<Scalar>& phi, int n)
{
    SqModMorphism<Scalar> out;
    out.maps.resize(phi.maps.size());
    for (Subset t = 0; t < Subset(phi.maps.size()); ++t)
        out.maps[t] = phi.maps[complement(t, n)].transpose();
    return out;
}

/// Levels are negated: (C*)^i = (C^{-i})*.
template <typename Scalar>
SqModComplex<Scalar> alexander_dual(const SqModComplex<Scalar>& c)
{
    SqModComplex<Scalar> out;
    const int n = c.num_vertices();
    out.lowest = -c.highest();
    for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it)
        out.terms.push_back(alexander_dual(*it));
    for (auto it = c.differentials.rbegin(); it != c.differentials.rend(); ++it)
        out.differentials.push_back(alexander_dual(*it, n));
    return out;
}

namespace detail {

/**
 * Degreewise span(cycles_F) / span(boundaries_F) inside M_F, with the induced
 * multiplications. Requires both families to be stable under multiplication.
 */
template <typename Scalar>
SquareFreeModule<Scalar> subquotient(const SquareFreeModule<Scalar>& m, const std::vector<Matrix<Scalar>>& cycles,
                                     const std::vector<Matrix<Scalar>>& boundaries)
{
    const int n = m.num_vertices();
    const std::size_t count = m.dims().size();
    std::vector<Matrix<Scalar>> coords(count);      // left inverse of the cycle basis
    std::vector<Quotient<Scalar>> quot(count);
    std::vector<Matrix<Scalar>> basis(count);
    std::vector<Index> dims(count);
    for (std::size_t f = 0; f < count; ++f)
    {
        basis[f] = image_basis<Scalar>(cycles[f]);
        coords[f] = basis[f].cols() ? left_inverse<Scalar>(basis[f]) : Matrix<Scalar>(0, m.dim(Subset(f)));
        const Matrix<Scalar> sub = multiply<Scalar>(coords[f], boundaries[f]);
        quot[f] = quotient_by<Scalar>(sub, basis[f].cols());
        dims[f] = quot[f].project.rows();
    }
    SquareFreeModule<Scalar> out(n, dims);
    for (Subset f = 0; f < Subset(count); ++f)
        for (int v = 0; v < n; ++v)
        {
            if (has(f, v))
                continue;
            const Subset g = f | singleton(v);
            if (dims[f] == 0 || dims[g] == 0)
                continue;
            Matrix<Scalar> lifted = multiply<Scalar>(basis[f], quot[f].section);
            Matrix<Scalar> moved = multiply<Scalar>(m.mult(v, f), lifted);
            out.set_mult(v, f, multiply<Scalar>(quot[g].project, multiply<Scalar>(coords[g], moved)));
        }
    return out;
}

template <typename Scalar>
std::vector<Matrix<Scalar>> zero_families(const SquareFreeModule<Scalar>& m)
{
    std::vector<Matrix<Scalar>> out;
    for (Subset f = 0; f < Subset(m.dims().size()); ++f)
        out.push_back(Matrix<Scalar>(m.dim(f), 0));
    return out;
}

} // namespace detail

template <typename Scalar>
SquareFreeModule<Scalar> kernel(const SqModMorphism<Scalar>& phi, const SquareFreeModule<Scalar>& source,
                                const SquareFreeModule<Scalar>& target)
{
    if (!phi.is_natural(source, target))
        throw NonCommutingMorphism("kernel of a map that does not commute with multiplication");
    std::vector<Matrix<Scalar>> cycles;
    for (const auto& map : phi.maps)
        cycles.push_back(kernel_basis<Scalar>(map));
    return detail::subquotient(source, cycles, detail::zero_families(source));
}

template <typename Scalar>
SquareFreeModule<Scalar> image(const SqModMorphism<Scalar>& phi, const SquareFreeModule<Scalar>& source,
                               const SquareFreeModule<Scalar>& target)
{
    if (!phi.is_natural(source, target))
        throw NonCommutingMorphism("image of a map that does not commute with multiplication");
    return detail::subquotient(target, phi.maps, detail::zero_families(target));
}

template <typename Scalar>
SquareFreeModule<Scalar> cokernel(const SqModMorphism<Scalar>& phi, const SquareFreeModule<Scalar>& source,
                                  const SquareFreeModule<Scalar>& target)
{
    if (!phi.is_natural(source, target))
        throw NonCommutingMorphism("cokernel of a map that does not commute with multiplication");
    std::vector<Matrix<Scalar>> all;
    for (Subset f = 0; f < Subset(target.dims().size()); ++f)
        all.push_back(Matrix<Scalar>::Identity(target.dim(f), target.dim(f)));
    return detail::subquotient(target, all, phi.maps);
}

/// Cohomology modules H^i, indexed like `c.terms`.
template <typename Scalar>
std::vector<SquareFreeModule<Scalar>> homology_of_sqmod_complex(const SqModComplex<Scalar>& c)
{
    c.validate();
    std::vector<SquareFreeModule<Scalar>> out;
    for (std::size_t k = 0; k < c.terms.size(); ++k)
    {
        const auto& term = c.terms[k];
        std::vector<Matrix<Scalar>> cycles, boundaries;
        for (Subset f = 0; f < Subset(term.dims().size()); ++f)
        {
            cycles.push_back(k + 1 < c.terms.size() ? kernel_basis<Scalar>(c.differentials[k].maps[f])
                                                    : Matrix<Scalar>(Matrix<Scalar>::Identity(term.dim(f), term.dim(f))));
            boundaries.push_back(k > 0 ? c.differentials[k - 1].maps[f] : Matrix<Scalar>(term.dim(f), 0));
        }
        out.push_back(detail::subquotient(term, cycles, boundaries));
    }
    return out;
}

/// Number of minimal generators in each degree F: dim of M_F modulo the images of all M_{F-v}.
template <typename Scalar>
std::vector<Index> minimal_generators(const SquareFreeModule<Scalar>& m)
{
    std::vector<Index> out(m.dims().size(), 0);
    for (Subset f = 0; f < Subset(out.size()); ++f)
    {
        std::vector<Matrix<Scalar>> images;
        Index cols = 0;
        for (int v : members(f))
        {
            images.push_back(m.mult(v, f & ~singleton(v)));
            cols += images.back().cols();
        }
        Matrix<Scalar> all(m.dim(f), cols);
        Index at = 0;
        for (const auto& im : images)
        {
            all.middleCols(at, im.cols()) = im;
            at += im.cols();
        }
        out[f] = m.dim(f) - rank<Scalar>(all);
    }
    return out;
}

/**
 * Isomorphism invariants compared exactly: piece dimensions and the rank of
 * every multiplication map.
 */
template <typename Scalar>
bool same_invariants(const SquareFreeModule<Scalar>& a, const SquareFreeModule<Scalar>& b)
{
    if (a.num_vertices() != b.num_vertices() || a.dims() != b.dims())
        return false;
    for (Subset f = 0; f < Subset(a.dims().size()); ++f)
        for (int v = 0; v < a.num_vertices(); ++v)
            if (!has(f, v) && rank<Scalar>(a.mult(v, f)) != rank<Scalar>(b.mult(v, f)))
                return false;
    return true;
}

} // namespace cellmac

#endif
