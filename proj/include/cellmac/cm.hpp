/**
 * Cohen-Macaulay, l-CM and Gorenstein* tests for cell complexes and posets.
 */
#ifndef CELLMAC_CM_HPP
#define CELLMAC_CM_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "cellmac/errors.hpp"
#include "cellmac/field.hpp"
#include "cellmac/homology.hpp"
#include "cellmac/parallel.hpp"

namespace cellmac {

/// Nonvanishing H̃_p(Γ_{-R}) with p + |R| below the threshold.
struct CMWitness
{
    int p = 0;
    Subset deleted = 0;
    friend bool operator==(const CMWitness&, const CMWitness&) = default;
};

struct CMVerdict
{
    bool cm = true;
    std::vector<CMWitness> witnesses;   ///< minimal violations, sorted by (|R|, p, R)
};

struct CMReport
{
    std::string field;
    int dim = -1;
    bool is_cm = false;
    std::vector<CMWitness> witnesses;
    int lcm_order = 0;
    bool gorenstein_star = false;
    Index top_cohomology_rank = 0;
};

/**
 * Reduced homology of every restriction Γ_W, W inside the vertex set,
 * together with dim Γ_W. Deletions are restrictions to complements.
 */
template <typename Scalar>
class RestrictionHomology
{
public:
    explicit RestrictionHomology(const CellComplex& complex, int jobs = 1)
        : vertices_(complex.vertex_set()), homology_(std::size_t(1) << complex.ambient_size()),
          dims_(std::size_t(1) << complex.ambient_size(), -1)
    {
        std::vector<Subset> subsets;
        for (Subset w = vertices_;; w = (w - 1) & vertices_)
        {
            subsets.push_back(w);
            if (w == 0) break;
        }
        parallel_for(subsets.size(), jobs, [&](std::size_t i) {
            const Subset w = subsets[i];
            homology_[w] = homology_dims(chain_complex<Scalar>(complex, w));
        });
        for (const Cell& c : complex.cells())
            for (Subset w : subsets)
                if (contains(w, c.vertices)) dims_[w] = std::max(dims_[w], c.dim);
    }

    Subset vertices() const { return vertices_; }
    /// dim H̃_p(Γ_W).
    Index homology(Subset w, int p) const { return homology_at(homology_[w & vertices_], p); }
    /// dim Γ_W; -1 when only the empty cell survives.
    int dim(Subset w) const { return dims_[w & vertices_]; }

private:
    Subset vertices_;
    std::vector<std::vector<Index>> homology_;
    std::vector<int> dims_;
};

namespace detail {

/// Hochster-type test on Γ_W viewed as a complex on the vertex set W.
template <typename Scalar>
CMVerdict cm_on(const RestrictionHomology<Scalar>& rh, Subset w, bool collect)
{
    CMVerdict out;
    const int d = rh.dim(w);
    std::vector<CMWitness> all;
    std::vector<char> bad(std::size_t(w) + 1, 0);
    for (Subset r = w;; r = (r - 1) & w)
    {
        const int size = cardinality(r);
        for (int p = -1; p + size < d; ++p)
            if (rh.homology(w & ~r, p) != 0)
            {
                out.cm = false;
                if (!collect)
                    return out;
                all.push_back({p, r});
                bad[r] = 1;
            }
        if (r == 0) break;
    }
    for (const auto& x : all)
    {
        const Subset r = x.deleted;
        bool minimal = true;
        if (r != 0)
            for (Subset sub = (r - 1) & r;; sub = (sub - 1) & r)
            {
                if (bad[sub]) { minimal = false; break; }
                if (sub == 0) break;
            }
        if (minimal) out.witnesses.push_back(x);
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(), [](const CMWitness& a, const CMWitness& b) {
        const int ca = cardinality(a.deleted), cb = cardinality(b.deleted);
        if (ca != cb) return ca < cb;
        if (a.p != b.p) return a.p < b.p;
        return a.deleted < b.deleted;
    });
    return out;
}

} // namespace detail

/// H̃_p(Γ_{-R}) = 0 whenever p + |R| < dim Γ; on failure the minimal witnesses.
template <typename Scalar>
CMVerdict is_cm_cell(const CellComplex& complex, int jobs = 1)
{
    RestrictionHomology<Scalar> rh(complex, jobs);
    return detail::cm_on(rh, rh.vertices(), true);
}

template <typename Scalar>
int lcm_order(const RestrictionHomology<Scalar>& rh)
{
    const Subset v = rh.vertices();
    const int d = rh.dim(v);
    if (!detail::cm_on(rh, v, false).cm)
        return 0;
    int l = 1;
    for (int s = 1; s <= cardinality(v); ++s)
    {
        for (Subset r = v;; r = (r - 1) & v)
        {
            if (cardinality(r) == s)
            {
                const Subset rest = v & ~r;
                if (rh.dim(rest) != d || !detail::cm_on(rh, rest, false).cm)
                    return l;
            }
            if (r == 0) break;
        }
        l = s + 1;
    }
    return l;
}

/// Largest l such that every Γ_{-R} with |R| < l is CM of dimension dim Γ; 0 if Γ is not CM.
template <typename Scalar>
int lcm_order(const CellComplex& complex, int jobs = 1)
{
    return lcm_order(RestrictionHomology<Scalar>(complex, jobs));
}

template <typename Scalar>
bool is_gorenstein_star(const CellComplex& complex, int jobs = 1)
{
    RestrictionHomology<Scalar> rh(complex, jobs);
    return lcm_order(rh) >= 2 && rh.homology(rh.vertices(), complex.dim()) == 1;
}

template <typename Scalar>
CMReport cm_report(const CellComplex& complex, int jobs = 1)
{
    RestrictionHomology<Scalar> rh(complex, jobs);
    CMReport out;
    out.field = field_name<Scalar>();
    out.dim = complex.dim();
    const auto verdict = detail::cm_on(rh, rh.vertices(), true);
    out.is_cm = verdict.cm;
    out.witnesses = verdict.witnesses;
    out.lcm_order = lcm_order(rh);
    out.top_cohomology_rank = rh.homology(rh.vertices(), complex.dim());
    out.gorenstein_star = out.lcm_order >= 2 && out.top_cohomology_rank == 1;
    return out;
}

/// Generators m_V / m_f over the facets f, as supports, minimal under divisibility.
template <typename Scalar>
std::vector<Subset> gorenstein_top_ideal(const CellComplex& complex)
{
    if (!is_gorenstein_star<Scalar>(complex))
        throw NotGorensteinStar("complex is not Gorenstein*");
    std::vector<Subset> gens;
    for (std::size_t f : complex.facets())
        gens.push_back(complex.vertex_set() & ~complex.cell(f).vertices);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Subset> out;
    for (Subset g : gens)
        if (std::none_of(gens.begin(), gens.end(), [&](Subset h) { return h != g && contains(g, h); }))
            out.push_back(g);
    return out;
}

/// Compares l for Γ with the l-CM order of its codimension r skeleton, 0 <= r <= dim Γ: lcm_order(skeleton) >= l + r.
/// Throws NotCohenMacaulay when l = 0.
template <typename Scalar>
bool verify_skeleton_lcm(const CellComplex& complex, int r, int jobs = 1)
{
    if (r < 0 || r > complex.dim())
        throw PreconditionError("skeleton codimension out of range");
    const int l = lcm_order<Scalar>(complex, jobs);
    if (l == 0)
        throw NotCohenMacaulay("skeleton bound needs a Cohen-Macaulay complex");
    return lcm_order<Scalar>(skeleton(complex, complex.dim() - r), jobs) >= l + r;
}

// ---------------------------------------------------------------------------
// Simplicial and poset criteria

/// H̃_p(Δ_{-R}) = 0 whenever p + |R| < dim Δ + l - 1 and p < dim Δ.
template <typename Scalar>
bool simplicial_is_lcm(const SimplicialComplex& complex, int l)
{
    if (complex.is_void())
        return true;
    std::vector<int> verts;
    Face support = 0;
    for (Face f : complex.faces())
        support |= f;
    for (int v = 0; v < kMaxSimplicialVertices; ++v)
        if ((support >> v) & 1) verts.push_back(v);
    const int d = complex.dim();
    const int m = int(verts.size());
    // only |R| <= d + l - 1 can violate
    const int largest = std::min(m, d + l - 1);
    std::vector<int> pick;
    auto check = [&]() {
        Face r = 0;
        for (int i : pick)
            r |= Face(1) << verts[std::size_t(i)];
        const int size = int(pick.size());
        const int top = std::min(d - 1, d + l - 2 - size);
        std::vector<Face> kept;
        for (Face f : complex.faces())
            if ((f & r) == 0) kept.push_back(f);
        const auto h = truncated_homology_dims<Scalar>(kept, top);
        for (int p = -1; p <= top; ++p)
            if (homology_at(h, p) != 0)
                return false;
        return true;
    };
    for (int size = 0; size <= largest; ++size)
    {
        pick.resize(std::size_t(size));
        for (int i = 0; i < size; ++i)
            pick[std::size_t(i)] = i;
        while (true)
        {
            if (!check())
                return false;
            int i = size - 1;
            while (i >= 0 && pick[std::size_t(i)] == m - size + i) --i;
            if (i < 0) break;
            ++pick[std::size_t(i)];
            for (int j = i + 1; j < size; ++j)
                pick[std::size_t(j)] = pick[std::size_t(j - 1)] + 1;
        }
    }
    return true;
}

/**
 * Every open interval (x, y) of P̂ has reduced homology concentrated in
 * degree rk y - rk x - 2. Throws NonGraded when P̂ is not graded.
 */
template <typename Scalar>
bool is_cm_poset(const Poset& poset)
{
    const Poset hat = with_bounds(poset);
    if (!hat.is_graded())
        throw NonGraded("poset with bounds adjoined is not graded");
    for (int x = 0; x < hat.size(); ++x)
        for (int y = 0; y < hat.size(); ++y)
        {
            if (!hat.less(x, y))
                continue;
            const auto h = reduced_homology_dims<Scalar>(order_complex(open_interval(hat, x, y)));
            const int top = hat.rank_of(y) - hat.rank_of(x) - 2;
            for (int p = -1; p + 1 < int(h.size()); ++p)
                if (p != top && homology_at(h, p) != 0)
                    return false;
        }
    return true;
}

/// lcm_order(Γ) >= 2 agrees with the order complex of the face poset being 2-CM.
template <typename Scalar>
bool verify_2cm_poset_equivalence(const CellComplex& complex, int jobs = 1)
{
    const bool cell = lcm_order<Scalar>(complex, jobs) >= 2;
    const bool poset = simplicial_is_lcm<Scalar>(order_complex(face_poset(complex)), 2);
    return cell == poset;
}

/// Order complex of P minus the filter generated by x.
inline SimplicialComplex filter_deletion(const Poset& poset, int x)
{
    const auto up = filter(poset, {x});
    std::vector<int> rest;
    for (int y = 0; y < poset.size(); ++y)
        if (std::find(up.begin(), up.end(), y) == up.end()) rest.push_back(y);
    return order_complex(poset.induced(rest));
}

} // namespace cellmac

#endif
