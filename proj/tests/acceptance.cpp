// Acceptance checks: one PASS/FAIL line per criterion, with timings.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cellmac/builtins.hpp"
#include "cellmac/cm.hpp"
#include "cellmac/errors.hpp"
#include "cellmac/hexagon.hpp"
#include "cellmac/resolution.hpp"
#include "oracles.hpp"

using namespace cellmac;
using Q = Rational;

namespace {

constexpr int kJobs = 4;

struct Outcome
{
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok) detail = why;
        ok = false;
    }
};

bool is_simplex_on_its_vertices(const CellComplex& cx)
{
    return is_simplicial(cx) && cx.facets().size() == 1;
}

// ---------------------------------------------------------------------------

Outcome incidence_soundness()
{
    Outcome out;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        if (!boundary_squares_to_zero(cx))
            out.fail(name + ": boundary does not square to zero");
        for (std::size_t c = 1; c < cx.size(); ++c)
        {
            const int d = cx.cell(c).dim;
            const auto bd = cx.subcomplex([&](const Cell& x) {
                const auto idx = cx.find(x.id);
                return idx && *idx != c && cx.is_face(*idx, c);
            });
            const auto h = reduced_homology_dims<Q>(bd);
            for (int p = -1; p <= d; ++p)
                if (homology_at(h, p) != (p == d - 1 ? 1 : 0))
                    out.fail(name + ": boundary of cell " + cx.cell(c).id + " is not a homology sphere");
        }
    }
    return out;
}

Outcome subdivision_invariance()
{
    Outcome out;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        const auto a = reduced_homology_dims<Q>(cx);
        const auto b = reduced_homology_dims<Q>(order_complex(face_poset(cx)));
        for (int p = -1; p <= cx.dim() + 1; ++p)
            if (homology_at(a, p) != homology_at(b, p))
                out.fail(name + ": homology differs in degree " + std::to_string(p));
    }
    return out;
}

/// Downward closed families on exactly the vertices 0..m-1, m <= 5, one per isomorphism class.
std::vector<std::pair<int, std::vector<Subset>>> simplicial_complexes_up_to_iso(int max_vertices)
{
    std::vector<std::pair<int, std::vector<Subset>>> out;
    for (int m = 0; m <= max_vertices; ++m)
    {
        std::vector<Subset> candidates;
        for (Subset s : subsets_by_size(m))
            if (cardinality(s) >= 2) candidates.push_back(s);
        std::vector<std::array<int, 5>> perms;
        std::array<int, 5> p{0, 1, 2, 3, 4};
        do
        {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.begin() + m));
        std::set<std::vector<Subset>> seen;
        std::vector<Subset> chosen;
        std::vector<char> in(std::size_t(1) << m, 0);
        in[0] = 1;
        for (int v = 0; v < m; ++v)
            in[singleton(v)] = 1;
        auto canonical = [&](const std::vector<Subset>& faces) {
            std::vector<Subset> best;
            for (const auto& q : perms)
            {
                std::vector<Subset> image;
                for (Subset f : faces)
                {
                    Subset g = 0;
                    for (int v : members(f))
                        g |= singleton(q[std::size_t(v)]);
                    image.push_back(g);
                }
                std::sort(image.begin(), image.end());
                if (best.empty() || image < best) best = image;
            }
            return best;
        };
        std::function<void(std::size_t)> grow = [&](std::size_t k) {
            if (k == candidates.size())
            {
                std::vector<Subset> faces;
                for (Subset s = 0; s < Subset(in.size()); ++s)
                    if (in[s]) faces.push_back(s);
                if (seen.insert(canonical(faces)).second)
                {
                    std::vector<Subset> facets;
                    for (Subset f : faces)
                    {
                        bool maximal = f != 0;
                        for (int v = 0; v < m && maximal; ++v)
                            if (!has(f, v) && in[f | singleton(v)]) maximal = false;
                        if (maximal) facets.push_back(f);
                    }
                    out.emplace_back(m, facets);
                }
                return;
            }
            grow(k + 1);
            const Subset s = candidates[k];
            bool allowed = true;
            for (int v : members(s))
                if (!in[s & ~singleton(v)]) allowed = false;
            if (allowed)
            {
                in[s] = 1;
                grow(k + 1);
                in[s] = 0;
            }
        };
        grow(0);
    }
    return out;
}

CellComplex from_masks(int m, const std::vector<Subset>& facets)
{
    std::vector<std::string> names;
    for (int v = 0; v < m; ++v)
        names.push_back("v" + std::to_string(v));
    std::vector<std::vector<std::string>> lists;
    for (Subset f : facets)
    {
        std::vector<std::string> l;
        for (int v : members(f))
            l.push_back(names[std::size_t(v)]);
        lists.push_back(l);
    }
    return simplicial_from_facets(names, lists);
}

Outcome cm_criterion_equivalence()
{
    Outcome out;
    const auto family = simplicial_complexes_up_to_iso(5);
    int cm_count = 0;
    for (const auto& [m, facets] : family)
    {
        const auto cx = from_masks(m, facets);
        const bool cell = is_cm_cell<Q>(cx).cm;
        bool poset = false;
        try
        {
            poset = is_cm_poset<Q>(face_poset(cx));
        }
        catch (const NonGraded&)
        {
            poset = false;   // CM posets are graded
        }
        const bool hochster = simplicial_is_lcm<Q>(order_complex(face_poset(cx)), 1);
        if (cell != poset || cell != hochster)
            out.fail("disagreement on a complex with " + std::to_string(m) + " vertices and " +
                     std::to_string(facets.size()) + " facets");
        cm_count += cell;
    }
    out.detail = std::to_string(family.size()) + " isomorphism classes, " + std::to_string(cm_count) + " CM";
    if (family.size() != 1 + 1 + 2 + 5 + 20 + 180)
        out.fail("unexpected number of isomorphism classes: " + std::to_string(family.size()));
    return out;
}

Outcome cm_single_row()
{
    Outcome out;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        const auto table = enriched_cohomology_table<Q>(cx, kJobs);
        bool vanish = true;
        for (int i = -1; i < cx.dim(); ++i)
            vanish = vanish && table.row_vanishes(i);
        if (vanish != is_cm_cell<Q>(cx, kJobs).cm)
            out.fail(name);
    }
    return out;
}

Outcome skeleton_instances()
{
    Outcome out;
    struct Case
    {
        const char* name;
        int l, bound;
    };
    for (const Case& c : {Case{"cube-boundary", 2, 3}, Case{"cross-polytope-boundary-3", 2, 4},
                          Case{"solid-square", 1, 2}})
    {
        const auto cx = builtin(c.name);
        const int l = lcm_order<Q>(cx, kJobs);
        const int skel = lcm_order<Q>(skeleton(cx, 1), kJobs);
        if (l != c.l) out.fail(std::string(c.name) + ": l = " + std::to_string(l));
        if (skel < c.bound) out.fail(std::string(c.name) + ": 1-skeleton l = " + std::to_string(skel));
        if (!verify_skeleton_lcm<Q>(cx, cx.dim() - 1, kJobs)) out.fail(std::string(c.name) + ": skeleton lcm check");
        out.detail += std::string(out.detail.empty() ? "" : ", ") + c.name + " 1-skeleton " + std::to_string(skel) + "-CM";
    }
    return out;
}

Outcome gorenstein_ideal()
{
    Outcome out;
    for (const char* name : {"boundary-simplex-2", "square-boundary", "cube-boundary"})
    {
        const auto cx = builtin(name);
        const auto report = cm_report<Q>(cx, kJobs);
        if (report.top_cohomology_rank != 1) out.fail(std::string(name) + ": top rank");
        const auto mods = cohomology_modules(enriched_complex<Q>(cx).dual());
        const auto top = mods.at(cx.dim() + 1);
        const auto ideal = monomial_ideal<Q>(cx.ambient_size(), gorenstein_top_ideal<Q>(cx));
        if (top.dims() != ideal.dims()) out.fail(std::string(name) + ": dimension table differs");
        if (!same_invariants(top, ideal)) out.fail(std::string(name) + ": multiplication ranks differ");
    }
    return out;
}

Outcome hexagon_identity()
{
    Outcome out;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        if (cx.ambient_size() > 8) continue;
        if (!verify_hexagon_identity<Q>(cx, kJobs)) out.fail(name);
    }
    return out;
}

Outcome f_dual_homology()
{
    Outcome out;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        const auto h = build_hexagon<Q>(cx, kJobs);
        if (!verify_f_dual_homology(h, cx, kJobs)) out.fail(name);
        if (!is_simplicial(cx)) continue;
        for (int i = 1; i <= cx.ambient_size(); ++i)
            if (!k_i_module<Q>(cx, i).is_zero()) out.fail(name + ": k^" + std::to_string(i) + " nonzero");
        const auto mods = cohomology_modules(h.at(Corner::FDual));
        const auto it = mods.find(0);
        if (it == mods.end() || !same_invariants(it->second, stanley_reisner<Q>(as_simplicial(cx))))
            out.fail(name + ": H^0(F^v) is not the Stanley-Reisner ring");
    }
    return out;
}

Outcome linearity()
{
    Outcome out;
    std::array<std::array<int, 2>, 3> seen{};   // [statement][property holds]
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        const auto h = build_hexagon<Q>(cx, kJobs);
        const std::array<bool, 3> property = {is_simplicial(cx), is_cm_cell<Q>(cx, kJobs).cm,
                                              is_simplex_on_its_vertices(cx)};
        const std::array<std::array<Corner, 2>, 3> corners = {{{Corner::E, Corner::EDual},
                                                               {Corner::G, Corner::GDual},
                                                               {Corner::F, Corner::FDual}}};
        for (std::size_t s = 0; s < 3; ++s)
        {
            ++seen[s][property[s]];
            for (Corner c : corners[s])
                if (h.at(c).is_linear() != property[s])
                    out.fail(name + ": " + corner_name(c));
        }
    }
    for (std::size_t s = 0; s < 3; ++s)
        if (seen[s][0] == 0 || seen[s][1] == 0) out.fail("corpus lacks a positive or negative case");
    return out;
}

Outcome simplicial_tables()
{
    Outcome out;
    for (const char* name : {"boundary-simplex-2", "boundary-simplex-3", "cross-polytope-boundary-3"})
    {
        const auto cx = builtin(name);
        const auto h = build_hexagon<Q>(cx, kJobs);
        const oracle::CornerTables ex{oracle::faces_of(cx), cx.ambient_size()};
        for (Corner c : kCorners)
        {
            const auto betti = h.at(c).betti_table();
            const auto coh = h.at(c).homology_table(kJobs);
            for (int l = -ex.n - 1; l <= ex.n + 1; ++l)
                for (Subset s = 0; s <= full_set(ex.n); ++s)
                {
                    if (betti.at(l, s) != ex.betti(int(c), l, s) || coh.at(l, s) != ex.cohomology(int(c), l, s))
                        out.fail(std::string(name) + ": " + corner_name(c));
                    if (s == full_set(ex.n)) break;
                }
        }
    }
    return out;
}

Outcome canonical_module_check()
{
    Outcome out;
    int count = 0;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        if (!is_cm_cell<Q>(cx, kJobs).cm) continue;
        ++count;
        const auto h = build_hexagon<Q>(cx, kJobs);
        std::vector<SquareFreeModule<Q>> nonzero;
        for (const auto& [level, m] : cohomology_modules(h.at(Corner::F)))
            if (!m.is_zero()) nonzero.push_back(m);
        if (nonzero.size() != 1)
        {
            out.fail(name + ": F has " + std::to_string(nonzero.size()) + " nonzero cohomology modules");
            continue;
        }
        if (!same_invariants(nonzero.front(), canonical_module<Q>(cx, kJobs)))
            out.fail(name + ": cohomology of F differs from the dual of the top module");
    }
    out.detail = std::to_string(count) + " CM builtins";
    return out;
}

Outcome filter_deletions()
{
    Outcome out;
    int count = 0;
    for (const auto& name : builtin_names())
    {
        const auto cx = builtin(name);
        if (!is_gorenstein_star<Q>(cx, kJobs)) continue;
        ++count;
        const auto p = face_poset(cx);
        for (int x = 0; x < p.size(); ++x)
            if (!is_acyclic(reduced_homology_dims<Q>(filter_deletion(p, x))))
                out.fail(name + ": filter of " + p.labels()[std::size_t(x)]);
    }
    out.detail = std::to_string(count) + " Gorenstein* builtins";
    return out;
}

Outcome randomized()
{
    Outcome out;
    std::mt19937_64 rng(1234567);
    std::uniform_int_distribution<int> small(-3, 3), shape(1, 8), verts(2, 4), gens(1, 4);
    for (int trial = 0; trial < 1000; ++trial)
    {
        // rank-nullity over QQ and GF(5)
        const int r = shape(rng), c = shape(rng);
        Matrix<Q> m(r, c);
        std::vector<std::vector<std::int64_t>> ints(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(c)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
            {
                ints[std::size_t(i)][std::size_t(j)] = small(rng);
                m(i, j) = Q(ints[std::size_t(i)][std::size_t(j)]);
            }
        const auto k = kernel_basis<Q>(m);
        if (rank<Q>(m) + k.cols() != c || !is_zero_matrix<Q>(multiply<Q>(m, k)) || rank<Q>(m) != oracle::rank(ints))
            out.fail("rank-nullity over QQ, trial " + std::to_string(trial));
        {
            ScopedCharacteristic guard(5);
            Matrix<Zp> mp(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) mp(i, j) = Zp(ints[std::size_t(i)][std::size_t(j)]);
            if (rank<Zp>(mp) + kernel_basis<Zp>(mp).cols() != c)
                out.fail("rank-nullity over GF(5), trial " + std::to_string(trial));
        }

        // Alexander duality on a term of a random resolution, which has pieces of dimension > 1
        const int n = verts(rng);
        std::uniform_int_distribution<Subset> pick(1, full_set(n));
        std::vector<Subset> g;
        for (int i = gens(rng); i > 0; --i)
            g.push_back(pick(rng));
        SqModComplex<Q> single;
        single.terms = {monomial_ideal<Q>(n, g)};
        const auto res = minimal_free_resolution(single);
        const auto terms = res.evaluate().terms;
        const auto& mod = terms[std::size_t(trial) % terms.size()];
        const auto dual = alexander_dual(mod);
        dual.validate();
        const auto back = alexander_dual(dual);
        bool same = back.dims() == mod.dims();
        for (Subset f = 0; same && f <= full_set(n); ++f)
        {
            if (dual.dim(f) != mod.dim(complement(f, n))) same = false;
            for (int v = 0; v < n && same; ++v)
                if (!has(f, v) && !equal<Q>(back.mult(v, f), mod.mult(v, f))) same = false;
            if (f == full_set(n)) break;
        }
        if (!same) out.fail("Alexander duality, trial " + std::to_string(trial));
    }
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"incidence soundness", incidence_soundness},
        {"subdivision invariance", subdivision_invariance},
        {"CM criterion equivalence on complexes with <= 5 vertices", cm_criterion_equivalence},
        {"CM iff one enriched cohomology row", cm_single_row},
        {"skeleton l-CM instances", skeleton_instances},
        {"Gorenstein* top cohomology ideal", gorenstein_ideal},
        {"hexagon identity", hexagon_identity},
        {"H^-i(F^v) = k^i", f_dual_homology},
        {"linearity characterizations", linearity},
        {"simplicial six-row table", simplicial_tables},
        {"canonical module", canonical_module_check},
        {"filter deletions acyclic", filter_deletions},
        {"randomized duality and rank-nullity", randomized},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds, o.detail.empty() ? "" : " - ", o.detail.c_str());
        std::fflush(stdout);
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
