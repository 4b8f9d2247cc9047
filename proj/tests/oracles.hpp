// Brute-force reference computations used by the tests. They share no
// elimination or sign code with the library: ranks are taken modulo a large
// prime over int64, and cell complexes are handled through the chains of
// their face posets.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cellmac/cell_complex.hpp"

namespace oracle {

using Mask = std::uint64_t;
constexpr std::int64_t kPrime = 1000003;

inline std::int64_t modp(std::int64_t x) { return ((x % kPrime) + kPrime) % kPrime; }

inline std::int64_t inverse(std::int64_t a)
{
    std::int64_t result = 1, e = kPrime - 2;
    a = modp(a);
    while (e)
    {
        if (e & 1) result = result * a % kPrime;
        a = a * a % kPrime;
        e >>= 1;
    }
    return result;
}

inline int rank(std::vector<std::vector<std::int64_t>> m)
{
    int r = 0;
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c)
    {
        int p = r;
        while (p < rows && modp(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const std::int64_t inv = inverse(m[r][c]);
        for (int i = 0; i < rows; ++i)
        {
            if (i == r || modp(m[i][c]) == 0) continue;
            const std::int64_t f = modp(m[i][c]) * inv % kPrime;
            for (int j = c; j < cols; ++j)
                m[i][j] = modp(m[i][j] - f * modp(m[r][j]));
        }
        ++r;
    }
    return r;
}

/// Reduced homology of a family of simplices closed under subsets, as {degree -> dim}; includes ∅ if present.
inline std::map<int, int> simplicial_homology(const std::set<Mask>& faces)
{
    std::map<int, std::vector<Mask>> by_dim;
    for (Mask f : faces)
        by_dim[std::popcount(f) - 1].push_back(f);
    std::map<int, int> ranks;   // rank of boundary out of dimension d
    for (auto& [d, list] : by_dim)
    {
        if (d < 0 || !by_dim.count(d - 1)) { ranks[d] = 0; continue; }
        const auto& lower = by_dim[d - 1];
        std::map<Mask, int> pos;
        for (std::size_t i = 0; i < lower.size(); ++i) pos[lower[i]] = int(i);
        std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(list.size(), 0));
        for (std::size_t j = 0; j < list.size(); ++j)
        {
            int sign = 1;
            for (Mask rest = list[j]; rest; rest &= rest - 1)
            {
                const Mask bit = rest & (~rest + 1);
                m[std::size_t(pos.at(list[j] & ~bit))][j] = sign;
                sign = -sign;
            }
        }
        ranks[d] = rank(m);
    }
    std::map<int, int> h;
    for (auto& [d, list] : by_dim)
    {
        const int out = ranks.count(d) ? ranks[d] : 0;
        const int in = ranks.count(d + 1) ? ranks[d + 1] : 0;
        const int value = int(list.size()) - out - in;
        if (value) h[d] = value;
    }
    return h;
}

inline int at(const std::map<int, int>& h, int p)
{
    const auto it = h.find(p);
    return it == h.end() ? 0 : it->second;
}

/// Downward closure of a list of simplices (always contains ∅).
inline std::set<Mask> closure(const std::vector<Mask>& facets)
{
    std::set<Mask> out{0};
    for (Mask f : facets)
        for (Mask s = f;; s = (s - 1) & f)
        {
            out.insert(s);
            if (s == 0) break;
        }
    return out;
}

inline std::set<Mask> restrict_to(const std::set<Mask>& faces, Mask r)
{
    std::set<Mask> out;
    for (Mask f : faces)
        if ((f & ~r) == 0) out.insert(f);
    return out;
}

/// Faces Y disjoint from R with Y ∪ R a face; empty set (void) if R is not a face.
inline std::set<Mask> link(const std::set<Mask>& faces, Mask r)
{
    std::set<Mask> out;
    for (Mask f : faces)
        if ((f & r) == r) out.insert(f & ~r);
    return out;
}

/// Face containment among the cells of a complex, from vertex sets and facet lists only.
inline std::vector<std::vector<bool>> face_order(const cellmac::CellComplex& cx)
{
    const std::size_t n = cx.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));   // below[b][a]: a <= b
    for (std::size_t b = 0; b < n; ++b)
    {
        std::vector<std::size_t> stack{b};
        while (!stack.empty())
        {
            const std::size_t x = stack.back();
            stack.pop_back();
            if (below[b][x]) continue;
            below[b][x] = true;
            for (std::size_t f : cx.cell(x).facets) stack.push_back(f);
        }
    }
    return below;
}

/// Reduced homology of the cells with vertex set inside R, via chains of nonempty cells (barycentric subdivision).
inline std::map<int, int> cell_homology(const cellmac::CellComplex& cx, std::uint32_t r)
{
    const auto below = face_order(cx);
    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < cx.size(); ++i)
        if (cx.cell(i).dim >= 0 && (cx.cell(i).vertices & ~r) == 0) cells.push_back(i);
    if (cells.size() > 63) throw std::runtime_error("oracle limited to 63 cells");
    std::set<Mask> chains{0};
    std::vector<Mask> frontier{0};
    while (!frontier.empty())
    {
        std::vector<Mask> next;
        for (Mask c : frontier)
            for (std::size_t j = 0; j < cells.size(); ++j)
            {
                if (c >> j & 1) continue;
                bool comparable = true;
                for (std::size_t i = 0; i < cells.size() && comparable; ++i)
                    if (c >> i & 1)
                        comparable = below[cells[i]][cells[j]] || below[cells[j]][cells[i]];
                if (!comparable) continue;
                const Mask d = c | (Mask(1) << j);
                if (chains.insert(d).second) next.push_back(d);
            }
        frontier.swap(next);
    }
    return simplicial_homology(chains);
}

/// Simplicial faces of a simplicial cell complex as vertex masks.
inline std::set<Mask> faces_of(const cellmac::CellComplex& cx)
{
    std::set<Mask> out;
    for (const auto& c : cx.cells())
        out.insert(c.vertices);
    return out;
}

/// Expected Betti and cohomology entries of the six corners for simplicial input.
struct CornerTables
{
    std::set<Mask> faces;
    int n;

    int restr(std::uint32_t t, int p) const { return at(simplicial_homology(restrict_to(faces, t)), p); }
    int lk(std::uint32_t t, int p) const { return at(simplicial_homology(link(faces, t)), p); }
    bool face(std::uint32_t t) const { return faces.count(t) != 0; }

    // corner order: E[-1], G^v, G, F^v, F, E^v[-1]
    int betti(int corner, int l, std::uint32_t f) const
    {
        const std::uint32_t fc = ((std::uint32_t(1) << n) - 1) & ~f;
        const int sf = std::popcount(f), sfc = std::popcount(fc);
        switch (corner)
        {
        case 0: return face(f) && l == -sf;
        case 1: return lk(f, l - 1);
        case 2: return lk(fc, -l - 1);
        case 3: return restr(f, sf + l - 1);
        case 4: return restr(fc, sfc - l - 1);
        case 5: return face(fc) && l == sfc;
        }
        return -1;
    }

    int cohomology(int corner, int l, std::uint32_t t) const
    {
        const std::uint32_t tc = ((std::uint32_t(1) << n) - 1) & ~t;
        switch (corner)
        {
        case 0: return restr(t, -l - 1);
        case 1: return restr(tc, l - 1);
        case 2: return l == 0 && face(tc);
        case 3: return l == 0 && face(t);
        case 4: return lk(t, n - l - 1 - std::popcount(t));
        case 5: return lk(tc, l - 1 - std::popcount(tc));
        }
        return -1;
    }
};

} // namespace oracle
