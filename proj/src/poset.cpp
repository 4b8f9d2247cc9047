#include "cellmac/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cellmac/errors.hpp"

namespace cellmac {

namespace {

bool face_order(Face a, Face b)
{
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Face>& facets)
{
    if (n > kMaxSimplicialVertices)
        throw PreconditionError("simplicial complexes support at most 64 vertices");
    std::set<Face> all{0};
    for (Face f : facets)
    {
        if (all.count(f))
            continue;
        for (Face s = f;; s = (s - 1) & f)
        {
            all.insert(s);
            if (s == 0) break;
        }
    }
    SimplicialComplex out;
    out.n_ = n;
    out.faces_.assign(all.begin(), all.end());
    std::sort(out.faces_.begin(), out.faces_.end(), face_order);
    return out;
}

SimplicialComplex SimplicialComplex::void_complex(int n)
{
    SimplicialComplex out;
    out.n_ = n;
    return out;
}

bool SimplicialComplex::contains(Face f) const
{
    return std::binary_search(faces_.begin(), faces_.end(), f, face_order);
}

int SimplicialComplex::dim() const
{
    return faces_.empty() ? -2 : std::popcount(faces_.back()) - 1;
}

std::vector<Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (Face f : faces_)
    {
        bool maximal = true;
        for (Face g : faces_)
            if (g != f && (g & f) == f)
            {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

namespace {

SimplicialComplex filtered(const SimplicialComplex& complex, auto keep, auto map)
{
    std::vector<Face> kept;
    for (Face f : complex.faces())
        if (keep(f)) kept.push_back(map(f));
    if (kept.empty())
        return SimplicialComplex::void_complex(complex.num_vertices());
    return SimplicialComplex::from_facets(complex.num_vertices(), kept);
}

} // namespace

SimplicialComplex restriction(const SimplicialComplex& complex, Face r)
{
    return filtered(complex, [r](Face f) { return (f & ~r) == 0; }, [](Face f) { return f; });
}

SimplicialComplex deletion(const SimplicialComplex& complex, Face r)
{
    return filtered(complex, [r](Face f) { return (f & r) == 0; }, [](Face f) { return f; });
}

SimplicialComplex simplicial_link(const SimplicialComplex& complex, Face r)
{
    if (!complex.contains(r))
        return SimplicialComplex::void_complex(complex.num_vertices());
    return filtered(
        complex, [r](Face f) { return (f & r) == r; }, [r](Face f) { return f & ~r; });
}

SimplicialComplex as_simplicial(const CellComplex& complex)
{
    if (!is_simplicial(complex))
        throw NonSimplicial("complex is not simplicial");
    std::vector<Face> faces;
    for (const Cell& c : complex.cells())
        faces.push_back(Face(c.vertices));
    return SimplicialComplex::from_facets(complex.ambient_size(), faces);
}

Poset::Poset(int size, const std::vector<std::pair<int, int>>& relations, std::vector<std::string> labels)
    : less_(std::size_t(size), std::vector<char>(std::size_t(size), 0)), up_(std::size_t(size)),
      down_(std::size_t(size)), longest_(std::size_t(size), 0), shortest_(std::size_t(size), 0),
      labels_(std::move(labels))
{
    if (labels_.empty())
        for (int i = 0; i < size; ++i)
            labels_.push_back(std::to_string(i));
    for (auto [x, y] : relations)
    {
        if (x < 0 || y < 0 || x >= size || y >= size)
            throw PreconditionError("poset relation out of range");
        less_[std::size_t(x)][std::size_t(y)] = 1;
    }
    // Warshall closure
    for (int k = 0; k < size; ++k)
        for (int i = 0; i < size; ++i)
            if (less_[std::size_t(i)][std::size_t(k)])
                for (int j = 0; j < size; ++j)
                    if (less_[std::size_t(k)][std::size_t(j)]) less_[std::size_t(i)][std::size_t(j)] = 1;
    for (int i = 0; i < size; ++i)
        if (less_[std::size_t(i)][std::size_t(i)])
            throw PreconditionError("poset relations contain a cycle");

    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
        {
            if (!less(x, y))
                continue;
            bool cover = true;
            for (int z = 0; z < size && cover; ++z)
                if (less(x, z) && less(z, y)) cover = false;
            if (cover)
            {
                up_[std::size_t(x)].push_back(y);
                down_[std::size_t(y)].push_back(x);
            }
        }

    // chain lengths from minimal elements, in an order refining <
    std::vector<int> order(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        order[std::size_t(i)] = i;
    std::vector<int> below(std::size_t(size), 0);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (less(j, i)) ++below[std::size_t(i)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return below[std::size_t(a)] < below[std::size_t(b)]; });
    for (int x : order)
    {
        const auto& d = down_[std::size_t(x)];
        if (d.empty())
            continue;
        int lo = 1 << 30, hi = 0;
        for (int y : d)
        {
            lo = std::min(lo, shortest_[std::size_t(y)] + 1);
            hi = std::max(hi, longest_[std::size_t(y)] + 1);
        }
        shortest_[std::size_t(x)] = lo;
        longest_[std::size_t(x)] = hi;
    }
}

bool Poset::is_graded() const
{
    int length = -1;
    for (int x = 0; x < size(); ++x)
    {
        if (!up_[std::size_t(x)].empty())
            continue;
        if (shortest_[std::size_t(x)] != longest_[std::size_t(x)])
            return false;
        if (length >= 0 && length != longest_[std::size_t(x)])
            return false;
        length = longest_[std::size_t(x)];
    }
    return true;
}

int Poset::rank() const
{
    int r = -1;
    for (int l : longest_)
        r = std::max(r, l);
    return r;
}

Poset Poset::induced(const std::vector<int>& elements) const
{
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elements.size(); ++i)
    {
        labels.push_back(labels_[std::size_t(elements[i])]);
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (less(elements[i], elements[j])) rel.emplace_back(int(i), int(j));
    }
    return Poset(int(elements.size()), rel, std::move(labels));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y : up_[std::size_t(x)])
            out.emplace_back(x, y);
    return out;
}

Poset face_poset(const CellComplex& complex)
{
    const int m = int(complex.size()) - 1;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels;
    for (int b = 0; b < m; ++b)
    {
        labels.push_back(complex.cell(std::size_t(b + 1)).id);
        for (std::size_t f : complex.cell(std::size_t(b + 1)).facets)
            if (f != CellComplex::empty_cell()) rel.emplace_back(int(f) - 1, b);
    }
    return Poset(m, rel, std::move(labels));
}

Poset with_bounds(const Poset& poset)
{
    const int m = poset.size();
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels{"0"};
    for (int x = 0; x < m; ++x)
    {
        labels.push_back(poset.labels()[std::size_t(x)]);
        rel.emplace_back(0, x + 1);
        rel.emplace_back(x + 1, m + 1);
        for (int y : poset.upper_covers(x))
            rel.emplace_back(x + 1, y + 1);
    }
    labels.push_back("1");
    if (m == 0)
        rel.emplace_back(0, 1);
    return Poset(m + 2, rel, std::move(labels));
}

SimplicialComplex order_complex(const Poset& poset)
{
    const int m = poset.size();
    if (m > kMaxSimplicialVertices)
        throw PreconditionError("order complex supports posets with at most 64 elements");
    // maximal chains by depth-first search over covers
    std::vector<Face> chains;
    auto extend = [&](auto&& self, int x, Face chain) -> void {
        chain |= Face(1) << x;
        if (poset.upper_covers(x).empty())
        {
            chains.push_back(chain);
            return;
        }
        for (int y : poset.upper_covers(x))
            self(self, y, chain);
    };
    for (int x = 0; x < m; ++x)
        if (poset.lower_covers(x).empty()) extend(extend, x, 0);
    return SimplicialComplex::from_facets(m, chains);
}

std::vector<int> filter(const Poset& poset, const std::vector<int>& r)
{
    for (int x : r)
        if (x < 0 || x >= poset.size())
            throw PreconditionError("filter generator is not an element of the poset");
    std::vector<int> out;
    for (int y = 0; y < poset.size(); ++y)
        for (int x : r)
            if (poset.leq(x, y))
            {
                out.push_back(y);
                break;
            }
    return out;
}

Poset open_interval(const Poset& poset, int x, int y)
{
    if (x < 0 || y < 0 || x >= poset.size() || y >= poset.size() || !poset.less(x, y))
        throw PreconditionError("open interval needs x < y");
    std::vector<int> inside;
    for (int z = 0; z < poset.size(); ++z)
        if (poset.less(x, z) && poset.less(z, y)) inside.push_back(z);
    return poset.induced(inside);
}

bool is_lattice(const Poset& poset)
{
    const int m = poset.size();
    auto has_extremum = [&](int a, int b, bool meet) {
        std::vector<int> bounds;
        for (int c = 0; c < m; ++c)
            if (meet ? (poset.leq(c, a) && poset.leq(c, b)) : (poset.leq(a, c) && poset.leq(b, c)))
                bounds.push_back(c);
        for (int c : bounds)
        {
            bool dominates = true;
            for (int d : bounds)
                if (meet ? !poset.leq(d, c) : !poset.leq(c, d)) dominates = false;
            if (dominates) return true;
        }
        return false;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!has_extremum(a, b, true) || !has_extremum(a, b, false)) return false;
    return true;
}

int poset_rank(const Poset& poset)
{
    return poset.rank();
}

} // namespace cellmac
