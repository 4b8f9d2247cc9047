/**
 * Finite posets, simplicial complexes, and the constructions linking them
 * to cell complexes: face posets, order complexes, filters, intervals, links.
 */
#ifndef CELLMAC_POSET_HPP
#define CELLMAC_POSET_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cellmac/cell_complex.hpp"

namespace cellmac {

/// Vertex set of a simplex; bit i stands for vertex i.
using Face = std::uint64_t;

inline constexpr int kMaxSimplicialVertices = 64;

/// Downward closed family of subsets of {0, .., n-1}. A default constructed complex is void (no faces at all).
class SimplicialComplex
{
public:
    SimplicialComplex() = default;
    /// Closes the given faces downward; an empty list still yields the complex {∅}.
    static SimplicialComplex from_facets(int n, const std::vector<Face>& facets);
    static SimplicialComplex void_complex(int n);

    int num_vertices() const { return n_; }
    /// Faces sorted by cardinality, then numerically.
    const std::vector<Face>& faces() const { return faces_; }
    bool contains(Face f) const;
    bool is_void() const { return faces_.empty(); }
    int dim() const;
    std::vector<Face> facets() const;

private:
    int n_ = 0;
    std::vector<Face> faces_;
};

SimplicialComplex restriction(const SimplicialComplex& complex, Face r);
SimplicialComplex deletion(const SimplicialComplex& complex, Face r);
/// Faces Y disjoint from R with Y ∪ R a face; void when R is not a face.
SimplicialComplex simplicial_link(const SimplicialComplex& complex, Face r);

/// Simplicial complex of a simplicial cell complex, on the same vertex indices.
SimplicialComplex as_simplicial(const CellComplex& complex);

class Poset
{
public:
    Poset() = default;
    /// `relations` lists pairs (x, y) with x < y; the order is their transitive closure.
    Poset(int size, const std::vector<std::pair<int, int>>& relations, std::vector<std::string> labels = {});

    int size() const { return int(less_.size()); }
    bool less(int x, int y) const { return less_[std::size_t(x)][std::size_t(y)] != 0; }
    bool leq(int x, int y) const { return x == y || less(x, y); }
    /// Elements covering x.
    const std::vector<int>& upper_covers(int x) const { return up_[std::size_t(x)]; }
    const std::vector<int>& lower_covers(int x) const { return down_[std::size_t(x)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Length of the longest chain ending at x; minimal elements have rank 0.
    int rank_of(int x) const { return longest_[std::size_t(x)]; }
    /// Every maximal chain has the same length.
    bool is_graded() const;
    /// Length of the longest chain (number of elements minus one); -1 when empty.
    int rank() const;

    Poset induced(const std::vector<int>& elements) const;
    std::vector<std::pair<int, int>> cover_pairs() const;

private:
    std::vector<std::vector<char>> less_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> longest_, shortest_;
    std::vector<std::string> labels_;
};

/// Nonempty cells ordered by inclusion; element i is cell i + 1.
Poset face_poset(const CellComplex& complex);
/// Adjoins a bottom (index 0) and a top (index size + 1); element i becomes i + 1.
Poset with_bounds(const Poset& poset);
SimplicialComplex order_complex(const Poset& poset);
/// Elements above some element of r, sorted.
std::vector<int> filter(const Poset& poset, const std::vector<int>& r);
/// Elements strictly between x and y; requires x < y.
Poset open_interval(const Poset& poset, int x, int y);
bool is_lattice(const Poset& poset);
int poset_rank(const Poset& poset);

} // namespace cellmac

#endif
