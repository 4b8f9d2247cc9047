/**
 * Finite regular cell complexes with the intersection property.
 *
 * A complex is described by its face lattice: every cell records its
 * dimension, its vertex set and its facets (the cells of one dimension less
 * on its boundary). Incidence signs are computed at construction, so the
 * cellular chain complex is available without geometric input.
 */
#ifndef CELLMAC_CELL_COMPLEX_HPP
#define CELLMAC_CELL_COMPLEX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cellmac/subset.hpp"

namespace cellmac {

struct CellSpec
{
    std::string id;
    int dim = 0;
    std::vector<std::string> vertices;
    std::vector<std::string> facets;
};

/// Unvalidated description of a complex, as read from a file or generated.
struct ComplexSpec
{
    std::vector<std::string> vertices;
    std::vector<CellSpec> cells;
};

struct Cell
{
    std::string id;
    int dim = -1;
    Subset vertices = 0;
    std::vector<std::size_t> facets;
    std::vector<int> signs;   ///< incidence number of each facet, parallel to `facets`
};

class CellComplex
{
public:
    /// Id given to the synthesized empty cell.
    static constexpr const char* kEmptyId = "{}";

    const std::vector<std::string>& vertex_names() const { return names_; }
    /// Size of the ambient vertex list (subsets are masks over it).
    int ambient_size() const { return int(names_.size()); }
    /// Vertices that are 0-cells of this complex.
    Subset vertex_set() const { return vertex_set_; }
    int num_vertices() const { return cardinality(vertex_set_); }

    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(std::size_t i) const { return cells_[i]; }
    std::size_t size() const { return cells_.size(); }
    /// Index of the empty cell; cells are sorted by dimension, so it is always first.
    static constexpr std::size_t empty_cell() { return 0; }
    int dim() const { return dim_; }

    std::vector<std::size_t> cells_of_dim(int d) const;
    std::optional<std::size_t> find(const std::string& id) const;
    /// True iff cell a is a face of (or equal to) cell b.
    bool is_face(std::size_t a, std::size_t b) const { return leq_[b][a] != 0; }
    /// Cells maximal under inclusion.
    std::vector<std::size_t> facets() const;

    /// Subcomplex on the cells accepted by `keep`; must be closed under taking faces.
    CellComplex subcomplex(const std::function<bool(const Cell&)>& keep) const;

    std::string describe_subset(Subset s) const;

private:
    friend CellComplex build_complex(const ComplexSpec& spec);
    void finish_order();

    std::vector<std::string> names_;
    std::vector<Cell> cells_;
    std::vector<std::vector<char>> leq_;   ///< leq_[b][a] != 0 iff a <= b
    Subset vertex_set_ = 0;
    int dim_ = -1;
};

/**
 * Validates a description and computes incidence signs.
 *
 * Throws MalformedSpec, NonGraded, IntersectionPropertyViolation or
 * BoundaryNotSphere.
 */
CellComplex build_complex(const ComplexSpec& spec);

/// Cells whose vertex set lies inside `r`.
CellComplex restriction(const CellComplex& complex, Subset r);
/// Restriction to the complement of `r`.
CellComplex deletion(const CellComplex& complex, Subset r);
/// Cells of dimension at most d; d >= -1.
CellComplex skeleton(const CellComplex& complex, int d);

bool is_simplicial(const CellComplex& complex);

/// Global check that consecutive boundary maps compose to zero.
bool boundary_squares_to_zero(const CellComplex& complex);

// Constructors for standard complexes. Vertex names are given in the order
// that fixes all sign conventions.
CellComplex simplicial_from_facets(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<std::string>>& facets);
CellComplex simplex(int d);
CellComplex boundary_simplex(int d);
CellComplex polygon(int k);
CellComplex polygon_boundary(int k);
/// Product of a complex with a segment; vertex v becomes v0 and v1.
CellComplex prism(const CellComplex& base);
CellComplex cube(int d);
CellComplex cube_boundary(int d);
CellComplex cross_polytope_boundary(int d);
/// Removes the unique top-dimensional cell.
CellComplex boundary_of_cell(const CellComplex& ball);

ComplexSpec to_spec(const CellComplex& complex);

} // namespace cellmac

#endif
