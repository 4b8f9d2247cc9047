#include "cellmac/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cellmac/errors.hpp"
#include "cellmac/linalg.hpp"

namespace cellmac {

std::vector<std::size_t> CellComplex::cells_of_dim(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].dim == d) out.push_back(i);
    return out;
}

std::optional<std::size_t> CellComplex::find(const std::string& id) const
{
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].id == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> CellComplex::facets() const
{
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < cells_.size(); ++a)
    {
        bool maximal = true;
        for (std::size_t b = 0; b < cells_.size() && maximal; ++b)
            if (b != a && is_face(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

std::string CellComplex::describe_subset(Subset s) const
{
    std::string out = "{";
    bool first = true;
    for (int v : members(s))
    {
        if (!first) out += ",";
        out += names_[std::size_t(v)];
        first = false;
    }
    return out + "}";
}

void CellComplex::finish_order()
{
    const std::size_t m = cells_.size();
    leq_.assign(m, std::vector<char>(m, 0));
    vertex_set_ = 0;
    dim_ = -1;
    for (std::size_t b = 0; b < m; ++b)
    {
        leq_[b][b] = 1;
        for (std::size_t f : cells_[b].facets)
            for (std::size_t a = 0; a < m; ++a)
                if (leq_[f][a]) leq_[b][a] = 1;
        if (cells_[b].dim == 0) vertex_set_ |= cells_[b].vertices;
        dim_ = std::max(dim_, cells_[b].dim);
    }
}

CellComplex CellComplex::subcomplex(const std::function<bool(const Cell&)>& keep) const
{
    CellComplex out;
    out.names_ = names_;
    std::vector<std::ptrdiff_t> remap(cells_.size(), -1);
    for (std::size_t i = 0; i < cells_.size(); ++i)
    {
        if (i != empty_cell() && !keep(cells_[i]))
            continue;
        remap[i] = std::ptrdiff_t(out.cells_.size());
        out.cells_.push_back(cells_[i]);
    }
    for (auto& c : out.cells_)
        for (auto& f : c.facets)
        {
            if (remap[f] < 0)
                throw std::logic_error("subcomplex is not closed under faces at cell '" + c.id + "'");
            f = std::size_t(remap[f]);
        }
    out.finish_order();
    return out;
}

namespace {

/// Boundary matrix from the cells `upper` (columns) to `lower` (rows) using stored signs.
Matrix<Rational> boundary_block(const CellComplex& cx, const std::vector<std::size_t>& lower,
                                const std::vector<std::size_t>& upper)
{
    std::unordered_map<std::size_t, Index> row;
    for (std::size_t i = 0; i < lower.size(); ++i)
        row[lower[i]] = Index(i);
    Matrix<Rational> m = Matrix<Rational>::Zero(Index(lower.size()), Index(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j)
    {
        const Cell& c = cx.cell(upper[j]);
        for (std::size_t k = 0; k < c.facets.size(); ++k)
        {
            auto it = row.find(c.facets[k]);
            if (it != row.end()) m(it->second, Index(j)) = Rational(c.signs[k]);
        }
    }
    return m;
}

void check_intersection_property(const CellComplex& cx)
{
    const std::size_t m = cx.size();
    for (std::size_t a = 1; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
        {
            // the common lower bound of largest dimension must dominate all others
            std::vector<std::size_t> common;
            std::size_t top = CellComplex::empty_cell();
            for (std::size_t c = 0; c < m; ++c)
                if (cx.is_face(c, a) && cx.is_face(c, b))
                {
                    common.push_back(c);
                    if (cx.cell(c).dim > cx.cell(top).dim) top = c;
                }
            for (std::size_t c : common)
                if (!cx.is_face(c, top))
                    throw IntersectionPropertyViolation(cx.cell(a).id, cx.cell(b).id);
        }
}

} // namespace

namespace detail {

// Signs for cell `index`, whose proper faces already carry signs.
void assign_signs(CellComplex& cx, std::vector<Cell>& cells, std::size_t index,
                  const std::vector<std::vector<char>>& leq)
{
    Cell& c = cells[index];
    if (c.dim == 0)
    {
        c.signs.assign(1, 1);
        return;
    }
    const int d = c.dim;
    std::vector<std::vector<std::size_t>> by_dim(std::size_t(d + 1));   // dims -1 .. d-1
    for (std::size_t x = 0; x < cells.size(); ++x)
        if (x != index && leq[index][x]) by_dim[std::size_t(cells[x].dim + 1)].push_back(x);

    // facets in the order they are listed on the cell
    by_dim[std::size_t(d)] = c.facets;

    std::vector<Index> ranks(std::size_t(d + 2), 0);   // ranks[j+1] = rank of boundary C_j -> C_{j-1}
    Matrix<Rational> top;
    for (int j = 0; j <= d - 1; ++j)
    {
        Matrix<Rational> m = boundary_block(cx, by_dim[std::size_t(j)], by_dim[std::size_t(j + 1)]);
        ranks[std::size_t(j + 1)] = rank<Rational>(m);
        if (j == d - 1) top = std::move(m);
    }
    for (int j = -1; j <= d - 1; ++j)
    {
        const Index size = Index(by_dim[std::size_t(j + 1)].size());
        const Index h = size - ranks[std::size_t(j + 1)] - (j + 1 <= d - 1 ? ranks[std::size_t(j + 2)] : 0);
        const Index expected = j == d - 1 ? 1 : 0;
        if (h != expected)
            throw BoundaryNotSphere("boundary of cell '" + c.id + "' has reduced homology of rank " +
                                    std::to_string(h) + " in degree " + std::to_string(j) +
                                    ", expected a " + std::to_string(d - 1) + "-sphere");
    }
    Matrix<Rational> gen = kernel_basis<Rational>(top);
    normalize_columns(gen);
    c.signs.resize(c.facets.size());
    for (std::size_t k = 0; k < c.facets.size(); ++k)
    {
        const Rational& v = gen(Index(k), 0);
        if (v != 1 && v != -1)
            throw BoundaryNotSphere("boundary cycle of cell '" + c.id +
                                    "' does not have unit coefficients on every facet");
        c.signs[k] = v == 1 ? 1 : -1;
    }
}

} // namespace detail

CellComplex build_complex(const ComplexSpec& spec)
{
    CellComplex cx;
    if (spec.vertices.size() > std::size_t(kMaxVertices))
        throw MalformedSpec("at most " + std::to_string(kMaxVertices) + " vertices are supported");
    std::map<std::string, int> vertex_index;
    for (const auto& name : spec.vertices)
    {
        if (name.empty())
            throw MalformedSpec("empty vertex name");
        if (!vertex_index.emplace(name, int(vertex_index.size())).second)
            throw MalformedSpec("duplicate vertex '" + name + "'");
    }
    cx.names_ = spec.vertices;

    // Gather cells, synthesizing the empty cell when absent.
    std::vector<CellSpec> raw;
    bool have_empty = false;
    for (const auto& c : spec.cells)
    {
        if (c.dim < -1)
            throw MalformedSpec("cell '" + c.id + "' has dimension " + std::to_string(c.dim));
        if (c.dim == -1)
        {
            if (have_empty)
                throw MalformedSpec("more than one cell of dimension -1");
            if (!c.vertices.empty() || !c.facets.empty())
                throw MalformedSpec("the empty cell '" + c.id + "' must have no vertices or facets");
            have_empty = true;
        }
        raw.push_back(c);
    }
    if (!have_empty)
        raw.push_back(CellSpec{CellComplex::kEmptyId, -1, {}, {}});
    std::stable_sort(raw.begin(), raw.end(), [](const CellSpec& a, const CellSpec& b) { return a.dim < b.dim; });

    std::map<std::string, std::size_t> id_index;
    for (std::size_t i = 0; i < raw.size(); ++i)
    {
        if (raw[i].id.empty())
            throw MalformedSpec("cell with empty id");
        if (!id_index.emplace(raw[i].id, i).second)
            throw MalformedSpec("duplicate cell id '" + raw[i].id + "'");
    }
    const std::string empty_id = raw.front().id;

    std::vector<Cell> cells(raw.size());
    Subset zero_cells = 0;
    for (std::size_t i = 0; i < raw.size(); ++i)
    {
        const CellSpec& r = raw[i];
        Cell& c = cells[i];
        c.id = r.id;
        c.dim = r.dim;
        for (const auto& v : r.vertices)
        {
            auto it = vertex_index.find(v);
            if (it == vertex_index.end())
                throw MalformedSpec("cell '" + r.id + "' uses unknown vertex '" + v + "'");
            if (has(c.vertices, it->second))
                throw MalformedSpec("cell '" + r.id + "' lists vertex '" + v + "' twice");
            c.vertices |= singleton(it->second);
        }
        if (c.dim == -1)
            continue;
        std::set<std::size_t> seen;
        for (const auto& f : r.facets)
        {
            auto it = id_index.find(f);
            if (it == id_index.end())
                throw MalformedSpec("cell '" + r.id + "' has unknown facet '" + f + "'");
            if (!seen.insert(it->second).second)
                throw MalformedSpec("cell '" + r.id + "' lists facet '" + f + "' twice");
            c.facets.push_back(it->second);
        }
        if (c.dim == 0)
        {
            if (cardinality(c.vertices) != 1)
                throw MalformedSpec("0-cell '" + r.id + "' must have exactly one vertex");
            if (c.facets.empty())
                c.facets.push_back(0);
            if (c.facets.size() != 1 || c.facets[0] != 0)
                throw MalformedSpec("0-cell '" + r.id + "' may only have the empty cell '" + empty_id +
                                    "' as facet");
            if (zero_cells & c.vertices)
                throw MalformedSpec("vertex of 0-cell '" + r.id + "' has more than one 0-cell");
            zero_cells |= c.vertices;
            continue;
        }
        if (c.facets.empty())
            throw MalformedSpec("cell '" + r.id + "' of dimension " + std::to_string(c.dim) + " has no facets");
        Subset from_facets = 0;
        for (std::size_t f : c.facets)
        {
            if (cells[f].dim != c.dim - 1)
                throw NonGraded("facet '" + cells[f].id + "' of cell '" + c.id + "' has dimension " +
                                std::to_string(cells[f].dim) + ", expected " + std::to_string(c.dim - 1));
            from_facets |= cells[f].vertices;
        }
        if (from_facets != c.vertices)
            throw MalformedSpec("vertex set of cell '" + c.id + "' differs from the union of its facets' vertex sets");
    }
    if (zero_cells != full_set(int(spec.vertices.size())))
    {
        for (const auto& [name, v] : vertex_index)
            if (!has(zero_cells, v))
                throw MalformedSpec("vertex '" + name + "' has no 0-cell");
    }

    cx.cells_ = std::move(cells);
    cx.finish_order();
    check_intersection_property(cx);

    // by increasing dimension, so every boundary already carries its signs
    for (std::size_t i = 1; i < cx.cells_.size(); ++i)
        detail::assign_signs(cx, cx.cells_, i, cx.leq_);
    if (!boundary_squares_to_zero(cx))
        throw BoundaryNotSphere("incidence signs do not square to zero");
    return cx;
}

CellComplex restriction(const CellComplex& complex, Subset r)
{
    return complex.subcomplex([r](const Cell& c) { return contains(r, c.vertices); });
}

CellComplex deletion(const CellComplex& complex, Subset r)
{
    return restriction(complex, complement(r, complex.ambient_size()));
}

CellComplex skeleton(const CellComplex& complex, int d)
{
    if (d < -1)
        throw PreconditionError("skeleton dimension must be at least -1");
    return complex.subcomplex([d](const Cell& c) { return c.dim <= d; });
}

bool is_simplicial(const CellComplex& complex)
{
    return std::all_of(complex.cells().begin(), complex.cells().end(),
                       [](const Cell& c) { return cardinality(c.vertices) == c.dim + 1; });
}

bool boundary_squares_to_zero(const CellComplex& complex)
{
    for (int d = 1; d <= complex.dim(); ++d)
    {
        const auto top = complex.cells_of_dim(d);
        const auto mid = complex.cells_of_dim(d - 1);
        const auto low = complex.cells_of_dim(d - 2);
        const auto outer = boundary_block(complex, low, mid);
        const auto inner = boundary_block(complex, mid, top);
        if (!is_zero_matrix<Rational>(multiply<Rational>(outer, inner)))
            return false;
    }
    return true;
}

ComplexSpec to_spec(const CellComplex& complex)
{
    ComplexSpec spec;
    spec.vertices = complex.vertex_names();
    for (const Cell& c : complex.cells())
    {
        if (c.dim < 0)
            continue;
        CellSpec s{c.id, c.dim, {}, {}};
        for (int v : members(c.vertices))
            s.vertices.push_back(complex.vertex_names()[std::size_t(v)]);
        if (c.dim > 0)
            for (std::size_t f : c.facets)
                s.facets.push_back(complex.cell(f).id);
        spec.cells.push_back(std::move(s));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

std::string id_for(const std::vector<std::string>& names, Subset vertices)
{
    if (vertices == 0)
        return CellComplex::kEmptyId;
    std::string id;
    for (int v : members(vertices))
    {
        if (!id.empty()) id += ",";
        id += names[std::size_t(v)];
    }
    return id;
}

std::vector<std::string> numbered(int count)
{
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i)
        names.push_back(std::to_string(i));
    return names;
}

/// Simplicial complex generated by facets given as vertex masks.
CellComplex simplicial_from_masks(const std::vector<std::string>& names, const std::vector<Subset>& facets)
{
    std::set<Subset> faces;
    for (Subset f : facets)
        for (Subset s = f;; s = (s - 1) & f)
        {
            faces.insert(s);
            if (s == 0) break;
        }
    std::vector<Subset> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](Subset a, Subset b) { return cardinality(a) < cardinality(b); });
    ComplexSpec spec;
    spec.vertices = names;
    for (Subset f : ordered)
    {
        if (f == 0)
            continue;
        CellSpec c{id_for(names, f), cardinality(f) - 1, {}, {}};
        for (int v : members(f))
            c.vertices.push_back(names[std::size_t(v)]);
        if (c.dim > 0)
            for (int v : members(f))
                c.facets.push_back(id_for(names, f & ~singleton(v)));
        spec.cells.push_back(std::move(c));
    }
    return build_complex(spec);
}

} // namespace

CellComplex simplicial_from_facets(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<std::string>>& facets)
{
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = int(i);
    std::vector<Subset> masks;
    for (const auto& f : facets)
    {
        Subset m = 0;
        for (const auto& v : f)
        {
            auto it = index.find(v);
            if (it == index.end())
                throw MalformedSpec("facet uses unknown vertex '" + v + "'");
            m |= singleton(it->second);
        }
        masks.push_back(m);
    }
    return simplicial_from_masks(vertices, masks);
}

CellComplex simplex(int d)
{
    if (d < 0)
        throw PreconditionError("simplex dimension must be non-negative");
    return simplicial_from_masks(numbered(d + 1), {full_set(d + 1)});
}

CellComplex boundary_simplex(int d)
{
    if (d < 1)
        throw PreconditionError("boundary_simplex needs dimension at least 1");
    std::vector<Subset> facets;
    for (int v = 0; v <= d; ++v)
        facets.push_back(full_set(d + 1) & ~singleton(v));
    return simplicial_from_masks(numbered(d + 1), facets);
}

CellComplex polygon_boundary(int k)
{
    if (k < 3)
        throw PreconditionError("a polygon needs at least 3 vertices");
    std::vector<Subset> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back(singleton(i) | singleton((i + 1) % k));
    return simplicial_from_masks(numbered(k), edges);
}

CellComplex polygon(int k)
{
    ComplexSpec spec = to_spec(polygon_boundary(k));
    CellSpec face{"", 2, {}, {}};
    for (int i = 0; i < k; ++i)
    {
        face.vertices.push_back(spec.vertices[std::size_t(i)]);
        face.id += (i ? "," : "") + spec.vertices[std::size_t(i)];
    }
    for (const auto& c : spec.cells)
        if (c.dim == 1) face.facets.push_back(c.id);
    spec.cells.push_back(face);
    return build_complex(spec);
}

CellComplex prism(const CellComplex& base)
{
    const int n = base.ambient_size();
    ComplexSpec spec;
    std::vector<std::string> names;
    for (int layer = 0; layer < 2; ++layer)
        for (const auto& v : base.vertex_names())
            names.push_back(v + char('0' + layer));
    spec.vertices = names;

    auto lift = [n](Subset s, int layer) { return layer == 0 ? s : Subset(s << n); };
    auto add = [&](int dim, Subset verts, const std::vector<Subset>& facet_sets) {
        CellSpec c{id_for(names, verts), dim, {}, {}};
        for (int v : members(verts))
            c.vertices.push_back(names[std::size_t(v)]);
        for (Subset f : facet_sets)
            c.facets.push_back(id_for(names, f));
        spec.cells.push_back(std::move(c));
    };
    for (int d = 0; d <= base.dim() + 1; ++d)
    {
        for (const Cell& c : base.cells())
        {
            if (c.dim == d)
                for (int layer = 0; layer < 2; ++layer)
                {
                    std::vector<Subset> fs;
                    if (c.dim > 0)
                        for (std::size_t f : c.facets)
                            fs.push_back(lift(base.cell(f).vertices, layer));
                    add(d, lift(c.vertices, layer), fs);
                }
            if (c.dim == d - 1 && c.dim >= 0)
            {
                std::vector<Subset> fs{lift(c.vertices, 0), lift(c.vertices, 1)};
                if (c.dim > 0)
                    for (std::size_t f : c.facets)
                        fs.push_back(lift(base.cell(f).vertices, 0) | lift(base.cell(f).vertices, 1));
                add(d, lift(c.vertices, 0) | lift(c.vertices, 1), fs);
            }
        }
    }
    return build_complex(spec);
}

CellComplex cube(int d)
{
    if (d < 1)
        throw PreconditionError("cube dimension must be at least 1");
    CellComplex c = simplicial_from_masks({"0", "1"}, {Subset(3)});
    for (int k = 1; k < d; ++k)
        c = prism(c);
    return c;
}

CellComplex boundary_of_cell(const CellComplex& ball)
{
    if (ball.cells_of_dim(ball.dim()).size() != 1)
        throw PreconditionError("boundary_of_cell needs a unique top-dimensional cell");
    return skeleton(ball, ball.dim() - 1);
}

CellComplex cube_boundary(int d)
{
    return boundary_of_cell(cube(d));
}

CellComplex cross_polytope_boundary(int d)
{
    if (d < 1)
        throw PreconditionError("cross-polytope dimension must be at least 1");
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i)
    {
        names.push_back("+" + std::to_string(i));
        names.push_back("-" + std::to_string(i));
    }
    std::vector<Subset> facets;
    for (Subset signs = 0; signs < (Subset(1) << d); ++signs)
    {
        Subset f = 0;
        for (int i = 0; i < d; ++i)
            f |= singleton(2 * i + int((signs >> i) & 1u));
        facets.push_back(f);
    }
    return simplicial_from_masks(names, facets);
}

} // namespace cellmac
