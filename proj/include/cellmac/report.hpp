/**
 * JSON reports shared by the command line tool and the tests.
 */
#ifndef CELLMAC_REPORT_HPP
#define CELLMAC_REPORT_HPP

#include <json.hpp>

#include "cellmac/table.hpp"

namespace cellmac {

inline nlohmann::json table_json(const GradedPieceTable& t)
{
    auto rows = nlohmann::json::array();
    for (const auto& [i, s, v] : t.nonzero())
        rows.push_back({i, to_bitstring(s, t.num_vertices()), v});
    return rows;
}

inline nlohmann::json vertex_list(const CellComplex& complex, Subset s)
{
    auto out = nlohmann::json::array();
    for (int v : members(s))
        out.push_back(complex.vertex_names()[std::size_t(v)]);
    return out;
}

inline nlohmann::json cm_report_json(const CMReport& r, const CellComplex& complex)
{
    nlohmann::json out;
    out["field"] = r.field;
    out["dim"] = r.dim;
    out["isCM"] = r.is_cm;
    out["lcmOrder"] = r.lcm_order;
    out["gorensteinStar"] = r.gorenstein_star;
    out["topCohomologyRank"] = r.top_cohomology_rank;
    out["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses)
        out["witnesses"].push_back({w.p, vertex_list(complex, w.deleted)});
    return out;
}

template <typename Scalar>
nlohmann::json hexagon_report_json(const HexagonBundle<Scalar>& h, const CellComplex& complex, int jobs = 1)
{
    nlohmann::json out;
    out["field"] = h.field;
    out["n"] = h.n;
    out["vertices"] = complex.vertex_names();
    out["corners"] = nlohmann::json::array();
    for (Corner c : kCorners)
    {
        const auto& p = h.at(c);
        out["corners"].push_back({{"name", corner_name(c)},
                                  {"betti", table_json(p.betti_table())},
                                  {"homology", table_json(p.homology_table(jobs))},
                                  {"minimal", p.is_minimal()},
                                  {"linear", p.is_linear()},
                                  {"strands", p.strand_indices()}});
    }
    nlohmann::json checks;
    checks["hexagonIdentity"] = verify_hexagon_identity(h, jobs);
    checks["homologyOfFDualIsKi"] = verify_f_dual_homology(h, complex, jobs);
    nlohmann::json strands;
    for (Corner c : kCorners)
        strands[corner_name(c)] = strand_duality_holds(h.at(c), opposite_corner(h, c), jobs);
    checks["strandDuality"] = strands;
    out["checks"] = checks;
    return out;
}

} // namespace cellmac

#endif
