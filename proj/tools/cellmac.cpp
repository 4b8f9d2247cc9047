// cellmac: command line front end.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cellmac/builtins.hpp"
#include "cellmac/io.hpp"
#include "cellmac/report.hpp"

using namespace cellmac;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kIo = 3, kPrecondition = 4 };

struct RunConfig
{
    std::string command;
    std::string builtin_name;
    std::string path;
    std::uint32_t characteristic = 0;
    std::string format = "text";
    int jobs = 1;
    std::string corner = "F^v";
};

CellComplex load(const RunConfig& cfg)
{
    if (!cfg.builtin_name.empty())
        return builtin(cfg.builtin_name);
    return build_complex(read_complex_file(cfg.path));
}

void print_table(std::ostream& os, const std::string& title, const GradedPieceTable& t)
{
    os << title << '\n';
    if (t.nonzero().empty())
        os << "  (zero)\n";
    for (const auto& [i, s, v] : t.nonzero())
        os << "  " << i << ' ' << to_bitstring(s, t.num_vertices()) << ' ' << v << '\n';
}

void print_tsv(std::ostream& os, const std::string& section, const GradedPieceTable& t)
{
    for (const auto& [i, s, v] : t.nonzero())
        os << section << '\t' << i << '\t' << to_bitstring(s, t.num_vertices()) << '\t' << v << '\n';
}

std::string yes(bool b) { return b ? "yes" : "no"; }

template <typename Scalar>
int cmd_validate(const RunConfig& cfg, const CellComplex& cx)
{
    const bool squares = boundary_squares_to_zero(cx);
    if (cfg.format == "json")
    {
        json out{{"field", field_name<Scalar>()}, {"status", "ok"}, {"cells", cx.size()},
                 {"dim", cx.dim()}, {"vertices", cx.vertex_names()}, {"boundarySquaresToZero", squares},
                 {"simplicial", is_simplicial(cx)}};
        std::cout << out.dump(2) << '\n';
    }
    else if (cfg.format == "tsv")
        std::cout << "status\tok\ncells\t" << cx.size() << "\ndim\t" << cx.dim() << '\n';
    else
        std::cout << "ok, " << cx.size() << " cells\n"
                  << "dimension " << cx.dim() << ", " << cx.num_vertices() << " vertices, simplicial "
                  << yes(is_simplicial(cx)) << ", boundary squares to zero " << yes(squares) << '\n';
    return kOk;
}

template <typename Scalar>
int cmd_cm(const RunConfig& cfg, const CellComplex& cx)
{
    const auto report = cm_report<Scalar>(cx, cfg.jobs);
    if (cfg.format == "json")
    {
        std::cout << cm_report_json(report, cx).dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "tsv")
    {
        std::cout << "field\t" << report.field << "\ndim\t" << report.dim << "\nisCM\t" << report.is_cm
                  << "\nlcmOrder\t" << report.lcm_order << "\ngorensteinStar\t" << report.gorenstein_star
                  << "\ntopCohomologyRank\t" << report.top_cohomology_rank << '\n';
        for (const auto& w : report.witnesses)
            std::cout << "witness\t" << w.p << '\t' << cx.describe_subset(w.deleted) << '\n';
        return kOk;
    }
    std::cout << "field " << report.field << ", dimension " << report.dim << '\n'
              << "Cohen-Macaulay: " << yes(report.is_cm) << '\n'
              << "l-CM order: " << report.lcm_order << '\n'
              << "Gorenstein*: " << yes(report.gorenstein_star) << '\n'
              << "top homology rank: " << report.top_cohomology_rank << '\n';
    for (const auto& w : report.witnesses)
        std::cout << "witness: H_" << w.p << " of deletion of " << cx.describe_subset(w.deleted) << '\n';
    return kOk;
}

template <typename Scalar>
int cmd_homology(const RunConfig& cfg, const CellComplex& cx)
{
    const auto hom = enriched_homology_table<Scalar>(cx, cfg.jobs);
    const auto coh = enriched_cohomology_table<Scalar>(cx, cfg.jobs);
    const auto reduced = reduced_homology_dims<Scalar>(cx);
    if (cfg.format == "json")
    {
        json out{{"field", field_name<Scalar>()}, {"vertices", cx.vertex_names()}, {"reducedHomology", reduced},
                 {"enrichedHomology", table_json(hom)}, {"enrichedCohomology", table_json(coh)}};
        std::cout << out.dump(2) << '\n';
    }
    else if (cfg.format == "tsv")
    {
        print_tsv(std::cout, "homology", hom);
        print_tsv(std::cout, "cohomology", coh);
    }
    else
    {
        std::cout << "field " << field_name<Scalar>() << "\nreduced homology (from degree -1):";
        for (Index d : reduced)
            std::cout << ' ' << d;
        std::cout << '\n';
        print_table(std::cout, "enriched homology (degree, subset, dim):", hom);
        print_table(std::cout, "enriched cohomology (degree, subset, dim):", coh);
    }
    return kOk;
}

template <typename Scalar>
int cmd_hexagon(const RunConfig& cfg, const CellComplex& cx)
{
    const auto h = build_hexagon<Scalar>(cx, cfg.jobs);
    const json report = hexagon_report_json(h, cx, cfg.jobs);
    if (cfg.format == "json")
    {
        std::cout << report.dump(2) << '\n';
        return kOk;
    }
    if (cfg.format == "tsv")
    {
        for (Corner c : kCorners)
        {
            print_tsv(std::cout, std::string(corner_name(c)) + "\tbetti", h.at(c).betti_table());
            print_tsv(std::cout, std::string(corner_name(c)) + "\thomology", h.at(c).homology_table(cfg.jobs));
        }
        return kOk;
    }
    std::cout << "field " << h.field << ", n = " << h.n << '\n';
    for (Corner c : kCorners)
    {
        std::cout << "== " << corner_name(c) << " (rank " << h.at(c).total_rank() << ", linear "
                  << yes(h.at(c).is_linear()) << ")\n";
        print_table(std::cout, "betti (level, degree, dim):", h.at(c).betti_table());
        print_table(std::cout, "cohomology (level, degree, dim):", h.at(c).homology_table(cfg.jobs));
    }
    const auto& checks = report["checks"];
    std::cout << "hexagon identity: " << yes(checks["hexagonIdentity"].get<bool>()) << '\n'
              << "H^-i(F^v) = k^i: " << yes(checks["homologyOfFDualIsKi"].get<bool>()) << '\n';
    for (Corner c : kCorners)
        std::cout << "strand duality " << corner_name(c) << ": "
                  << yes(checks["strandDuality"][corner_name(c)].get<bool>()) << '\n';
    return kOk;
}

template <typename Scalar>
int cmd_resolve(const RunConfig& cfg, const CellComplex& cx)
{
    Corner corner = Corner::FDual;
    bool found = false;
    for (Corner c : kCorners)
        if (cfg.corner == corner_name(c)) { corner = c; found = true; }
    if (!found)
        throw PreconditionError("unknown corner '" + cfg.corner + "'");
    const auto h = build_hexagon<Scalar>(cx, cfg.jobs);
    const auto& p = h.at(corner);
    const auto betti = p.betti_table();
    if (cfg.format == "json")
    {
        json out{{"field", h.field}, {"corner", corner_name(corner)}, {"minimal", p.is_minimal()},
                 {"betti", table_json(betti)}};
        std::cout << out.dump(2) << '\n';
    }
    else if (cfg.format == "tsv")
        betti.write_tsv(std::cout);
    else
    {
        std::cout << "field " << h.field << ", corner " << corner_name(corner) << ", total rank " << p.total_rank()
                  << '\n';
        print_table(std::cout, "betti (level, degree, dim):", betti);
    }
    return kOk;
}

template <typename Scalar>
int cmd_table(const RunConfig& cfg, const CellComplex& cx)
{
    if (!is_simplicial(cx))
        throw NonSimplicial("the table applies to simplicial complexes only");
    const auto h = build_hexagon<Scalar>(cx, cfg.jobs);
    const auto rows = simplicial_table(cx, h, cfg.jobs);
    bool all = true;
    for (const auto& r : rows)
        all = all && r.betti_match() && r.homology_match();
    if (cfg.format == "json")
    {
        json out{{"field", h.field}, {"match", all}, {"rows", json::array()}};
        for (const auto& r : rows)
            out["rows"].push_back({{"corner", corner_name(r.corner)},
                                   {"betti", table_json(r.betti)},
                                   {"bettiExpected", table_json(r.betti_expected)},
                                   {"bettiMatch", r.betti_match()},
                                   {"homology", table_json(r.homology)},
                                   {"homologyExpected", table_json(r.homology_expected)},
                                   {"homologyMatch", r.homology_match()}});
        std::cout << out.dump(2) << '\n';
    }
    else if (cfg.format == "tsv")
    {
        for (const auto& r : rows)
        {
            const std::string c = corner_name(r.corner);
            print_tsv(std::cout, c + "\tbetti\tcomputed", r.betti);
            print_tsv(std::cout, c + "\tbetti\texpected", r.betti_expected);
            print_tsv(std::cout, c + "\thomology\tcomputed", r.homology);
            print_tsv(std::cout, c + "\thomology\texpected", r.homology_expected);
        }
    }
    else
    {
        std::cout << "field " << h.field << '\n';
        for (const auto& r : rows)
            std::cout << corner_name(r.corner) << ": betti " << (r.betti_match() ? "match" : "MISMATCH")
                      << ", homology " << (r.homology_match() ? "match" : "MISMATCH") << '\n';
        std::cout << (all ? "all rows match\n" : "some rows differ\n");
    }
    return kOk;
}

template <typename Scalar>
int dispatch(const RunConfig& cfg)
{
    const CellComplex cx = load(cfg);
    if (cfg.command == "validate") return cmd_validate<Scalar>(cfg, cx);
    if (cfg.command == "cm") return cmd_cm<Scalar>(cfg, cx);
    if (cfg.command == "homology") return cmd_homology<Scalar>(cfg, cx);
    if (cfg.command == "hexagon") return cmd_hexagon<Scalar>(cfg, cx);
    if (cfg.command == "resolve") return cmd_resolve<Scalar>(cfg, cx);
    return cmd_table<Scalar>(cfg, cx);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohen-Macaulay analysis and square-free complexes of regular cell complexes"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "check a complex description"},
        {"cm", "Cohen-Macaulay, l-CM and Gorenstein* report"},
        {"homology", "enriched homology and cohomology tables"},
        {"hexagon", "the six complexes and their relations"},
        {"resolve", "Betti table of one hexagon corner"},
        {"table", "simplicial table against restriction and link formulas"}};
    for (const auto& [name, help] : commands)
    {
        auto* sub = app.add_subcommand(name, help);
        auto* b = sub->add_option("--builtin", cfg.builtin_name, "builtin complex name");
        auto* f = sub->add_option("--file", cfg.path, "JSON complex description");
        b->excludes(f);
        f->excludes(b);
        sub->add_option("--char", cfg.characteristic, "field characteristic (0 for the rationals)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        if (name == "resolve")
            sub->add_option("--corner", cfg.corner, "E[-1], G^v, G, F^v, F or E^v[-1]");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }
    CLI11_PARSE(app, argc, argv);
    if (cfg.builtin_name.empty() && cfg.path.empty())
    {
        std::cerr << "error: one of --builtin or --file is required\n";
        return kPrecondition;
    }
    try
    {
        if (cfg.characteristic == 0)
            return dispatch<Rational>(cfg);
        if (!is_prime(cfg.characteristic))
            throw PreconditionError("--char must be 0 or a prime");
        ScopedCharacteristic guard(cfg.characteristic);
        return dispatch<Zp>(cfg);
    }
    catch (const IoError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    catch (const InvalidComplex& e)
    {
        std::cerr << "invalid complex: " << e.what() << '\n';
        return kInvalid;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    }
}
