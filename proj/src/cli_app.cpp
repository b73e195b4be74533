#include "spaceform/cli_app.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spaceform/blaschke.hpp"
#include "spaceform/enclosing_disk.hpp"
#include "spaceform/error.hpp"
#include "spaceform/lambda_trig.hpp"
#include "spaceform/polygon.hpp"
#include "spaceform/polygon_io.hpp"
#include "spaceform/smoothing.hpp"

namespace spaceform::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

double check_tolerance() {
    if (const char* env = std::getenv("SPACEFORM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0)
            return v;
    }
    return 1e-9;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json point_json(const SpaceForm& sf, const Point& p) {
    if (sf.flat())
        return {p.coords.x, p.coords.y};
    return {p.coords.x, p.coords.y, p.coords.z};
}

ordered_json report_header(const std::string& command, double tol) {
    ordered_json doc;
    doc["command"] = command;
    doc["tolerance"] = tol;
    return doc;
}

ordered_json blaschke_json(const BlaschkeReport& rep) {
    ordered_json r;
    r["lambda"] = rep.lambda;
    r["definition"] = rep.definition == CurvatureDefinition::TaDef ? "ta" : "flat";
    r["kappa0"] = rep.kappa0;
    r["circumradius"] = rep.circumradius;
    r["bound"] = rep.bound;
    r["margin"] = rep.margin;
    r["holds"] = rep.holds;
    r["near_equality"] = rep.near_equality;
    r["degenerate_digon"] = rep.degenerate_digon;
    if (rep.frak_e)
        r["frak_e"] = *rep.frak_e;
    return r;
}

int emit(std::ostream& out, const ordered_json& doc, int code) {
    out << doc.dump(2) << "\n";
    return code;
}

int cmd_analyze(const std::string& path, std::ostream& out, double tol) {
    const std::string text = read_file(path);
    const ConvexPolygon poly = polygon_from_string(text);
    const VertexCurvatureReport rep = curvature_report(poly);

    ordered_json doc = report_header("analyze", tol);
    doc["input_digest"] = fnv1a_hex(text);
    ordered_json result;
    result["lambda"] = poly.space().lambda();
    result["n"] = poly.size();
    result["digon"] = poly.is_digon();
    result["convex"] = true;
    result["side_lengths"] = poly.side_lengths();
    result["interior_angles"] = poly.interior_angles();
    auto kappas = ordered_json::array();
    auto kappas_flat = ordered_json::array();
    for (const auto& row : rep.rows) {
        kappas.push_back(row.kappa);
        kappas_flat.push_back(row.kappa_flat);
    }
    result["kappa"] = std::move(kappas);
    result["kappa_flat"] = std::move(kappas_flat);
    result["kappa0"] = rep.kappa0;
    result["kappa0_flat"] = rep.kappa0_flat;
    result["circumradius"] = poly.circumradius();
    doc["result"] = std::move(result);
    return emit(out, doc, 0);
}

int cmd_circumradius(const std::string& path, bool with_oracle, std::ostream& out, double tol) {
    const std::string text = read_file(path);
    const ConvexPolygon poly = polygon_from_string(text);
    const SpaceForm& sf = poly.space();
    const GeodesicDisk disk = min_disk(sf, poly.vertices());

    ordered_json doc = report_header("circumradius", tol);
    doc["input_digest"] = fnv1a_hex(text);
    ordered_json result;
    result["center"] = point_json(sf, disk.center);
    result["radius"] = disk.radius;
    int code = 0;
    if (with_oracle) {
        const GeodesicDisk oracle = min_disk_oracle(sf, poly.vertices());
        const double diff = std::abs(disk.radius - oracle.radius);
        result["oracle_center"] = point_json(sf, oracle.center);
        result["oracle_radius"] = oracle.radius;
        result["difference"] = diff;
        const bool pass = diff <= std::max(tol, 1e-8);
        doc["checks"] = ordered_json::array({ordered_json{{"name", "oracle_agreement"},
                                                          {"pass", pass}}});
        if (!pass)
            code = 2;
    }
    doc["result"] = std::move(result);
    return emit(out, doc, code);
}

int cmd_verify(const std::string& path, const std::string& definition,
               std::optional<double> frak_e, std::ostream& out, double tol) {
    const std::string text = read_file(path);
    const ConvexPolygon poly = polygon_from_string(text);
    const CurvatureDefinition def =
        definition == "flat" ? CurvatureDefinition::FlatDef : CurvatureDefinition::TaDef;
    const BlaschkeReport rep = verify(poly, def, frak_e, tol);

    ordered_json doc = report_header("verify", tol);
    doc["input_digest"] = fnv1a_hex(text);
    doc["result"] = blaschke_json(rep);
    doc["checks"] = ordered_json::array(
        {ordered_json{{"name", "circumradius_bound"}, {"pass", rep.holds}}});
    return emit(out, doc, rep.holds ? 0 : 2);
}

int write_polygon(const ConvexPolygon& poly, const std::string& out_path, std::ostream& out,
                  double tol, const std::string& command) {
    const ordered_json poly_doc = polygon_to_json(poly);
    if (out_path.empty()) {
        out << poly_doc.dump(2) << "\n";
        return 0;
    }
    std::ofstream file(out_path);
    if (!file)
        fail(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
    file << poly_doc.dump(2) << "\n";
    ordered_json doc = report_header(command, tol);
    doc["result"] = ordered_json{{"written", out_path}, {"n", poly.size()},
                                 {"lambda", poly.space().lambda()}};
    return emit(out, doc, 0);
}

int cmd_regular(double lambda, double radius, int n, const std::string& out_path,
                std::ostream& out, double tol) {
    const SpaceForm sf(lambda);
    return write_polygon(regular_inscribed(sf, radius, n), out_path, out, tol, "regular");
}

int cmd_digon(double lambda, double kappa0, const std::string& out_path, std::ostream& out,
              double tol) {
    const SpaceForm sf(lambda);
    // Sized so the circumradius bound is attained exactly.
    const double length = 2.0 * bound_radius(lambda, kappa0);
    return write_polygon(digon(sf, length), out_path, out, tol, "digon");
}

int cmd_convergence(double lambda, double radius, int n_max, std::ostream& out, double tol) {
    std::vector<int> ns;
    for (int n = 4; n <= n_max; n *= 2)
        ns.push_back(n);
    if (ns.empty())
        fail(ErrorKind::InvalidInput, "--n-max must be at least 4");
    const auto rows = convergence_table(lambda, radius, ns);

    ordered_json doc = report_header("convergence", tol);
    ordered_json result;
    result["lambda"] = lambda;
    result["radius"] = radius;
    result["limit"] = rows.front().limit;
    auto table = ordered_json::array();
    bool paths_agree = true;
    bool monotone = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const double path_diff = std::abs(row.kappa_vertex - row.kappa_closed_form);
        paths_agree = paths_agree && path_diff <= 1e-9;
        if (i > 0)
            monotone = monotone && row.error < rows[i - 1].error;
        table.push_back(ordered_json{{"n", row.n},
                                     {"kappa", row.kappa_vertex},
                                     {"kappa_closed_form", row.kappa_closed_form},
                                     {"error", row.error},
                                     {"path_difference", path_diff}});
    }
    result["rows"] = std::move(table);
    doc["result"] = std::move(result);
    doc["checks"] = ordered_json::array(
        {ordered_json{{"name", "paths_agree_1e-9"}, {"pass", paths_agree}},
         ordered_json{{"name", "error_monotone_decreasing"}, {"pass", monotone}}});
    return emit(out, doc, paths_agree && monotone ? 0 : 2);
}

int cmd_smooth(const std::string& path, double kappa0, double eps, int samples,
               const std::string& csv_path, std::ostream& out, double tol) {
    const std::string text = read_file(path);
    const ConvexPolygon poly = polygon_from_string(text);
    const SmoothedCurve smoothed = assemble(poly, kappa0, eps);
    const auto pts = sample_curve(smoothed.curve, samples);

    std::ofstream csv(csv_path);
    if (!csv)
        fail(ErrorKind::InvalidInput, "cannot write '" + csv_path + "'");
    csv.precision(17);
    csv << "piece_kind,piece_index,param,x0,x1,x2,curvature\n";
    const bool flat = poly.space().flat();
    for (const auto& s : pts) {
        csv << (s.kind == CurvePiece::Kind::Arc ? "arc" : "connector") << ',' << s.piece_index
            << ',' << s.param << ',' << s.point.coords.x << ',' << s.point.coords.y << ',';
        if (!flat)
            csv << s.point.coords.z;
        csv << ',' << s.curvature << '\n';
    }

    const auto& diag = smoothed.diagnostics;
    ordered_json doc = report_header("smooth", tol);
    doc["input_digest"] = fnv1a_hex(text);
    ordered_json result;
    result["kappa0"] = kappa0;
    result["support_radius"] = smoothed.curve.support_radius;
    result["eps_requested"] = eps;
    result["eps_used"] = diag.eps_used;
    result["arc_curvature"] = diag.arc_curvature;
    result["max_gap"] = diag.max_gap;
    result["max_tangent_mismatch"] = diag.max_tangent_mismatch;
    result["max_curvature_jump"] = diag.max_curvature_jump;
    result["min_curvature"] = diag.min_curvature;
    result["vertices_enclosed"] = diag.vertices_enclosed;
    result["samples_written"] = pts.size();
    result["csv"] = csv_path;
    doc["result"] = std::move(result);

    const bool pass = diag.max_gap <= 1e-9 && diag.max_tangent_mismatch <= 1e-7 &&
                      diag.max_curvature_jump <= 1e-8 &&
                      diag.min_curvature >= diag.arc_curvature - 1e-8 && diag.vertices_enclosed;
    doc["checks"] = ordered_json::array(
        {ordered_json{{"name", "junction_and_curvature"}, {"pass", pass}}});
    return emit(out, doc, pass ? 0 : 2);
}

int cmd_sweep(const std::string& path, double kappa0, const std::vector<double>& eps_list,
              std::ostream& out, double tol) {
    const std::string text = read_file(path);
    const ConvexPolygon poly = polygon_from_string(text);
    const auto rows = blowup_sweep(poly, kappa0, eps_list);

    ordered_json doc = report_header("sweep", tol);
    doc["input_digest"] = fnv1a_hex(text);
    ordered_json result;
    result["kappa0"] = kappa0;
    result["polygon_circumradius"] = poly.circumradius();
    auto table = ordered_json::array();
    bool rolling = true;
    for (const auto& row : rows) {
        auto vrows = ordered_json::array();
        for (const auto& v : row.vertices)
            vrows.push_back(ordered_json{{"vertex", v.vertex},
                                         {"theta", v.theta},
                                         {"min_interior_curvature", v.min_interior_curvature},
                                         {"max_profile_deviation", v.max_profile_deviation}});
        rolling = rolling && row.rolling_margin >= -tol;
        table.push_back(ordered_json{{"eps", row.eps},
                                     {"min_curvature", row.min_curvature},
                                     {"enclosing_radius", row.enclosing_radius},
                                     {"rolling_margin", row.rolling_margin},
                                     {"vertices", std::move(vrows)}});
    }
    result["rows"] = std::move(table);
    doc["result"] = std::move(result);
    doc["checks"] = ordered_json::array(
        {ordered_json{{"name", "rolling_bound"}, {"pass", rolling}}});
    return emit(out, doc, rolling ? 0 : 2);
}

int cmd_fuzz(double lambda, int count, std::uint64_t seed, const std::string& definition,
             std::ostream& out, double tol) {
    if (count <= 0)
        fail(ErrorKind::InvalidInput, "--count must be positive");
    const SpaceForm sf(lambda);
    const CurvatureDefinition def =
        definition == "flat" ? CurvatureDefinition::FlatDef : CurvatureDefinition::TaDef;
    const double r_max =
        lambda > 0.0 ? std::min(1.2, 0.75 * kPi / (2.0 * std::sqrt(lambda))) : 1.2;

    int checked = 0;
    int skipped = 0;
    int generation_failures = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    auto violations = ordered_json::array();

    for (std::uint64_t k = 0; checked < count && k < static_cast<std::uint64_t>(count) * 8; ++k) {
        const std::uint64_t s = seed + k;
        const int n = 3 + static_cast<int>(s % 10);
        try {
            ConvexPolygon poly = random_convex(sf, n, s, r_max);
            std::optional<double> frak_e;
            if (def == CurvatureDefinition::FlatDef && lambda != 0.0) {
                double lo = poly.side_length(0), hi = poly.side_length(0);
                for (std::size_t i = 1; i < poly.size(); ++i) {
                    lo = std::min(lo, poly.side_length(i));
                    hi = std::max(hi, poly.side_length(i));
                }
                frak_e = lambda > 0.0 ? 0.5 * hi : 0.5 * lo;
                if (lambda < 0.0) {
                    // Theorem hypothesis for the flat definition.
                    const VertexCurvatureReport rep = curvature_report(poly);
                    if (rep.kappa0_flat <= std::sqrt(-lambda)) {
                        ++skipped;
                        continue;
                    }
                }
            }
            const BlaschkeReport rep = verify(poly, def, frak_e, tol);
            min_margin = std::min(min_margin, rep.margin);
            if (!rep.holds)
                violations.push_back(ordered_json{{"seed", s}, {"margin", rep.margin}});
            ++checked;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::GenerationFailed) {
                ++generation_failures;
                continue;
            }
            throw;
        }
    }

    ordered_json doc = report_header("fuzz", tol);
    ordered_json result;
    result["lambda"] = lambda;
    result["definition"] = definition;
    result["seed"] = seed;
    result["requested"] = count;
    result["checked"] = checked;
    result["skipped"] = skipped;
    result["generation_failures"] = generation_failures;
    result["min_margin"] = min_margin;
    result["violations"] = std::move(violations);
    doc["result"] = std::move(result);
    const bool pass = doc["result"]["violations"].empty() && checked == count;
    doc["checks"] = ordered_json::array(
        {ordered_json{{"name", "circumradius_bound_all"}, {"pass", pass}}});
    return emit(out, doc, pass ? 0 : 2);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convex polygon curvature and circumradius bounds in the three 2D space forms"};
    app.require_subcommand(1);
    const double tol = check_tolerance();

    std::string file;
    bool with_oracle = false;
    std::string definition = "ta";
    double frak_e_value = 0.0;
    bool frak_e_set = false;
    double lambda = 0.0;
    double radius = 1.0;
    double kappa0 = 1.0;
    double eps = 1e-3;
    int n = 6;
    int n_max = 64;
    int samples = 101;
    std::string out_path;
    std::string csv_path;
    std::vector<double> eps_list;
    std::uint64_t seed = 1;
    int count = 100;

    auto* analyze = app.add_subcommand("analyze", "sides, angles and vertex curvatures");
    analyze->add_option("file", file)->required();

    auto* circ = app.add_subcommand("circumradius", "smallest enclosing geodesic disk");
    circ->add_option("file", file)->required();
    circ->add_flag("--oracle", with_oracle, "also run the brute-force oracle");

    auto* ver = app.add_subcommand("verify", "circumradius bound report");
    ver->add_option("file", file)->required();
    ver->add_option("--definition", definition)->check(CLI::IsMember({"ta", "flat"}))->required();
    auto* fe = ver->add_option("--frak-e", frak_e_value, "half-side bound for the flat definition");

    auto* reg = app.add_subcommand("regular", "emit a regular inscribed polygon");
    reg->add_option("--lambda", lambda)->required();
    reg->add_option("--radius", radius)->required();
    reg->add_option("--n", n)->required();
    reg->add_option("--out", out_path);

    auto* dig = app.add_subcommand("digon", "emit the extremal degenerate digon");
    dig->add_option("--lambda", lambda)->required();
    dig->add_option("--kappa0", kappa0)->required();
    dig->add_option("--out", out_path);

    auto* conv = app.add_subcommand("convergence", "inscribed polygon curvature limit table");
    conv->add_option("--lambda", lambda)->required();
    conv->add_option("--radius", radius)->required();
    conv->add_option("--n-max", n_max)->required();

    auto* smooth = app.add_subcommand("smooth", "C2 smoothing of the polygon boundary");
    smooth->add_option("file", file)->required();
    smooth->add_option("--kappa0", kappa0)->required();
    smooth->add_option("--epsilon", eps)->required();
    smooth->add_option("--samples", samples);
    smooth->add_option("--out", csv_path)->required();

    auto* sweep = app.add_subcommand("sweep", "connector blow-up table over offsets");
    sweep->add_option("file", file)->required();
    sweep->add_option("--kappa0", kappa0)->required();
    sweep->add_option("--epsilons", eps_list, "decreasing offsets")->required()->delimiter(',');

    auto* fuzz = app.add_subcommand("fuzz", "random polygon circumradius bound check");
    fuzz->add_option("--lambda", lambda)->required();
    fuzz->add_option("--count", count)->required();
    fuzz->add_option("--seed", seed)->required();
    fuzz->add_option("--definition", definition)->check(CLI::IsMember({"ta", "flat"}));

    std::vector<const char*> argv;
    argv.push_back("spaceform");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(file, out, tol);
        if (app.got_subcommand(circ))
            return cmd_circumradius(file, with_oracle, out, tol);
        if (app.got_subcommand(ver)) {
            frak_e_set = fe->count() > 0;
            return cmd_verify(file, definition,
                              frak_e_set ? std::optional<double>(frak_e_value) : std::nullopt,
                              out, tol);
        }
        if (app.got_subcommand(reg))
            return cmd_regular(lambda, radius, n, out_path, out, tol);
        if (app.got_subcommand(dig))
            return cmd_digon(lambda, kappa0, out_path, out, tol);
        if (app.got_subcommand(conv))
            return cmd_convergence(lambda, radius, n_max, out, tol);
        if (app.got_subcommand(smooth))
            return cmd_smooth(file, kappa0, eps, samples, csv_path, out, tol);
        if (app.got_subcommand(sweep))
            return cmd_sweep(file, kappa0, eps_list, out, tol);
        if (app.got_subcommand(fuzz))
            return cmd_fuzz(lambda, count, seed, definition, out, tol);
        err << "unknown subcommand\n";
        return 1;
    } catch (const Error& e) {
        ordered_json msg;
        msg["error"] = to_string(e.kind());
        msg["message"] = e.what();
        err << msg.dump(2) << "\n";
        return e.kind() == ErrorKind::ToleranceExceeded ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace spaceform::cli
