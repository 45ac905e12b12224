#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <string>
#include <vector>

#include "blagold/blaschke.hpp"
#include "blagold/golden.hpp"
#include "blagold/poncelet.hpp"
#include "blagold/render.hpp"

using json = nlohmann::json;
using namespace blagold;

namespace {

// Points come in as "RE,IM" or "@DEG" (a unimodular point at DEG degrees).
Complex parse_point(const std::string& s) {
    if (!s.empty() && s[0] == '@') {
        double deg = std::stod(s.substr(1));
        return std::polar(1.0, deg * std::numbers::pi / 180.0);
    }
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

json point_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json tolerances_json(const TolerancePolicy& tol) {
    return json{{"eps_root", tol.eps_root},
                {"eps_geom", tol.eps_geom},
                {"eps_count", tol.eps_count},
                {"max_iter", tol.max_iter}};
}

json ellipse_json(const Ellipse& e) {
    return json{{"focus1", point_json(e.focus1)},
                {"focus2", point_json(e.focus2)},
                {"dist_sum", e.dist_sum},
                {"semi_major", e.semi_major()},
                {"semi_minor", e.semi_minor()},
                {"axis_ratio", e.axis_ratio()}};
}

json product_json(const BlaschkeProduct& B) {
    json zeros = json::array();
    for (Complex z : B.zeros()) zeros.push_back(point_json(z));
    return json{{"prefactor", point_json(B.prefactor())},
                {"zeros", zeros},
                {"degree", B.degree()}};
}

void emit(const json& payload, bool as_json) {
    if (as_json) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : payload.items())
        std::cout << key << ": " << value.dump() << "\n";
}

struct Cli {
    TolerancePolicy tol;
    std::string format = "json";
    int samples = 100;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blaschke products, golden-ratio constructions and Poncelet ellipses"};
    app.require_subcommand(1);

    Cli cli;
    app.add_option("--eps-root", cli.tol.eps_root, "root-finder tolerance");
    app.add_option("--eps-geom", cli.tol.eps_geom, "geometric tolerance");
    app.add_option("--eps-count", cli.tol.eps_count, "boundary classification band");
    app.add_option("--max-iter", cli.tol.max_iter, "iteration budget");
    app.add_option("--format", cli.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string a_str, seed_str = "0,0", out_path;
    std::vector<std::string> pts, pts2, zeros_str, foci_str;
    double rotate = 0.0, dist_sum = -1.0;
    int figure = 1;

    auto* chords_cmd = app.add_subcommand("chords", "golden chords through a");
    chords_cmd->add_option("--a", a_str, "the nonzero zero, RE,IM")->required();

    auto* tri_cmd = app.add_subcommand("triangle", "golden triangle on the circle");
    tri_cmd->add_option("--rotate", rotate, "rotation in radians");

    auto* rect_cmd = app.add_subcommand("rectangle", "golden rectangle on the circle");
    rect_cmd->add_option("--rotate", rotate, "rotation in radians");

    auto* ge_cmd = app.add_subcommand("golden-ellipse",
                                      "the golden Blaschke ellipse and product");

    auto* steiner_cmd = app.add_subcommand("steiner", "Steiner inellipse foci");
    steiner_cmd->add_option("--vertices", pts, "three circle points")
        ->required()
        ->expected(3);

    auto* inscribe_cmd =
        app.add_subcommand("inscribe", "inscribed-ellipse foci of a quadrilateral");
    inscribe_cmd->add_option("--quad", pts, "four circle points in argument order")
        ->required()
        ->expected(4);
    inscribe_cmd->add_option("--seed", seed_str, "solver seed, RE,IM");

    auto* degree4_cmd =
        app.add_subcommand("degree4", "degree-4 Poncelet ellipse and product");
    degree4_cmd->add_option("--foci", foci_str, "two foci")->required()->expected(2);

    auto* identify_cmd =
        app.add_subcommand("identify", "Blaschke product identifying two tuples");
    identify_cmd->add_option("--z", pts, "first tuple")->required()->expected(-2);
    identify_cmd->add_option("--w", pts2, "second tuple")->required()->expected(-2);

    auto* verify_cmd = app.add_subcommand("verify", "Poncelet tangency sweep");
    verify_cmd->add_option("--zeros", zeros_str, "nonzero zeros of the canonical product")
        ->required()
        ->expected(-2);
    verify_cmd->add_option("--ellipse-foci", foci_str, "ellipse foci")->expected(2);
    verify_cmd->add_option("--dist-sum", dist_sum, "ellipse string length");
    verify_cmd->add_option("--samples", cli.samples, "lambda sample count");

    auto* render_cmd = app.add_subcommand("render", "regenerate a stock figure");
    render_cmd->add_option("--figure", figure, "figure index 1..6")
        ->required()
        ->check(CLI::Range(1, 6));
    render_cmd->add_option("--out", out_path, "output SVG path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool as_json = cli.format == "json";
    try {
        json out;
        out["tolerances"] = tolerances_json(cli.tol);

        if (*chords_cmd) {
            ChordClassification cc = golden_chords(parse_point(a_str), cli.tol);
            out["ratio"] = cc.ratio;
            out["threshold"] = GoldenConstants::chord_threshold;
            out["case"] = cc.kind == ChordCase::None      ? "none"
                          : cc.kind == ChordCase::Diameter ? "diameter"
                                                           : "pair";
            json chords = json::array();
            for (const ChordSolution& s : cc.chords)
                chords.push_back(json{{"z1", point_json(s.z1)},
                                      {"z2", point_json(s.z2)},
                                      {"theta", s.theta},
                                      {"short_len", s.short_len},
                                      {"long_len", s.long_len},
                                      {"ratio", s.long_len / s.short_len}});
            out["chords"] = chords;
        } else if (*tri_cmd) {
            GoldenTriangle t = golden_triangle(rotate);
            json vs = json::array();
            for (Complex v : t.vertices) vs.push_back(point_json(v));
            out["vertices"] = vs;
            out["lateral_len"] = t.lateral_len();
            out["base_len"] = t.base_len();
            out["ratio"] = t.lateral_len() / t.base_len();
        } else if (*rect_cmd) {
            GoldenRectangle r = golden_rectangle(rotate);
            json vs = json::array();
            for (Complex v : r.vertices) vs.push_back(point_json(v));
            out["vertices"] = vs;
            out["x"] = r.half_long;
            out["y"] = r.half_short;
            out["ratio"] = r.half_long / r.half_short;
        } else if (*ge_cmd) {
            auto [e, B] = golden_blaschke_ellipse();
            out["c"] = e.focus1.real();
            out["ellipse"] = ellipse_json(e);
            out["axis_ratio"] = e.axis_ratio();
            out["product"] = product_json(B);
        } else if (*steiner_cmd) {
            std::array<Complex, 3> t{parse_point(pts[0]), parse_point(pts[1]),
                                     parse_point(pts[2])};
            auto [f1, f2] = steiner_foci(t, cli.tol);
            out["focus1"] = point_json(f1);
            out["focus2"] = point_json(f2);
            out["ellipse"] = ellipse_json(blaschke3_ellipse(f1, f2, cli.tol));
        } else if (*inscribe_cmd) {
            std::array<Complex, 4> q{parse_point(pts[0]), parse_point(pts[1]),
                                     parse_point(pts[2]), parse_point(pts[3])};
            InscribedEllipseSolution sol =
                inscribed_ellipse_foci(q, parse_point(seed_str), cli.tol);
            out["focus_a"] = point_json(sol.focus_a);
            out["focus_b"] = point_json(sol.focus_b);
            out["residual"] = sol.residual;
            out["ellipse"] = ellipse_json(degree4_ellipse(sol.focus_a, sol.focus_b));
        } else if (*degree4_cmd) {
            Complex a = parse_point(foci_str[0]), b = parse_point(foci_str[1]);
            Ellipse e = degree4_ellipse(a, b);
            BlaschkeProduct B = degree4_product_from_foci(a, b, cli.tol);
            out["ellipse"] = ellipse_json(e);
            out["product"] = product_json(B);
        } else if (*identify_cmd) {
            std::vector<Complex> Z, W;
            for (const auto& s : pts) Z.push_back(parse_point(s));
            for (const auto& s : pts2) W.push_back(parse_point(s));
            BlaschkeProduct B = construct_identifying_product(Z, W, cli.tol);
            out["product"] = product_json(B);
            out["residual"] = std::max(identification_residual(B, Z),
                                       identification_residual(B, W));
        } else if (*verify_cmd) {
            std::vector<Complex> zeros;
            for (const auto& s : zeros_str) zeros.push_back(parse_point(s));
            BlaschkeProduct B = BlaschkeProduct::canonical(zeros, cli.tol.eps_geom);
            Ellipse e{Complex(0.0), Complex(0.0), 0.0};
            if (foci_str.size() == 2 && dist_sum > 0.0) {
                e = Ellipse{parse_point(foci_str[0]), parse_point(foci_str[1]),
                            dist_sum};
            } else if (zeros.size() == 2) {
                e = blaschke3_ellipse(zeros[0], zeros[1], cli.tol);
            } else {
                std::cerr << "verify: --ellipse-foci/--dist-sum required for degree != 3\n";
                return 2;
            }
            PonceletReport rep = verify_poncelet(B, e, cli.samples, cli.tol);
            out["max_defect"] = rep.max_defect;
            out["samples"] = rep.samples;
            out["chords_checked"] = rep.chords_checked;
            out["ellipse"] = ellipse_json(e);
            out["pass"] = rep.max_defect <= cli.tol.eps_geom;
            emit(out, as_json);
            return rep.max_defect <= cli.tol.eps_geom ? 0 : 1;
        } else if (*render_cmd) {
            std::string svg = render_svg(figure_scene(figure));
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << svg;
                out["written"] = out_path;
                out["bytes"] = svg.size();
                emit(out, as_json);
            }
            return 0;
        }

        emit(out, as_json);
        return 0;
    } catch (const Error& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump(2)
                  << "\n";
        return 2;
    }
}
