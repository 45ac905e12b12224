// Acceptance sweep: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "blagold/blaschke.hpp"
#include "blagold/golden.hpp"
#include "blagold/poncelet.hpp"
#include "blagold/render.hpp"

using namespace blagold;

namespace {

constexpr double kAlpha = GoldenConstants::alpha;
int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] %2d %s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                note.c_str());
    if (!ok) ++failures;
}

std::vector<Complex> regular_polygon(int n, double rot) {
    std::vector<Complex> vs(n);
    for (int k = 0; k < n; ++k)
        vs[k] = std::polar(1.0, rot + 2.0 * std::numbers::pi * k / n);
    return vs;
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

std::vector<double> sweep_golden_angles(Complex a, int samples) {
    std::vector<double> hits;
    TolerancePolicy tight;
    tight.eps_geom = 1e-12;
    double prev_theta = 0.0;
    double prev_val = chord_division_ratio(a, 0.0) - kAlpha;
    for (int k = 1; k <= samples; ++k) {
        double theta = std::numbers::pi * k / samples;
        double val = chord_division_ratio(a, theta) - kAlpha;
        if (prev_val * val < 0.0)
            hits.push_back(solve_real_1d(
                [&](double t) { return chord_division_ratio(a, t) - kAlpha; },
                prev_theta, theta, tight));
        prev_theta = theta;
        prev_val = val;
    }
    return hits;
}

}  // namespace

int main() {
    criterion(1, "golden triangle regression", [] {
        GoldenTriangle t = golden_triangle(0.0);
        double x = -t.vertices[1].real(), y = t.vertices[1].imag();
        return std::abs(x - 0.809017) < 1e-6 && std::abs(y - 0.587785) < 1e-6 &&
               std::abs(x - kAlpha / 2.0) < 1e-12;
    });

    criterion(2, "golden rectangle regression", [] {
        GoldenRectangle r = golden_rectangle(0.0);
        return std::abs(r.half_long - 0.850651) < 1e-6 &&
               std::abs(r.half_short - 0.525731) < 1e-6 &&
               std::abs(r.half_long / r.half_short - kAlpha) < 1e-12;
    });

    criterion(3, "golden ellipse regression", [] {
        auto [e, B] = golden_blaschke_ellipse();
        double c = e.focus1.real();
        return std::abs(c - 0.485868) < 1e-6 &&
               std::abs(e.axis_ratio() - kAlpha) < 1e-10 &&
               std::abs(2.0 * e.semi_major() - (1.0 + c * c)) < 1e-12;
    });

    criterion(4, "chord suite", [] {
        auto pair = golden_chords(Complex(0.5, 0.0));
        if (pair.kind != ChordCase::Pair || pair.chords.size() != 2) return false;
        BlaschkeProduct B = BlaschkeProduct::canonical({Complex(0.5, 0.0)});
        TolerancePolicy tight;
        tight.eps_geom = 1e-10;
        for (const ChordSolution& s : pair.chords) {
            if (std::abs(B.evaluate(s.z1) - B.evaluate(s.z2)) >= 1e-10) return false;
            if (!divides_in_golden_ratio(s.z1, s.z2, Complex(0.5, 0.0), tight))
                return false;
        }
        auto none = golden_chords(Complex(0.1, 0.0));
        if (none.kind != ChordCase::None || !none.chords.empty()) return false;
        return std::abs(GoldenConstants::chord_threshold - (std::sqrt(5.0) - 2.0)) <
               1e-12;
    });

    criterion(5, "brute-force chord-angle oracle", [] {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> mod(0.25, 0.95);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        for (int trial = 0; trial < 20; ++trial) {
            Complex a = std::polar(mod(rng), ang(rng));
            auto cc = golden_chords(a);
            if (cc.kind != ChordCase::Pair) return false;
            auto hits = sweep_golden_angles(a, 100000);
            if (hits.size() != 2) return false;
            if (std::abs(hits[0] - cc.chords[0].theta) >= 1e-6) return false;
        }
        return true;
    });

    criterion(6, "degree-3 Poncelet sweep", [] {
        auto [e, B] = golden_blaschke_ellipse();
        if (verify_poncelet(B, e, 100).max_defect >= 1e-8) return false;
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> mod(0.05, 0.7);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        int done = 0;
        while (done < 30) {
            Complex a1 = std::polar(mod(rng), ang(rng));
            Complex a2 = std::polar(mod(rng), ang(rng));
            if (std::abs(a1 - a2) < 0.05) continue;
            BlaschkeProduct Br = BlaschkeProduct::canonical({a1, a2});
            if (verify_poncelet(Br, blaschke3_ellipse(a1, a2), 20).max_defect >= 1e-8)
                return false;
            ++done;
        }
        return true;
    });

    criterion(7, "Steiner suite", [] {
        std::array<Complex, 3> equilateral{
            Complex(1.0), std::polar(1.0, 2.0 * std::numbers::pi / 3.0),
            std::polar(1.0, 4.0 * std::numbers::pi / 3.0)};
        auto [f1, f2] = steiner_foci(equilateral);
        if (std::abs(f1) >= 1e-12 || std::abs(f2) >= 1e-12) return false;
        GoldenTriangle t = golden_triangle(0.0);
        auto [s1, s2] = steiner_foci(t.vertices);
        Ellipse e = blaschke3_ellipse(s1, s2);
        for (int i = 0; i < 3; ++i) {
            Chord side{t.vertices[i], t.vertices[(i + 1) % 3]};
            if (std::abs(tangency_defect(side, e)) >= 1e-8) return false;
        }
        return true;
    });

    criterion(8, "degree-4 golden rectangle", [] {
        GoldenRectangle r = golden_rectangle(0.0);
        double c = std::sqrt(r.half_long * r.half_long -
                             r.half_short * r.half_short);
        BlaschkeProduct B = degree4_product_from_foci(Complex(c, 0.0), Complex(-c, 0.0));
        for (Complex v : r.vertices)
            if (std::abs(B.evaluate(v) - Complex(-1.0)) >= 1e-9) return false;
        Ellipse e = degree4_ellipse(Complex(0.668740, 0.0), Complex(-0.668740, 0.0));
        if (std::abs(e.dist_sum - 1.701302) >= 1e-6) return false;
        Ellipse exact = degree4_ellipse(Complex(c, 0.0), Complex(-c, 0.0));
        return verify_poncelet(B, exact, 100).max_defect < 1e-8;
    });

    criterion(9, "Fujimura self-test", [] {
        GoldenRectangle r = golden_rectangle(0.0);
        std::array<Complex, 4> quad{r.vertices[0], r.vertices[1], r.vertices[2],
                                    r.vertices[3]};
        for (Complex a : {Complex(0.4, 0.2), Complex(0.668740, 0.0)})
            if (std::abs(fujimura_partner_focus(quad, a) + a) >= 1e-10) return false;
        double c = std::sqrt(r.half_long * r.half_long -
                             r.half_short * r.half_short);
        if (std::abs(fujimura_cubic(quad, Complex(c, 0.0))) >= 1e-8) return false;
        std::array<Complex, 4> square{
            std::polar(1.0, std::numbers::pi / 4.0),
            std::polar(1.0, 3.0 * std::numbers::pi / 4.0),
            std::polar(1.0, 5.0 * std::numbers::pi / 4.0),
            std::polar(1.0, 7.0 * std::numbers::pi / 4.0)};
        InscribedEllipseSolution sol = inscribed_ellipse_foci(square, Complex(0.0));
        return std::abs(sol.focus_a) < 1e-10 && std::abs(sol.focus_b) < 1e-10 &&
               sol.residual < 1e-10;
    });

    criterion(10, "identify-solver", [] {
        GoldenTriangle t1 = golden_triangle(0.0);
        GoldenTriangle t2 = golden_triangle(std::numbers::pi / 3.0);
        std::vector<Complex> Z(t1.vertices.begin(), t1.vertices.end());
        std::vector<Complex> W(t2.vertices.begin(), t2.vertices.end());
        BlaschkeProduct B3 = construct_identifying_product(Z, W);
        if (B3.degree() != 3 || !B3.is_canonical(1e-9)) return false;
        if (std::max(identification_residual(B3, Z),
                     identification_residual(B3, W)) >= 1e-8)
            return false;
        for (int n : {5, 10}) {
            auto P = regular_polygon(n, 0.0);
            auto Q = regular_polygon(n, std::numbers::pi / n);
            BlaschkeProduct B = construct_identifying_product(P, Q);
            if (B.degree() != n) return false;
            if (std::max(identification_residual(B, P),
                         identification_residual(B, Q)) >= 1e-8)
                return false;
        }
        return true;
    });

    criterion(11, "preimage solver over random products", [] {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> mod(0.0, 0.8);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        for (int deg = 2; deg <= 10; ++deg) {
            std::vector<Complex> zeros;
            for (int k = 0; k < deg - 1; ++k)
                zeros.push_back(std::polar(mod(rng), ang(rng)));
            BlaschkeProduct B = BlaschkeProduct::canonical(zeros);
            for (int s = 0; s < 32; ++s) {
                Complex lambda =
                    std::polar(1.0, 2.0 * std::numbers::pi * s / 32.0 + 0.07);
                auto pre = preimages_on_circle(B, lambda);
                if (static_cast<int>(pre.size()) != deg) return false;
                for (Complex z : pre) {
                    if (std::abs(std::abs(z) - 1.0) >= 1e-10) return false;
                    if (std::abs(B.evaluate(z) - lambda) >= 1e-8) return false;
                }
            }
        }
        return true;
    });

    criterion(12, "figure regeneration", [] {
        struct Census {
            int circles, lines_at_least, polygons, ellipses, dashed;
        };
        // figure 1 has a point marker circle on top of the unit circle
        const Census expect[6] = {
            {2, 2, 0, 0, 2},   // fig 1: circle+marker, two dashed chords
            {1, 0, 1, 1, 1},   // fig 2
            {1, 0, 2, 1, 2},   // fig 3
            {1, 0, 1, 1, 1},   // fig 4
            {1, 48 * 5, 2, 0, 2},   // fig 5 chord family
            {1, 48 * 10, 2, 0, 2},  // fig 6
        };
        for (int fig = 1; fig <= 6; ++fig) {
            std::string svg = render_svg(figure_scene(fig));
            if (svg != render_svg(figure_scene(fig))) return false;
            const Census& c = expect[fig - 1];
            if (count_occurrences(svg, "<circle") != c.circles) return false;
            if (count_occurrences(svg, "<line") < c.lines_at_least) return false;
            if (count_occurrences(svg, "<polygon") != c.polygons) return false;
            if (count_occurrences(svg, "<ellipse") != c.ellipses) return false;
            if (count_occurrences(svg, "stroke-dasharray") != c.dashed) return false;
        }
        return true;
    });

    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
