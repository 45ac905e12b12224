#include "blagold/poncelet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "blagold/golden.hpp"

namespace blagold {

double Ellipse::semi_minor() const {
    double a = semi_major();
    double c = 0.5 * focal_dist();
    double rad = a * a - c * c;
    if (rad <= 0.0) throw DegenerateEllipse("semi_minor: string shorter than focal distance");
    return std::sqrt(rad);
}

double Ellipse::rotation() const {
    if (is_circle()) return 0.0;
    return std::arg(focus2 - focus1);
}

Ellipse blaschke3_ellipse(Complex a1, Complex a2, const TolerancePolicy& tol) {
    tol.validate();
    if (std::abs(a1) >= 1.0 || std::abs(a2) >= 1.0)
        throw InvalidArgument("blaschke3_ellipse: foci must lie inside the disc");
    if (std::abs(a1) < tol.eps_geom || std::abs(a2) < tol.eps_geom ||
        std::abs(a1 - a2) < tol.eps_geom)
        throw ZeroOrCoincidentFoci("blaschke3_ellipse: zeros 0, a1, a2 must be distinct");
    double s = std::abs(Complex(1.0) - std::conj(a1) * a2);
    if (s <= std::abs(a1 - a2))
        throw DegenerateEllipse("blaschke3_ellipse: degenerate string length");
    return Ellipse{a1, a2, s};
}

double tangency_defect(const Chord& c, const Ellipse& e) {
    Complex d = c.q - c.p;
    double len = std::abs(d);
    if (len == 0.0) throw DegenerateChord("tangency_defect: coincident endpoints");
    d /= len;
    Complex reflected = c.p + d * d * std::conj(e.focus1 - c.p);
    return std::abs(reflected - e.focus2) - e.dist_sum;
}

bool is_tangent(const Chord& c, const Ellipse& e, const TolerancePolicy& tol) {
    tol.validate();
    if (std::abs(c.q - c.p) < tol.eps_geom)
        throw DegenerateChord("is_tangent: coincident endpoints");
    return std::abs(tangency_defect(c, e)) <= tol.eps_geom;
}

PonceletReport verify_poncelet(const BlaschkeProduct& B, const Ellipse& e,
                               int sample_count, const TolerancePolicy& tol) {
    tol.validate();
    if (sample_count < 1) throw InvalidArgument("verify_poncelet: sample_count >= 1");
    if (B.degree() < 3) throw InvalidArgument("verify_poncelet: degree >= 3 required");

    const int n = B.degree();
    PonceletReport report{0.0, sample_count, 0};
    for (int k = 0; k < sample_count; ++k) {
        Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi * k / sample_count);
        std::vector<Complex> pre = preimages_on_circle(B, lambda, tol);
        if (n == 3) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    report.max_defect = std::max(
                        report.max_defect,
                        std::abs(tangency_defect(Chord{pre[i], pre[j]}, e)));
                    ++report.chords_checked;
                }
        } else {
            for (int i = 0; i < n; ++i) {
                report.max_defect = std::max(
                    report.max_defect,
                    std::abs(tangency_defect(Chord{pre[i], pre[(i + 1) % n]}, e)));
                ++report.chords_checked;
            }
        }
    }
    return report;
}

std::pair<Complex, Complex> steiner_foci(const std::array<Complex, 3>& t,
                                         const TolerancePolicy& tol) {
    tol.validate();
    for (Complex v : t)
        if (std::abs(std::abs(v) - 1.0) > tol.eps_geom)
            throw NotUnimodular("steiner_foci: vertices must lie on the unit circle");
    Complex ab = t[1] - t[0], ac = t[2] - t[0];
    double cross = ab.real() * ac.imag() - ab.imag() * ac.real();
    if (std::abs(cross) < tol.eps_geom)
        throw DegenerateTriangle("steiner_foci: collinear or coincident vertices");
    Complex g = (t[0] + t[1] + t[2]) / 3.0;
    Complex e2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
    Complex rad = g * g - e2 / 3.0;
    // near-equilateral: the radicand is rounding noise and sqrt would
    // inflate it to ~1e-8; report the circle exactly
    Complex root = std::abs(rad) < 1e-15 ? Complex(0.0) : std::sqrt(rad);
    return {g + root, g - root};
}

std::pair<Ellipse, BlaschkeProduct> golden_blaschke_ellipse() {
    const double s5 = std::sqrt(5.0);
    const double c = 0.5 * (-std::sqrt(2.0 * (s5 - 1.0)) + std::sqrt(2.0 * (s5 + 1.0)));
    Ellipse e{Complex(c, 0.0), Complex(-c, 0.0), 1.0 + c * c};
    BlaschkeProduct B = BlaschkeProduct::canonical({Complex(c, 0.0), Complex(-c, 0.0)});
    return {e, B};
}

std::pair<Ellipse, BlaschkeProduct> rotate_blaschke_ellipse(
    const Ellipse& e, const BlaschkeProduct& B, double phi) {
    if (!B.is_canonical(1e-9))
        throw InvalidArgument("rotate_blaschke_ellipse: product must be canonical");
    // The zero set must be {0, focus1, focus2}.
    for (Complex f : {e.focus1, e.focus2}) {
        bool found = false;
        for (Complex z : B.zeros()) found = found || std::abs(z - f) < 1e-9;
        if (!found)
            throw InvalidArgument("rotate_blaschke_ellipse: zeros do not match foci");
    }
    Complex rot = std::polar(1.0, phi);
    std::vector<Complex> zeros;
    for (Complex z : B.zeros())
        if (std::abs(z) > 1e-15) zeros.push_back(rot * z);
    Ellipse re{rot * e.focus1, rot * e.focus2, e.dist_sum};
    return {re, BlaschkeProduct::canonical(std::move(zeros))};
}

Complex fujimura_cubic(const std::array<Complex, 4>& quad, Complex a) {
    const Complex z1 = quad[0], z2 = quad[1], z3 = quad[2], z4 = quad[3];
    const Complex ac = std::conj(a);
    const Complex s = z2 * z4 - z1 * z3;

    Complex term_a2 =
        ((((-z2 + z1) * z3 - z1 * z2) * z4 + z1 * z2 * z3) * ac + s) * (a * a);
    Complex term_a1 =
        -(z1 * z2 * z3 * z4 * (z4 - z3 + z2 - z1) * ac * ac -
          (z3 + z1) * (z4 + z2) * s * ac + z2 * z4 * (z4 + z2) -
          z1 * z3 * (z1 + z3)) *
        a;
    Complex term_a0 =
        z1 * z2 * z3 * z4 * s * ac * ac -
        ((z2 * z2 * z3 + z1 * z2 * z2) * z4 * z4 - z1 * z1 * z3 * z3 * z4 -
         z1 * z1 * z2 * z3 * z3) *
            ac +
        s * (z2 * z4 + z1 * z3);
    return term_a2 + term_a1 + term_a0;
}

Complex fujimura_partner_focus(const std::array<Complex, 4>& quad, Complex a) {
    const Complex z1 = quad[0], z2 = quad[1], z3 = quad[2], z4 = quad[3];
    Complex t = z4 - z3 + z2 - z1;
    Complex s = z2 * z4 - z1 * z3;
    Complex u = ((z2 - z1) * z3 + z1 * z2) * z4 - z1 * z2 * z3;
    Complex den = t * a - s;
    if (std::abs(den) < 1e-14)
        throw InvalidArgument("fujimura_partner_focus: bilinear relation degenerate at a");
    return (s * a - u) / den;
}

namespace {

void validate_quad(const std::array<Complex, 4>& quad, const TolerancePolicy& tol) {
    double prev = -1.0;
    for (Complex v : quad) {
        if (std::abs(std::abs(v) - 1.0) > tol.eps_geom)
            throw NotUnimodular("inscribed_ellipse_foci: vertex off the unit circle");
        double a = std::arg(v);
        if (a < 0) a += 2.0 * std::numbers::pi;
        if (a <= prev)
            throw InvalidArgument("inscribed_ellipse_foci: vertices must be in argument order");
        prev = a;
    }
}

}  // namespace

InscribedEllipseSolution inscribed_ellipse_foci(const std::array<Complex, 4>& quad,
                                                Complex seed,
                                                const TolerancePolicy& tol) {
    tol.validate();
    validate_quad(quad, tol);

    auto residual = [&](Complex a) {
        Complex f = fujimura_cubic(quad, a);
        return Eigen::Vector2d(f.real(), f.imag());
    };

    Complex a = seed;
    const double fd = 1e-7;
    double mu = 1e-8;  // Levenberg damping; the solution set is a curve
    Eigen::Vector2d F = residual(a);
    for (int it = 0; it < tol.max_iter; ++it) {
        if (F.norm() < tol.eps_geom * 1e-3) break;
        Eigen::Matrix2d J;
        J.col(0) = (residual(a + Complex(fd, 0.0)) - F) / fd;
        J.col(1) = (residual(a + Complex(0.0, fd)) - F) / fd;
        Eigen::Matrix2d H = J.transpose() * J + mu * Eigen::Matrix2d::Identity();
        Eigen::Vector2d step = H.ldlt().solve(-J.transpose() * F);
        Complex trial = a + Complex(step(0), step(1));
        Eigen::Vector2d Ft = residual(trial);
        if (Ft.norm() < F.norm()) {
            a = trial;
            F = Ft;
            mu = std::max(mu * 0.3, 1e-12);
        } else {
            mu *= 10.0;
            if (mu > 1e8)
                throw NonConvergence("inscribed_ellipse_foci: damping exhausted");
        }
    }
    if (F.norm() > tol.eps_geom)
        throw NonConvergence("inscribed_ellipse_foci: cubic residual did not vanish");

    Complex b = fujimura_partner_focus(quad, a);
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw FociOutsideDisc("inscribed_ellipse_foci: focus escaped the disc");
    return InscribedEllipseSolution{a, b, F.norm()};
}

Ellipse degree4_ellipse(Complex a, Complex b) {
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw InvalidArgument("degree4_ellipse: foci must lie inside the disc");
    double num = std::norm(a) + std::norm(b) - 2.0;
    double den = std::norm(a) * std::norm(b) - 1.0;
    if (den >= 0.0 || num / den <= 0.0)
        throw DegenerateRadicand("degree4_ellipse: nonpositive radicand");
    double s = std::abs(Complex(1.0) - std::conj(a) * b) * std::sqrt(num / den);
    return Ellipse{a, b, s};
}

BlaschkeProduct degree4_product_from_foci(Complex a, Complex b,
                                          const TolerancePolicy& tol) {
    tol.validate();
    if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
        throw InvalidArgument("degree4_product_from_foci: foci must lie inside the disc");
    // Composition parameters; the paper's pair renamed to p and beta_c.
    Complex p = -a * b;
    Complex beta_c = (a + b - a * b * (std::conj(a) + std::conj(b))) /
                     (1.0 - std::norm(a * b));
    // Degree-2 factor z^2 + (conj(beta_c) p - beta_c) z - p.
    Polynomial quad(std::vector<Complex>{-p, std::conj(beta_c) * p - beta_c, Complex(1.0)});
    std::vector<Complex> factor_zeros = poly_roots(quad, tol);
    for (Complex r : factor_zeros)
        if (std::abs(r) >= 1.0)
            throw FactorZeroOutsideDisc("degree4_product_from_foci: factor zero outside disc");
    if (std::abs(beta_c) >= 1.0)
        throw FactorZeroOutsideDisc("degree4_product_from_foci: beta outside disc");
    return BlaschkeProduct::canonical({beta_c, factor_zeros[0], factor_zeros[1]},
                                      tol.eps_geom);
}

}  // namespace blagold
