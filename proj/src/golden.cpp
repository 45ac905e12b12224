#include "blagold/golden.hpp"

#include <cmath>

namespace blagold {

double GoldenTriangle::lateral_len() const {
    return std::abs(vertices[0] - vertices[1]);
}

double GoldenTriangle::base_len() const {
    return std::abs(vertices[1] - vertices[2]);
}

bool divides_in_golden_ratio(Complex p, Complex q, Complex c,
                             const TolerancePolicy& tol) {
    tol.validate();
    double dp = std::abs(c - p);
    double dq = std::abs(c - q);
    double span = std::abs(q - p);
    if (dp + dq > span + tol.eps_geom || dp < tol.eps_geom || dq < tol.eps_geom)
        throw NotOnSegment("divides_in_golden_ratio: point not interior to the segment");
    double ratio = std::max(dp, dq) / std::min(dp, dq);
    return std::abs(ratio - GoldenConstants::alpha) <= tol.eps_geom;
}

namespace {

// Signed chord parameters: the chord through a with direction u meets the
// circle at a + t u for the two roots of t^2 + 2 t Re(conj(a) u) + |a|^2 - 1.
struct ChordCut {
    double t_near;  // positive root (shorter when Re(conj(a) u) >= 0)
    double t_far;   // negative root
};

ChordCut cut_circle(Complex a, Complex u) {
    double c = (std::conj(a) * u).real();
    double disc = std::sqrt(c * c + 1.0 - std::norm(a));
    return {-c + disc, -c - disc};
}

ChordSolution chord_at_angle(Complex a, double theta) {
    Complex u = std::polar(1.0, std::arg(a) + theta);
    ChordCut cut = cut_circle(a, u);
    ChordSolution s;
    s.theta = theta;
    s.z1 = a + cut.t_near * u;
    s.z2 = a + cut.t_far * u;
    s.short_len = cut.t_near;
    s.long_len = -cut.t_far;
    return s;
}

}  // namespace

double chord_division_ratio(Complex a, double theta) {
    Complex u = std::polar(1.0, std::arg(a) + theta);
    ChordCut cut = cut_circle(a, u);
    double lo = cut.t_near, hi = -cut.t_far;
    return std::max(lo, hi) / std::min(lo, hi);
}

ChordClassification golden_chords(Complex a, const TolerancePolicy& tol) {
    tol.validate();
    double mod = std::abs(a);
    if (mod < tol.eps_geom)
        throw ZeroCenter("golden_chords: a must be nonzero");
    if (mod >= 1.0)
        throw InvalidArgument("golden_chords: a must lie inside the disc");
    const double alpha = GoldenConstants::alpha;

    ChordClassification out;
    out.ratio = (1.0 + mod) / (1.0 - mod);
    if (out.ratio < alpha - tol.eps_count) {
        out.kind = ChordCase::None;
        return out;
    }
    if (out.ratio <= alpha + tol.eps_count) {
        // Boundary: the single golden chord is the diameter through a.
        out.kind = ChordCase::Diameter;
        ChordSolution s;
        s.theta = 0.0;
        s.z1 = a / mod;
        s.z2 = -a / mod;
        s.short_len = 1.0 - mod;
        s.long_len = 1.0 + mod;
        out.chords.push_back(s);
        return out;
    }

    out.kind = ChordCase::Pair;
    // Secant property gives l, the near-segment length; the chord angle
    // follows from (long - short) = 2 |a| cos(theta).
    double l = std::sqrt((1.0 - mod * mod) / alpha);
    double cos_theta = l * (alpha - 1.0) / (2.0 * mod);
    double theta = std::acos(std::min(1.0, cos_theta));
    for (double sign : {1.0, -1.0}) {
        ChordSolution s = chord_at_angle(a, sign * theta);
        // Residual check against (z2 - a)^2 = alpha^2 (z1 - a)^2.
        Complex lhs = (s.z2 - a) * (s.z2 - a);
        Complex rhs = alpha * alpha * (s.z1 - a) * (s.z1 - a);
        if (std::abs(lhs - rhs) > 1e3 * tol.eps_geom)
            throw NonConvergence("golden_chords: quadratic residual check failed");
        out.chords.push_back(s);
    }
    return out;
}

GoldenTriangle golden_triangle(double rotation) {
    const double x = GoldenConstants::alpha / 2.0;
    const double y = std::sqrt(1.0 - x * x);
    Complex rot = std::polar(1.0, rotation);
    return GoldenTriangle{{rot * Complex(1.0, 0.0), rot * Complex(-x, y),
                           rot * Complex(-x, -y)}};
}

GoldenRectangle golden_rectangle(double rotation) {
    const double y = 1.0 / std::sqrt(GoldenConstants::alpha + 2.0);
    const double x = GoldenConstants::alpha * y;
    Complex rot = std::polar(1.0, rotation);
    GoldenRectangle r;
    r.vertices = {rot * Complex(x, y), rot * Complex(-x, y),
                  rot * Complex(-x, -y), rot * Complex(x, -y)};
    r.half_long = x;
    r.half_short = y;
    return r;
}

}  // namespace blagold
