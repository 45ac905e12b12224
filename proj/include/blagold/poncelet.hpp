#pragma once

#include <array>
#include <utility>

#include "blagold/blaschke.hpp"
#include "blagold/numerics.hpp"

namespace blagold {

/// Ellipse in string-length form: |z - f1| + |z - f2| = dist_sum.
struct Ellipse {
    Complex focus1;
    Complex focus2;
    double dist_sum;

    Complex center() const { return 0.5 * (focus1 + focus2); }
    double focal_dist() const { return std::abs(focus1 - focus2); }
    double semi_major() const { return 0.5 * dist_sum; }
    double semi_minor() const;
    double axis_ratio() const { return semi_major() / semi_minor(); }
    /// Orientation of the major axis; 0 for coincident foci.
    double rotation() const;
    bool is_circle(double eps = 1e-12) const { return focal_dist() <= eps; }
};

struct Chord {
    Complex p;
    Complex q;
};

struct InscribedEllipseSolution {
    Complex focus_a;
    Complex focus_b;
    double residual;  // Fujimura cubic residual magnitude at focus_a
};

struct PonceletReport {
    double max_defect;
    int samples;
    int chords_checked;
};

/// The ellipse |z - a1| + |z - a2| = |1 - conj(a1) a2| that every chord
/// of the degree-3 canonical product with zeros {0, a1, a2} touches.
Ellipse blaschke3_ellipse(Complex a1, Complex a2,
                          const TolerancePolicy& tol = {});

/// Focus-reflection tangency test for the line through the chord.
bool is_tangent(const Chord& c, const Ellipse& e,
                const TolerancePolicy& tol = {});

/// |reflect(focus1 across line pq) - focus2| - dist_sum; zero at tangency,
/// negative when the line cuts the ellipse.
double tangency_defect(const Chord& c, const Ellipse& e);

/// Sweeps sample_count unimodular lambda; for each, checks every polygon
/// chord of the preimages against e. Degree 3 checks all three pairs,
/// degree >= 4 the consecutive (cyclic) sides.
PonceletReport verify_poncelet(const BlaschkeProduct& B, const Ellipse& e,
                               int sample_count,
                               const TolerancePolicy& tol = {});

/// Steiner inellipse foci g +- sqrt(g^2 - e2/3) for a triangle inscribed
/// in the unit circle.
std::pair<Complex, Complex> steiner_foci(const std::array<Complex, 3>& t,
                                         const TolerancePolicy& tol = {});

/// The unique golden ellipse that is a Blaschke 3-ellipse (foci +-c on the
/// real axis) together with its canonical degree-3 product.
std::pair<Ellipse, BlaschkeProduct> golden_blaschke_ellipse();

/// Rotate ellipse and product by phi about the origin; dist_sum unchanged.
std::pair<Ellipse, BlaschkeProduct> rotate_blaschke_ellipse(
    const Ellipse& e, const BlaschkeProduct& B, double phi);

/// Fujimura cubic in (a, conj a) for a quadrilateral; zero when a is a
/// focus of an inscribed ellipse.
Complex fujimura_cubic(const std::array<Complex, 4>& quad, Complex a);

/// Second focus from the bilinear focus relation, given the first.
Complex fujimura_partner_focus(const std::array<Complex, 4>& quad, Complex a);

/// Damped Gauss-Newton on the Fujimura cubic from the given seed; the
/// solution family is one-dimensional, so the result depends on the seed.
InscribedEllipseSolution inscribed_ellipse_foci(const std::array<Complex, 4>& quad,
                                                Complex seed,
                                                const TolerancePolicy& tol = {});

/// String length |1 - conj(a) b| sqrt((|a|^2 + |b|^2 - 2)/(|a|^2 |b|^2 - 1))
/// of the degree-4 Poncelet ellipse with foci a, b.
Ellipse degree4_ellipse(Complex a, Complex b);

/// The degree-4 canonical product whose Poncelet curve is
/// degree4_ellipse(a, b): composition of two degree-2 factors.
BlaschkeProduct degree4_product_from_foci(Complex a, Complex b,
                                          const TolerancePolicy& tol = {});

}  // namespace blagold
