#pragma once

#include <array>
#include <vector>

#include "blagold/numerics.hpp"

namespace blagold {

/// Constants around the golden ratio alpha = (1 + sqrt 5) / 2.
struct GoldenConstants {
    static constexpr double alpha = 1.6180339887498948482;
    static constexpr double alpha_sq = alpha + 1.0;
    static constexpr double inv_alpha = alpha - 1.0;
    /// |a| at which (1+|a|)/(1-|a|) = alpha; equals sqrt(5) - 2.
    static constexpr double chord_threshold = (alpha - 1.0) / (alpha + 1.0);
};

enum class ChordCase { None, Diameter, Pair };

/// A chord through the zero a, divided by a in the golden ratio.
/// z1 is the near endpoint (segment of length short_len), z2 the far one.
struct ChordSolution {
    Complex z1;
    Complex z2;
    double theta;      // angle between [0,a] and the chord
    double short_len;  // l
    double long_len;   // l * alpha
};

struct ChordClassification {
    ChordCase kind;
    double ratio;  // (1+|a|)/(1-|a|)
    std::vector<ChordSolution> chords;
};

/// Isosceles triangle on the unit circle with lateral/base ratio alpha.
struct GoldenTriangle {
    std::array<Complex, 3> vertices;  // apex first
    double lateral_len() const;
    double base_len() const;
};

/// Rectangle on the unit circle with side ratio alpha. Vertices in
/// argument order starting from the first-quadrant corner (rotation 0).
struct GoldenRectangle {
    std::array<Complex, 4> vertices;
    double half_long;   // x
    double half_short;  // y
};

/// True iff c splits [p, q] with longer/shorter part ratio alpha.
bool divides_in_golden_ratio(Complex p, Complex q, Complex c,
                             const TolerancePolicy& tol = {});

/// The 0, 1 or 2 chords through a (0 < |a| < 1) divided by a in the
/// golden ratio, with the threshold classification.
ChordClassification golden_chords(Complex a, const TolerancePolicy& tol = {});

GoldenTriangle golden_triangle(double rotation);
GoldenRectangle golden_rectangle(double rotation);

/// Longer/shorter division ratio of the chord through a at angle theta
/// to the ray [0,a]. Brute-force oracle companion to golden_chords.
double chord_division_ratio(Complex a, double theta);

}  // namespace blagold
