#pragma once

#include <vector>

#include "blagold/numerics.hpp"

namespace blagold {

/// Finite Blaschke product beta * prod (z - a_i) / (1 - conj(a_i) z),
/// |beta| = 1, all |a_i| < 1. Canonical means beta = 1 and some zero at
/// the origin.
class BlaschkeProduct {
public:
    BlaschkeProduct(Complex prefactor, std::vector<Complex> zeros,
                    double eps_geom = 1e-9);

    /// Canonical product of the given degree: prefactor 1, a zero pinned
    /// at the origin, remaining zeros as given.
    static BlaschkeProduct canonical(std::vector<Complex> nonzero_zeros,
                                     double eps_geom = 1e-9);

    Complex prefactor() const { return prefactor_; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    int degree() const { return static_cast<int>(zeros_.size()); }
    bool is_canonical(double eps = 1e-12) const;

    Complex evaluate(Complex z, double eps_geom = 1e-9) const;

    Polynomial numerator() const;    // beta * prod (z - a_i)
    Polynomial denominator() const;  // prod (1 - conj(a_i) z)

private:
    Complex prefactor_;
    std::vector<Complex> zeros_;
};

/// The degree(B) unimodular solutions of B(z) = lambda, sorted by
/// principal argument. Roots of N(z) - lambda D(z).
std::vector<Complex> preimages_on_circle(const BlaschkeProduct& B,
                                         Complex lambda,
                                         const TolerancePolicy& tol = {});

/// True iff the two unimodular n-tuples strictly alternate in argument
/// order around the circle.
bool is_interspersed(const std::vector<Complex>& Z,
                     const std::vector<Complex>& W,
                     double eps_geom = 1e-9);

/// Canonical product of degree n = |Z| with B constant on Z and constant
/// on W. Damped Newton in the free-zero coordinates; existence holds for
/// interspersed inputs.
BlaschkeProduct construct_identifying_product(const std::vector<Complex>& Z,
                                              const std::vector<Complex>& W,
                                              const TolerancePolicy& tol = {});

/// Largest pairwise argument spread of B over a tuple: the residual that
/// construct_identifying_product drives to zero.
double identification_residual(const BlaschkeProduct& B,
                               const std::vector<Complex>& pts);

}  // namespace blagold
