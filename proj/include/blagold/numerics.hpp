#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "blagold/errors.hpp"

namespace blagold {

using Complex = std::complex<double>;

bool is_finite(Complex z);

/// Tolerances shared across the library. Defaults suit double precision
/// and the unit-disc scale of everything this repo computes.
struct TolerancePolicy {
    double eps_root = 1e-12;   // polynomial root residual
    double eps_geom = 1e-9;    // geometric assertions
    double eps_count = 1e-9;   // boundary classification band
    int max_iter = 200;

    void validate() const;
};

/// Dense complex polynomial, coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() : coeffs_{Complex(0.0)} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    int degree() const;  // index of the last nonzero coefficient
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
    }

    Complex eval(Complex z) const;        // Horner
    Complex eval_derivative(Complex z) const;

    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(Complex scale) const;

    /// Monic polynomial with the given roots.
    static Polynomial from_roots(const std::vector<Complex>& roots);

private:
    std::vector<Complex> coeffs_;
};

/// q_k = conj(p_{n-k}) for k = 0..n. Applying twice with the same n is
/// the identity. Requires n >= degree(p).
Polynomial reversed_conjugate(const Polynomial& p, int n);

/// All roots (with multiplicity) by Aberth-Ehrlich simultaneous iteration
/// with a final Newton polish. Sorted by principal argument, ties broken
/// by modulus. Roots closer than 10*eps_root are merged.
std::vector<Complex> poly_roots(const Polynomial& p,
                                const TolerancePolicy& tol = {});

/// Bisection/secant hybrid on a sign-changing bracket.
double solve_real_1d(const std::function<double(double)>& f, double lo,
                     double hi, const TolerancePolicy& tol = {});

/// Wrap into the principal branch (-pi, pi].
double wrap_angle(double theta);

}  // namespace blagold
