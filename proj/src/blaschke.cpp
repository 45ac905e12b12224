#include "blagold/blaschke.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace blagold {

BlaschkeProduct::BlaschkeProduct(Complex prefactor, std::vector<Complex> zeros,
                                 double eps_geom)
    : prefactor_(prefactor), zeros_(std::move(zeros)) {
    if (!is_finite(prefactor_))
        throw InvalidArgument("BlaschkeProduct: non-finite prefactor");
    if (std::abs(std::abs(prefactor_) - 1.0) > eps_geom)
        throw NotUnimodular("BlaschkeProduct: prefactor must have modulus 1");
    for (Complex a : zeros_) {
        if (!is_finite(a)) throw InvalidArgument("BlaschkeProduct: non-finite zero");
        if (std::abs(a) >= 1.0)
            throw InvalidArgument("BlaschkeProduct: zeros must lie strictly inside the disc");
    }
}

BlaschkeProduct BlaschkeProduct::canonical(std::vector<Complex> nonzero_zeros,
                                           double eps_geom) {
    std::vector<Complex> zeros;
    zeros.reserve(nonzero_zeros.size() + 1);
    zeros.push_back(Complex(0.0));
    zeros.insert(zeros.end(), nonzero_zeros.begin(), nonzero_zeros.end());
    return BlaschkeProduct(Complex(1.0), std::move(zeros), eps_geom);
}

bool BlaschkeProduct::is_canonical(double eps) const {
    if (std::abs(prefactor_ - Complex(1.0)) > eps) return false;
    for (Complex a : zeros_)
        if (std::abs(a) <= eps) return true;
    return false;
}

Complex BlaschkeProduct::evaluate(Complex z, double eps_geom) const {
    if (!is_finite(z)) throw InvalidArgument("evaluate: non-finite argument");
    Complex acc = prefactor_;
    for (Complex a : zeros_) {
        Complex den = Complex(1.0) - std::conj(a) * z;
        if (std::abs(den) < eps_geom)
            throw PoleProximity("evaluate: argument too close to a pole");
        acc *= (z - a) / den;
    }
    return acc;
}

Polynomial BlaschkeProduct::numerator() const {
    return Polynomial::from_roots(zeros_) * prefactor_;
}

Polynomial BlaschkeProduct::denominator() const {
    Polynomial d(std::vector<Complex>{Complex(1.0)});
    for (Complex a : zeros_)
        d = d * Polynomial(std::vector<Complex>{Complex(1.0), -std::conj(a)});
    return d;
}

std::vector<Complex> preimages_on_circle(const BlaschkeProduct& B,
                                         Complex lambda,
                                         const TolerancePolicy& tol) {
    tol.validate();
    if (std::abs(std::abs(lambda) - 1.0) > tol.eps_geom)
        throw NotUnimodular("preimages_on_circle: lambda must lie on the unit circle");
    if (!B.is_canonical(tol.eps_geom))
        throw InvalidArgument("preimages_on_circle: product must be canonical");

    Polynomial resolvent = B.numerator() - B.denominator() * lambda;
    std::vector<Complex> roots = poly_roots(resolvent, tol);

    for (std::size_t i = 1; i < roots.size(); ++i)
        if (std::abs(roots[i] - roots[i - 1]) < 10.0 * tol.eps_root)
            throw CoincidentPreimages("preimages_on_circle: merged preimage pair");

    // Roots of N - lambda D on the circle, snap the tiny radial error out.
    for (Complex& r : roots) {
        double m = std::abs(r);
        if (std::abs(m - 1.0) > tol.eps_geom)
            throw NonConvergence("preimages_on_circle: root left the unit circle");
        r /= m;
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

bool is_interspersed(const std::vector<Complex>& Z, const std::vector<Complex>& W,
                     double eps_geom) {
    if (Z.size() != W.size() || Z.size() < 2)
        throw SizeMismatch("is_interspersed: tuples must have equal size >= 2");
    struct Tagged {
        double arg;
        int which;
    };
    std::vector<Tagged> all;
    all.reserve(2 * Z.size());
    auto push = [&](const std::vector<Complex>& pts, int tag) {
        for (Complex p : pts) {
            if (std::abs(std::abs(p) - 1.0) > eps_geom)
                throw NotUnimodular("is_interspersed: point off the unit circle");
            double a = std::arg(p);
            if (a < 0) a += 2.0 * std::numbers::pi;
            all.push_back({a, tag});
        }
    };
    push(Z, 0);
    push(W, 1);
    std::sort(all.begin(), all.end(),
              [](const Tagged& a, const Tagged& b) { return a.arg < b.arg; });
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].arg == all[i - 1].arg) return false;
        if (all[i].which == all[i - 1].which) return false;
    }
    return all.front().which != all.back().which;
}

double identification_residual(const BlaschkeProduct& B,
                               const std::vector<Complex>& pts) {
    double worst = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            worst = std::max(worst, std::abs(B.evaluate(pts[i]) - B.evaluate(pts[j])));
    return worst;
}

namespace {

std::vector<Complex> sorted_by_arg(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    return pts;
}

// Wrapped argument gaps of B over consecutive points of both tuples.
Eigen::VectorXd identify_residual_vec(const std::vector<Complex>& free_zeros,
                                      const std::vector<Complex>& Z,
                                      const std::vector<Complex>& W) {
    BlaschkeProduct B = BlaschkeProduct::canonical(free_zeros);
    const std::size_t m = free_zeros.size();
    Eigen::VectorXd F(2 * static_cast<Eigen::Index>(m));
    Eigen::Index k = 0;
    for (const auto* tuple : {&Z, &W}) {
        for (std::size_t j = 0; j + 1 < tuple->size(); ++j) {
            Complex ratio = B.evaluate((*tuple)[j + 1]) / B.evaluate((*tuple)[j]);
            F(k++) = wrap_angle(std::arg(ratio));
        }
    }
    return F;
}

void retract_into_disc(std::vector<Complex>& zeros) {
    for (Complex& c : zeros)
        if (std::abs(c) >= 1.0) c *= 0.95 / std::abs(c);
}

}  // namespace

BlaschkeProduct construct_identifying_product(const std::vector<Complex>& Z_in,
                                              const std::vector<Complex>& W_in,
                                              const TolerancePolicy& tol) {
    tol.validate();
    if (!is_interspersed(Z_in, W_in, tol.eps_geom))
        throw NotInterspersed("construct_identifying_product: tuples must intersperse");
    std::vector<Complex> Z = sorted_by_arg(Z_in);
    std::vector<Complex> W = sorted_by_arg(W_in);
    const std::size_t n = Z.size();
    const std::size_t m = n - 1;  // free zeros
    const Eigen::Index dim = 2 * static_cast<Eigen::Index>(m);

    Complex centroid(0.0);
    for (Complex p : Z) centroid += p;
    for (Complex p : W) centroid += p;
    centroid /= static_cast<double>(2 * n);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    const int restarts = 8;
    const double fd_step = 1e-7;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<Complex> zeros(m, 0.3 * centroid);
        if (attempt > 0)
            for (Complex& c : zeros)
                c += 0.05 * Complex(unit(rng), unit(rng));
        retract_into_disc(zeros);

        bool converged = false;
        for (int it = 0; it < tol.max_iter; ++it) {
            Eigen::VectorXd F = identify_residual_vec(zeros, Z, W);
            if (F.lpNorm<Eigen::Infinity>() < tol.eps_geom * 1e-2) {
                converged = true;
                break;
            }
            Eigen::MatrixXd J(dim, dim);
            for (std::size_t p = 0; p < m; ++p) {
                for (int part = 0; part < 2; ++part) {
                    std::vector<Complex> bumped = zeros;
                    bumped[p] += part == 0 ? Complex(fd_step, 0) : Complex(0, fd_step);
                    retract_into_disc(bumped);
                    J.col(2 * static_cast<Eigen::Index>(p) + part) =
                        (identify_residual_vec(bumped, Z, W) - F) / fd_step;
                }
            }
            Eigen::VectorXd step = J.fullPivLu().solve(-F);
            if (!step.allFinite()) break;

            // Damped line search on the residual norm.
            double base = F.norm();
            double damp = 1.0;
            bool accepted = false;
            for (int ls = 0; ls < 12; ++ls, damp *= 0.5) {
                std::vector<Complex> trial = zeros;
                for (std::size_t p = 0; p < m; ++p)
                    trial[p] += damp * Complex(step(2 * static_cast<Eigen::Index>(p)),
                                               step(2 * static_cast<Eigen::Index>(p) + 1));
                retract_into_disc(trial);
                if (identify_residual_vec(trial, Z, W).norm() < base) {
                    zeros = trial;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
        }
        if (converged) {
            BlaschkeProduct B = BlaschkeProduct::canonical(zeros, tol.eps_geom);
            if (std::max(identification_residual(B, Z),
                         identification_residual(B, W)) < tol.eps_geom)
                return B;
        }
    }
    throw NonConvergence("construct_identifying_product: restart budget exhausted");
}

}  // namespace blagold
