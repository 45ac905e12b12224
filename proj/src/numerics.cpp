#include "blagold/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace blagold {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void TolerancePolicy::validate() const {
    if (eps_root <= 0 || eps_geom <= 0 || eps_count <= 0)
        throw InvalidArgument("tolerances must be strictly positive");
    if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex(0.0));
    for (Complex c : coeffs_)
        if (!is_finite(c)) throw InvalidArgument("non-finite coefficient");
}

int Polynomial::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (coeffs_[k] != Complex(0.0)) return k;
    return 0;
}

Complex Polynomial::eval(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Complex Polynomial::eval_derivative(Complex z) const {
    Complex acc(0.0);
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 1; --k)
        acc = acc * z + coeffs_[k] * static_cast<double>(k);
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) + other.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()), Complex(0.0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(i) - other.coeff(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(Complex scale) const {
    std::vector<Complex> out(coeffs_);
    for (Complex& c : out) c *= scale;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
    Polynomial p(std::vector<Complex>{Complex(1.0)});
    for (Complex r : roots)
        p = p * Polynomial(std::vector<Complex>{-r, Complex(1.0)});
    return p;
}

Polynomial reversed_conjugate(const Polynomial& p, int n) {
    if (n < p.degree())
        throw BadDegreeBound("reversed_conjugate: n below polynomial degree");
    std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        out[static_cast<std::size_t>(k)] = std::conj(p.coeff(static_cast<std::size_t>(n - k)));
    return Polynomial(std::move(out));
}

double wrap_angle(double theta) {
    double t = std::remainder(theta, 2.0 * std::numbers::pi);
    if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
    return t;
}

namespace {

// One Aberth-Ehrlich pass over all approximations; returns max correction.
double aberth_sweep(const Polynomial& p, std::vector<Complex>& zs) {
    const std::size_t n = zs.size();
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex pv = p.eval(zs[i]);
        Complex dv = p.eval_derivative(zs[i]);
        if (pv == Complex(0.0)) continue;
        if (dv == Complex(0.0)) {
            zs[i] += Complex(1e-8, 1e-8);
            max_step = std::max(max_step, 1e-8);
            continue;
        }
        Complex ratio = pv / dv;
        Complex repulsion(0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Complex diff = zs[i] - zs[j];
            if (diff == Complex(0.0)) diff = Complex(1e-14, 0.0);
            repulsion += Complex(1.0) / diff;
        }
        Complex denom = Complex(1.0) - ratio * repulsion;
        Complex step = (denom == Complex(0.0)) ? ratio : ratio / denom;
        zs[i] -= step;
        max_step = std::max(max_step, std::abs(step));
    }
    return max_step;
}

bool roots_converged(const Polynomial& p, const std::vector<Complex>& zs,
                     double eps, double coeff_scale, int deg) {
    for (Complex z : zs) {
        double bound = eps * coeff_scale * std::pow(std::max(1.0, std::abs(z)), deg);
        if (std::abs(p.eval(z)) > bound) return false;
    }
    return true;
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p, const TolerancePolicy& tol) {
    tol.validate();
    const int deg = p.degree();
    if (deg == 0) throw DegreeZero("poly_roots: constant polynomial");

    // Work on the trimmed, monic copy.
    std::vector<Complex> mc(p.coeffs().begin(), p.coeffs().begin() + deg + 1);
    Complex lead = mc.back();
    double coeff_scale = 0.0;
    for (Complex c : p.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(c));
    for (Complex& c : mc) c /= lead;
    Polynomial monic{mc};
    double monic_scale = 0.0;
    for (Complex c : mc) monic_scale = std::max(monic_scale, std::abs(c));

    double max_mod = 0.0;
    for (int k = 0; k < deg; ++k) max_mod = std::max(max_mod, std::abs(mc[static_cast<std::size_t>(k)]));
    const double seed_radius = 1.0 + max_mod;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // deterministic seeding
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    std::vector<Complex> zs(static_cast<std::size_t>(deg));
    const int restarts = 3;
    for (int attempt = 0; attempt <= restarts; ++attempt) {
        double phi0 = phase(rng);
        for (int k = 0; k < deg; ++k) {
            double ang = phi0 + 2.0 * std::numbers::pi * k / deg + 0.3 * k / deg;
            zs[static_cast<std::size_t>(k)] = std::polar(seed_radius, ang);
        }
        bool done = false;
        for (int it = 0; it < tol.max_iter; ++it) {
            double step = aberth_sweep(monic, zs);
            if (step < tol.eps_root) { done = true; break; }
        }
        if (!done && roots_converged(monic, zs, tol.eps_root, monic_scale, deg))
            done = true;
        if (done) break;
        if (attempt == restarts)
            throw NonConvergence("poly_roots: Aberth iteration did not converge");
    }

    // Newton polish.
    for (Complex& z : zs) {
        for (int it = 0; it < 4; ++it) {
            Complex dv = monic.eval_derivative(z);
            if (std::abs(dv) < 1e-300) break;
            Complex step = monic.eval(z) / dv;
            if (!is_finite(step)) break;
            Complex cand = z - step;
            if (std::abs(monic.eval(cand)) <= std::abs(monic.eval(z))) z = cand;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
        }
    }

    if (!roots_converged(monic, zs, 1e4 * tol.eps_root, monic_scale, deg))
        throw NonConvergence("poly_roots: residual check failed after polish");

    // Merge near-coincident roots to their cluster mean.
    const double merge_tol = 10.0 * tol.eps_root;
    std::vector<bool> used(zs.size(), false);
    std::vector<Complex> merged;
    merged.reserve(zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (used[i]) continue;
        Complex sum = zs[i];
        std::size_t count = 1;
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            if (!used[j] && std::abs(zs[j] - zs[i]) < merge_tol) {
                used[j] = true;
                sum += zs[j];
                ++count;
            }
        }
        Complex rep = sum / static_cast<double>(count);
        for (std::size_t k = 0; k < count; ++k) merged.push_back(rep);
    }

    std::sort(merged.begin(), merged.end(), [](Complex a, Complex b) {
        double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    return merged;
}

double solve_real_1d(const std::function<double(double)>& f, double lo,
                     double hi, const TolerancePolicy& tol) {
    tol.validate();
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw BracketInvalid("solve_real_1d: f has the same sign at both ends");

    double a = lo, b = hi, fa = flo, fb = fhi;
    double x = 0.5 * (a + b);
    for (int it = 0; it < tol.max_iter * 4; ++it) {
        // Secant candidate, falling back to bisection when it escapes.
        double xs = b - fb * (b - a) / (fb - fa);
        x = (xs > a && xs < b) ? xs : 0.5 * (a + b);
        double fx = f(x);
        if (std::abs(fx) <= tol.eps_geom || b - a < 1e-16 * std::max(1.0, std::abs(x)))
            return x;
        if (fa * fx <= 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    return x;
}

}  // namespace blagold
