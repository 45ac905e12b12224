#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "blagold/numerics.hpp"

using namespace blagold;

namespace {

Complex find_near(const std::vector<Complex>& roots, Complex target) {
    Complex best = roots.front();
    for (Complex r : roots)
        if (std::abs(r - target) < std::abs(best - target)) best = r;
    return best;
}

}  // namespace

TEST_CASE("poly_eval basics") {
    Polynomial one(std::vector<Complex>{Complex(1.0)});
    CHECK(one.eval(Complex(5.0, 0.0)) == Complex(1.0));

    Polynomial z2m1(std::vector<Complex>{Complex(-1.0), Complex(0.0), Complex(1.0)});
    CHECK(std::abs(z2m1.eval(Complex(1.0, 0.0))) == doctest::Approx(0.0));
    CHECK(z2m1.eval(Complex(0.0, 1.0)).real() == doctest::Approx(-2.0));
    CHECK(z2m1.eval(Complex(0.0, 1.0)).imag() == doctest::Approx(0.0));
}

TEST_CASE("poly_roots simple polynomials") {
    Polynomial z2m1(std::vector<Complex>{Complex(-1.0), Complex(0.0), Complex(1.0)});
    auto r = poly_roots(z2m1);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(find_near(r, Complex(1.0)) - Complex(1.0)) < 1e-10);
    CHECK(std::abs(find_near(r, Complex(-1.0)) - Complex(-1.0)) < 1e-10);

    Polynomial z3m1(std::vector<Complex>{Complex(-1.0), Complex(0.0), Complex(0.0),
                                         Complex(1.0)});
    auto cube = poly_roots(z3m1);
    REQUIRE(cube.size() == 3);
    for (int k = 0; k < 3; ++k) {
        Complex expect = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
        CHECK(std::abs(find_near(cube, expect) - expect) < 1e-10);
    }
}

TEST_CASE("poly_roots of z^2 - (3+4i): squares of the roots match") {
    Polynomial p(std::vector<Complex>{Complex(-3.0, -4.0), Complex(0.0), Complex(1.0)});
    auto r = poly_roots(p);
    REQUIRE(r.size() == 2);
    for (Complex root : r)
        CHECK(std::abs(root * root - Complex(3.0, 4.0)) < 1e-10);
    CHECK(std::abs(find_near(r, Complex(2.0, 1.0)) - Complex(2.0, 1.0)) < 1e-10);
    CHECK(std::abs(find_near(r, Complex(-2.0, -1.0)) - Complex(-2.0, -1.0)) < 1e-10);
}

TEST_CASE("poly_roots rejects constants") {
    CHECK_THROWS_AS(poly_roots(Polynomial(std::vector<Complex>{Complex(3.0)})),
                    DegreeZero);
}

TEST_CASE("poly_roots rebuild property, random degrees up to 12") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = 2 + static_cast<int>(rng() % 11);
        std::vector<Complex> cs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : cs) c = Complex(coef(rng), coef(rng));
        cs.back() = Complex(1.0);
        Polynomial p(cs);
        auto roots = poly_roots(p);
        REQUIRE(static_cast<int>(roots.size()) == deg);
        Polynomial rebuilt = Polynomial::from_roots(roots);
        for (int k = 0; k <= deg; ++k)
            CHECK(std::abs(rebuilt.coeff(static_cast<std::size_t>(k)) -
                           cs[static_cast<std::size_t>(k)]) < 1e-8);
    }
}

TEST_CASE("poly_roots output is sorted by principal argument") {
    Polynomial z41(std::vector<Complex>{Complex(-1.0), Complex(0.0), Complex(0.0),
                                        Complex(0.0), Complex(1.0)});
    auto r = poly_roots(z41);
    for (std::size_t i = 1; i < r.size(); ++i)
        CHECK(std::arg(r[i - 1]) <= std::arg(r[i]));
}

TEST_CASE("reversed_conjugate") {
    // degree-2 factor: numerator [-p, conj(b)p - b, 1] pairs with its
    // reversed conjugate as the denominator
    Complex p(0.3, -0.2), b(0.1, 0.4);
    Polynomial num(std::vector<Complex>{-p, std::conj(b) * p - b, Complex(1.0)});
    Polynomial den = reversed_conjugate(num, 2);
    CHECK(std::abs(den.coeff(0) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(den.coeff(1) - (std::conj(p) * b - std::conj(b))) < 1e-15);
    CHECK(std::abs(den.coeff(2) - (-std::conj(p))) < 1e-15);

    CHECK(reversed_conjugate(Polynomial(std::vector<Complex>{Complex(1.0)}), 0)
              .coeff(0) == Complex(1.0));
    Polynomial z(std::vector<Complex>{Complex(0.0), Complex(1.0)});
    Polynomial rz = reversed_conjugate(z, 1);
    CHECK(rz.coeff(0) == Complex(1.0));
    CHECK(rz.coeff(1) == Complex(0.0));

    CHECK_THROWS_AS(reversed_conjugate(num, 1), BadDegreeBound);
}

TEST_CASE("reversed_conjugate is an involution") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 16; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Complex> cs(static_cast<std::size_t>(n) + 1);
        for (auto& c : cs) c = Complex(coef(rng), coef(rng));
        Polynomial p(cs);
        Polynomial twice = reversed_conjugate(reversed_conjugate(p, n), n);
        for (int k = 0; k <= n; ++k)
            CHECK(std::abs(twice.coeff(static_cast<std::size_t>(k)) -
                           cs[static_cast<std::size_t>(k)]) < 1e-15);
    }
}

TEST_CASE("solve_real_1d") {
    auto sqrt2 = solve_real_1d([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(sqrt2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    auto half_pi = solve_real_1d([](double x) { return std::cos(x); }, 1.0, 2.0);
    CHECK(half_pi == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-8));
    auto alpha = solve_real_1d([](double x) { return x * x - x - 1.0; }, 1.0, 2.0);
    CHECK(alpha == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-8));
    CHECK(alpha >= 1.0);
    CHECK(alpha <= 2.0);

    CHECK_THROWS_AS(
        solve_real_1d([](double x) { return x * x + 1.0; }, -1.0, 1.0),
        BracketInvalid);
}

TEST_CASE("tolerance validation") {
    TolerancePolicy bad;
    bad.eps_root = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    TolerancePolicy bad2;
    bad2.max_iter = 0;
    CHECK_THROWS_AS(bad2.validate(), InvalidArgument);
}
