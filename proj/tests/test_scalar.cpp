#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qbraid/braidgen.hpp"
#include "qbraid/errors.hpp"
#include "qbraid/scalar.hpp"

using namespace qbraid;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 4), ex(-5, 5), num(-6, 6), den(1, 4);
    std::vector<LaurentPoly::Term> t;
    int n = len(rng);
    for (int k = 0; k < n; ++k) t.emplace_back(ex(rng), Rational(num(rng), den(rng)));
    for (auto& x : t) x.second.canonicalize();
    return LaurentPoly::from_terms(t);
}

// long division of integer coefficient lists (highest power first)
std::vector<long> divide(std::vector<long> num, const std::vector<long>& den) {
    std::vector<long> quo;
    while (num.size() >= den.size()) {
        long c = num[0] / den[0];
        quo.push_back(c);
        for (std::size_t i = 0; i < den.size(); ++i) num[i] -= c * den[i];
        num.erase(num.begin());
    }
    for (long r : num) REQUIRE(r == 0);
    return quo;
}

Complex direct_sum(const LaurentPoly& p, Complex s0) {
    Complex r = 0.0;
    for (const auto& [e, c] : p.terms()) r += c.get_d() * std::pow(s0, e);
    return r;
}

} // namespace

TEST_CASE("canonical form drops zero coefficients") {
    auto p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(2, -3) + LaurentPoly(1);
    CHECK(p.terms().size() == 1);
    CHECK(p == LaurentPoly(1));
    CHECK((p - p).is_zero());
    auto f = LaurentPoly::from_terms({{1, Rational(1, 2)}, {1, Rational(-1, 2)}, {-3, 2}});
    CHECK(f == LaurentPoly::monomial(-3, 2));
}

TEST_CASE("quantum bracket") {
    CHECK(quantum_bracket(0).is_zero());
    CHECK(quantum_bracket(1) == LaurentPoly(1));
    CHECK(quantum_bracket(2) == LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1));
    // q^4 - q^-4 over q - q^-1, as polynomials in q after multiplying by q^4 and q respectively
    auto quo = divide({1, 0, 0, 0, 0, 0, 0, 0, -1}, {1, 0, -1});
    LaurentPoly expect;
    for (std::size_t k = 0; k < quo.size(); ++k)
        expect += LaurentPoly::q_pow(static_cast<int>(quo.size() - 1 - k) - 3) * LaurentPoly(quo[k]);
    CHECK(quantum_bracket(4) == expect);
    for (int n = 1; n < 9; ++n) {
        std::vector<long> num(static_cast<std::size_t>(2 * n + 1), 0);
        num.front() = 1;
        num.back() = -1;
        auto q = divide(num, {1, 0, -1});
        LaurentPoly e;
        for (std::size_t k = 0; k < q.size(); ++k)
            e += LaurentPoly::q_pow(static_cast<int>(q.size() - 1 - k) - (n - 1)) * LaurentPoly(q[k]);
        CHECK(quantum_bracket(n) == e);
    }
    CHECK_THROWS_AS(quantum_bracket(-1), Error);
}

TEST_CASE("evaluation") {
    const double pi = std::acos(-1.0);
    auto p = LaurentPoly::s_pow(2) + LaurentPoly(1) + LaurentPoly::s_pow(-2);
    CHECK(approx_equal(evaluate(p, std::polar(1.0, pi / 6)), 2.0));
    CHECK(evaluate(LaurentPoly(1), Complex(0.3, 0.7)) == Complex(1.0));
    auto p2 = LaurentPoly::s_pow(4) + LaurentPoly(2) + LaurentPoly::s_pow(-4);
    Complex s0 = std::polar(1.0, pi / 8);
    Complex oracle = std::pow(s0, 4) + 2.0 + std::pow(s0, -4);
    CHECK(approx_equal(evaluate(p2, s0), oracle));
    CHECK(std::abs(evaluate(p2, s0) - 2.0) < 1e-12);
    // 2 + sqrt(2) arises when e^{i pi/8} is taken as q rather than s
    CHECK(std::abs(evaluate(p2, std::polar(1.0, pi / 16)) - (2.0 + std::sqrt(2.0))) < 1e-12);
    CHECK_THROWS_AS(evaluate(p, 0.0), Error);
    try {
        evaluate(p, 0.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroBase);
    }

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int k = 0; k < 50; ++k) {
        auto r = random_poly(rng);
        Complex z(u(rng), u(rng));
        if (std::abs(z) < 0.2) continue;
        CHECK(approx_equal(evaluate(r, z), direct_sum(r, z)));
    }
}

TEST_CASE("numeric lambda roots") {
    auto d = lambda_numeric_roots(2.0);
    CHECK(d.degenerate);
    CHECK(d.plus == Complex(-1.0));
    CHECK(d.minus == Complex(-1.0));

    auto r = lambda_numeric_roots(3.0);
    CHECK(!r.degenerate);
    CHECK(std::abs(r.plus - (-(1.5 - 0.5 * std::sqrt(5.0)))) < 1e-12);
    CHECK(std::abs(r.minus - (-(1.5 + 0.5 * std::sqrt(5.0)))) < 1e-12);
    CHECK(std::abs(r.plus + 0.3819660) < 1e-7);
    CHECK(std::abs(r.minus + 2.6180340) < 1e-7);
    CHECK(approx_equal(r.plus * r.minus, 1.0));
    CHECK(approx_equal(r.plus + r.minus, -3.0));

    for (int N = 3; N <= 8; ++N) {
        auto x = lambda_numeric_roots(static_cast<double>(N));
        CHECK(std::abs(x.plus + (N - std::sqrt(N * N - 4.0)) / 2) < 1e-12);
        CHECK(x.exp_eta().real() >= 1.0);
    }
    Complex T(0.4, 1.3);
    auto c = lambda_numeric_roots(T);
    CHECK(approx_equal(c.plus * c.minus, 1.0));
    CHECK(approx_equal(c.plus + c.minus, -T));
}

TEST_CASE("LaurentPoly ring axioms on random inputs") {
    std::mt19937 rng(20240611);
    for (int k = 0; k < 200; ++k) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK((a * b).reflect() == a.reflect() * b.reflect());
    }
}

TEST_CASE("LambdaExt ring structure") {
    auto spec = make_spec(Family::OHat, 3);
    auto T = spec.T;
    auto l = LambdaExt::lambda(T);
    auto li = LambdaExt::lambda_inv(T);
    CHECK(l * li == LambdaExt(1));
    CHECK(l * l == LambdaExt(-1) - LambdaExt(*T) * l);
    CHECK(l.conj() == li);
    CHECK(li.conj() == l);

    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.3, 2.5);
    for (int k = 0; k < 100; ++k) {
        LambdaExt x(random_poly(rng), random_poly(rng), T);
        LambdaExt y(random_poly(rng), random_poly(rng), T);
        LambdaExt z(random_poly(rng), random_poly(rng), T);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());

        // evaluation is a ring homomorphism for either root
        double q0 = u(rng);
        Complex s0 = std::sqrt(q0);
        auto roots = lambda_numeric_roots(evaluate(*T, s0));
        for (Complex lv : {roots.plus, roots.minus}) {
            Complex lhs = evaluate(x * y, s0, lv);
            Complex rhs = evaluate(x, s0, lv) * evaluate(y, s0, lv);
            CHECK(approx_equal(lhs, rhs, 1e-9, 1e-9));
        }
    }
}

TEST_CASE("LambdaExt over different moduli is rejected") {
    auto a = LambdaExt::lambda(make_spec(Family::OHat, 3).T);
    auto b = LambdaExt::lambda(make_spec(Family::OHat, 4).T);
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
}
