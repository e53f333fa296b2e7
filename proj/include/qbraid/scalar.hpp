#pragma once

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qbraid {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

// |a - b| <= max(abs, rel * max(|a|, |b|))
bool approx_equal(Complex a, Complex b, double rel = kRelTol, double abs = kAbsTol);

// Laurent polynomial in s = q^{1/2} with exact rational coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    explicit LaurentPoly(const Rational& c);

    static LaurentPoly monomial(int exp, const Rational& c = 1);
    static LaurentPoly s_pow(int exp) { return monomial(exp); }
    static LaurentPoly q_pow(int exp) { return monomial(2 * exp); }
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // s -> 1/s
    LaurentPoly reflect() const;
    // largest |coefficient|, 0 for the zero polynomial
    double magnitude() const;
    std::string to_string(const std::string& var = "s") const;

private:
    std::vector<Term> terms_;
};

// [n] = (q^n - q^-n)/(q - q^-1) as a polynomial in s
LaurentPoly quantum_bracket(int n);

Complex evaluate(const LaurentPoly& p, Complex s0);

// a + b*lambda with lambda^2 = -T lambda - 1.  The modulus T is shared by every
// element built from the same AlgebraSpec; pure scalars carry no modulus.
class LambdaExt {
public:
    using Modulus = std::shared_ptr<const LaurentPoly>;

    LambdaExt() = default;
    LambdaExt(long c) : a_(c) {}
    LambdaExt(LaurentPoly a) : a_(std::move(a)) {}
    LambdaExt(LaurentPoly a, LaurentPoly b, Modulus T);

    static LambdaExt lambda(const Modulus& T);
    static LambdaExt lambda_inv(const Modulus& T);

    const LaurentPoly& a() const { return a_; }
    const LaurentPoly& b() const { return b_; }
    const Modulus& modulus() const { return mod_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    double magnitude() const;

    LambdaExt& operator+=(const LambdaExt& o);
    LambdaExt& operator-=(const LambdaExt& o);
    LambdaExt& operator*=(const LambdaExt& o);
    LambdaExt operator-() const;

    friend LambdaExt operator+(LambdaExt a, const LambdaExt& b) { return a += b; }
    friend LambdaExt operator-(LambdaExt a, const LambdaExt& b) { return a -= b; }
    friend LambdaExt operator*(const LambdaExt& a, const LambdaExt& b);
    friend bool operator==(const LambdaExt& a, const LambdaExt& b) { return a.a_ == b.a_ && a.b_ == b.b_; }
    friend bool operator!=(const LambdaExt& a, const LambdaExt& b) { return !(a == b); }

    // lambda -> lambda^{-1}
    LambdaExt conj() const;
    // s -> 1/s on both components
    LambdaExt reflect() const;
    std::string to_string() const;

private:
    static Modulus pick(const Modulus& x, const Modulus& y);

    LaurentPoly a_, b_;
    Modulus mod_;
};

Complex evaluate(const LambdaExt& x, Complex s0, Complex lambda0);

struct LambdaRoots {
    Complex plus;
    Complex minus;
    bool degenerate = false;
    Complex exp_eta() const { return -minus; }
};

// roots of lambda + 1/lambda + T = 0 with e^eta = -lambda_minus, |e^eta| >= 1
LambdaRoots lambda_numeric_roots(Complex T);

} // namespace qbraid
