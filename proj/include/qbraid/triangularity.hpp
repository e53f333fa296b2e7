#pragma once

#include <string>
#include <vector>

#include "qbraid/braidgen.hpp"

namespace qbraid {

// dense integer polynomial, c[k] multiplies x^k
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<long long> c);
    static IntPoly x();
    static IntPoly constant(long long c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int k) const;
    const std::vector<long long>& coeffs() const { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    Complex eval(Complex x) const;
    Complex eval_derivative(Complex x) const;
    // p(v) for a Laurent polynomial v
    LaurentPoly compose(const LaurentPoly& v) const;
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<long long> c_;
};

enum class ReducedVar { Y, Z };  // Y = q^2 + q^-2, z = q + q^-1

struct TriangularityProblem {
    AlgebraSpec spec;
    LaurentPoly raw;   // T - 2
    IntPoly reduced;   // S_n(Y) or Sigma_{2m-1}(z)
    ReducedVar var = ReducedVar::Y;
    long long target = 0;
    int index = 0;     // n of S_n, or 2m-1 of Sigma
    std::string reduced_name() const;
    LaurentPoly variable() const;  // Y or z as a polynomial in s
};

IntPoly sn_polynomial(int n);           // recursion S_{n+1} = Y S_n - S_{n-1} + Y - 2
IntPoly sn_closed_form(int n);          // binomial closed form with constants c1, c0
IntPoly sigma_polynomial(int k);        // odd k: sum of q^j + q^-j over odd j <= k, in z

TriangularityProblem build_problem(const AlgebraSpec& spec);

// reduced(var(s)) - target - raw, zero for a consistent problem
LaurentPoly back_substitution_defect(const TriangularityProblem& p);

enum class RootKind { RootOfUnity, UnitModulus, OffCircle };
std::string root_kind_name(RootKind k);

struct RootClass {
    Complex value;         // q
    RootKind kind = RootKind::OffCircle;
    int order = 0;         // minimal k with q^k = 1 when kind is RootOfUnity
    double residual = 0.0; // |raw(q)|
    Complex reduced_value; // the Y or z root it was lifted from
};

struct RootOptions {
    double classify_tol = 1e-8;
    int order_bound = 1024;
    int max_iterations = 500;
};

RootClass classify(Complex q, const RootOptions& opt = {});

// simultaneous (Aberth) iteration; throws NonConvergence
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iterations = 500);
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs);

std::vector<RootClass> solve_roots(const TriangularityProblem& p, const RootOptions& opt = {});

struct TriangularCheck {
    double square_residual = 0.0;  // |R^2 - I| with e^eta = 1
    double braid_residual = 0.0;
};

TriangularCheck verify_triangular(const AlgebraSpec& spec, Complex q0);

// raw as a function of q (raw carries even powers of s only)
Complex eval_in_q(const LaurentPoly& p, Complex q);

} // namespace qbraid
