#include "qbraid/triangularity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "qbraid/errors.hpp"

namespace qbraid {

IntPoly::IntPoly(std::vector<long long> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }
IntPoly IntPoly::constant(long long c) { return IntPoly({c}); }

long long IntPoly::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return IntPoly();
    std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

Complex IntPoly::eval(Complex x) const {
    Complex r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + static_cast<double>(*it);
    return r;
}

Complex IntPoly::eval_derivative(Complex x) const {
    Complex r = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) r = r * x + static_cast<double>(k) * static_cast<double>(c_[k]);
    return r;
}

LaurentPoly IntPoly::compose(const LaurentPoly& v) const {
    LaurentPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + LaurentPoly(static_cast<long>(*it));
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        long long c = c_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        long long a = neg ? -c : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (k == 0 || a != 1) os << a;
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

IntPoly sn_polynomial(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidDimension, "S_n needs n >= 0");
    IntPoly Y = IntPoly::x();
    IntPoly prev, cur = Y;  // S_0 = 0, S_1 = Y
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        IntPoly next = Y * cur - prev + Y - IntPoly::constant(2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

IntPoly sn_closed_form(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidDimension, "closed form needs n >= 1");
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    // powers Y^k with k >= 2 from (-1)^r (C(n-r, r) Y^{n-2r} + C(n-r-1, r) Y^{n-2r-1})
    for (int r = 0; 2 * r <= n; ++r) {
        long long sign = r % 2 ? -1 : 1;
        int k1 = n - 2 * r, k2 = n - 2 * r - 1;
        if (k1 >= 2) c[static_cast<std::size_t>(k1)] += sign * binomial(n - r, r);
        if (k2 >= 2) c[static_cast<std::size_t>(k2)] += sign * binomial(n - r - 1, r);
    }
    int s = n / 2;
    c[1] = n % 2 == 0 ? (s % 2 ? 1 : -1) * s : (s % 2 ? -1 : 1) * (s + 1);
    c[0] = (n % 4 == 2 || n % 4 == 3) ? -2 : 0;
    return IntPoly(std::move(c));
}

IntPoly sigma_polynomial(int k) {
    if (k < 1 || k % 2 == 0) throw Error(ErrorKind::InvalidDimension, "Sigma_k needs odd k >= 1");
    IntPoly z = IntPoly::x();
    IntPoly prev = IntPoly::constant(2), cur = z;  // q^j + q^-j for j = 0, 1
    IntPoly sum = z;
    for (int j = 1; j < k; ++j) {
        IntPoly next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
        if ((j + 1) % 2 == 1) sum += cur;
    }
    return sum;
}

std::string TriangularityProblem::reduced_name() const {
    return (var == ReducedVar::Y ? "S_" : "Sigma_") + std::to_string(index);
}

LaurentPoly TriangularityProblem::variable() const {
    return var == ReducedVar::Y ? LaurentPoly::q_pow(2) + LaurentPoly::q_pow(-2)
                                : LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1);
}

TriangularityProblem build_problem(const AlgebraSpec& spec) {
    TriangularityProblem p;
    p.spec = spec;
    p.raw = *spec.T - LaurentPoly(2);
    if (spec.family == Family::OHat && spec.N % 2 == 0) {
        p.index = (spec.N - 2) / 2;
        p.var = ReducedVar::Y;
        p.reduced = sn_polynomial(p.index);
        p.target = 0;
    } else if (spec.family == Family::OHat) {
        int m = (spec.N - 1) / 2;
        p.index = 2 * m - 1;
        p.var = ReducedVar::Z;
        p.reduced = sigma_polynomial(p.index);
        p.target = 1;
    } else {
        p.index = spec.N / 2;
        p.var = ReducedVar::Y;
        p.reduced = sn_polynomial(p.index);
        p.target = 2;
    }
    return p;
}

LaurentPoly back_substitution_defect(const TriangularityProblem& p) {
    return p.reduced.compose(p.variable()) - LaurentPoly(static_cast<long>(p.target)) - p.raw;
}

std::string root_kind_name(RootKind k) {
    switch (k) {
    case RootKind::RootOfUnity: return "root_of_unity";
    case RootKind::UnitModulus: return "unit_modulus";
    case RootKind::OffCircle: return "off_circle";
    }
    return "unknown";
}

RootClass classify(Complex q, const RootOptions& opt) {
    RootClass r;
    r.value = q;
    Complex pw = 1.0;
    for (int k = 1; k <= opt.order_bound; ++k) {
        pw *= q;
        if (std::abs(pw - 1.0) < opt.classify_tol) {
            r.kind = RootKind::RootOfUnity;
            r.order = k;
            return r;
        }
    }
    r.kind = std::abs(std::abs(q) - 1.0) < opt.classify_tol ? RootKind::UnitModulus : RootKind::OffCircle;
    return r;
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex x) {
    Complex r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex x) {
    Complex r = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) r = r * x + static_cast<double>(k) * c[k];
    return r;
}

} // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iterations) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
    if (c.size() < 2) throw Error(ErrorKind::InvalidDimension, "root finding needs degree >= 1");
    std::size_t n = c.size() - 1;
    Complex lead = c.back();
    for (auto& x : c) x /= lead;
    if (n == 1) return {-c[0]};

    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
    double radius = 0.5 * (1.0 + bound);
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4);

    for (int it = 0; it < max_iterations; ++it) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex pv = horner(c, z[k]);
            if (pv == Complex(0.0)) continue;
            Complex ratio = pv / horner_derivative(c, z[k]);
            Complex sum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            Complex w = ratio / (1.0 - ratio * sum);
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-15) return z;
    }
    // accept a plateau at rounding level
    double res = 0.0;
    for (auto x : z) res = std::max(res, std::abs(horner(c, x)));
    if (res < 1e-10) return z;
    throw Error(ErrorKind::NonConvergence, "Aberth iteration did not converge");
}

std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
    if (c.size() < 2) throw Error(ErrorKind::InvalidDimension, "root finding needs degree >= 1");
    auto n = static_cast<Eigen::Index>(c.size() - 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "companion eigen solver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

Complex eval_in_q(const LaurentPoly& p, Complex q) {
    Complex r = 0.0;
    for (const auto& [e, c] : p.terms()) {
        if (e % 2) throw Error(ErrorKind::InvalidDimension, "odd power of s in a polynomial in q");
        r += c.get_d() * std::pow(q, e / 2);
    }
    return r;
}

namespace {

Complex eval_in_q_derivative(const LaurentPoly& p, Complex q) {
    Complex r = 0.0;
    for (const auto& [e, c] : p.terms())
        if (e != 0) r += c.get_d() * (e / 2) * std::pow(q, e / 2 - 1);
    return r;
}

Complex newton_polish(const LaurentPoly& raw, Complex q) {
    for (int it = 0; it < 60; ++it) {
        Complex d = eval_in_q_derivative(raw, q);
        if (d == Complex(0.0)) break;
        Complex step = eval_in_q(raw, q) / d;
        q -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(q))) break;
    }
    return q;
}

} // namespace

std::vector<RootClass> solve_roots(const TriangularityProblem& p, const RootOptions& opt) {
    IntPoly eq = p.reduced - IntPoly::constant(p.target);
    if (eq.degree() < 1) throw Error(ErrorKind::InvalidDimension, "reduced polynomial has degree < 1");
    std::vector<Complex> c;
    for (long long x : eq.coeffs()) c.push_back(static_cast<double>(x));

    auto roots = aberth_roots(c, opt.max_iterations);
    for (auto& r : roots)
        for (int it = 0; it < 5; ++it) {
            Complex d = eq.eval_derivative(r);
            if (d == Complex(0.0)) break;
            r -= eq.eval(r) / d;
        }
    auto check = companion_roots(c);
    for (auto r : roots) {
        double best = 1e300;
        for (auto e : check) best = std::min(best, std::abs(r - e));
        if (best > 1e-6 * std::max(1.0, std::abs(r)))
            throw Error(ErrorKind::NonConvergence, "Aberth root disagrees with companion eigenvalues");
    }

    std::vector<RootClass> out;
    auto add = [&](Complex q, Complex reduced) {
        q = newton_polish(p.raw, q);
        for (const auto& o : out)
            if (std::abs(o.value - q) < 1e-9) return;
        RootClass rc = classify(q, opt);
        rc.residual = std::abs(eval_in_q(p.raw, q));
        rc.reduced_value = reduced;
        out.push_back(rc);
    };
    for (auto v : roots) {
        Complex disc = std::sqrt(v * v - 4.0);
        for (Complex w : {(v + disc) / 2.0, (v - disc) / 2.0}) {
            if (p.var == ReducedVar::Z) {
                add(w, v);
            } else {
                Complex r = std::sqrt(w);
                add(r, v);
                add(-r, v);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RootClass& a, const RootClass& b) {
        double aa = std::arg(a.value), ab = std::arg(b.value);
        if (std::abs(aa - ab) > 1e-12) return aa < ab;
        return std::abs(a.value) < std::abs(b.value);
    });
    return out;
}

TriangularCheck verify_triangular(const AlgebraSpec& spec, Complex q0) {
    if (q0 == Complex(0.0)) throw Error(ErrorKind::ZeroBase, "q0 = 0");
    Complex s0 = std::sqrt(q0);
    auto p = evaluate(projector_p0prime(spec).m, s0);
    auto I = Matrix<Complex>::identity(p.rows());
    BraidMatrix<Complex> r{I - p, BraidTag::Custom, 0.0};
    TriangularCheck t;
    t.square_residual = residual(r.m * r.m, I);
    t.braid_residual = check_braid_equation(r);
    return t;
}

} // namespace qbraid
