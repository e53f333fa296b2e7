#include "qbraid/braidgen.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "qbraid/errors.hpp"

namespace qbraid {

std::string family_name(Family f) { return f == Family::OHat ? "ohat" : "phat"; }

Family parse_family(const std::string& s) {
    if (s == "ohat" || s == "OHat" || s == "o") return Family::OHat;
    if (s == "phat" || s == "PHat" || s == "p") return Family::PHat;
    throw Error(ErrorKind::Usage, "unknown family '" + s + "' (expected ohat or phat)");
}

LaurentPoly AlgebraSpec::weight(int i) const {
    auto k = static_cast<std::size_t>(i);
    return LaurentPoly::monomial(-rho2[k], eps[k]);
}

std::string AlgebraSpec::name() const { return family_name(family) + "(" + std::to_string(N) + ")"; }

AlgebraSpec make_spec(Family family, int N) {
    AlgebraSpec s;
    s.family = family;
    s.N = N;
    if (family == Family::OHat) {
        if (N < 3) throw Error(ErrorKind::InvalidDimension, "OHat needs N >= 3");
        int n = N / 2;
        for (int k = 0; k < n; ++k) s.rho2.push_back(N % 2 ? 2 * (n - k) - 1 : 2 * (n - 1 - k));
        if (N % 2) s.rho2.push_back(0);
        for (int k = n - 1; k >= 0; --k) s.rho2.push_back(-s.rho2[static_cast<std::size_t>(k)]);
        s.eps.assign(static_cast<std::size_t>(N), 1);
    } else {
        if (N < 4 || N % 2) throw Error(ErrorKind::InvalidDimension, "PHat needs even N >= 4");
        int n = N / 2;
        for (int k = 0; k < n; ++k) s.rho2.push_back(2 * (n - k));
        for (int k = n - 1; k >= 0; --k) s.rho2.push_back(-s.rho2[static_cast<std::size_t>(k)]);
        s.eps.assign(static_cast<std::size_t>(n), 1);
        s.eps.resize(static_cast<std::size_t>(N), -1);
    }
    LaurentPoly T;
    for (int r : s.rho2) T += LaurentPoly::monomial(-2 * r);
    s.T = std::make_shared<const LaurentPoly>(std::move(T));
    return s;
}

NumericPoint numeric_point(const AlgebraSpec& spec, Complex q0, bool allow_complex) {
    if (q0 == Complex(0.0)) throw Error(ErrorKind::ZeroBase, "q0 = 0");
    NumericPoint p;
    p.q = q0;
    p.s = std::sqrt(q0);
    if (q0.imag() == 0.0 && q0.real() > 0.0) p.s = std::sqrt(q0.real());
    p.T = evaluate(*spec.T, p.s);
    bool real = std::abs(p.T.imag()) <= 1e-9 * std::max(1.0, std::abs(p.T));
    if (real) p.T = p.T.real();
    if (!allow_complex && (!real || p.T.real() < 2.0 - 1e-9))
        throw Error(ErrorKind::NoRealEta, "T(q0) = " + std::to_string(p.T.real()) + (real ? "" : " (complex)") +
                                              " admits no real eta");
    p.roots = lambda_numeric_roots(p.T);
    return p;
}

BraidMatrix<LaurentPoly> projector_p0prime(const AlgebraSpec& spec) {
    auto N = static_cast<std::size_t>(spec.N);
    BraidMatrix<LaurentPoly> r{Matrix<LaurentPoly>(N * N, N * N), BraidTag::Custom, 0.0};
    for (int i = 0; i < spec.N; ++i)
        for (int j = 0; j < spec.N; ++j) {
            auto row = static_cast<std::size_t>(i * spec.N + spec.prime(i));
            auto col = static_cast<std::size_t>(j * spec.N + spec.prime(j));
            r.m(row, col) = spec.weight(i) * spec.weight(j);
        }
    return r;
}

BraidMatrix<LambdaExt> braid_matrix(const AlgebraSpec& spec, int sign) {
    auto p = projector_p0prime(spec).m;
    LambdaExt l = sign > 0 ? spec.lambda() : spec.lambda_inv();
    auto m = Matrix<LambdaExt>::identity(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) m(i, j) += l * LambdaExt(p(i, j));
    return {std::move(m), sign > 0 ? BraidTag::RHatPlus : BraidTag::RHatMinus, 0.0};
}

BraidMatrix<Complex> braid_matrix_numeric(const AlgebraSpec& spec, int sign, const NumericPoint& pt) {
    auto p = evaluate(projector_p0prime(spec).m, pt.s);
    Complex l = sign > 0 ? pt.roots.plus : pt.roots.minus;
    auto m = Matrix<Complex>::identity(p.rows()) + l * p;
    return {std::move(m), sign > 0 ? BraidTag::RHatPlus : BraidTag::RHatMinus, 0.0};
}

BraidMatrix<Complex> baxterized(const AlgebraSpec& spec, double theta, Complex q0, bool allow_complex) {
    auto pt = numeric_point(spec, q0, allow_complex);
    Complex eta = std::log(pt.exp_eta());
    Complex den = std::sinh(eta + theta);
    if (std::abs(den) < 1e-14) throw Error(ErrorKind::PoleAtTheta, "sinh(eta + theta) = 0");
    Complex c = std::sinh(Complex(theta)) / den;
    auto p = evaluate(projector_p0prime(spec).m, pt.s);
    auto m = Matrix<Complex>::identity(p.rows()) - c * p;
    return {std::move(m), BraidTag::Baxterized, theta};
}

std::size_t braid_base_dim(std::size_t dim) {
    auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (n * n != dim || n == 0) throw Error(ErrorKind::DimensionMismatch, "braid matrix dimension is not N^2");
    return n;
}

double check_braid_equation_baxterized(const AlgebraSpec& spec, double theta, double theta_p, Complex q0,
                                       bool allow_complex) {
    auto a = baxterized(spec, theta, q0, allow_complex).m;
    auto b = baxterized(spec, theta_p, q0, allow_complex).m;
    auto ab = baxterized(spec, theta + theta_p, q0, allow_complex).m;
    auto I = Matrix<Complex>::identity(static_cast<std::size_t>(spec.N));
    auto lhs = kron(a, I) * kron(I, ab) * kron(b, I);
    auto rhs = kron(I, b) * kron(ab, I) * kron(I, a);
    return residual(lhs, rhs);
}

double check_hecke(const AlgebraSpec& spec) {
    auto r = braid_matrix(spec, 1).m;
    auto I = Matrix<LambdaExt>::identity(r.rows());
    LambdaExt l = spec.lambda();
    return ((r - I) * (r + (l * l) * I)).max_norm();
}

double check_projector_square(const AlgebraSpec& spec) {
    auto p = projector_p0prime(spec).m;
    return residual(p * p, LaurentPoly(*spec.T) * p);
}

double check_inverse(const AlgebraSpec& spec) {
    auto r = braid_matrix(spec, 1).m;
    auto ri = braid_matrix(spec, -1).m;
    return residual(r * ri, Matrix<LambdaExt>::identity(r.rows()));
}

std::vector<Complex> spectrum(const AlgebraSpec& spec, Complex q0, int sign, bool allow_complex) {
    auto pt = numeric_point(spec, q0, allow_complex);
    auto m = braid_matrix_numeric(spec, sign, pt).m;
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::NonConvergence, "eigen solver failed");
    std::vector<Complex> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

} // namespace qbraid
