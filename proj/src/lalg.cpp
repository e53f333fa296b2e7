#include "qbraid/lalg.hpp"

#include <cmath>

#include "qbraid/errors.hpp"

namespace qbraid {

LOperator<LambdaExt> fundamental_L(const AlgebraSpec& spec, LVariant variant) {
    if (variant != LVariant::Plus && variant != LVariant::Minus)
        throw Error(ErrorKind::Usage, "fundamental L is either Plus or Minus");
    auto r = braid_matrix(spec, variant == LVariant::Plus ? 1 : -1).m;
    return split_blocks(r * permutation_P<LambdaExt>(spec.N).m, spec.N, variant);
}

LOperator<Complex> evaluate(const LOperator<LambdaExt>& L, Complex s0, Complex lambda0) {
    LOperator<Complex> r;
    r.N = L.N;
    r.d = L.d;
    r.variant = L.variant;
    r.theta = L.theta;
    r.level = L.level;
    for (const auto& b : L.blocks) r.blocks.push_back(evaluate(b, s0, lambda0));
    return r;
}

LOperator<Complex> fundamental_L_numeric(const AlgebraSpec& spec, LVariant variant, const NumericPoint& pt) {
    if (variant != LVariant::Plus && variant != LVariant::Minus)
        throw Error(ErrorKind::Usage, "fundamental L is either Plus or Minus");
    auto r = braid_matrix_numeric(spec, variant == LVariant::Plus ? 1 : -1, pt).m;
    return split_blocks(r * permutation_P<Complex>(spec.N).m, spec.N, variant);
}

std::vector<LambdaExt> rho_weights(const AlgebraSpec& spec) {
    std::vector<LambdaExt> w;
    for (int j = 0; j < spec.N; ++j) w.emplace_back(spec.weight(j));
    return w;
}

std::vector<LambdaExt> member_weights(const AlgebraSpec& spec) {
    std::vector<LambdaExt> w;
    for (int i = 0; i < spec.N; ++i)
        w.emplace_back(LaurentPoly::monomial(-spec.rho2[static_cast<std::size_t>(i)],
                                             spec.eps[static_cast<std::size_t>(spec.prime(i))]));
    return w;
}

std::vector<Complex> rho_weights(const AlgebraSpec& spec, Complex s0) {
    std::vector<Complex> w;
    for (const auto& x : rho_weights(spec)) w.push_back(evaluate(x.a(), s0));
    return w;
}

std::vector<Complex> member_weights(const AlgebraSpec& spec, Complex s0) {
    std::vector<Complex> w;
    for (const auto& x : member_weights(spec)) w.push_back(evaluate(x.a(), s0));
    return w;
}

CentralReport<LambdaExt> central_elements(const LOperator<LambdaExt>& L, const AlgebraSpec& spec) {
    return central_elements(L, rho_weights(spec), member_weights(spec));
}

CentralReport<Complex> central_elements(const LOperator<Complex>& L, const AlgebraSpec& spec, Complex s0) {
    return central_elements(L, rho_weights(spec, s0), member_weights(spec, s0));
}

Matrix<LambdaExt> f_map(const Matrix<LambdaExt>& m) {
    Matrix<LambdaExt> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(m.rows() - 1 - i, m.cols() - 1 - j).reflect();
    return r;
}

Matrix<Complex> conjugator_o3(Complex q0) {
    Complex s = std::sqrt(q0);
    if (q0.imag() == 0.0 && q0.real() > 0.0) s = std::sqrt(q0.real());
    const Complex z = s + 1.0 / s;
    const Complex k = 1.0 / std::sqrt(q0 + 4.0 + 1.0 / q0);
    const double r2 = std::sqrt(2.0);
    Matrix<Complex> n(9, 9);
    n(0, 1) = 1; n(0, 3) = 1;
    n(1, 1) = 1; n(1, 3) = -1;
    n(2, 5) = 1; n(2, 7) = -1;
    n(3, 5) = 1; n(3, 7) = 1;
    n(4, 2) = 1; n(4, 6) = -1;
    n(5, 2) = z * k; n(5, 4) = 2.0 * k; n(5, 6) = z * k;
    n(6, 2) = r2 * k; n(6, 4) = -r2 * z * k; n(6, 6) = r2 * k;
    n(7, 0) = r2;
    n(8, 8) = r2;
    return Complex(1.0 / r2) * n;
}

namespace {

// (row start, size) of the 2 + 2 + 3 + 2 pattern
constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kBlocks{{{0, 2}, {2, 2}, {4, 3}, {7, 2}}};

std::size_t block_of(std::size_t i) {
    for (std::size_t b = 0; b < kBlocks.size(); ++b)
        if (i >= kBlocks[b].first && i < kBlocks[b].first + kBlocks[b].second) return b;
    return kBlocks.size();
}

// printed alpha_i, beta_i, gamma_i, delta_i assembled block-diagonally
Matrix<Complex> printed_blocks(int i, Complex q, Complex s, Complex l) {
    const Complex mu = s - 1.0 / s, z = s + 1.0 / s;
    const Complex k = 1.0 / std::sqrt(q + 4.0 + 1.0 / q);
    const Complex l2 = l * l, k2 = k * k;
    const double r2 = std::sqrt(2.0);
    const Complex a = r2 * (2.0 + 1.0 / q), b = r2 * (2.0 + q);
    Matrix<Complex> m(9, 9);
    auto put = [&](std::size_t r0, std::initializer_list<std::initializer_list<Complex>> rows, Complex c) {
        std::size_t r = r0;
        for (auto row : rows) {
            std::size_t col = r0;
            for (auto x : row) m(r, col++) = c * x;
            ++r;
        }
    };
    if (i == 0) {
        put(0, {{1, 1}, {-1, -1}}, 0.5);
        put(2, {{-1, -1}, {1, 1}}, 0.5 * l2);
        put(4, {{3, mu * k, a * k}, {mu * k, 3.0 * z * z * k2, a * mu * k2}, {-b * k, -b * mu * k2, -2.0 * (z * z - 1.0) * k2}},
            0.5 * l);
        put(7, {{1, 0}, {0, l2}}, 1.0);
    } else if (i == 1) {
        put(0, {{l2 + 1.0, l2 - 1.0}, {1.0 - l2, -l2 - 1.0}}, 0.5);
        put(2, {{-l2 - 1.0, l2 - 1.0}, {1.0 - l2, l2 + 1.0}}, 0.5);
        put(4, {{0, -2.0 * mu * k, r2 * mu * z * k}, {-2.0 * mu * k, 12.0 * k2, r2 * mu * mu * z * k2},
                {r2 * mu * z * k, r2 * mu * mu * z * k2, -2.0 * (z * z - 1.0) * z * z * k2}},
            0.5 * l);
    } else {
        put(0, {{1, -1}, {1, -1}}, 0.5 * l2);
        put(2, {{-1, 1}, {-1, 1}}, 0.5);
        put(4, {{3, mu * k, -b * k}, {mu * k, 3.0 * (1.0 - 2.0 * k2), -b * mu * k2}, {a * k, a * mu * k2, -2.0 * (1.0 - 3.0 * k2)}},
            0.5 * l);
        put(7, {{l2, 0}, {0, 1}}, 1.0);
    }
    return m;
}

Matrix<Complex> square_block(const Matrix<Complex>& m, std::size_t b) {
    auto x = m.block(kBlocks[b].first, kBlocks[b].first, kBlocks[b].second, kBlocks[b].second);
    return x * x;
}

} // namespace

ConjugationReport conjugate_sumLii(const AlgebraSpec& spec, Complex q0) {
    if (spec.family != Family::OHat || spec.N != 3)
        throw Error(ErrorKind::UnsupportedSpec, "the 9 x 9 conjugation is tabulated for ohat(3) only");
    auto pt = numeric_point(spec, q0, true);
    auto dL = coproduct(fundamental_L_numeric(spec, LVariant::Plus, pt));
    auto n = conjugator_o3(q0);
    auto nt = n.transpose();

    ConjugationReport r;
    r.lambda = pt.roots.plus;
    r.orthogonality = residual(n * nt, Matrix<Complex>::identity(9));

    Matrix<Complex> sum(9, 9);
    std::array<Matrix<Complex>, 3> c;
    for (int i = 0; i < 3; ++i) {
        c[static_cast<std::size_t>(i)] = n * dL(i, i) * nt;
        sum += c[static_cast<std::size_t>(i)];
        r.blocks[static_cast<std::size_t>(i)] = residual(c[static_cast<std::size_t>(i)], printed_blocks(i, pt.q, pt.s, r.lambda));
        double out = 0.0;
        for (std::size_t a = 0; a < 9; ++a)
            for (std::size_t b = 0; b < 9; ++b)
                if (block_of(a) != block_of(b)) out = std::max(out, std::abs(c[static_cast<std::size_t>(i)](a, b)));
        r.block_diagonal[static_cast<std::size_t>(i)] = out;
    }
    Complex y = pt.T;
    std::array<Complex, 9> expect{-y, y, y, -y, 3.0, 3.0, -y, -y, -y};
    Matrix<Complex> diag(9, 9);
    for (std::size_t a = 0; a < 9; ++a) {
        diag(a, a) = r.lambda * expect[a];
        r.eigen_over_lambda[a] = sum(a, a) / r.lambda;
    }
    r.diagonal = residual(sum, diag);

    r.nilpotent = {square_block(c[0], 0).max_norm(), square_block(c[2], 0).max_norm(), square_block(c[0], 1).max_norm(),
                   square_block(c[2], 1).max_norm()};

    r.offdiag_outside_min = static_cast<std::size_t>(-1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            auto m = n * dL(i, j) * nt;
            std::size_t in = 0, out = 0;
            for (std::size_t a = 0; a < 9; ++a)
                for (std::size_t b = 0; b < 9; ++b)
                    if (std::abs(m(a, b)) > 1e-10) (block_of(a) == block_of(b) ? in : out)++;
            r.offdiag_outside_min = std::min(r.offdiag_outside_min, out);
            r.offdiag_inside_max = std::max(r.offdiag_inside_max, in);
        }
    return r;
}

ABDecomposition decompose_AB(const LOperator<LambdaExt>& Lplus, const LOperator<LambdaExt>& Lminus,
                             const AlgebraSpec& spec) {
    if (Lplus.N != Lminus.N || Lplus.d != Lminus.d) throw Error(ErrorKind::DimensionMismatch, "L^+ and L^- differ in shape");
    if ((*spec.T * *spec.T - LaurentPoly(4)).is_zero()) throw Error(ErrorKind::Degenerate, "lambda_+ = lambda_-");
    ABDecomposition r;
    r.N = Lplus.N;
    const LambdaExt li = spec.lambda_inv();
    for (std::size_t idx = 0; idx < Lplus.blocks.size(); ++idx) {
        const auto& b = Lplus.blocks[idx];
        r.A.push_back(b.map([](const LambdaExt& x) { return x.a(); }));
        r.B.push_back(b.map([](const LambdaExt& x) { return x.b(); }));
        auto rebuilt = r.A.back().map([](const LaurentPoly& x) { return LambdaExt(x); }) +
                       li * r.B.back().map([](const LaurentPoly& x) { return LambdaExt(x); });
        r.minus_residual = std::max(r.minus_residual, residual(Lminus.blocks[idx], rebuilt));
    }
    int N = r.N;
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    if (k == N - 1 - i || l == N - 1 - j) continue;
                    const auto& Akl = r.A[static_cast<std::size_t>(k * N + l)];
                    const auto& Bkl = r.B[static_cast<std::size_t>(k * N + l)];
                    const auto& Aij = r.A[static_cast<std::size_t>(i * N + j)];
                    const auto& Bij = r.B[static_cast<std::size_t>(i * N + j)];
                    r.reduced_residual = std::max(r.reduced_residual, residual(Akl * Bij, Bkl * Aij));
                }
    return r;
}

NumericAB decompose_AB(const LOperator<Complex>& Lplus, const LOperator<Complex>& Lminus, const LambdaRoots& roots) {
    if (Lplus.N != Lminus.N || Lplus.d != Lminus.d) throw Error(ErrorKind::DimensionMismatch, "L^+ and L^- differ in shape");
    Complex gap = roots.plus - roots.minus;
    if (roots.degenerate || std::abs(gap) < 1e-9) throw Error(ErrorKind::Degenerate, "lambda_+ = lambda_-, A and B not separable");
    NumericAB r;
    for (std::size_t idx = 0; idx < Lplus.blocks.size(); ++idx) {
        auto B = Complex(1.0) / gap * (Lplus.blocks[idx] - Lminus.blocks[idx]);
        r.A.push_back(Lplus.blocks[idx] - roots.plus * B);
        r.B.push_back(std::move(B));
    }
    int N = Lplus.N;
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    if (k == N - 1 - i || l == N - 1 - j) continue;
                    auto kl = static_cast<std::size_t>(k * N + l), ij = static_cast<std::size_t>(i * N + j);
                    r.reduced_residual = std::max(r.reduced_residual, residual(r.A[kl] * r.B[ij], r.B[kl] * r.A[ij]));
                }
    return r;
}

LOperator<Complex> spectral_L(const AlgebraSpec& spec, double theta, Complex q0, bool allow_complex) {
    auto pt = numeric_point(spec, q0, allow_complex);
    Complex e = pt.exp_eta() * std::exp(theta);
    Complex den = e - 1.0 / e;
    if (std::abs(den) < 1e-14) throw Error(ErrorKind::PoleAtTheta, "e^{eta+theta} = e^{-eta-theta}");
    auto lp = fundamental_L_numeric(spec, LVariant::Plus, pt);
    auto lm = fundamental_L_numeric(spec, LVariant::Minus, pt);
    LOperator<Complex> r = lp;
    r.variant = LVariant::Spectral;
    r.theta = theta;
    for (std::size_t idx = 0; idx < r.blocks.size(); ++idx)
        r.blocks[idx] = (e / den) * lp.blocks[idx] - (1.0 / (e * den)) * lm.blocks[idx];
    return r;
}

double spectral_rll_residual(const AlgebraSpec& spec, double theta, double theta_p, Complex q0, bool allow_complex) {
    auto R = baxterized(spec, theta - theta_p, q0, allow_complex).m;
    return check_RLL(R, spectral_L(spec, theta, q0, allow_complex), spectral_L(spec, theta_p, q0, allow_complex));
}

} // namespace qbraid
