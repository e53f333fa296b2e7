#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbraid/braidgen.hpp"
#include "qbraid/errors.hpp"

namespace qbraid {

enum class LVariant { Plus, Minus, Spectral, Coproduct };

// N x N grid of d x d blocks; L(i, j) is the block L_ij (0-based).
template <class T> struct LOperator {
    int N = 0;
    std::size_t d = 0;
    std::vector<Matrix<T>> blocks;
    LVariant variant = LVariant::Plus;
    double theta = 0.0;
    int level = 0;  // number of coproducts applied

    const Matrix<T>& operator()(int i, int j) const { return blocks[static_cast<std::size_t>(i * N + j)]; }
    Matrix<T>& operator()(int i, int j) { return blocks[static_cast<std::size_t>(i * N + j)]; }
};

// split an (N d) x (N d) matrix into its N x N grid of blocks
template <class T> LOperator<T> split_blocks(const Matrix<T>& m, int N, LVariant v) {
    LOperator<T> L;
    L.N = N;
    L.d = m.rows() / static_cast<std::size_t>(N);
    L.variant = v;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            L.blocks.push_back(m.block(static_cast<std::size_t>(i) * L.d, static_cast<std::size_t>(j) * L.d, L.d, L.d));
    return L;
}

// L^{+-} = R^{+-1} P
LOperator<LambdaExt> fundamental_L(const AlgebraSpec& spec, LVariant variant);
LOperator<Complex> fundamental_L_numeric(const AlgebraSpec& spec, LVariant variant, const NumericPoint& pt);
LOperator<Complex> evaluate(const LOperator<LambdaExt>& L, Complex s0, Complex lambda0);

// sum_ij (ij) (x) I_N (x) L_ij
template <class T> Matrix<T> embed_L1(const LOperator<T>& L) {
    auto N = static_cast<std::size_t>(L.N);
    Matrix<T> m(N * N * L.d, N * N * L.d);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k)
                m.set_block((i * N + k) * L.d, (j * N + k) * L.d, L(static_cast<int>(i), static_cast<int>(j)));
    return m;
}

// I_N (x) sum_ij (ij) (x) L_ij
template <class T> Matrix<T> embed_L2(const LOperator<T>& L) {
    auto N = static_cast<std::size_t>(L.N);
    Matrix<T> m(N * N * L.d, N * N * L.d);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                m.set_block((k * N + i) * L.d, (k * N + j) * L.d, L(static_cast<int>(i), static_cast<int>(j)));
    return m;
}

// |(R (x) I_d) La_2 Lb_1 - Lb_2 La_1 (R (x) I_d)|
template <class T> double check_RLL(const Matrix<T>& R, const LOperator<T>& La, const LOperator<T>& Lb) {
    if (La.N != Lb.N || La.d != Lb.d || R.rows() != static_cast<std::size_t>(La.N * La.N))
        throw Error(ErrorKind::DimensionMismatch, "RLL operands disagree in N or block size");
    auto Rd = kron(R, Matrix<T>::identity(La.d));
    return residual(Rd * embed_L2(La) * embed_L1(Lb), embed_L2(Lb) * embed_L1(La) * Rd);
}

template <class T> LOperator<T> coproduct(const LOperator<T>& L) {
    LOperator<T> r;
    r.N = L.N;
    r.d = L.d * L.d;
    r.variant = L.variant;
    r.theta = L.theta;
    r.level = L.level + 1;
    for (int i = 0; i < L.N; ++i)
        for (int j = 0; j < L.N; ++j) {
            Matrix<T> b(r.d, r.d);
            for (int k = 0; k < L.N; ++k) b += kron(L(i, k), L(k, j));
            r.blocks.push_back(std::move(b));
        }
    return r;
}

// p-fold coproduct; block size N^{2^p}
template <class T> LOperator<T> coproduct_power(LOperator<T> L, int p, int max_depth = 2) {
    if (p > max_depth) throw Error(ErrorKind::CapExceeded, "coproduct depth " + std::to_string(p) + " exceeds " +
                                                               std::to_string(max_depth));
    for (int k = 0; k < p; ++k) L = coproduct(L);
    return L;
}

template <class T> struct CentralReport {
    std::vector<Matrix<T>> members;  // N from the first family, then N from the second
    double equality_residual = 0.0;  // max |member - member_0|
    double centrality_residual = 0.0;  // max |[member, L_ij]|
    double identity_residual = 0.0;  // |member_0 - c I| with c its (0,0) entry
    T scalar_value{};
};

template <class T> struct S12 {
    std::vector<Matrix<T>> S1, S2;  // index l*N + k
};

// S1_lk = sum_j w_j L_{j'l} L_{jk},  S2_lk = sum_j w_j L_{lj'} L_{kj}, w_j = eps_j q^{-rho_j}
template <class T> S12<T> s_sums(const LOperator<T>& L, const std::vector<T>& w) {
    int N = L.N;
    S12<T> s;
    for (int l = 0; l < N; ++l)
        for (int k = 0; k < N; ++k) {
            Matrix<T> a(L.d, L.d), b(L.d, L.d);
            for (int j = 0; j < N; ++j) {
                a += w[static_cast<std::size_t>(j)] * (L(N - 1 - j, l) * L(j, k));
                b += w[static_cast<std::size_t>(j)] * (L(l, N - 1 - j) * L(k, j));
            }
            s.S1.push_back(std::move(a));
            s.S2.push_back(std::move(b));
        }
    return s;
}

// wm_i = eps_{i'} q^{-rho_i} scales S1_{ii'} and S2_{ii'} into the central members
template <class T>
CentralReport<T> central_elements(const LOperator<T>& L, const std::vector<T>& w, const std::vector<T>& wm) {
    int N = L.N;
    auto s = s_sums(L, w);
    CentralReport<T> r;
    for (int i = 0; i < N; ++i) r.members.push_back(wm[static_cast<std::size_t>(i)] * s.S1[static_cast<std::size_t>(i * N + N - 1 - i)]);
    for (int i = 0; i < N; ++i) r.members.push_back(wm[static_cast<std::size_t>(i)] * s.S2[static_cast<std::size_t>(i * N + N - 1 - i)]);
    for (const auto& m : r.members) r.equality_residual = std::max(r.equality_residual, residual(m, r.members[0]));
    for (const auto& m : r.members)
        for (const auto& b : L.blocks) r.centrality_residual = std::max(r.centrality_residual, residual(m * b, b * m));
    r.scalar_value = r.members[0](0, 0);
    r.identity_residual = residual(r.members[0], r.scalar_value * Matrix<T>::identity(L.d));
    return r;
}

// exact weights over the lambda ring, numeric ones at s0
std::vector<LambdaExt> rho_weights(const AlgebraSpec& spec);
std::vector<LambdaExt> member_weights(const AlgebraSpec& spec);
std::vector<Complex> rho_weights(const AlgebraSpec& spec, Complex s0);
std::vector<Complex> member_weights(const AlgebraSpec& spec, Complex s0);

CentralReport<LambdaExt> central_elements(const LOperator<LambdaExt>& L, const AlgebraSpec& spec);
CentralReport<Complex> central_elements(const LOperator<Complex>& L, const AlgebraSpec& spec, Complex s0);

// max |S1_lk|, |S2_lk| over k != l'
template <class T> std::array<double, 2> check_S1_S2(const LOperator<T>& L, const std::vector<T>& w) {
    auto s = s_sums(L, w);
    std::array<double, 2> r{0.0, 0.0};
    for (int l = 0; l < L.N; ++l)
        for (int k = 0; k < L.N; ++k) {
            if (k == L.N - 1 - l) continue;
            auto idx = static_cast<std::size_t>(l * L.N + k);
            r[0] = std::max(r[0], s.S1[idx].max_norm());
            r[1] = std::max(r[1], s.S2[idx].max_norm());
        }
    return r;
}

// rotate by 180 degrees and send s -> 1/s
Matrix<LambdaExt> f_map(const Matrix<LambdaExt>& m);

struct ConjugationReport {
    double orthogonality = 0.0;       // |N N^T - I|
    double diagonal = 0.0;            // |N (sum_i dL_ii) N^T - lambda diag(-y, y, y, -y, 3, 3, -y, -y, -y)|
    std::array<double, 3> blocks{};   // |N dL_ii N^T - printed (alpha_i, beta_i, gamma_i, delta_i)|
    std::array<double, 3> block_diagonal{};  // mass of N dL_ii N^T outside the 2+2+3+2 pattern
    std::array<double, 4> nilpotent{};  // alpha_1^2, alpha_3^2, beta_1^2, beta_3^2
    std::size_t offdiag_outside_min = 0;  // over i != j, entries of N dL_ij N^T outside the pattern
    std::size_t offdiag_inside_max = 0;   // over i != j, entries inside it
    std::array<Complex, 9> eigen_over_lambda{};
    Complex lambda;
};

// the 9 x 9 orthogonal conjugator for OHat(3)
Matrix<Complex> conjugator_o3(Complex q0);
ConjugationReport conjugate_sumLii(const AlgebraSpec& spec, Complex q0);

struct ABDecomposition {
    int N = 0;
    std::vector<Matrix<LaurentPoly>> A, B;
    double minus_residual = 0.0;    // |L^- - (A + lambda^{-1} B)|
    double reduced_residual = 0.0;  // A_kl B_ij - B_kl A_ij for k != i', l != j'
};

ABDecomposition decompose_AB(const LOperator<LambdaExt>& Lplus, const LOperator<LambdaExt>& Lminus,
                             const AlgebraSpec& spec);

struct NumericAB {
    std::vector<Matrix<Complex>> A, B;
    double reduced_residual = 0.0;
};

NumericAB decompose_AB(const LOperator<Complex>& Lplus, const LOperator<Complex>& Lminus, const LambdaRoots& roots);

// L(theta) = (e^{eta+theta} L^+ - e^{-eta-theta} L^-) / (e^{eta+theta} - e^{-eta-theta})
LOperator<Complex> spectral_L(const AlgebraSpec& spec, double theta, Complex q0, bool allow_complex = false);
// R(theta - theta') L_2(theta) L_1(theta') - L_2(theta') L_1(theta) R(theta - theta')
double spectral_rll_residual(const AlgebraSpec& spec, double theta, double theta_p, Complex q0,
                             bool allow_complex = false);

} // namespace qbraid
