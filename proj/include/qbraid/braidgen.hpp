#pragma once

#include <string>
#include <vector>

#include "qbraid/matrix.hpp"
#include "qbraid/scalar.hpp"

namespace qbraid {

enum class Family { OHat, PHat };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Index convention: (ij) (x) (kl) sits at row i*N + k, column j*N + l (0-based).
struct AlgebraSpec {
    Family family = Family::OHat;
    int N = 0;
    std::vector<int> rho2;  // 2*rho_i, so odd N stays integral
    std::vector<int> eps;
    LambdaExt::Modulus T;   // T = sum_i q^{-2 rho_i}

    int prime(int i) const { return N - 1 - i; }
    double rho(int i) const { return rho2[static_cast<std::size_t>(i)] / 2.0; }
    LambdaExt lambda() const { return LambdaExt::lambda(T); }
    LambdaExt lambda_inv() const { return LambdaExt::lambda_inv(T); }
    // eps_i q^{-rho_i}: the rank-one factor of P'0
    LaurentPoly weight(int i) const;
    std::string name() const;
};

AlgebraSpec make_spec(Family family, int N);

// numeric data of the spec at a point q0
struct NumericPoint {
    Complex q;
    Complex s;  // principal square root of q
    Complex T;
    LambdaRoots roots;
    Complex exp_eta() const { return roots.exp_eta(); }
};

// allow_complex lifts the real-eta requirement (T(q0) real and >= 2)
NumericPoint numeric_point(const AlgebraSpec& spec, Complex q0, bool allow_complex = false);

enum class BraidTag { RHatPlus, RHatMinus, Baxterized, Custom };

template <class T> struct BraidMatrix {
    Matrix<T> m;
    BraidTag tag = BraidTag::Custom;
    double theta = 0.0;
    std::size_t dim() const { return m.rows(); }
};

BraidMatrix<LaurentPoly> projector_p0prime(const AlgebraSpec& spec);
BraidMatrix<LambdaExt> braid_matrix(const AlgebraSpec& spec, int sign);
BraidMatrix<Complex> braid_matrix_numeric(const AlgebraSpec& spec, int sign, const NumericPoint& pt);
BraidMatrix<Complex> baxterized(const AlgebraSpec& spec, double theta, Complex q0, bool allow_complex = false);

template <class T> BraidMatrix<T> permutation_P(int N) {
    BraidMatrix<T> r{Matrix<T>(static_cast<std::size_t>(N * N), static_cast<std::size_t>(N * N)), BraidTag::Custom, 0.0};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r.m(static_cast<std::size_t>(i * N + j), static_cast<std::size_t>(j * N + i)) = T(1);
    return r;
}

// integer square root of a perfect square, throws DimensionMismatch otherwise
std::size_t braid_base_dim(std::size_t dim);

// max-norm of R12 R23 R12 - R23 R12 R23; exact zero for exact backends
template <class T> double check_braid_equation(const BraidMatrix<T>& b) {
    std::size_t n = braid_base_dim(b.dim());
    auto I = Matrix<T>::identity(n);
    auto r12 = kron(b.m, I);
    auto r23 = kron(I, b.m);
    return residual(r12 * r23 * r12, r23 * r12 * r23);
}

// R12(theta) R23(theta + theta') R12(theta') - R23(theta') R12(theta + theta') R23(theta)
double check_braid_equation_baxterized(const AlgebraSpec& spec, double theta, double theta_p, Complex q0,
                                       bool allow_complex = false);

// (R - I)(R + lambda^2 I)
double check_hecke(const AlgebraSpec& spec);
// P'0^2 - T P'0
double check_projector_square(const AlgebraSpec& spec);
// R R^{-1} - I
double check_inverse(const AlgebraSpec& spec);

// eigenvalues of R^{sign}(q0), sorted by real part
std::vector<Complex> spectrum(const AlgebraSpec& spec, Complex q0, int sign = 1, bool allow_complex = false);

} // namespace qbraid
