#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbraid/braidgen.hpp"

namespace qbraid {

inline constexpr std::size_t kDefaultCap = 4096;

// Letters are signed generator indices: +i is T_i (R), -i is T_i^{-1}, 1 <= i <= strands - 1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int writhe() const;
    void validate() const;  // throws Usage
    BraidWord inverse() const;
    std::string to_string() const;
    static BraidWord parse(const std::string& text, int strands);
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);
// cancel adjacent x, -x pairs
BraidWord free_reduce(const BraidWord& w);
bool operator==(const BraidWord& a, const BraidWord& b);

struct EnhancedOperator {
    AlgebraSpec spec;
    BraidMatrix<LambdaExt> rhat, rhat_inv;
    std::vector<LaurentPoly> f;  // f_i = q^{-2 rho_i}
    LambdaExt a, a_inv;          // e^{eta} = -lambda_-, e^{-eta} = -lambda_+

    Matrix<LaurentPoly> f_matrix() const;
};

EnhancedOperator enhancement(const AlgebraSpec& spec);

struct EybResiduals {
    double commute_plus = 0.0;       // R (f x f) - (f x f) R
    double commute_minus = 0.0;
    double trace_plus = 0.0;         // tr_2(R f x f) - a f
    double trace_minus = 0.0;        // tr_2(R^{-1} f x f) - a^{-1} f
    double projector_commute = 0.0;  // P'0 (f x f) - (f x f) P'0
    double projector_trace = 0.0;    // tr_2(P'0 f x f) - f
    double trace_f = 0.0;            // tr f - T
};

EybResiduals check_eyb(const EnhancedOperator& e);

// trace over the second tensor factor of an N^2 x N^2 matrix
template <class T> Matrix<T> partial_trace_2(const Matrix<T>& m, std::size_t n) {
    Matrix<T> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r(i, j) += m(i * n + k, j * n + k);
    return r;
}

// product over letters of I^{(i-1)} (x) R^{+-1} (x) I^{(m-i-1)}
template <class T>
Matrix<T> braid_rep(const Matrix<T>& r, const Matrix<T>& rinv, const BraidWord& w, std::size_t cap = kDefaultCap) {
    w.validate();
    std::size_t n = braid_base_dim(r.rows());
    std::size_t dim = 1;
    for (int k = 0; k < w.strands; ++k) {
        dim *= n;
        if (dim > cap) throw Error(ErrorKind::CapExceeded, "N^m exceeds the dimension cap " + std::to_string(cap));
    }
    auto out = Matrix<T>::identity(dim);
    for (int x : w.letters) {
        int i = x > 0 ? x : -x;
        std::size_t left = 1, right = 1;
        for (int k = 0; k < i - 1; ++k) left *= n;
        for (int k = 0; k < w.strands - i - 1; ++k) right *= n;
        out = out * kron(kron(Matrix<T>::identity(left), x > 0 ? r : rinv), Matrix<T>::identity(right));
    }
    return out;
}

Matrix<LambdaExt> braid_rep(const EnhancedOperator& e, const BraidWord& w, std::size_t cap = kDefaultCap);
Matrix<Complex> braid_rep(const EnhancedOperator& e, const BraidWord& w, const NumericPoint& pt,
                          std::size_t cap = kDefaultCap);

struct InvariantValue {
    Complex value;  // a^{-writhe} tr(rho(beta) f^{(x)m})
    Complex trace;  // tr(rho(beta) f^{(x)m})
    Complex a;
    int writhe = 0;
};

// tr(rho f^{(x)m}) streamed one basis vector at a time
Complex weighted_trace(const EnhancedOperator& e, const BraidWord& w, const NumericPoint& pt, std::size_t cap = kDefaultCap);
LambdaExt weighted_trace(const EnhancedOperator& e, const BraidWord& w, std::size_t cap = kDefaultCap);

InvariantValue link_invariant(const EnhancedOperator& e, const BraidWord& w, Complex q0, bool allow_complex = false,
                              std::size_t cap = kDefaultCap);
LambdaExt link_invariant_exact(const EnhancedOperator& e, const BraidWord& w, std::size_t cap = kDefaultCap);

// Residuals here and in MarkovResult are |lhs - rhs| / max(1, |lhs|, |rhs|).
struct SkeinResult {
    Complex plus, minus, zero;  // P(L+), P(L-), P(L0)
    double printed = 0.0;       // e^{-eta} P+ - e^{eta} P- - (e^{-eta} - e^{eta}) P0
    double consistent = 0.0;    // e^{2 eta} P+ - e^{-2 eta} P- - (e^{eta} - e^{-eta}) P0
    double printed_unnormalized_swapped = 0.0;  // printed form on bare traces with L+ read as R^{-1}
    double degenerate = 0.0;    // |P+ - P-|, relevant when eta = 0
};

// plus, minus, zero must reduce to u T_i v, u T_i^{-1} v, u v
SkeinResult check_skein(const EnhancedOperator& e, const BraidWord& plus, const BraidWord& minus, const BraidWord& zero,
                        Complex q0, bool allow_complex = false, std::size_t cap = kDefaultCap);
bool is_skein_triple(const BraidWord& plus, const BraidWord& minus, const BraidWord& zero);

struct MarkovResult {
    double conjugation = 0.0;       // max over trials of |P(g b g^-1) - P(b)|
    double stabilize_plus = 0.0;    // |P(b T_m) - P(b)|
    double stabilize_minus = 0.0;   // |P(b T_m^{-1}) - P(b)|
};

MarkovResult check_markov(const EnhancedOperator& e, const BraidWord& w, Complex q0, std::uint64_t seed = 1,
                          int trials = 3, bool allow_complex = false, std::size_t cap = kDefaultCap);

} // namespace qbraid
