#pragma once

#include <array>
#include <string>
#include <vector>

#include "qbraid/braidgen.hpp"
#include "qbraid/errors.hpp"

namespace qbraid {

// N coordinates x_i as d x d matrices; level 0 holds commuting scalars (d = 1)
template <class T> struct CoordSetT {
    int level = 0;
    std::vector<Matrix<T>> x;
    std::size_t dim() const { return x.empty() ? 0 : x[0].rows(); }
};
using CoordSet = CoordSetT<Complex>;

// sum_j w_j x_j x_{j'}
template <class T> Matrix<T> relation_value(const std::vector<T>& w, const CoordSetT<T>& c) {
    auto n = c.x.size();
    if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "coordinate count differs from N");
    for (const auto& m : c.x)
        if (m.rows() != c.dim() || m.cols() != c.dim()) throw Error(ErrorKind::DimensionMismatch, "coordinates differ in size");
    Matrix<T> r(c.dim(), c.dim());
    for (std::size_t j = 0; j < n; ++j) r += w[j] * (c.x[j] * c.x[n - 1 - j]);
    return r;
}

// x'_i = sum_k t_ik (x) x_k with t = P (I + lambda P'0), (t_ik)_ab = d_ak d_ib + lambda w_a w_k [i = a'][b = k']
template <class T> CoordSetT<T> tower_apply(const std::vector<T>& w, const T& lambda, const CoordSetT<T>& c) {
    auto n = c.x.size();
    auto d = c.dim();
    CoordSetT<T> r;
    r.level = c.level + 1;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<T> m(n * d, n * d);
        for (std::size_t a = 0; a < n; ++a) m.set_block(a * d, i * d, c.x[a]);
        std::size_t a = n - 1 - i;
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t k = n - 1 - b;
            auto blk = m.block(a * d, b * d, d, d);
            blk += (lambda * w[a] * w[k]) * c.x[k];
            m.set_block(a * d, b * d, blk);
        }
        r.x.push_back(std::move(m));
    }
    return r;
}

std::vector<Complex> coordinate_weights(const AlgebraSpec& spec, Complex s0);
std::vector<LambdaExt> coordinate_weights(const AlgebraSpec& spec);

// (a, +-sqrt((q^{1/2} + q^{-1/2}) a b), -b), or (-a, ..., b) when mirrored
CoordSet base_cone_solution(double a, double b, int sign, double q0, bool mirrored = false);
// commuting scalars x_1..x_{N-1}; x_N solves the relation (needs x_1 != 0)
CoordSet base_solution(const AlgebraSpec& spec, const std::vector<Complex>& head, Complex q0);

double check_coordinate_relation(const AlgebraSpec& spec, const CoordSet& c, Complex q0);
// max over all N^2 rows of P'0 (x (x) x)
double check_all_rows(const AlgebraSpec& spec, const CoordSet& c, Complex q0);

enum class Branch { Plus, Minus };  // lambda_+ (t^+) or lambda_- (t^-)

CoordSet tower_step(const AlgebraSpec& spec, const CoordSet& c, Branch branch, Complex q0, bool allow_complex = false,
                    double tol = 1e-8);
CoordSetT<LambdaExt> tower_step_exact(const AlgebraSpec& spec, const CoordSetT<LambdaExt>& c, Branch branch);

// nonzero blocks lie in one block row and one block column
bool one_row_one_column(const Matrix<Complex>& m, std::size_t blocks, double tol = 1e-14);
double abs_determinant(const Matrix<Complex>& m);

enum class Sym { X, Xi, Theta, Pi, PiPrime, Tau };

struct Factor {
    Sym sym = Sym::X;
    int index = 0;  // 1-based; 0 for Pi, Pi', tau
};

struct Term {
    Complex coeff;
    std::vector<Factor> factors;
};

// lhs = sum of rhs terms
struct Relation {
    std::vector<Factor> lhs;
    std::vector<Term> rhs;
};

struct RelationTable {
    Complex q, exp_eta;
    std::vector<Relation> rows;
    std::string to_string() const;
};

enum class Prescription { First, Second };  // R x x = x x form vs (R + e^{-2 eta}) x x = 0 form

struct XiTable {
    RelationTable table;
    std::vector<Complex> u;          // Pi = sum_k u_k xi_k x_k'
    std::vector<Complex> c_xx;       // x_i xi_j = c_xx[i N + j] xi_i x_j - [j = i'] c_pi[i] Pi
    std::vector<Complex> c_pi;
    std::vector<Complex> c_pp;       // xi_i xi_i' = c_pp[i] Pi' (first prescription)
    double sum_consistency = 0.0;    // |sum_i u_i c_pp[i] - 1|
};

XiTable xi_relation_table(const AlgebraSpec& spec, Complex q0, Prescription p = Prescription::First,
                          bool allow_complex = false);

struct XiBaseReport {
    int nullity = 0;
    double smallest_singular = 0.0;
};

// x_i xi_j relations with commuting scalar x: linear in xi, N^2 equations in N unknowns
XiBaseReport xi_base_nullity(const AlgebraSpec& spec, const CoordSet& base, Complex q0, bool allow_complex = false);

// x_i theta_j = sum_{k,l} D[i,j,k,l] theta_k x_l
struct FrameTable {
    int N = 0;
    std::vector<Complex> D;
    RelationTable table;
    double resubstitution = 0.0;  // max |sum_{j,l} D[i,j,k,l] C[l,j,a,b] - d_ka d_bi|
    Complex at(int i, int j, int k, int l) const {
        return D[static_cast<std::size_t>(((i * N + j) * N + k) * N + l)];
    }
};

FrameTable frame_commutators(const AlgebraSpec& spec, Complex q0, bool allow_complex = false);
// the tabulated ohat(3) lines with tau = theta_1 x_1 + theta_2 x_2 + theta_3 x_3
std::vector<Complex> printed_frame_o3(Complex q0, Complex exp_eta);
// max coefficient difference per line (i, j), index i*3 + j
std::array<double, 9> frame_line_residuals(const FrameTable& f, const std::vector<Complex>& printed);

enum class SoqConvention { Printed, Consistent };  // x3x1 - x1x3 or x1x3 - x3x1 on the left of the third relation

// residuals of x1x2 - q x2x1, x3x2 - q^-1 x2x3, and the third relation in the chosen convention
std::array<double, 3> soq3_relations(const CoordSet& c, Complex q0, SoqConvention conv = SoqConvention::Consistent);
CoordSet soq3_tower_step(const CoordSet& c, Complex q0, SoqConvention conv = SoqConvention::Consistent, double tol = 1e-8);

} // namespace qbraid
