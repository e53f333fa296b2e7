#include "qbraid/ncspace.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace qbraid {

namespace {

Complex sqrt_q(Complex q0) {
    if (q0 == Complex(0.0)) throw Error(ErrorKind::ZeroBase, "q0 = 0");
    if (q0.imag() == 0.0 && q0.real() > 0.0) return std::sqrt(q0.real());
    return std::sqrt(q0);
}

Matrix<Complex> scalar(Complex v) {
    Matrix<Complex> m(1, 1);
    m(0, 0) = v;
    return m;
}

double coord_scale(const CoordSet& c) {
    double s = 1.0;
    for (const auto& m : c.x) s = std::max(s, m.max_norm() * m.max_norm());
    return s;
}

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    return e;
}

std::string sym_name(Sym s) {
    switch (s) {
    case Sym::X: return "x";
    case Sym::Xi: return "xi";
    case Sym::Theta: return "theta";
    case Sym::Pi: return "Pi";
    case Sym::PiPrime: return "Pi'";
    case Sym::Tau: return "tau";
    }
    return "?";
}

std::string word(const std::vector<Factor>& f) {
    std::string s;
    for (const auto& x : f) {
        if (!s.empty()) s += " ";
        s += sym_name(x.sym);
        if (x.index > 0) s += std::to_string(x.index);
    }
    return s.empty() ? "0" : s;
}

std::string number(Complex c) {
    std::ostringstream os;
    os.precision(10);
    if (c.imag() == 0.0)
        os << c.real();
    else
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    return os.str();
}

} // namespace

std::vector<Complex> coordinate_weights(const AlgebraSpec& spec, Complex s0) {
    std::vector<Complex> w;
    for (int i = 0; i < spec.N; ++i) w.push_back(evaluate(spec.weight(i), s0));
    return w;
}

std::vector<LambdaExt> coordinate_weights(const AlgebraSpec& spec) {
    std::vector<LambdaExt> w;
    for (int i = 0; i < spec.N; ++i) w.emplace_back(spec.weight(i));
    return w;
}

CoordSet base_cone_solution(double a, double b, int sign, double q0, bool mirrored) {
    if (a < 0.0 || b < 0.0) throw Error(ErrorKind::NegativeParameter, "cone parameters a, b must be >= 0");
    if (!(q0 > 0.0)) throw Error(ErrorKind::NegativeParameter, "the cone needs real q0 > 0");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::Usage, "sign must be +1 or -1");
    double s = std::sqrt(q0);
    double x2 = sign * std::sqrt((s + 1.0 / s) * a * b);
    CoordSet c;
    c.x = {scalar(mirrored ? -a : a), scalar(x2), scalar(mirrored ? b : -b)};
    return c;
}

CoordSet base_solution(const AlgebraSpec& spec, const std::vector<Complex>& head, Complex q0) {
    auto n = static_cast<std::size_t>(spec.N);
    if (head.size() != n - 1) throw Error(ErrorKind::DimensionMismatch, "need N - 1 base values");
    auto w = coordinate_weights(spec, sqrt_q(q0));
    Complex pair = (w[0] + w[n - 1]) * head[0];
    if (std::abs(pair) < 1e-14) throw Error(ErrorKind::Degenerate, "x_N drops out of the relation");
    Complex rest = 0.0;
    for (std::size_t j = 1; j + 1 < n; ++j) rest += w[j] * head[j] * head[n - 1 - j];
    CoordSet c;
    for (Complex v : head) c.x.push_back(scalar(v));
    c.x.push_back(scalar(-rest / pair));
    return c;
}

double check_coordinate_relation(const AlgebraSpec& spec, const CoordSet& c, Complex q0) {
    return relation_value(coordinate_weights(spec, sqrt_q(q0)), c).max_norm();
}

double check_all_rows(const AlgebraSpec& spec, const CoordSet& c, Complex q0) {
    auto p = evaluate(projector_p0prime(spec).m, sqrt_q(q0));
    auto n = static_cast<std::size_t>(spec.N);
    if (c.x.size() != n) throw Error(ErrorKind::DimensionMismatch, "coordinate count differs from N");
    double r = 0.0;
    for (std::size_t row = 0; row < n * n; ++row) {
        Matrix<Complex> acc(c.dim(), c.dim());
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                if (p(row, k * n + l) != Complex(0.0)) acc += p(row, k * n + l) * (c.x[k] * c.x[l]);
        r = std::max(r, acc.max_norm());
    }
    return r;
}

CoordSet tower_step(const AlgebraSpec& spec, const CoordSet& c, Branch branch, Complex q0, bool allow_complex, double tol) {
    auto pt = numeric_point(spec, q0, allow_complex);
    if (pt.roots.degenerate) throw Error(ErrorKind::Degenerate, "T^2 = 4: lambda_+ = lambda_-");
    auto w = coordinate_weights(spec, pt.s);
    double res = relation_value(w, c).max_norm();
    if (res > tol * coord_scale(c))
        throw Error(ErrorKind::RelationViolated, "input coordinates miss the quadratic relation by " + std::to_string(res));
    return tower_apply(w, branch == Branch::Plus ? pt.roots.plus : pt.roots.minus, c);
}

CoordSetT<LambdaExt> tower_step_exact(const AlgebraSpec& spec, const CoordSetT<LambdaExt>& c, Branch branch) {
    if ((*spec.T * *spec.T - LaurentPoly(4)).is_zero()) throw Error(ErrorKind::Degenerate, "T^2 = 4");
    auto w = coordinate_weights(spec);
    if (relation_value(w, c).nonzeros() != 0) throw Error(ErrorKind::RelationViolated, "input misses the relation");
    return tower_apply(w, branch == Branch::Plus ? spec.lambda() : spec.lambda_inv(), c);
}

bool one_row_one_column(const Matrix<Complex>& m, std::size_t blocks, double tol) {
    std::size_t d = m.rows() / blocks;
    std::vector<std::pair<std::size_t, std::size_t>> nz;
    for (std::size_t a = 0; a < blocks; ++a)
        for (std::size_t b = 0; b < blocks; ++b)
            if (m.block(a * d, b * d, d, d).max_norm() > tol) nz.emplace_back(a, b);
    for (std::size_t r = 0; r < blocks; ++r)
        for (std::size_t c = 0; c < blocks; ++c)
            if (std::all_of(nz.begin(), nz.end(), [&](auto p) { return p.first == r || p.second == c; })) return true;
    return false;
}

double abs_determinant(const Matrix<Complex>& m) { return std::abs(to_eigen(m).determinant()); }

std::string RelationTable::to_string() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << word(r.lhs) << " =";
        if (r.rhs.empty()) os << " 0";
        for (std::size_t k = 0; k < r.rhs.size(); ++k)
            os << (k ? " +" : "") << " " << number(r.rhs[k].coeff) << " " << word(r.rhs[k].factors);
        os << "\n";
    }
    return os.str();
}

XiTable xi_relation_table(const AlgebraSpec& spec, Complex q0, Prescription p, bool allow_complex) {
    auto pt = numeric_point(spec, q0, allow_complex);
    Complex e = pt.exp_eta();
    int N = spec.N;
    XiTable t;
    t.table.q = pt.q;
    t.table.exp_eta = e;
    t.u = coordinate_weights(spec, pt.s);
    t.c_xx.assign(static_cast<std::size_t>(N * N), p == Prescription::First ? e * e : Complex(-1.0));
    for (int i = 0; i < N; ++i)
        t.c_pi.push_back(p == Prescription::First ? e * t.u[static_cast<std::size_t>(i)] : -t.u[static_cast<std::size_t>(i)] / e);
    if (p == Prescription::First) {
        for (int i = 0; i < N; ++i) t.c_pp.push_back(t.u[static_cast<std::size_t>(i)] / pt.T);
        Complex sum = 0.0;
        for (int i = 0; i < N; ++i) sum += t.u[static_cast<std::size_t>(i)] * t.c_pp[static_cast<std::size_t>(i)];
        t.sum_consistency = std::abs(sum - 1.0);
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Relation r{{{Sym::X, i + 1}, {Sym::Xi, j + 1}}, {{t.c_xx[static_cast<std::size_t>(i * N + j)], {{Sym::Xi, i + 1}, {Sym::X, j + 1}}}}};
            if (j == spec.prime(i)) r.rhs.push_back({-t.c_pi[static_cast<std::size_t>(i)], {{Sym::Pi, 0}}});
            t.table.rows.push_back(std::move(r));
        }
    if (p == Prescription::First) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Relation r{{{Sym::Xi, i + 1}, {Sym::Xi, j + 1}}, {}};
                if (j == spec.prime(i)) r.rhs.push_back({t.c_pp[static_cast<std::size_t>(i)], {{Sym::PiPrime, 0}}});
                t.table.rows.push_back(std::move(r));
            }
    } else {
        t.table.rows.push_back({{{Sym::PiPrime, 0}}, {}});
    }
    return t;
}

XiBaseReport xi_base_nullity(const AlgebraSpec& spec, const CoordSet& base, Complex q0, bool allow_complex) {
    auto n = static_cast<std::size_t>(spec.N);
    if (base.x.size() != n || base.dim() != 1) throw Error(ErrorKind::DimensionMismatch, "need N commuting scalars");
    auto t = xi_relation_table(spec, q0, Prescription::First, allow_complex);
    std::vector<Complex> x;
    for (const auto& m : base.x) x.push_back(m(0, 0));
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto row = static_cast<Eigen::Index>(i * n + j);
            M(row, static_cast<Eigen::Index>(j)) += x[i];
            M(row, static_cast<Eigen::Index>(i)) -= t.c_xx[i * n + j] * x[j];
            if (j == n - 1 - i)
                for (std::size_t k = 0; k < n; ++k) M(row, static_cast<Eigen::Index>(k)) += t.c_pi[i] * t.u[k] * x[n - 1 - k];
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& sv = svd.singularValues();
    XiBaseReport r;
    r.smallest_singular = sv(sv.size() - 1);
    double cut = 1e-10 * std::max(1.0, sv(0));
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) <= cut) ++r.nullity;
    return r;
}

FrameTable frame_commutators(const AlgebraSpec& spec, Complex q0, bool allow_complex) {
    auto pt = numeric_point(spec, q0, allow_complex);
    Complex e = pt.exp_eta();
    int N = spec.N;
    auto n = static_cast<std::size_t>(N);
    auto rp = braid_matrix_numeric(spec, 1, pt).m;
    auto lm = braid_matrix_numeric(spec, -1, pt).m * permutation_P<Complex>(N).m;
    FrameTable f;
    f.N = N;
    f.D.resize(n * n * n * n);
    f.table.q = pt.q;
    f.table.exp_eta = e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Relation r{{{Sym::X, static_cast<int>(i) + 1}, {Sym::Theta, static_cast<int>(j) + 1}}, {}};
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Complex v = lm(k * n + i, j * n + l) / (e * e);
                    f.D[((i * n + j) * n + k) * n + l] = v;
                    if (std::abs(v) > 1e-15)
                        r.rhs.push_back({v, {{Sym::Theta, static_cast<int>(k) + 1}, {Sym::X, static_cast<int>(l) + 1}}});
                }
            f.table.rows.push_back(std::move(r));
        }
    // x_l xi_j = sum_ab C[l,j,a,b] xi_a x_b with C = e^{2 eta} R
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    Complex acc = 0.0;
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t l = 0; l < n; ++l)
                            acc += f.D[((i * n + j) * n + k) * n + l] * e * e * rp(l * n + j, a * n + b);
                    Complex target = (k == a && b == i) ? 1.0 : 0.0;
                    f.resubstitution = std::max(f.resubstitution, std::abs(acc - target));
                }
    return f;
}

std::vector<Complex> printed_frame_o3(Complex q0, Complex exp_eta) {
    Complex s = sqrt_q(q0), e = exp_eta;
    std::vector<Complex> D(81);
    auto at = [&](int i, int j, int k, int l) -> Complex& { return D[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l)]; };
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) at(i, i, k, k) += 1.0 / (e * e);
        at(i, i, 2 - i, 2 - i) -= 1.0 / e;
    }
    at(0, 1, 2, 1) = -s / e;
    at(0, 2, 2, 0) = -1.0 / e;
    at(1, 0, 1, 2) = -s / e;
    at(1, 2, 1, 0) = -1.0 / (s * e);
    at(2, 0, 0, 2) = -1.0 / e;
    at(2, 1, 0, 1) = -1.0 / (s * e);
    return D;
}

std::array<double, 9> frame_line_residuals(const FrameTable& f, const std::vector<Complex>& printed) {
    if (f.N != 3 || printed.size() != 81) throw Error(ErrorKind::UnsupportedSpec, "the printed frame table is for ohat(3)");
    std::array<double, 9> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    auto idx = static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
                    auto& x = r[static_cast<std::size_t>(i * 3 + j)];
                    x = std::max(x, std::abs(f.D[idx] - printed[idx]));
                }
    return r;
}

std::array<double, 3> soq3_relations(const CoordSet& c, Complex q0, SoqConvention conv) {
    if (c.x.size() != 3) throw Error(ErrorKind::DimensionMismatch, "SO_q(3) has three coordinates");
    Complex s = sqrt_q(q0);
    const auto &x1 = c.x[0], &x2 = c.x[1], &x3 = c.x[2];
    auto comm = conv == SoqConvention::Printed ? x3 * x1 - x1 * x3 : x1 * x3 - x3 * x1;
    return {residual(x1 * x2, q0 * (x2 * x1)), residual(x3 * x2, (1.0 / q0) * (x2 * x3)),
            residual(comm, (s - 1.0 / s) * (x2 * x2))};
}

CoordSet soq3_tower_step(const CoordSet& c, Complex q0, SoqConvention conv, double tol) {
    auto rel = soq3_relations(c, q0, conv);
    double worst = std::max({rel[0], rel[1], rel[2]});
    if (worst > tol * coord_scale(c))
        throw Error(ErrorKind::RelationViolated, "input misses the SO_q(3) relations by " + std::to_string(worst));
    Complex s = sqrt_q(q0), kappa = q0 - 1.0 / q0;
    std::size_t d = c.dim();
    auto put = [d](Matrix<Complex>& m, std::size_t a, std::size_t b, Complex coef, const Matrix<Complex>& x) {
        m.set_block(a * d, b * d, coef * x);
    };
    const auto &x1 = c.x[0], &x2 = c.x[1], &x3 = c.x[2];
    CoordSet r;
    r.level = c.level + 1;
    Matrix<Complex> y1(3 * d, 3 * d), y2(3 * d, 3 * d), y3(3 * d, 3 * d);
    put(y1, 0, 0, q0, x1);
    put(y1, 1, 1, 1.0, x1);
    put(y1, 2, 2, 1.0 / q0, x1);
    put(y2, 0, 0, 1.0, x2);
    put(y2, 0, 1, kappa, x1);
    put(y2, 1, 1, 1.0, x2);
    put(y2, 1, 2, kappa / s, x1);
    put(y2, 2, 2, 1.0, x2);
    put(y3, 0, 0, 1.0 / q0, x3);
    put(y3, 0, 1, kappa / s, x2);
    put(y3, 0, 2, kappa * (1.0 - 1.0 / q0), x1);
    put(y3, 1, 1, 1.0, x3);
    put(y3, 1, 2, kappa, x2);
    put(y3, 2, 2, q0, x3);
    r.x = {std::move(y1), std::move(y2), std::move(y3)};
    return r;
}

} // namespace qbraid
