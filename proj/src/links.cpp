#include "qbraid/links.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qbraid {

int BraidWord::writhe() const {
    int w = 0;
    for (int x : letters) w += x > 0 ? 1 : -1;
    return w;
}

void BraidWord::validate() const {
    if (strands < 1) throw Error(ErrorKind::Usage, "a braid needs at least one strand");
    for (int x : letters)
        if (x == 0 || std::abs(x) > strands - 1)
            throw Error(ErrorKind::Usage, "generator " + std::to_string(x) + " out of range for " +
                                              std::to_string(strands) + " strands");
}

BraidWord BraidWord::inverse() const {
    BraidWord r{strands, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << (letters[k] > 0 ? "+" : "") << letters[k];
    return os.str();
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    BraidWord w{strands, {}};
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream is(spaced);
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error(ErrorKind::Usage, "bad braid letter '" + tok + "'");
        w.letters.push_back(x);
    }
    w.validate();
    return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw Error(ErrorKind::DimensionMismatch, "braids on different strand counts");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord free_reduce(const BraidWord& w) {
    BraidWord r{w.strands, {}};
    for (int x : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -x)
            r.letters.pop_back();
        else
            r.letters.push_back(x);
    }
    return r;
}

bool operator==(const BraidWord& a, const BraidWord& b) { return a.strands == b.strands && a.letters == b.letters; }

Matrix<LaurentPoly> EnhancedOperator::f_matrix() const {
    Matrix<LaurentPoly> m(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) m(i, i) = f[i];
    return m;
}

EnhancedOperator enhancement(const AlgebraSpec& spec) {
    EnhancedOperator e{spec, braid_matrix(spec, 1), braid_matrix(spec, -1), {}, {}, {}};
    for (int r : spec.rho2) e.f.push_back(LaurentPoly::monomial(-2 * r));
    e.a = -spec.lambda_inv();
    e.a_inv = -spec.lambda();
    return e;
}

namespace {

Matrix<LambdaExt> lift(const Matrix<LaurentPoly>& m) {
    return m.map([](const LaurentPoly& x) { return LambdaExt(x); });
}

std::size_t power_dim(std::size_t n, int m, std::size_t cap) {
    std::size_t dim = 1;
    for (int k = 0; k < m; ++k) {
        dim *= n;
        if (dim > cap) throw Error(ErrorKind::CapExceeded, "N^m exceeds the dimension cap " + std::to_string(cap));
    }
    return dim;
}

// v <- (I (x) (I + c P'0) (x) I) v with P'0 = w w^T on the (i, i') diagonal of strands p, p+1
template <class T> void apply_letter(std::vector<T>& v, std::size_t n, int m, int p, const T& c, const std::vector<T>& w) {
    std::size_t sb = 1;
    for (int k = 0; k < m - p - 2; ++k) sb *= n;
    std::size_t sa = sb * n, hi_count = v.size() / (sa * n);
    for (std::size_t hi = 0; hi < hi_count; ++hi)
        for (std::size_t lo = 0; lo < sb; ++lo) {
            std::size_t base = hi * sa * n + lo;
            T s{};
            for (std::size_t k = 0; k < n; ++k) {
                const T& x = v[base + k * sa + (n - 1 - k) * sb];
                if (!scalar_traits<T>::is_zero(x)) s += w[k] * x;
            }
            if (scalar_traits<T>::is_zero(s)) continue;
            T cs = c * s;
            for (std::size_t k = 0; k < n; ++k) v[base + k * sa + (n - 1 - k) * sb] += w[k] * cs;
        }
}

template <class T>
T stream_trace(std::size_t n, const BraidWord& word, const std::vector<T>& w, const T& lp, const T& lm,
               const std::vector<T>& f, std::size_t cap) {
    word.validate();
    std::size_t dim = power_dim(n, word.strands, cap);
    T acc{};
    std::vector<T> v(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        T fc(1);
        for (std::size_t x = c, k = 0; k < static_cast<std::size_t>(word.strands); ++k, x /= n) fc = fc * f[x % n];
        std::fill(v.begin(), v.end(), T{});
        v[c] = T(1);
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
            apply_letter(v, n, word.strands, std::abs(*it) - 1, *it > 0 ? lp : lm, w);
        if (!scalar_traits<T>::is_zero(v[c])) acc += fc * v[c];
    }
    return acc;
}

double rel(Complex lhs, Complex rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

EybResiduals check_eyb(const EnhancedOperator& e) {
    auto n = static_cast<std::size_t>(e.spec.N);
    auto fm = lift(e.f_matrix());
    auto ff = kron(fm, fm);
    auto p0 = lift(projector_p0prime(e.spec).m);
    EybResiduals r;
    r.commute_plus = residual(e.rhat.m * ff, ff * e.rhat.m);
    r.commute_minus = residual(e.rhat_inv.m * ff, ff * e.rhat_inv.m);
    r.trace_plus = residual(partial_trace_2(e.rhat.m * ff, n), e.a * fm);
    r.trace_minus = residual(partial_trace_2(e.rhat_inv.m * ff, n), e.a_inv * fm);
    r.projector_commute = residual(p0 * ff, ff * p0);
    r.projector_trace = residual(partial_trace_2(p0 * ff, n), fm);
    LaurentPoly tr;
    for (const auto& x : e.f) tr += x;
    r.trace_f = (tr - *e.spec.T).magnitude();
    return r;
}

Matrix<LambdaExt> braid_rep(const EnhancedOperator& e, const BraidWord& w, std::size_t cap) {
    return braid_rep(e.rhat.m, e.rhat_inv.m, w, cap);
}

Matrix<Complex> braid_rep(const EnhancedOperator& e, const BraidWord& w, const NumericPoint& pt, std::size_t cap) {
    return braid_rep(braid_matrix_numeric(e.spec, 1, pt).m, braid_matrix_numeric(e.spec, -1, pt).m, w, cap);
}

Complex weighted_trace(const EnhancedOperator& e, const BraidWord& w, const NumericPoint& pt, std::size_t cap) {
    std::vector<Complex> wt, f;
    for (int i = 0; i < e.spec.N; ++i) wt.push_back(evaluate(e.spec.weight(i), pt.s));
    for (const auto& x : e.f) f.push_back(evaluate(x, pt.s));
    return stream_trace(static_cast<std::size_t>(e.spec.N), w, wt, pt.roots.plus, pt.roots.minus, f, cap);
}

LambdaExt weighted_trace(const EnhancedOperator& e, const BraidWord& w, std::size_t cap) {
    std::vector<LambdaExt> wt, f;
    for (int i = 0; i < e.spec.N; ++i) wt.emplace_back(e.spec.weight(i));
    for (const auto& x : e.f) f.emplace_back(x);
    return stream_trace(static_cast<std::size_t>(e.spec.N), w, wt, e.spec.lambda(), e.spec.lambda_inv(), f, cap);
}

InvariantValue link_invariant(const EnhancedOperator& e, const BraidWord& w, Complex q0, bool allow_complex,
                              std::size_t cap) {
    auto pt = numeric_point(e.spec, q0, allow_complex);
    InvariantValue r;
    r.a = pt.exp_eta();
    r.writhe = w.writhe();
    r.trace = weighted_trace(e, w, pt, cap);
    r.value = std::pow(r.a, -r.writhe) * r.trace;
    return r;
}

LambdaExt link_invariant_exact(const EnhancedOperator& e, const BraidWord& w, std::size_t cap) {
    LambdaExt v = weighted_trace(e, w, cap);
    int wr = w.writhe();
    for (int k = 0; k < std::abs(wr); ++k) v = v * (wr > 0 ? e.a_inv : e.a);
    return v;
}

bool is_skein_triple(const BraidWord& plus, const BraidWord& minus, const BraidWord& zero) {
    if (plus.strands != minus.strands || plus.strands != zero.strands) return false;
    auto m = free_reduce(minus), z = free_reduce(zero);
    for (std::size_t p = 0; p < plus.letters.size(); ++p) {
        if (plus.letters[p] < 0) continue;
        BraidWord flipped = plus, removed = plus;
        flipped.letters[p] = -flipped.letters[p];
        removed.letters.erase(removed.letters.begin() + static_cast<std::ptrdiff_t>(p));
        if (free_reduce(flipped) == m && free_reduce(removed) == z) return true;
    }
    return false;
}

SkeinResult check_skein(const EnhancedOperator& e, const BraidWord& plus, const BraidWord& minus, const BraidWord& zero,
                        Complex q0, bool allow_complex, std::size_t cap) {
    plus.validate();
    minus.validate();
    zero.validate();
    if (!is_skein_triple(plus, minus, zero))
        throw Error(ErrorKind::WordsNotSkeinTriple, "words do not differ by a single T_i, T_i^{-1}, nothing");
    auto pt = numeric_point(e.spec, q0, allow_complex);
    Complex a = pt.exp_eta();
    Complex tp = weighted_trace(e, plus, pt, cap), tm = weighted_trace(e, minus, pt, cap),
            tz = weighted_trace(e, zero, pt, cap);
    SkeinResult r;
    r.plus = std::pow(a, -plus.writhe()) * tp;
    r.minus = std::pow(a, -minus.writhe()) * tm;
    r.zero = std::pow(a, -zero.writhe()) * tz;
    r.printed = rel(r.plus / a - a * r.minus, (1.0 / a - a) * r.zero);
    r.consistent = rel(a * a * r.plus - r.minus / (a * a), (a - 1.0 / a) * r.zero);
    r.printed_unnormalized_swapped = rel(tm / a - a * tp, (1.0 / a - a) * tz);
    r.degenerate = rel(r.plus, r.minus);
    return r;
}

MarkovResult check_markov(const EnhancedOperator& e, const BraidWord& w, Complex q0, std::uint64_t seed, int trials,
                          bool allow_complex, std::size_t cap) {
    MarkovResult r;
    Complex base = link_invariant(e, w, q0, allow_complex, cap).value;
    if (w.strands > 1) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> len(1, 4), gen(1, w.strands - 1), sign(0, 1);
        for (int t = 0; t < trials; ++t) {
            BraidWord g{w.strands, {}};
            for (int k = len(rng); k > 0; --k) g.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
            Complex v = link_invariant(e, g * w * g.inverse(), q0, allow_complex, cap).value;
            r.conjugation = std::max(r.conjugation, rel(v, base));
        }
    }
    BraidWord up{w.strands + 1, w.letters};
    up.letters.push_back(w.strands);
    r.stabilize_plus = rel(link_invariant(e, up, q0, allow_complex, cap).value, base);
    up.letters.back() = -w.strands;
    r.stabilize_minus = rel(link_invariant(e, up, q0, allow_complex, cap).value, base);
    return r;
}

} // namespace qbraid
