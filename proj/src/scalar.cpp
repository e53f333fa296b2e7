#include "qbraid/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbraid/errors.hpp"

namespace qbraid {

bool approx_equal(Complex a, Complex b, double rel, double abs) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(abs, rel * scale);
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(exp, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

namespace {

void merge_into(std::vector<LaurentPoly::Term>& out, const std::vector<LaurentPoly::Term>& a,
                const std::vector<LaurentPoly::Term>& b, bool subtract) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
            if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, false);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, true);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const auto& m = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
        const auto& p = a.terms_.size() == 1 ? b : a;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.emplace_back(t.first + m.first, t.second * m.second);
        return r;
    }
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) acc[static_cast<std::size_t>(x.first + y.first - lo)] += x.second * y.second;
    for (int e = lo; e <= hi; ++e) {
        auto& c = acc[static_cast<std::size_t>(e - lo)];
        if (sgn(c) != 0) r.terms_.emplace_back(e, std::move(c));
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::reflect() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

double LaurentPoly::magnitude() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.second.get_d()));
    return m;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly quantum_bracket(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidDimension, "quantum_bracket needs n >= 0");
    std::vector<LaurentPoly::Term> t;
    for (int k = 0; k < n; ++k) t.emplace_back(2 * (n - 1 - 2 * k), Rational(1));
    return LaurentPoly::from_terms(std::move(t));
}

Complex evaluate(const LaurentPoly& p, Complex s0) {
    if (s0 == Complex(0.0)) throw Error(ErrorKind::ZeroBase, "evaluation at s = 0");
    const auto& t = p.terms();
    if (t.empty()) return 0.0;
    // Horner over non-negative exponents in s, then over negative ones in 1/s
    Complex pos = 0.0, neg = 0.0;
    int top = std::max(t.back().first, 0);
    int bottom = std::min(t.front().first, 0);
    for (int e = top; e >= 0; --e) pos = pos * s0 + p.coeff(e).get_d();
    Complex inv = 1.0 / s0;
    for (int e = bottom; e <= -1; ++e) neg = neg * inv + p.coeff(e).get_d();
    return pos + neg * inv;
}

LambdaExt::LambdaExt(LaurentPoly a, LaurentPoly b, Modulus T) : a_(std::move(a)), b_(std::move(b)), mod_(std::move(T)) {
    if (!b_.is_zero() && !mod_) throw Error(ErrorKind::DimensionMismatch, "lambda component without modulus");
}

LambdaExt LambdaExt::lambda(const Modulus& T) { return LambdaExt(LaurentPoly(), LaurentPoly(1), T); }

LambdaExt LambdaExt::lambda_inv(const Modulus& T) { return LambdaExt(-*T, LaurentPoly(-1), T); }

LambdaExt::Modulus LambdaExt::pick(const Modulus& x, const Modulus& y) {
    if (!x) return y;
    if (!y || x == y) return x;
    if (*x != *y) throw Error(ErrorKind::DimensionMismatch, "lambda elements over different moduli");
    return x;
}

double LambdaExt::magnitude() const { return std::max(a_.magnitude(), b_.magnitude()); }

LambdaExt& LambdaExt::operator+=(const LambdaExt& o) {
    mod_ = pick(mod_, o.mod_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

LambdaExt& LambdaExt::operator-=(const LambdaExt& o) {
    mod_ = pick(mod_, o.mod_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

LambdaExt operator*(const LambdaExt& x, const LambdaExt& y) {
    LambdaExt r;
    r.mod_ = LambdaExt::pick(x.mod_, y.mod_);
    if (x.b_.is_zero()) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.a_ * y.b_;
        return r;
    }
    if (y.b_.is_zero()) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.b_ * y.a_;
        return r;
    }
    // (a + b l)(c + d l) = ac - bd + (ad + bc - bd T) l
    LaurentPoly bd = x.b_ * y.b_;
    r.a_ = x.a_ * y.a_ - bd;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_ - bd * *r.mod_;
    return r;
}

LambdaExt& LambdaExt::operator*=(const LambdaExt& o) { return *this = *this * o; }

LambdaExt LambdaExt::operator-() const {
    LambdaExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

LambdaExt LambdaExt::conj() const {
    if (b_.is_zero()) return *this;
    // a + b l^{-1} = (a - bT) - b l
    return LambdaExt(a_ - b_ * *mod_, -b_, mod_);
}

LambdaExt LambdaExt::reflect() const {
    LambdaExt r = *this;
    r.a_ = a_.reflect();
    r.b_ = b_.reflect();
    return r;
}

std::string LambdaExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string bs = "(" + b_.to_string() + ")*lambda";
    if (a_.is_zero()) return bs;
    return "(" + a_.to_string() + ") + " + bs;
}

Complex evaluate(const LambdaExt& x, Complex s0, Complex lambda0) {
    Complex a = evaluate(x.a(), s0);
    if (x.b().is_zero()) return a;
    return a + evaluate(x.b(), s0) * lambda0;
}

LambdaRoots lambda_numeric_roots(Complex T) {
    if (!std::isfinite(T.real()) || !std::isfinite(T.imag()))
        throw Error(ErrorKind::ZeroBase, "non-finite T");
    LambdaRoots r;
    Complex disc = T * T - 4.0;
    if (std::abs(disc) <= 1e-12 * std::max(1.0, std::norm(T))) {
        r.plus = r.minus = -T / 2.0;
        r.degenerate = true;
        return r;
    }
    Complex sq = std::sqrt(disc);
    if (T.imag() == 0.0 && disc.imag() == 0.0 && disc.real() > 0.0) sq = std::sqrt(disc.real());
    Complex e1 = (T + sq) / 2.0;
    Complex e2 = (T - sq) / 2.0;
    Complex e = std::abs(e2) > std::abs(e1) ? e2 : e1;
    r.minus = -e;
    r.plus = -1.0 / e;
    return r;
}

} // namespace qbraid
