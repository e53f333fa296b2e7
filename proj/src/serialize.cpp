#include "qbraid/serialize.hpp"

namespace qbraid {

namespace {

Json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from(const Json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

const char* sym_text(Sym s) {
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

Json factors_json(const std::vector<Factor>& f) {
    Json a = Json::array();
    for (const auto& x : f) a.push_back(x.index > 0 ? std::string(sym_text(x.sym)) + std::to_string(x.index) : sym_text(x.sym));
    return a;
}

template <class T> Json entries(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json to_json(const Rational& r) { return Json::array({integer(r.get_num()), integer(r.get_den())}); }

Json to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
    return j;
}

Json to_json(const LambdaExt& x) { return {{"a", to_json(x.a())}, {"b", to_json(x.b())}}; }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

LaurentPoly laurent_from_json(const Json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [k, v] : j.items()) {
        Rational r(integer_from(v.at(0)), integer_from(v.at(1)));
        r.canonicalize();
        terms.emplace_back(std::stoi(k), r);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Complex complex_from_json(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json matrix_json(const Matrix<LaurentPoly>& m) {
    return {{"dim", m.rows()}, {"backend", "laurent"}, {"entries", entries(m)}};
}

Json matrix_json(const Matrix<LambdaExt>& m) {
    return {{"dim", m.rows()}, {"backend", "lambda"}, {"entries", entries(m)}};
}

Json matrix_json(const Matrix<Complex>& m) {
    return {{"dim", m.rows()}, {"backend", "complex"}, {"entries", entries(m)}};
}

Matrix<Complex> complex_matrix_from_json(const Json& j) {
    if (j.at("backend") != "complex") throw Error(ErrorKind::Usage, "expected a complex matrix dump");
    auto n = j.at("dim").get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "entry rows differ from dim");
    Matrix<Complex> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (e[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "entry columns differ from dim");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = complex_from_json(e[i][k]);
    }
    return m;
}

Json to_json(const AlgebraSpec& spec) {
    return {{"family", family_name(spec.family)}, {"N", spec.N}, {"name", spec.name()},
            {"rho2", spec.rho2}, {"eps", spec.eps}, {"T", to_json(*spec.T)}};
}

Json to_json(const BraidWord& w) { return {{"strands", w.strands}, {"letters", w.letters}, {"writhe", w.writhe()}}; }

Json to_json(const RelationTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json rhs = Json::array();
        for (const auto& term : r.rhs) rhs.push_back({{"coeff", to_json(term.coeff)}, {"factors", factors_json(term.factors)}});
        rows.push_back({{"lhs", factors_json(r.lhs)}, {"rhs", rhs}});
    }
    return {{"q", to_json(t.q)}, {"exp_eta", to_json(t.exp_eta)}, {"rows", rows}};
}

} // namespace qbraid
