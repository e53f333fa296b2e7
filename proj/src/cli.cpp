#include "qbraid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qbraid/lalg.hpp"
#include "qbraid/triangularity.hpp"

namespace qbraid::cli {

namespace {

const double pi = std::acos(-1.0);

struct Settings {
    std::string family = "ohat";
    int dim = 3;
    std::string q = "1";
    std::string format = "json";
    std::string output;
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
    std::size_t cap = kDefaultCap;
    bool allow_complex = false;

    int sign = 1;
    std::optional<double> theta;
    std::string matrix = "rhat";
    std::string check = "all";
    std::string braid;
    int strands = 1;
    bool skein = false;
    bool markov = false;
    int trials = 3;
    double a = 1.0, b = 1.0;
    int levels = 3;
    std::string lambda = "plus";
    int cone_sign = 1;
    bool mirrored = false;
    std::vector<double> base;
    std::string model = "family";
    std::string convention = "consistent";
    bool matrices = true;
};

struct Report {
    Json body = Json::object();
    bool ok = true;
};

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "not a number: '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorKind::Usage, "not a number: '" + s + "'");
    return v;
}

AlgebraSpec spec_of(const Settings& s) {
    try {
        return make_spec(parse_family(s.family), s.dim);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidDimension || e.kind() == ErrorKind::UnsupportedSpec) throw;
        throw Error(ErrorKind::Usage, e.what());
    }
}

Complex numeric_q(const QValue& q, const std::string& what) {
    if (q.symbolic) throw Error(ErrorKind::Usage, what + " needs a numeric --q");
    return q.value;
}

// residual gate: exact backends must give 0, numeric ones stay within tol
bool within(double r, bool exact, double tol) { return exact ? r == 0.0 : r <= tol; }

void add_check(Report& rep, const std::string& name, double r, bool exact, double tol) {
    rep.body["checks"][name] = r;
    if (!within(r, exact, tol)) {
        rep.ok = false;
        rep.body["failed"].push_back(name);
    }
}

Json point_json(const NumericPoint& pt) {
    return {{"q", to_json(pt.q)}, {"T", to_json(pt.T)}, {"lambda_plus", to_json(pt.roots.plus)},
            {"lambda_minus", to_json(pt.roots.minus)}, {"exp_eta", to_json(pt.exp_eta())}};
}

Report cmd_gen(const Settings& s, const QValue& q) {
    auto spec = spec_of(s);
    Report r;
    if (s.matrix != "rhat" && s.matrix != "projector") throw Error(ErrorKind::Usage, "--matrix must be rhat or projector");
    if (s.sign != 1 && s.sign != -1) throw Error(ErrorKind::Usage, "--sign must be 1 or -1");
    r.body["matrix_kind"] = s.matrix;
    if (s.theta) {
        if (s.matrix != "rhat") throw Error(ErrorKind::Usage, "--theta applies to rhat only");
        r.body["theta"] = *s.theta;
        r.body["matrix"] = matrix_json(baxterized(spec, *s.theta, numeric_q(q, "--theta"), s.allow_complex).m);
        return r;
    }
    if (q.symbolic) {
        if (s.matrix == "projector") r.body["matrix"] = matrix_json(projector_p0prime(spec).m);
        else r.body["matrix"] = matrix_json(braid_matrix(spec, s.sign).m);
        return r;
    }
    auto pt = numeric_point(spec, q.value, s.allow_complex);
    r.body["point"] = point_json(pt);
    if (s.matrix == "projector") r.body["matrix"] = matrix_json(evaluate(projector_p0prime(spec).m, pt.s));
    else r.body["matrix"] = matrix_json(braid_matrix_numeric(spec, s.sign, pt).m);
    return r;
}

void rll_checks(Report& r, const AlgebraSpec& spec, const QValue& q, const Settings& s) {
    if (q.symbolic) {
        auto R = braid_matrix(spec, 1).m;
        auto Lp = fundamental_L(spec, LVariant::Plus), Lm = fundamental_L(spec, LVariant::Minus);
        add_check(r, "rll_plus_plus", check_RLL(R, Lp, Lp), true, s.tol);
        add_check(r, "rll_minus_minus", check_RLL(R, Lm, Lm), true, s.tol);
        add_check(r, "rll_plus_minus", check_RLL(R, Lp, Lm), true, s.tol);
        return;
    }
    auto pt = numeric_point(spec, q.value, s.allow_complex);
    auto R = braid_matrix_numeric(spec, 1, pt).m;
    auto Lp = fundamental_L_numeric(spec, LVariant::Plus, pt), Lm = fundamental_L_numeric(spec, LVariant::Minus, pt);
    add_check(r, "rll_plus_plus", check_RLL(R, Lp, Lp), false, s.tol);
    add_check(r, "rll_minus_minus", check_RLL(R, Lm, Lm), false, s.tol);
    add_check(r, "rll_plus_minus", check_RLL(R, Lp, Lm), false, s.tol);
}

Report cmd_verify(const Settings& s, const QValue& q) {
    auto spec = spec_of(s);
    Report r;
    r.body["exact"] = q.symbolic;
    if (q.symbolic) {
        add_check(r, "braid_plus", check_braid_equation(braid_matrix(spec, 1)), true, s.tol);
        add_check(r, "braid_minus", check_braid_equation(braid_matrix(spec, -1)), true, s.tol);
        add_check(r, "hecke", check_hecke(spec), true, s.tol);
        add_check(r, "projector_square", check_projector_square(spec), true, s.tol);
        add_check(r, "inverse", check_inverse(spec), true, s.tol);
    } else {
        auto pt = numeric_point(spec, q.value, s.allow_complex);
        r.body["point"] = point_json(pt);
        auto R = braid_matrix_numeric(spec, 1, pt), Ri = braid_matrix_numeric(spec, -1, pt);
        add_check(r, "braid_plus", check_braid_equation(R), false, s.tol);
        add_check(r, "braid_minus", check_braid_equation(Ri), false, s.tol);
        auto I = Matrix<Complex>::identity(R.dim());
        Complex l = pt.roots.plus;
        add_check(r, "hecke", ((R.m - I) * (R.m + (l * l) * I)).max_norm(), false, s.tol);
        auto P = evaluate(projector_p0prime(spec).m, pt.s);
        add_check(r, "projector_square", residual(P * P, pt.T * P), false, s.tol);
        add_check(r, "inverse", residual(R.m * Ri.m, I), false, s.tol);
        if (!pt.roots.degenerate && std::abs(pt.exp_eta().imag()) < 1e-14 && pt.exp_eta().real() > 1.0) {
            double eta = std::log(pt.exp_eta().real());
            add_check(r, "braid_baxterized", check_braid_equation_baxterized(spec, -0.3 * eta, -0.5 * eta, q.value), false,
                      s.tol);
        }
    }
    rll_checks(r, spec, q, s);
    return r;
}

Report cmd_triangular(const Settings& s) {
    auto spec = spec_of(s);
    auto prob = build_problem(spec);
    Report r;
    std::string var = prob.var == ReducedVar::Y ? "Y" : "z";
    r.body["raw"] = prob.raw.to_string("s");
    r.body["reduced"] = {{"name", prob.reduced_name()}, {"variable", var}, {"polynomial", prob.reduced.to_string(var)},
                         {"target", prob.target}};
    Json roots = Json::array();
    std::vector<int> orders;
    for (const auto& c : solve_roots(prob)) {
        auto t = verify_triangular(spec, c.value);
        Json j = {{"q", to_json(c.value)}, {"kind", root_kind_name(c.kind)}, {"residual", c.residual},
                  {"square_residual", t.square_residual}, {"braid_residual", t.braid_residual}};
        if (c.kind == RootKind::RootOfUnity) {
            j["order"] = c.order;
            j["angle_over_pi"] = std::arg(c.value) / pi;
            orders.push_back(c.order);
        }
        roots.push_back(j);
        if (t.square_residual > s.tol || c.residual > s.tol) r.ok = false;
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    r.body["roots"] = roots;
    r.body["root_of_unity_orders"] = orders;
    return r;
}

template <class T> void central_json(Report& r, const std::string& key, const CentralReport<T>& c, bool exact, double tol) {
    add_check(r, key + "_equality", c.equality_residual, exact, tol);
    add_check(r, key + "_centrality", c.centrality_residual, exact, tol);
    add_check(r, key + "_identity", c.identity_residual, exact, tol);
    r.body[key + "_value"] = to_json(c.scalar_value);
}

Report cmd_lalg(const Settings& s, const QValue& q) {
    auto spec = spec_of(s);
    const std::vector<std::string> known = {"all", "rll", "central", "coproduct", "conjugate"};
    if (std::find(known.begin(), known.end(), s.check) == known.end())
        throw Error(ErrorKind::Usage, "--check must be one of rll, central, coproduct, conjugate, all");
    bool all = s.check == "all";
    Report r;
    r.body["check"] = s.check;
    r.body["exact"] = q.symbolic;
    if (all || s.check == "rll") rll_checks(r, spec, q, s);
    if (all || s.check == "central") {
        if (q.symbolic) {
            auto L = fundamental_L(spec, LVariant::Plus);
            auto c = central_elements(L, spec);
            central_json(r, "central", c, true, s.tol);
            LambdaExt expect = spec.family == Family::OHat ? spec.lambda() : -spec.lambda();
            add_check(r, "central_scalar", (c.scalar_value - expect).is_zero() ? 0.0 : 1.0, true, s.tol);
            auto s12 = check_S1_S2(L, rho_weights(spec));
            add_check(r, "S1", s12[0], true, s.tol);
            add_check(r, "S2", s12[1], true, s.tol);
        } else {
            auto pt = numeric_point(spec, q.value, s.allow_complex);
            auto L = fundamental_L_numeric(spec, LVariant::Plus, pt);
            auto c = central_elements(L, spec, pt.s);
            central_json(r, "central", c, false, s.tol);
            Complex expect = spec.family == Family::OHat ? pt.roots.plus : -pt.roots.plus;
            add_check(r, "central_scalar", std::abs(c.scalar_value - expect), false, s.tol);
            auto s12 = check_S1_S2(L, rho_weights(spec, pt.s));
            add_check(r, "S1", s12[0], false, s.tol);
            add_check(r, "S2", s12[1], false, s.tol);
        }
    }
    if (all || s.check == "coproduct") {
        if (q.symbolic) {
            auto dL = coproduct(fundamental_L(spec, LVariant::Plus));
            auto c = central_elements(dL, spec);
            central_json(r, "coproduct", c, true, s.tol);
            LambdaExt l = spec.lambda();
            add_check(r, "coproduct_scalar", (c.scalar_value - l * l).is_zero() ? 0.0 : 1.0, true, s.tol);
        } else {
            auto pt = numeric_point(spec, q.value, s.allow_complex);
            auto dL = coproduct(fundamental_L_numeric(spec, LVariant::Plus, pt));
            auto c = central_elements(dL, spec, pt.s);
            central_json(r, "coproduct", c, false, s.tol);
            Complex l = pt.roots.plus;
            add_check(r, "coproduct_scalar", std::abs(c.scalar_value - l * l), false, s.tol);
            add_check(r, "coproduct_rll", check_RLL(braid_matrix_numeric(spec, 1, pt).m, dL, dL), false, s.tol);
        }
    }
    if (s.check == "conjugate" || (all && !q.symbolic)) {
        if (spec.family != Family::OHat || spec.N != 3) {
            if (!all) throw Error(ErrorKind::UnsupportedSpec, "the conjugation analysis is for ohat(3)");
        } else {
            auto c = conjugate_sumLii(spec, numeric_q(q, "--check conjugate"));
            add_check(r, "conjugator_orthogonality", c.orthogonality, false, s.tol);
            add_check(r, "conjugated_diagonal", c.diagonal, false, s.tol);
            for (int i = 0; i < 3; ++i) {
                add_check(r, "blocks_" + std::to_string(i + 1), c.blocks[static_cast<std::size_t>(i)], false, s.tol);
                add_check(r, "block_pattern_" + std::to_string(i + 1), c.block_diagonal[static_cast<std::size_t>(i)], false,
                          s.tol);
            }
            const char* nil[] = {"alpha1_sq", "alpha3_sq", "beta1_sq", "beta3_sq"};
            for (std::size_t k = 0; k < 4; ++k) add_check(r, nil[k], c.nilpotent[k], false, s.tol);
            Json ev = Json::array();
            for (auto z : c.eigen_over_lambda) ev.push_back(to_json(z));
            r.body["eigen_over_lambda"] = ev;
            r.body["offdiag_outside_min"] = c.offdiag_outside_min;
            r.body["offdiag_inside_max"] = c.offdiag_inside_max;
        }
    }
    return r;
}

Report cmd_invariant(const Settings& s, const QValue& q) {
    auto spec = spec_of(s);
    auto e = enhancement(spec);
    auto w = BraidWord::parse(s.braid, s.strands);
    Report r;
    r.body["word"] = to_json(w);
    if (q.symbolic) {
        if (s.skein || s.markov) throw Error(ErrorKind::Usage, "--skein and --markov need a numeric --q");
        r.body["value"] = to_json(link_invariant_exact(e, w, s.cap));
        r.body["trace"] = to_json(weighted_trace(e, w, s.cap));
        return r;
    }
    auto v = link_invariant(e, w, q.value, s.allow_complex, s.cap);
    r.body["value"] = to_json(v.value);
    r.body["trace"] = to_json(v.trace);
    r.body["a"] = to_json(v.a);
    if (s.skein) {
        auto it = std::find_if(w.letters.begin(), w.letters.end(), [](int x) { return x != 0; });
        if (it == w.letters.end()) throw Error(ErrorKind::Usage, "--skein needs a nonempty word");
        auto at = static_cast<std::size_t>(it - w.letters.begin());
        BraidWord plus = w, minus = w, zero = w;
        plus.letters[at] = std::abs(*it);
        minus.letters[at] = -std::abs(*it);
        zero.letters.erase(zero.letters.begin() + static_cast<std::ptrdiff_t>(at));
        auto k = check_skein(e, plus, minus, zero, q.value, s.allow_complex, s.cap);
        r.body["skein"] = {{"plus", plus.to_string()}, {"minus", minus.to_string()}, {"zero", zero.to_string()},
                           {"P_plus", to_json(k.plus)}, {"P_minus", to_json(k.minus)}, {"P_zero", to_json(k.zero)},
                           {"printed_form", k.printed}, {"bare_trace_swapped", k.printed_unnormalized_swapped}};
        add_check(r, "skein", k.consistent, false, s.tol);
    }
    if (s.markov) {
        auto m = check_markov(e, w, q.value, s.seed, s.trials, s.allow_complex, s.cap);
        add_check(r, "markov_conjugation", m.conjugation, false, s.tol);
        add_check(r, "markov_stabilize_plus", m.stabilize_plus, false, s.tol);
        add_check(r, "markov_stabilize_minus", m.stabilize_minus, false, s.tol);
    }
    return r;
}

double coord_scale(const CoordSet& c) {
    double sc = 1.0;
    for (const auto& m : c.x) sc = std::max(sc, m.max_norm() * m.max_norm());
    return sc;
}

Report cmd_tower(const Settings& s, const QValue& q) {
    Complex q0 = numeric_q(q, "tower");
    if (s.levels < 0) throw Error(ErrorKind::Usage, "--levels must be >= 0");
    if (s.lambda != "plus" && s.lambda != "minus") throw Error(ErrorKind::Usage, "--lambda must be plus or minus");
    Report r;
    Json levels = Json::array();
    auto level_json = [&](const CoordSet& c, Json extra) {
        extra["level"] = c.level;
        extra["dim"] = c.dim();
        if (s.matrices) {
            Json xs = Json::array();
            for (const auto& m : c.x) xs.push_back(matrix_json(m));
            extra["coords"] = xs;
        }
        levels.push_back(extra);
    };
    if (s.model == "soq3") {
        if (s.convention != "printed" && s.convention != "consistent")
            throw Error(ErrorKind::Usage, "--convention must be printed or consistent");
        auto conv = s.convention == "printed" ? SoqConvention::Printed : SoqConvention::Consistent;
        CoordSet c;
        for (double v : {s.a, 0.0, -s.b}) {
            Matrix<Complex> m(1, 1);
            m(0, 0) = v;
            c.x.push_back(m);
        }
        r.body["model"] = "soq3";
        r.body["convention"] = s.convention;
        for (int k = 0;; ++k) {
            auto rel = soq3_relations(c, q0, conv);
            double worst = std::max({rel[0], rel[1], rel[2]}) / coord_scale(c);
            level_json(c, {{"relations", rel}, {"relative", worst}});
            if (worst > s.tol) r.ok = false;
            if (k == s.levels || !r.ok) break;
            c = soq3_tower_step(c, q0, conv, s.tol);
        }
        r.body["levels"] = levels;
        return r;
    }
    if (s.model != "family") throw Error(ErrorKind::Usage, "--model must be family or soq3");
    auto spec = spec_of(s);
    CoordSet c;
    if (spec.N == 3 && s.base.empty()) {
        if (std::abs(q0.imag()) > 0.0) throw Error(ErrorKind::NegativeParameter, "the cone needs real q0 > 0");
        c = base_cone_solution(s.a, s.b, s.cone_sign, q0.real(), s.mirrored);
    } else {
        if (s.base.size() != static_cast<std::size_t>(spec.N - 1))
            throw Error(ErrorKind::Usage, "--base needs N - 1 = " + std::to_string(spec.N - 1) + " values");
        c = base_solution(spec, std::vector<Complex>(s.base.begin(), s.base.end()), q0);
    }
    auto br = s.lambda == "plus" ? Branch::Plus : Branch::Minus;
    r.body["model"] = "family";
    r.body["lambda"] = s.lambda;
    for (int k = 0;; ++k) {
        double rel = check_coordinate_relation(spec, c, q0) / coord_scale(c);
        double rows = check_all_rows(spec, c, q0) / coord_scale(c);
        Json j = {{"relation", rel}, {"all_rows", rows}};
        if (c.level > 0) {
            bool shape = true;
            double det = 0.0;
            for (const auto& m : c.x) {
                shape = shape && one_row_one_column(m, static_cast<std::size_t>(spec.N));
                det = std::max(det, abs_determinant(m));
            }
            j["one_row_one_column"] = shape;
            j["max_abs_det"] = det;
            if (!shape || det > 1e-10) r.ok = false;
        }
        if (rel > s.tol || rows > s.tol) r.ok = false;
        level_json(c, j);
        if (k == s.levels) break;
        c = tower_step(spec, c, br, q0, s.allow_complex);
    }
    r.body["levels"] = levels;
    return r;
}

Report cmd_spectrum(const Settings& s, const QValue& q) {
    auto spec = spec_of(s);
    if (s.sign != 1 && s.sign != -1) throw Error(ErrorKind::Usage, "--sign must be 1 or -1");
    Complex q0 = numeric_q(q, "spectrum");
    auto pt = numeric_point(spec, q0, s.allow_complex);
    auto ev = spectrum(spec, q0, s.sign, s.allow_complex);
    Complex e2 = pt.exp_eta() * pt.exp_eta();
    Complex special = s.sign == 1 ? -1.0 / e2 : -e2;
    std::vector<Complex> expect(ev.size(), 1.0);
    expect[0] = special;
    std::vector<bool> used(ev.size(), false);
    double worst = 0.0;
    for (Complex x : expect) {
        std::size_t best = 0;
        double d = INFINITY;
        for (std::size_t k = 0; k < ev.size(); ++k)
            if (!used[k] && std::abs(ev[k] - x) < d) {
                d = std::abs(ev[k] - x);
                best = k;
            }
        used[best] = true;
        worst = std::max(worst, d);
    }
    Report r;
    r.body["point"] = point_json(pt);
    Json list = Json::array();
    for (auto z : ev) list.push_back(to_json(z));
    r.body["eigenvalues"] = list;
    r.body["expected_special"] = to_json(special);
    r.body["expected_unit_multiplicity"] = ev.size() - 1;
    add_check(r, "spectrum", worst, false, s.tol);
    return r;
}

void render(const Json& j, const std::string& path, std::ostringstream& os) {
    auto key = [&](const std::string& k) { return path.empty() ? k : path + "." + k; };
    if (j.is_object()) {
        if (j.contains("backend") && j.contains("entries")) {
            os << path << ": <" << j["backend"].get<std::string>() << " matrix " << j["dim"] << "x" << j["dim"] << ">\n";
            return;
        }
        for (const auto& [k, v] : j.items()) render(v, key(k), os);
        return;
    }
    if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        std::size_t i = 0;
        for (const auto& v : j) render(v, path + "[" + std::to_string(i++) + "]", os);
        return;
    }
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void add_common(CLI::App* c, Settings& s) {
    c->add_option("--family", s.family, "ohat or phat")->capture_default_str();
    c->add_option("--dim", s.dim, "N")->capture_default_str();
    c->add_option("--q", s.q, "number, a/b, re,im, rootofunity:k or symbolic")->capture_default_str();
    c->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    c->add_option("--output", s.output, "write the report here instead of stdout");
    c->add_option("--tol", s.tol, "residual tolerance")->envname("QBRAID_TOL")->capture_default_str();
    c->add_option("--seed", s.seed, "seed for randomized checks")->capture_default_str();
    c->add_option("--cap", s.cap, "largest matrix dimension N^m")->capture_default_str();
    c->add_flag("--allow-complex-eta", s.allow_complex, "accept q0 with complex eta");
}

} // namespace

QValue parse_q(const std::string& raw) {
    QValue q;
    q.text = raw;
    std::string t = raw;
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty()) throw Error(ErrorKind::Usage, "empty q");
    if (t == "symbolic") {
        q.symbolic = true;
        return q;
    }
    const std::string rou = "rootofunity:";
    if (t.rfind(rou, 0) == 0) {
        double k = parse_double(t.substr(rou.size()));
        if (k < 1 || std::floor(k) != k) throw Error(ErrorKind::Usage, "rootofunity needs a positive integer k");
        q.value = std::polar(1.0, 2.0 * pi / k);
        return q;
    }
    if (auto comma = t.find(','); comma != std::string::npos) {
        q.value = {parse_double(t.substr(0, comma)), parse_double(t.substr(comma + 1))};
    } else if (auto slash = t.find('/'); slash != std::string::npos) {
        double den = parse_double(t.substr(slash + 1));
        if (den == 0.0) throw Error(ErrorKind::Usage, "zero denominator in q");
        q.value = parse_double(t.substr(0, slash)) / den;
    } else {
        q.value = parse_double(t);
    }
    if (q.value == Complex(0.0)) throw Error(ErrorKind::ZeroBase, "q0 = 0");
    return q;
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qbraid: braid matrices from rank-one projectors, L-algebras, link invariants, coordinate towers"};
    app.set_config("--config", "", "TOML/INI file; section per subcommand, flags override");
    app.require_subcommand(1);
    Settings s;

    auto* gen = app.add_subcommand("gen", "emit P'0 or R^{+-1} (or R(theta) with --theta)");
    add_common(gen, s);
    gen->add_option("--sign", s.sign, "1 or -1")->capture_default_str();
    gen->add_option("--theta", s.theta, "spectral parameter");
    gen->add_option("--matrix", s.matrix, "rhat or projector")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "braid, Hecke, projector and RLL identities");
    add_common(verify, s);

    auto* tri = app.add_subcommand("triangular", "solve R^2 = I for q");
    add_common(tri, s);

    auto* lalg = app.add_subcommand("lalg", "L-operator checks");
    add_common(lalg, s);
    lalg->add_option("--check", s.check, "rll, central, coproduct, conjugate or all")->capture_default_str();

    auto* inv = app.add_subcommand("invariant", "link invariant of a closed braid");
    add_common(inv, s);
    inv->add_option("--braid", s.braid, "signed generator indices, space or comma separated, e.g. \"1 1 -2\"")->required();
    inv->add_option("--strands", s.strands, "number of strands")->capture_default_str();
    inv->add_flag("--skein", s.skein, "skein certificate at the first letter");
    inv->add_flag("--markov", s.markov, "Markov move residuals");
    inv->add_option("--trials", s.trials, "conjugation trials for --markov")->capture_default_str();

    auto* tower = app.add_subcommand("tower", "noncommutative coordinate tower");
    add_common(tower, s);
    tower->add_option("--a", s.a, "cone parameter a >= 0")->capture_default_str();
    tower->add_option("--b", s.b, "cone parameter b >= 0")->capture_default_str();
    tower->add_option("--levels", s.levels, "number of steps")->capture_default_str();
    tower->add_option("--lambda", s.lambda, "plus or minus")->capture_default_str();
    tower->add_option("--cone-sign", s.cone_sign, "sign of x2 on the cone")->capture_default_str();
    tower->add_flag("--mirrored", s.mirrored, "use (-a, x2, b)");
    tower->add_option("--base", s.base, "x_1..x_{N-1} for the base point (x_N is solved)")->delimiter(',');
    tower->add_option("--model", s.model, "family or soq3")->capture_default_str();
    tower->add_option("--convention", s.convention, "soq3 third relation: printed or consistent")->capture_default_str();
    tower->add_flag("!--no-matrices", s.matrices, "omit coordinate matrices");

    auto* spec = app.add_subcommand("spectrum", "eigenvalues of R^{+-1}");
    add_common(spec, s);
    spec->add_option("--sign", s.sign, "1 or -1")->capture_default_str();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    }
    for (auto* sub : app.get_subcommands())
        if (sub->count("--help")) return Ok;

    auto* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    try {
        QValue q = parse_q(s.q);
        Report rep;
        if (name == "gen") rep = cmd_gen(s, q);
        else if (name == "verify") rep = cmd_verify(s, q);
        else if (name == "triangular") rep = cmd_triangular(s);
        else if (name == "lalg") rep = cmd_lalg(s, q);
        else if (name == "invariant") rep = cmd_invariant(s, q);
        else if (name == "tower") rep = cmd_tower(s, q);
        else rep = cmd_spectrum(s, q);

        Json report = {{"schema", "qbraid." + name + "/" + std::to_string(kSchemaVersion)}};
        if (name != "tower" || s.model == "family") report["spec"] = to_json(spec_of(s));
        report["q"] = q.symbolic ? Json("symbolic") : to_json(q.value);
        report["tol"] = s.tol;
        for (auto& [k, v] : rep.body.items()) report[k] = v;
        report["ok"] = rep.ok;

        std::string text = s.format == "json" ? report.dump(2) + "\n" : render_text(report);
        if (s.output.empty()) {
            out << text;
        } else {
            std::ofstream f(s.output, std::ios::binary);
            if (!f) throw Error(ErrorKind::Usage, "cannot write " + s.output);
            f << text;
        }
        return rep.ok ? Ok : VerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Usage ? UsageError : RuntimeError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return RuntimeError;
    }
}

} // namespace qbraid::cli
