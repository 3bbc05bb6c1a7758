#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "wcauchy/approx.hpp"
#include "wcauchy/errors.hpp"
#include "wcauchy/parse.hpp"
#include "wcauchy/random.hpp"
#include "wcauchy/transform.hpp"

namespace wcauchy::cli {

namespace {

json cjson(cplx z) { return complex_json(z.real(), z.imag()); }

std::string cstr(cplx z) {
    if (z.imag() == 0.0) return num(z.real());
    return num(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

std::string yes(bool b) { return b ? "true" : "false"; }

json base_config(const RunConfig& cfg) {
    json j{{"weight", cfg.weight}, {"map", cfg.map}};
    if (!cfg.series.empty()) j["series"] = cfg.series;
    if (cfg.random_degree) j["random_degree"] = *cfg.random_degree;
    if (cfg.tol) j["tol"] = *cfg.tol;
    return j;
}

Report start(const std::string& command, const RunConfig& cfg) {
    Report r;
    r.command = command;
    r.seed = cfg.seed;
    r.config = base_config(cfg);
    return r;
}

/// Series from --random or --series; --pullback maps g on G to h1.
TaylorSeries input_series(const RunConfig& cfg, const ConformalMap& map) {
    TaylorSeries s;
    if (cfg.random_degree) {
        Rng rng(cfg.seed);
        s = random_series(rng, *cfg.random_degree);
    } else if (!cfg.series.empty()) {
        s = parse::series(cfg.series);
    } else {
        throw PreconditionError("a series is required (--series or --random)");
    }
    return cfg.pullback ? map.pullback(s) : s;
}

std::vector<cplx> coefficient_list(const RunConfig& cfg) {
    if (cfg.random_degree) {
        Rng rng(cfg.seed);
        std::vector<cplx> b(*cfg.random_degree);
        for (auto& x : b) x = rng.complex_in_square();
        return b;
    }
    if (cfg.series.empty()) throw PreconditionError("a series is required (--series or --random)");
    const auto s = parse::series(cfg.series);
    return {s.coefficients().begin(), s.coefficients().end()};
}

json series_json(std::span<const cplx> c) {
    json a = json::array();
    for (const auto& z : c) a.push_back(cjson(z));
    return a;
}

CutoffShape parse_shape(const std::string& s) {
    if (s == "linear") return CutoffShape::linear_ramp;
    if (s == "smooth") return CutoffShape::smoothstep;
    throw PreconditionError("unknown cutoff shape '" + s + "' (linear | smooth)");
}

std::vector<int> parse_n_list(const std::vector<std::string>& items) {
    if (items.empty()) return default_n_list();
    std::vector<int> out;
    for (const auto& s : items) {
        if (s == "inf") {
            out.push_back(CutoffFamily::unbounded);
            continue;
        }
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || n < 2) throw PreconditionError("bad n in --n-list: '" + s + "'");
        out.push_back(n);
    }
    return out;
}

std::string n_str(int n) { return n == CutoffFamily::unbounded ? "inf" : std::to_string(n); }

/// Closed-form ω_k, σ_k for constant and power weights (times the scale).
struct MomentOracle {
    std::optional<double> omega;
    std::optional<double> sigma;  // nullopt also when σ_k diverges
};

MomentOracle moment_oracle(const WeightSpec& w, int k) {
    const double c = w.scale();
    const double a = 2.0 * k + 2.0;
    switch (w.family()) {
    case WeightFamily::constant:
        return {c / (k + 1.0), 1.0 / (c * a)};
    case WeightFamily::power: {
        MomentOracle o;
        if (w.alpha() > -1.0) o.omega = c * 2.0 * std::beta(a, w.alpha() + 1.0);
        if (w.alpha() < 1.0) o.sigma = std::beta(a, 1.0 - w.alpha()) / c;
        return o;
    }
    default:
        return {};
    }
}

}  // namespace

Report run_moments(const RunConfig& cfg) {
    Report rep = start("moments", cfg);
    const double tol = cfg.tol.value_or(1e-8);
    const int kmax = cfg.kmax >= 0 ? cfg.kmax : 10;
    rep.config["kmax"] = kmax;
    MomentSequence ms(parse::weight(cfg.weight));
    rep.table.header = {"k", "omega", "sigma", "M", "rel_error", "pass"};
    for (int k = 0; k <= kmax; ++k) {
        const double om = ms.omega(k);
        const auto sg = ms.sigma(k);
        const auto m = muckenhoupt_ratio(ms, k);
        const auto orc = moment_oracle(ms.weight(), k);

        Record r;
        r.operation = "moments";
        r.inputs = {{"weight", cfg.weight}, {"k", k}};
        r.value = {{"omega", om},
                   {"sigma", sg.divergent ? json(nullptr) : json(sg.value)},
                   {"sigma_divergent", sg.divergent},
                   {"M", m.divergent ? json(nullptr) : json(m.value)}};
        if (orc.omega) {
            double gap = relative_gap(om, *orc.omega);
            r.oracle_value = {{"omega", *orc.omega}, {"sigma", num_or_null(orc.sigma)}};
            if (orc.sigma && !sg.divergent) gap = std::max(gap, relative_gap(sg.value, *orc.sigma));
            // A divergent σ_k must match an oracle that also has none.
            r.pass = gap <= tol && sg.divergent == !orc.sigma;
            r.rel_error = gap;
        }
        rep.table.rows.push_back({std::to_string(k), num(om), sg.divergent ? "divergent" : num(sg.value),
                                  m.divergent ? "divergent" : num(m.value),
                                  r.rel_error ? num(*r.rel_error) : "", yes(r.pass)});
        rep.add(std::move(r));
    }
    return rep;
}

Report run_transform(const RunConfig& cfg) {
    Report rep = start("transform", cfg);
    const double tol = cfg.tol.value_or(1e-6);
    const auto map = parse::map(cfg.map);
    const auto ms = std::make_shared<const MomentSequence>(parse::weight(cfg.weight));
    const BergmanElement e{input_series(cfg, map), ms, map};
    const bool identity = map.kind() == ConformalMap::Kind::identity;
    std::vector<std::string> zetas = cfg.zeta.empty() ? std::vector<std::string>{"2"} : cfg.zeta;
    rep.config["zeta"] = zetas;

    if (identity) {
        const auto img = cauchy_transform_disk(e);
        Record r;
        r.operation = "transform.coefficients";
        r.inputs = {{"series", series_json(e.series.coefficients())}};
        r.value = series_json(img.series.coefficients());
        rep.add(std::move(r));
    }

    rep.table.header = {"zeta", "quadrature", "oracle", "rel_error", "pass"};
    for (const auto& zs : zetas) {
        const cplx zeta = parse::complex_number(zs);
        const cplx q = cauchy_transform_quadrature(e, map, zeta);
        const cplx o = identity ? cauchy_transform_disk(e).series.evaluate_unchecked(zeta)
                                : cauchy_transform_expansion(e, map, zeta);
        Record r;
        r.operation = "transform";
        r.inputs = {{"zeta", cjson(zeta)}};
        r.value = cjson(q);
        r.oracle_value = cjson(o);
        r.rel_error = std::abs(o) > 0 ? std::abs(q - o) / std::abs(o) : std::abs(q - o);
        r.pass = *r.rel_error <= tol;
        rep.table.rows.push_back({cstr(zeta), cstr(q), cstr(o), num(*r.rel_error), yes(r.pass)});
        rep.add(std::move(r));
    }
    return rep;
}

Report run_isometry(const RunConfig& cfg) {
    Report rep = start("isometry", cfg);
    const double tol = cfg.tol.value_or(1e-12);
    const auto ms = std::make_shared<const MomentSequence>(parse::weight(cfg.weight));
    const BergmanElement e{input_series(cfg, ConformalMap::identity()), ms, std::nullopt};
    const double g = bergman_norm_series(e);
    const double k = b21_norm_series(cauchy_transform_disk(e));
    const double q = bergman_norm_quadrature(e, quad::weighted_disk_rule(std::max(e.series.degree(), 0)));

    rep.table.header = {"quantity", "value", "oracle", "rel_error", "pass"};
    auto add = [&](const std::string& op, const std::string& label, double v, double tolerance) {
        Record r;
        r.operation = op;
        r.inputs = {{"degree", e.series.degree()}};
        r.value = v;
        r.oracle_value = g;
        r.rel_error = relative_gap(v, g);
        r.pass = *r.rel_error <= tolerance;
        rep.table.rows.push_back({label, num(v), num(g), num(*r.rel_error), yes(r.pass)});
        rep.add(std::move(r));
    };
    add("isometry.series", "|Kg| (series)", k, tol);
    add("isometry.quadrature", "|g| (quadrature)", q, std::max(tol, 1e-8));
    return rep;
}

Report run_approx(const RunConfig& cfg) {
    Report rep = start("approx", cfg);
    const auto map = parse::map(cfg.map);
    MomentSequence ms(parse::weight(cfg.weight));
    const auto h1 = input_series(cfg, map);
    const auto n_list = parse_n_list(cfg.n_list);
    const double radius = cfg.radius.value_or(2.0 * map.max_modulus());
    const auto shape = parse_shape(cfg.shape);
    rep.config["radius"] = radius;
    rep.config["shape"] = cfg.shape;

    const auto c = convergence_report(h1, ms, map, shape, n_list, radius);
    rep.table.header = {"n", "tail_mass", "sup_dev", "bound", "rho_n", "g_norm", "pass"};
    for (const auto& row : c.rows) {
        Record r;
        r.operation = "approx.convergence";
        r.inputs = {{"n", n_str(row.n)}, {"radius", radius}};
        r.value = {{"sup_dev", row.sup_dev}, {"tail_mass", row.tail_mass}, {"rho_n", row.rho_n},
                   {"g_norm", row.g_norm}};
        r.oracle_value = {{"bound", row.bound}};
        r.pass = row.pass;
        rep.table.rows.push_back({n_str(row.n), num(row.tail_mass), num(row.sup_dev), num(row.bound),
                                  num(row.rho_n), num(row.g_norm), yes(row.pass)});
        rep.add(std::move(r));
    }
    Record mono;
    mono.operation = "approx.monotone";
    mono.inputs = {{"radius", radius}, {"c_k", c.c_k}};
    mono.value = c.monotone;
    mono.pass = c.monotone;
    rep.add(std::move(mono));
    return rep;
}

Report run_check_weight(const RunConfig& cfg) {
    Report rep = start("check-weight", cfg);
    const auto w = parse::weight(cfg.weight);
    const auto map = parse::map(cfg.map);
    const int kmax = cfg.kmax >= 0 ? cfg.kmax : 200;
    rep.config["kmax"] = kmax;
    MomentSequence ms(w);
    rep.table.header = {"check", "verdict", "value", "pass"};

    const auto integ = check_integrability(w, map);
    Record ri;
    ri.operation = "check.integrability";
    ri.inputs = {{"map", cfg.map}};
    ri.value = integ.divergent ? json(nullptr) : json(integ.value);
    ri.pass = !integ.divergent;
    rep.table.rows.push_back({"weighted area", integ.divergent ? "divergent" : "finite",
                              integ.divergent ? "" : num(integ.value), yes(ri.pass)});
    rep.add(std::move(ri));

    const auto bound_rep = check_ratio_bound(ms, kmax);
    Record bound_rec;
    bound_rec.operation = "check.bounded_ratio";
    bound_rec.inputs = {{"kmax", kmax}};
    bound_rec.value = {{"verdict", to_string(bound_rep.verdict)},
                       {"sup", num_or_null(bound_rep.sup)},
                       {"sup_first_decade", num_or_null(bound_rep.sup_first_decade)}};
    bound_rec.pass = bound_rep.verdict == RatioBoundVerdict::bounded_observed;
    const bool ratio_divergent = bound_rep.verdict == RatioBoundVerdict::divergent;
    rep.table.rows.push_back({"sup M_k bounded", to_string(bound_rep.verdict),
                              ratio_divergent ? "" : num(bound_rep.sup), yes(bound_rec.pass)});
    rep.add(std::move(bound_rec));

    const auto floor_rep = check_ratio_floor(ms, kmax);
    Record floor_rec;
    floor_rec.operation = "check.lower_ratio";
    floor_rec.inputs = {{"kmax", kmax}, {"threshold", floor_rep.threshold}};
    floor_rec.value = {{"min", floor_rep.all_finite ? json(floor_rep.min) : json(nullptr)},
                       {"argmin", floor_rep.argmin}};
    floor_rec.pass = floor_rep.pass;
    rep.table.rows.push_back({"M_k >= 1/4", floor_rep.pass ? "pass" : (floor_rep.all_finite ? "fail" : "divergent"),
                              floor_rep.all_finite ? num(floor_rep.min) : "", yes(floor_rec.pass)});
    rep.add(std::move(floor_rec));

    std::vector<double> samples;
    for (int j = 1; j <= 30; ++j) samples.push_back(std::ldexp(1.0, -j));
    const auto v = check_volberg(w, samples);
    Record rv;
    rv.operation = "check.loglog_growth";
    rv.inputs = {{"samples", "2^-1..2^-30"}};
    rv.value = {{"verdict", to_string(v.verdict)}, {"monotone", v.monotone},
                {"integral_growing", v.integral_growing}};
    rv.pass = v.verdict == VolbergVerdict::consistent_with_condition;
    rep.table.rows.push_back({"log log growth", to_string(v.verdict), "", yes(rv.pass)});
    rep.add(std::move(rv));
    return rep;
}

Report run_dirichlet(const RunConfig& cfg) {
    Report rep = start("dirichlet", cfg);
    const double tol = cfg.tol.value_or(1e-6);
    const auto ms = std::make_shared<const MomentSequence>(parse::weight(cfg.weight));
    const auto b = coefficient_list(cfg);
    const int K = static_cast<int>(b.size());
    if (K == 0) throw PreconditionError("dirichlet: empty Laurent window");
    const int kmax = std::max(cfg.kmax >= 0 ? cfg.kmax : 200, K);
    rep.config["kmax"] = kmax;
    const CauchyImage c{LaurentSeries(b), ms};

    rep.table.header = {"quantity", "value", "oracle", "rel_error", "pass"};
    const auto s = dirichlet_norm_series(c);
    const auto q = dirichlet_norm_quadrature(c, dirichlet_rule(K));
    Record rn;
    rn.operation = "dirichlet.norm";
    rn.inputs = {{"window", K}};
    if (s.divergent || q.divergent) {
        rn.value = nullptr;
        rn.pass = false;
        rep.table.rows.push_back({"dirichlet norm", "divergent", "", "", "false"});
    } else {
        rn.value = q.value;
        rn.oracle_value = s.value;
        rn.rel_error = relative_gap(q.value, s.value);
        rn.pass = *rn.rel_error <= tol;
        rep.table.rows.push_back({"dirichlet norm", num(q.value), num(s.value), num(*rn.rel_error), yes(rn.pass)});
    }
    rep.add(std::move(rn));

    const auto bound_rep = check_ratio_bound(*ms, kmax);
    const bool bounded = bound_rep.verdict == RatioBoundVerdict::bounded_observed;
    for (int k = 1; k <= K; ++k) {
        const auto r = per_term_ratio(*ms, k);
        Record rr;
        rr.operation = "dirichlet.per_term_ratio";
        rr.inputs = {{"k", k}, {"upper", bounded ? json(4.0 * bound_rep.sup) : json(nullptr)}};
        rr.value = r.divergent ? json(nullptr) : json(r.value);
        rr.pass = !r.divergent && bounded && r.value >= 1.0 - 1e-9 && r.value <= 4.0 * bound_rep.sup + 1e-9;
        rep.table.rows.push_back({"ratio k=" + std::to_string(k), r.divergent ? "divergent" : num(r.value),
                                  bounded ? "[1, " + num(4.0 * bound_rep.sup) + "]" : "", "", yes(rr.pass)});
        rep.add(std::move(rr));
    }
    return rep;
}

Report run_pair(const RunConfig& cfg) {
    Report rep = start("pair", cfg);
    const auto map = parse::map(cfg.map);
    MomentSequence ms(parse::weight(cfg.weight));
    const auto h1 = input_series(cfg, map);
    const int deg = std::max(h1.degree(), 0);
    int K = std::max(cfg.window, deg + 1);

    BoundaryFunction gamma;
    if (!cfg.boundary.empty()) {
        const auto b = io::from_json(cfg.boundary);
        K = std::max(K, static_cast<int>(b.size()));
        gamma = BoundaryFunction::from_laurent(LaurentSeries(b), K);
        rep.config["boundary"] = cfg.boundary;
    } else {
        const auto n_list = parse_n_list(cfg.n_list);
        const int n = n_list.empty() ? 8 : n_list.front();
        rep.config["n"] = n_str(n);
        rep.config["shape"] = cfg.shape;
        gamma = gamma_n_boundary_window(h1, ms, map, {parse_shape(cfg.shape), n}, K, BoundaryRoute::expansion);
    }
    rep.config["window"] = K;

    const auto cs = check_cs_bound(gamma, h1, ms);
    const cplx f = pairing_functional(gamma, h1);
    Record r;
    r.operation = "pair.cs_bound";
    r.inputs = {{"window", K}, {"degree", h1.degree()}};
    r.value = {{"pairing", cjson(f)}, {"abs", cs.pairing}, {"rho", cs.rho}, {"h_norm", cs.h_norm}};
    r.oracle_value = {{"bound", cs.bound}};
    r.pass = cs.pass;
    rep.table.header = {"pairing", "|pairing|", "rho", "h_norm", "bound", "pass"};
    rep.table.rows.push_back({cstr(f), num(cs.pairing), num(cs.rho), num(cs.h_norm), num(cs.bound), yes(cs.pass)});
    rep.add(std::move(r));
    return rep;
}

}  // namespace wcauchy::cli
