#include "json_io.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cstdio>

namespace hms {

namespace {

using nlohmann::json;  // std::map-backed objects: keys iterate sorted

json cplx(Complex z) { return json{{"im", z.imag()}, {"re", z.real()}}; }

Complex parse_cplx(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
        !j["im"].is_number())
        fail(errc::invalid_argument, std::string("expected {\"re\", \"im\"} for ") + what);
    return {j["re"].get<double>(), j["im"].get<double>()};
}

json rat(const oracle::Rat& r) {
    // Oracle quantities stay tiny; a denominator or numerator outside 64 bits
    // would mean the model went somewhere it cannot.
    const oracle::Int lo = std::numeric_limits<long long>::min();
    const oracle::Int hi = std::numeric_limits<long long>::max();
    if (r.numerator() < lo || r.numerator() > hi || r.denominator() > hi)
        fail(errc::internal, "oracle rational out of 64-bit range");
    return json{{"den", static_cast<long long>(r.denominator())},
                {"num", static_cast<long long>(r.numerator())}};
}

void emit(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                emit(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                emit(j[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (v == 0.0) v = 0.0;  // drop the sign of -0
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            break;
        }
        default:
            out += j.dump();
    }
}

std::string canonical(const json& j) {
    std::string out;
    emit(j, out);
    out += '\n';
    return out;
}

json kaehler_json(const KaehlerClass& kc) {
    json c = json::array();
    for (const Complex& ci : kc.c) c.push_back(cplx(ci));
    return json{{"c", c}, {"cbar", cplx(kc.cbar)}, {"k", kc.k}, {"tau", cplx(kc.tau)}};
}

json point_json(const ProjPoint& p) { return json::array({cplx(p.x[0]), cplx(p.x[1]), cplx(p.x[2])}); }

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (const auto& [i, j] : pairs) out.push_back(json::array({i, j}));
    return out;
}

json matrix_json(const SL2ZMatrix& m) {
    return json::array({json::array({m.m[0][0], m.m[0][1]}), json::array({m.m[1][0], m.m[1][1]})});
}

json mirror_json(const MirrorData& m) {
    json p = json::array();
    for (const Complex& pi : m.p) p.push_back(cplx(pi));
    json blown = json::array();
    for (const ProjPoint& b : m.blown_points) blown.push_back(point_json(b));
    return json{{"blown_points", blown},
                {"flags",
                 json{{"commutative", m.commutative},
                      {"degenerate_pairs", pairs_json(m.degenerate_pairs)},
                      {"marginal_pairs", pairs_json(m.marginal_pairs)}}},
                {"l1_divisor_point", cplx(m.l1_divisor)},
                {"l2_divisor_point", cplx(m.l2_divisor)},
                {"p", p},
                {"tau", cplx(m.tau)},
                {"z0", cplx(m.z0)}};
}

json quiver_json(const QuiverAlgebra& q) {
    json objects = json::array({"F0", "F1", "F2"});
    for (int i = 0; i < q.k(); ++i) objects.push_back("O_l" + std::to_string(i));
    json dims = json::object();
    const int n = 3 + q.k();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.hom_dim(i, j) > 0)
                dims[objects[static_cast<size_t>(i)].get<std::string>() + "->" +
                     objects[static_cast<size_t>(j)].get<std::string>()] = q.hom_dim(i, j);

    json mu = json::array();
    for (int w = 0; w < 3; ++w) {
        json plane = json::array();
        for (int v = 0; v < 3; ++v) {
            json row = json::array();
            for (int u = 0; u < 3; ++u) row.push_back(cplx(q.mu.t[w][v][u]));
            plane.push_back(row);
        }
        mu.push_back(plane);
    }

    json pts = json::array();
    for (int i = 0; i < q.k(); ++i) {
        const auto& pd = q.point_data[static_cast<size_t>(i)];
        json vq = json::array();
        json ind = json::array();
        for (int r = 0; r < 2; ++r) {
            json row_q = json::array(), row_i = json::array();
            for (int c = 0; c < 3; ++c) {
                row_q.push_back(cplx(pd.v_quotient[static_cast<size_t>(r)][static_cast<size_t>(c)]));
                row_i.push_back(cplx(pd.induced[static_cast<size_t>(r)][static_cast<size_t>(c)]));
            }
            vq.push_back(row_q);
            ind.push_back(row_i);
        }
        pts.push_back(json{{"induced_composition", ind},
                           {"point", point_json(q.points[static_cast<size_t>(i)])},
                           {"v_quotient", vq},
                           {"w_quotient_form",
                            json::array({cplx(pd.w_quotient[0]), cplx(pd.w_quotient[1]),
                                         cplx(pd.w_quotient[2])})}});
    }
    return json{{"hom_dims", dims},
                {"mu", mu},
                {"objects", objects},
                {"point_objects", pts},
                {"total_dimension", q.total_dimension()}};
}

json composition_json(const CompositionTable& t) {
    json alpha = json::object();
    for (const auto& [key, value] : t.alpha) alpha[key] = cplx(value);
    json beta = json::object();
    for (size_t i = 0; i < t.beta.size(); ++i) {
        const std::string s = std::to_string(i);
        beta["xbar*c" + s] = cplx(t.beta[i].xbar);
        beta["ybar*c" + s] = cplx(t.beta[i].ybar);
        beta["zbar*c" + s] = cplx(t.beta[i].zbar);
    }
    return json{{"alpha", alpha}, {"beta", beta}, {"gauge", json{{"s", 1.0}, {"s_i", 1.0}}}};
}

}  // namespace

void RunConfig::validate() const {
    if (!(tolerance > 0)) fail(errc::invalid_argument, "config: tolerance must be positive");
    if (max_terms < 64) fail(errc::invalid_argument, "config: term cap below 64");
    if (min_window < 1 || min_window > max_terms)
        fail(errc::invalid_argument, "config: bad window floor");
}

KaehlerClass parse_kaehler_class(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::invalid_argument, std::string("invalid Kaehler class: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
        fail(errc::invalid_argument, "invalid Kaehler class: missing integer field \"k\"");
    KaehlerClass kc;
    kc.k = j["k"].get<int>();
    if (!j.contains("tau") || !j.contains("cbar"))
        fail(errc::invalid_argument, "invalid Kaehler class: need \"tau\" and \"cbar\"");
    kc.tau = parse_cplx(j["tau"], "tau");
    kc.cbar = parse_cplx(j["cbar"], "cbar");
    if (j.contains("c")) {
        if (!j["c"].is_array()) fail(errc::invalid_argument, "invalid Kaehler class: \"c\" must be an array");
        for (const auto& e : j["c"]) kc.c.push_back(parse_cplx(e, "c[i]"));
    }
    try {
        kc.validate();
    } catch (const error& e) {
        fail(errc::invalid_argument, std::string("invalid Kaehler class: ") + e.what());
    }
    return kc;
}

std::string certificate_to_json(const Certificate& cert) {
    json checks = json::array();
    for (const CertCheck& c : cert.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"residual", c.residual},
                              {"skipped", c.skipped},
                              {"tol", c.tol}});
    const json doc{{"checks", checks},
                   {"flags",
                    json{{"commutative", cert.commutative},
                         {"degenerate", cert.degenerate},
                         {"degenerate_pairs", pairs_json(cert.degenerate_pairs)},
                         {"marginal", cert.marginal},
                         {"marginal_pairs", pairs_json(cert.marginal_pairs)}}},
                   {"input", kaehler_json(cert.input)},
                   {"pass", cert.pass}};
    return canonical(doc);
}

std::string verify_to_json(const KaehlerClass& kc, const RunConfig& cfg) {
    cfg.validate();
    return certificate_to_json(certify(kc, cfg.tolerance, cfg.limits()));
}

std::string tables_to_json(const KaehlerClass& kc, const std::string& side, const RunConfig& cfg) {
    cfg.validate();
    if (side != "fukaya" && side != "quiver" && side != "both")
        fail(errc::invalid_argument, "side must be one of fukaya, quiver, both");
    json doc = json::object();
    const MirrorData md = mirror_map(kc, cfg.tolerance, cfg.limits());
    doc["mirror"] = mirror_json(md);
    const double series_tol = std::min(1e-10, cfg.tolerance * 1e-2);
    if (side != "quiver") {
        CompositionTable t;
        const QData q = qdata(kc);
        alpha_from_qdata(q, t, series_tol, cfg.limits());
        beta_from_qdata(q, t, series_tol, cfg.limits());
        doc["fukaya"] = composition_json(t);
    }
    if (side != "fukaya") {
        if (!md.degenerate_pairs.empty())
            fail(errc::degenerate, "degenerate class: quiver side not defined");
        const ThetaTriple t0 = vtheta_triple(md.z0, kc.tau, series_tol, cfg.limits());
        const TensorMu mu = mu_from_abc(t0.plus.value, t0.zero.value, t0.minus.value);
        doc["quiver"] = quiver_json(build_quiver(mu, md.blown_points, cfg.tolerance));
    }
    return canonical(doc);
}

std::string monodromy_to_json() {
    const auto classes = vanishing_cycle_classes(1);
    const SL2ZMatrix t0 = dehn_twist_matrix(classes[0]);
    const SL2ZMatrix t1 = dehn_twist_matrix(classes[1]);
    const SL2ZMatrix t2 = dehn_twist_matrix(classes[2]);
    const SL2ZMatrix tf = dehn_twist_matrix(classes[3]);
    const SL2ZMatrix t9 = tf.pow(9);
    const SL2ZMatrix rel = monodromy_relation();
    const H1Class fixed{1, 1};
    const json doc{{"product_tau0_tau1_tau2_tau9", matrix_json(rel)},
                   {"relation_is_identity", rel == SL2ZMatrix::identity()},
                   {"tau", matrix_json(tf)},
                   {"tau0", matrix_json(t0)},
                   {"tau1", matrix_json(t1)},
                   {"tau2", matrix_json(t2)},
                   {"tau9", matrix_json(t9)},
                   {"tau9_fixes", json::array({fixed.a, fixed.b})}};
    return canonical(doc);
}

std::string oracle_to_json(int k, const RunConfig& cfg) {
    cfg.validate();
    const oracle::TorusModel model = oracle::build_model(k, cfg.seed);
    const oracle::OracleReport rep = oracle::verify_chain_relations(model, 8);

    json lines = json::array();
    for (const oracle::Line& l : model.lines())
        lines.push_back(json{{"dir", json::array({l.dir.a, l.dir.b})}, {"offset", rat(l.offset)}});

    json families = json::array();
    auto add_family = [&](oracle::Family f, int point) {
        json tris = json::array();
        for (const auto& t : model.enumerate(f, point, -8, 8))
            tris.push_back(json{{"area", rat(t.area)}, {"n", t.n}});
        json fam{{"family", oracle::family_label(f)}, {"triangles", tris}};
        if (point >= 0) fam["point"] = point;
        families.push_back(fam);
    };
    using oracle::Family;
    for (Family f : {Family::xy, Family::yx, Family::xx, Family::yy, Family::zz, Family::yz,
                     Family::zy, Family::zx, Family::xz})
        add_family(f, -1);
    for (int i = 0; i < model.k(); ++i)
        for (Family f : {Family::xbar, Family::ybar, Family::zbar}) add_family(f, i);

    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"lhs", rat(c.lhs)}, {"name", c.name}, {"ok", c.ok}, {"rhs", rat(c.rhs)}});

    json area_ci = json::array();
    for (int i = 0; i < model.k(); ++i) area_ci.push_back(rat(model.area_Ci(i)));

    const json doc{{"area_C", rat(model.area_C())}, {"area_Ci", area_ci},
                   {"checks", checks},           {"families", families},
                   {"k", model.k()},             {"lines", lines},
                   {"pass", rep.pass},           {"seed", model.seed()}};
    return canonical(doc);
}

std::string degeneracy_to_json(const KaehlerClass& kc, const RunConfig& cfg) {
    cfg.validate();
    json pairs = json::array();
    bool any_deg = false, any_marg = false;
    for (int i = 0; i < kc.k; ++i) {
        for (int j = i + 1; j < kc.k; ++j) {
            const DegeneracyResult d = is_degenerate(kc, i, j, cfg.tolerance);
            any_deg = any_deg || d.degenerate;
            any_marg = any_marg || d.marginal;
            pairs.push_back(json{{"degenerate", d.degenerate},
                                 {"distance", d.distance},
                                 {"i", i},
                                 {"j", j},
                                 {"marginal", d.marginal},
                                 {"witness", json::array({d.witness_m, d.witness_n})}});
        }
    }
    const json doc{{"any_degenerate", any_deg}, {"any_marginal", any_marg}, {"pairs", pairs}};
    return canonical(doc);
}

}  // namespace hms
