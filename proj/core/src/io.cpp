#include "icdof/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace icdof {

namespace {

Rat rat_field(const json& j, const std::string& where) {
    if (!j.is_string())
        throw std::invalid_argument(where + ": rationals must be strings like \"p/q\"");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

}  // namespace

ChannelMatrix matrix_from_json(const json& j) {
    if (!j.contains("K") || !j["K"].is_number_integer())
        throw std::invalid_argument("matrix file: missing integer field \"K\"");
    const int K = j["K"].get<int>();
    if (!j.contains("entries") || !j["entries"].is_array() ||
        j["entries"].size() != static_cast<size_t>(K))
        throw std::invalid_argument("matrix file: \"entries\" must be a K-row array");
    std::vector<Rat> e;
    for (int i = 0; i < K; ++i) {
        const json& row = j["entries"][i];
        if (!row.is_array() || row.size() != static_cast<size_t>(K))
            throw std::invalid_argument("matrix file: row " + std::to_string(i + 1) +
                                        " must have K entries");
        for (int c = 0; c < K; ++c)
            e.push_back(rat_field(row[c], "matrix entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(c + 1) + ")"));
    }
    return ChannelMatrix(K, std::move(e));
}

json matrix_to_json(const ChannelMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.K(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.K(); ++c) row.push_back(rat_to_string(m.at(i, c)));
        rows.push_back(row);
    }
    return json{{"K", m.K()}, {"entries", rows}};
}

json canonical_to_json(const CanonicalForm3& cf) {
    return json{{"g", json::array({rat_to_string(cf.g[0]), rat_to_string(cf.g[1]),
                                   rat_to_string(cf.g[2])})},
                {"h", rat_to_string(cf.h)},
                {"rows", json::array({rat_to_string(cf.rows[0]), rat_to_string(cf.rows[1]),
                                      rat_to_string(cf.rows[2])})},
                {"cols", json::array({rat_to_string(cf.cols[0]), rat_to_string(cf.cols[1]),
                                      rat_to_string(cf.cols[2])})}};
}

CanonicalForm3 canonical_from_json(const json& j) {
    CanonicalForm3 cf;
    for (int i = 0; i < 3; ++i) {
        cf.g[i] = rat_field(j.at("g").at(i), "canonical g");
        cf.rows[i] = rat_field(j.at("rows").at(i), "canonical rows");
        cf.cols[i] = rat_field(j.at("cols").at(i), "canonical cols");
    }
    cf.h = rat_field(j.at("h"), "canonical h");
    return cf;
}

DiscreteRV rv_from_json(const json& j) {
    if (!j.contains("support") || !j.contains("probs"))
        throw std::invalid_argument("rv file: needs \"support\" and \"probs\" arrays");
    const json& s = j["support"];
    const json& p = j["probs"];
    if (!s.is_array() || !p.is_array() || s.size() != p.size())
        throw std::invalid_argument("rv file: support/probs must be arrays of equal length");
    std::vector<std::pair<Rat, Rat>> pts;
    for (size_t i = 0; i < s.size(); ++i)
        pts.emplace_back(rat_field(s[i], "support[" + std::to_string(i) + "]"),
                         rat_field(p[i], "probs[" + std::to_string(i) + "]"));
    return DiscreteRV::from_points(std::move(pts));
}

json rv_to_json(const DiscreteRV& rv) {
    json s = json::array(), p = json::array();
    for (const auto& [x, q] : rv.points()) {
        s.push_back(rat_to_string(x));
        p.push_back(rat_to_string(q));
    }
    return json{{"support", s}, {"probs", p}};
}

std::vector<DiscreteRV> rv_list_from_json(const json& j) {
    std::vector<DiscreteRV> out;
    if (j.is_array()) {
        for (const auto& e : j) out.push_back(rv_from_json(e));
    } else if (j.is_object() && j.contains("rvs")) {
        for (const auto& e : j["rvs"]) out.push_back(rv_from_json(e));
    } else {
        out.push_back(rv_from_json(j));
    }
    if (out.empty()) throw std::invalid_argument("rv file: no distributions found");
    return out;
}

namespace {
json int_vec(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x);
    return a;
}
}  // namespace

json witness_to_json(const CollisionWitness& w) {
    json j{{"user", w.user + 1},  // reports are 1-based
           {"N", w.N},
           {"d", w.d},
           {"a", int_vec(w.a)},
           {"b", int_vec(w.b)},
           {"w1", int_vec(w.w1)},
           {"w2", int_vec(w.w2)},
           {"w1t", int_vec(w.w1t)},
           {"w2t", int_vec(w.w2t)},
           {"symbolic", w.symbolic}};
    if (w.symbolic) {
        j["af_poly"] = poly_to_json(w.af_poly);
        j["bf_poly"] = poly_to_json(w.bf_poly);
    } else {
        j["af"] = rat_to_string(w.af);
        j["bf"] = rat_to_string(w.bf);
        j["lhs"] = rat_to_string(w.lhs);
        j["rhs"] = rat_to_string(w.rhs);
    }
    return j;
}

json certificate_to_json(const TruncationCertificate& c) {
    return json{{"user", c.user + 1},
                {"N", c.N},
                {"d", c.d},
                {"search_space", c.search_space.get_str()},
                {"verdict", "injective-at-truncation"}};
}

json outcome_to_json(const CheckOutcome& o) {
    switch (o.kind) {
        case CheckOutcome::Kind::Certificate:
            return json{{"kind", "certificate"}, {"certificate", certificate_to_json(*o.certificate)}};
        case CheckOutcome::Kind::Witness:
            return json{{"kind", "witness"}, {"witness", witness_to_json(*o.witness)}};
        default:
            return json{{"kind", "unknown"}, {"reason", o.unknown_reason}};
    }
}

json approx_to_json(const ApproxReal& a) {
    return json{{"value", a.value}, {"abs_error", a.abs_error}};
}

json inequality_to_json(const InequalityReport& r) {
    json j{{"name", r.name},
           {"lhs", approx_to_json(r.lhs)},
           {"rhs", approx_to_json(r.rhs)},
           {"slack", approx_to_json(r.slack)},
           {"holds", r.holds}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json dof_ratio_to_json(const DofRatioReport& r) {
    json ratios = json::array(), sig = json::array(), intf = json::array();
    for (const auto& x : r.ratios) ratios.push_back(approx_to_json(x));
    for (const auto& x : r.signal_entropy) sig.push_back(approx_to_json(x));
    for (const auto& x : r.interference_entropy) intf.push_back(approx_to_json(x));
    return json{{"ratios", ratios},
                {"signal_entropy", sig},
                {"interference_entropy", intf},
                {"max_signal_entropy", approx_to_json(r.max_signal_entropy)},
                {"min_ratio", approx_to_json(r.min_ratio)},
                {"eps_level", approx_to_json(r.eps_level)}};
}

json balancing_to_json(const BalancingReport& r) {
    json checks = json::array();
    for (const auto& c : r.interval_checks) checks.push_back(inequality_to_json(c));
    return json{{"eps", rat_to_string(r.eps)},
                {"applicable", r.applicable},
                {"min_ratio", approx_to_json(r.min_ratio)},
                {"interval_checks", checks},
                {"all_hold", r.all_hold}};
}

json trace_to_json(const InductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json j{{"label", s.label},
               {"kind", s.kind == TraceStep::Kind::UnconditionalInequality
                            ? "unconditional-inequality"
                            : "residual-equality"},
               {"lhs", approx_to_json(s.lhs)},
               {"rhs", approx_to_json(s.rhs)},
               {"residual", approx_to_json(s.residual)},
               {"description", s.description}};
        if (s.verdict) j["holds"] = *s.verdict;
        steps.push_back(j);
    }
    return json{{"steps", steps}, {"all_unconditional_hold", t.all_unconditional_hold()}};
}

json probe_to_json(const ContradictionProbe& p) {
    return json{{"witness", witness_to_json(p.witness)},
                {"ratio", approx_to_json(p.ratio)},
                {"residual_to_two", approx_to_json(p.residual_to_two)},
                {"residual_to_one", approx_to_json(p.residual_to_one)},
                {"eps_level", approx_to_json(p.eps_level)},
                {"sandwich_lower", inequality_to_json(p.sandwich_lower)},
                {"sandwich_upper", inequality_to_json(p.sandwich_upper)}};
}

json poly_to_json(const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

UniPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
    std::vector<Int> c;
    for (const auto& e : j) {
        if (e.is_number_integer())
            c.emplace_back(e.get<long>());
        else if (e.is_string())
            c.emplace_back(e.get<std::string>());
        else
            throw std::invalid_argument("polynomial coefficients must be integers or strings");
    }
    return UniPoly(std::move(c));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_json_atomic(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename report into place: " + path);
}

}  // namespace icdof
