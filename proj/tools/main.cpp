// icdof: exact-arithmetic checker for full-DoF injectivity of interference
// channel matrices, with a discrete-entropy engine and inequality suites.

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include "icdof/io.hpp"
#include "icdof/suites.hpp"

namespace {

using namespace icdof;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWitness = 2;

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json report_envelope(const std::string& subcommand) {
    return json{{"schema", 1}, {"timestamp", timestamp_utc()}, {"subcommand", subcommand}};
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty())
        std::cout << report.dump(2) << "\n";
    else
        write_json_atomic(out_path, report);
}

int verdict_exit(const json& report) {
    const std::string v = report.value("verdict", "error");
    if (v == "certificate" || v == "ok" || v == "all-hold" || v == "applicable" ||
        v == "not-applicable")
        return kExitOk;
    if (v == "witness" || v == "violation") return kExitWitness;
    return kExitError;
}

struct CommonArgs {
    std::string matrix_path, rvs_path, out_path;
    long N = 2;
    int d = 0;
    int user = 0;  // 1-based; 0 = all
    std::string epsilon = "1/10";
    std::uint64_t seed = 1;
    int workers = 1;
    std::uint64_t cap = kDefaultEnumCap;
    bool symbolic = false;
};

SearchOptions search_options(const CommonArgs& a) {
    SearchOptions o;
    o.workers = a.workers;
    o.oracle_cap = a.cap;
    return o;
}

RVFamily load_family(const std::string& path) {
    return RVFamily(rv_list_from_json(load_json_file(path)));
}

int cmd_check(const CommonArgs& a, bool oracle) {
    json rep = report_envelope(oracle ? "oracle" : "check");
    ChannelMatrix m = matrix_from_json(load_json_file(a.matrix_path));
    auto zeros = validate_fully_connected(m);
    if (!zeros.empty()) {
        json z = json::array();
        for (auto [i, j] : zeros) z.push_back(json::array({i + 1, j + 1}));
        rep["verdict"] = "error";
        rep["error"] = "matrix is not fully connected";
        rep["zero_positions"] = z;
        emit(rep, a.out_path);
        return kExitError;
    }
    SearchOptions opts = search_options(a);
    rep["N"] = a.N;
    rep["d"] = a.d;
    rep["symbolic"] = a.symbolic;

    std::vector<int> users;
    if (a.user > 0)
        users.push_back(a.user - 1);
    else
        for (int i = 0; i < m.K(); ++i) users.push_back(i);

    json per_user = json::array();
    std::string verdict = "certificate";
    for (int u : users) {
        CheckOutcome out;
        if (oracle) {
            out = brute_force_check(m, u, a.N, a.d, opts);
        } else if (a.symbolic) {
            if (m.K() != 3) {
                rep["verdict"] = "error";
                rep["error"] = "symbolic mode requires K = 3 (canonical form)";
                emit(rep, a.out_path);
                return kExitError;
            }
            out = check_user(canonicalize3(m), u, a.N, a.d, /*symbolic=*/true, opts);
        } else {
            out = check_user(m, u, a.N, a.d, opts);
        }
        per_user.push_back(outcome_to_json(out));
        if (out.is_witness()) {
            verdict = "witness";
            break;  // first witness short-circuits
        }
        if (!out.is_certificate() && verdict == "certificate") verdict = "unknown";
    }
    rep["users"] = per_user;
    rep["verdict"] = verdict;
    if (a.symbolic) rep["canonical"] = canonical_to_json(canonicalize3(m));
    emit(rep, a.out_path);
    return verdict_exit(rep);
}

int cmd_canonicalize(const CommonArgs& a) {
    json rep = report_envelope("canonicalize");
    ChannelMatrix m = matrix_from_json(load_json_file(a.matrix_path));
    CanonicalForm3 cf = canonicalize3(m);
    rep["canonical"] = canonical_to_json(cf);
    rep["verdict"] = "ok";
    emit(rep, a.out_path);
    return kExitOk;
}

int cmd_wset(const CommonArgs& a) {
    json rep = report_envelope("wset");
    ChannelMatrix m = matrix_from_json(load_json_file(a.matrix_path));
    WSetTruncation w = generate_W(a.N, a.d, m.offdiag(), m.K(), a.cap);
    json values = json::array();
    for (const auto& [v, repvec] : w.values) values.push_back(rat_to_string(v));
    rep["N"] = a.N;
    rep["d"] = a.d;
    rep["size"] = values.size();
    rep["values"] = values;
    rep["verdict"] = "ok";
    emit(rep, a.out_path);
    return kExitOk;
}

int cmd_entropy(const CommonArgs& a, const std::string& coeffs_csv) {
    json rep = report_envelope("entropy");
    std::vector<DiscreteRV> rvs = rv_list_from_json(load_json_file(a.rvs_path));
    std::vector<Rat> coeffs;
    if (coeffs_csv.empty()) {
        coeffs.assign(rvs.size(), Rat(1));
    } else {
        std::string tok;
        for (char c : coeffs_csv + ",") {
            if (c == ',') {
                if (!tok.empty()) coeffs.push_back(parse_rat(tok));
                tok.clear();
            } else {
                tok += c;
            }
        }
    }
    DiscreteRV sum = linear_combination(coeffs, rvs);
    ApproxReal h = entropy_bits(sum);
    rep["distribution"] = rv_to_json(sum);
    rep["entropy_bits"] = approx_to_json(h);
    rep["verdict"] = "ok";
    emit(rep, a.out_path);
    std::cout << "H = " << h.value << " bits (abs error <= " << h.abs_error << ")\n";
    return kExitOk;
}

int cmd_ratio(const CommonArgs& a) {
    json rep = report_envelope("ratio");
    ChannelMatrix m = matrix_from_json(load_json_file(a.matrix_path));
    RVFamily family = load_family(a.rvs_path);
    DofRatioReport dr = dof_ratio(m, family);
    rep["dof_ratio"] = dof_ratio_to_json(dr);
    Rat eps = parse_rat(a.epsilon);
    if (eps > 0 && eps < Rat(1, 2))
        rep["balancing"] = balancing_to_json(balancing_report(m, family, eps));
    rep["verdict"] = "ok";
    emit(rep, a.out_path);
    return kExitOk;
}

int cmd_verify(const CommonArgs& a, const std::string& suite, int instances) {
    json rep = report_envelope("verify");
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    json suites = json::array();
    int violations = 0;
    for (const auto& name : names) {
        SuiteReport sr = run_suite(name, instances, a.seed, a.workers);
        violations += sr.violations;
        json checks = json::array();
        for (const auto& c : sr.checks) checks.push_back(inequality_to_json(c));
        json js{{"suite", sr.suite},
                {"seed", sr.seed},
                {"instances", sr.instances},
                {"violations", sr.violations},
                {"checks", checks}};
        if (name == "balancing") js["premise_passing"] = sr.premise_passing;
        suites.push_back(js);
    }
    rep["suites"] = suites;
    rep["violations"] = violations;
    rep["verdict"] = violations == 0 ? "all-hold" : "violation";
    emit(rep, a.out_path);
    return verdict_exit(rep);
}

int cmd_replay(const CommonArgs& a, const std::string& mode, const std::string& a_csv,
               const std::string& b_csv, const std::string& gnum, const std::string& gden) {
    json rep = report_envelope("replay");
    ChannelMatrix m = matrix_from_json(load_json_file(a.matrix_path));
    CanonicalForm3 canon = canonicalize3(m);
    RVFamily family = load_family(a.rvs_path);
    Rat eps = parse_rat(a.epsilon);

    auto parse_ints = [](const std::string& csv) {
        std::vector<Int> out;
        std::string tok;
        for (char c : csv + ",") {
            if (c == ',') {
                if (!tok.empty()) out.emplace_back(tok);
                tok.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                tok += c;
            }
        }
        return out;
    };

    rep["canonical"] = canonical_to_json(canon);
    if (mode == "base") {
        std::vector<Int> av = parse_ints(a_csv), bv = parse_ints(b_csv);
        if (av.size() != 1 || bv.size() != 1)
            throw std::invalid_argument("base mode takes single --a and --b integers");
        InductionTrace tr = replay_base_case(canon, family, av[0], bv[0], eps);
        rep["trace"] = trace_to_json(tr);
        rep["verdict"] = tr.all_unconditional_hold() ? "ok" : "violation";
    } else if (mode == "step") {
        InductionTrace tr =
            replay_induction_step(canon, family, parse_ints(a_csv), parse_ints(b_csv), eps);
        rep["trace"] = trace_to_json(tr);
        rep["verdict"] = tr.all_unconditional_hold() ? "ok" : "violation";
    } else if (mode == "probe") {
        UniPoly pn = poly_from_json(json::parse(gnum));
        UniPoly pd = poly_from_json(json::parse(gden));
        ContradictionProbe probe =
            contradiction_probe(canon, pn, pd, family, a.N, a.d, search_options(a));
        rep["probe"] = probe_to_json(probe);
        rep["verdict"] =
            probe.sandwich_lower.holds && probe.sandwich_upper.holds ? "ok" : "violation";
    } else {
        throw std::invalid_argument("replay mode must be base, step, or probe");
    }
    emit(rep, a.out_path);
    return verdict_exit(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic injectivity checker and entropy-inequality toolkit "
                 "for interference channel matrices"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string suite = "all", coeffs, mode, a_csv = "1", b_csv = "1";
    std::string gnum = "[1]", gden = "[1]";
    int instances = 100;

    auto add_common = [&](CLI::App* sub, bool needs_matrix, bool needs_rvs) {
        auto* mopt = sub->add_option("--matrix", a.matrix_path, "matrix JSON file");
        if (needs_matrix) mopt->required();
        auto* ropt = sub->add_option("--rvs", a.rvs_path, "random-variable JSON file");
        if (needs_rvs) ropt->required();
        sub->add_option("--N", a.N, "coefficient bound N");
        sub->add_option("--d", a.d, "degree bound d");
        sub->add_option("--user", a.user, "1-based user index (default: all users)");
        sub->add_option("--epsilon", a.epsilon, "epsilon in (0,1/2), exact rational");
        sub->add_option("--seed", a.seed, "random seed");
        sub->add_option("--workers", a.workers, "worker threads (deterministic result)");
        sub->add_option("--cap", a.cap, "enumeration cap");
        sub->add_flag("--symbolic", a.symbolic, "symbolic mode (polynomials in h)");
        sub->add_option("--out", a.out_path, "write the JSON report here (atomic)");
    };

    auto* check = app.add_subcommand("check", "decide condition (**) at level (N, d)");
    add_common(check, true, false);
    auto* oracle = app.add_subcommand("oracle", "brute-force pair enumeration oracle");
    add_common(oracle, true, false);
    auto* canon = app.add_subcommand("canonicalize", "reduce a 3x3 matrix to canonical form");
    add_common(canon, true, false);
    auto* wset = app.add_subcommand("wset", "dump the truncated set W_{N,d}");
    add_common(wset, true, false);
    auto* entropy = app.add_subcommand("entropy", "entropy of a linear combination");
    add_common(entropy, false, true);
    entropy->add_option("--coeffs", coeffs, "comma-separated rational coefficients");
    auto* ratio = app.add_subcommand("ratio", "per-user DoF ratios and balancing report");
    add_common(ratio, true, true);
    auto* verify = app.add_subcommand("verify", "randomized inequality suites");
    add_common(verify, false, false);
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--instances", instances, "instances per suite");
    auto* replay = app.add_subcommand("replay", "walk the 3-user proof chain");
    add_common(replay, true, true);
    replay->add_option("mode", mode, "base | step | probe")->required();
    replay->add_option("--a", a_csv, "comma-separated integer coefficients a_0..a_m");
    replay->add_option("--b", b_csv, "comma-separated integer coefficients b_0..b_m");
    replay->add_option("--gnum", gnum, "numerator polynomial of g1, JSON coefficient array");
    replay->add_option("--gden", gden, "denominator polynomial of g1, JSON coefficient array");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(a, false);
        if (oracle->parsed()) return cmd_check(a, true);
        if (canon->parsed()) return cmd_canonicalize(a);
        if (wset->parsed()) return cmd_wset(a);
        if (entropy->parsed()) return cmd_entropy(a, coeffs);
        if (ratio->parsed()) return cmd_ratio(a);
        if (verify->parsed()) return cmd_verify(a, suite, instances);
        if (replay->parsed()) return cmd_replay(a, mode, a_csv, b_csv, gnum, gden);
    } catch (const std::exception& e) {
        json rep = report_envelope("error");
        rep["verdict"] = "error";
        rep["error"] = e.what();
        std::cerr << rep.dump(2) << "\n";
        if (!a.out_path.empty()) {
            try {
                write_json_atomic(a.out_path, rep);
            } catch (...) {
            }
        }
        return kExitError;
    }
    return kExitError;
}
