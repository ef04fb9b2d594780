#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "padichl/jsonio.hpp"
#include "padichl/suites.hpp"

using namespace padichl;
using exactnum::Rat;
using exactnum::RatFun;
using nlohmann::json;
using sigcore::Signature;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;

/* Scalar tokens: "a", "a/b", "t", "t^3", "-t^2", "a/b*t^k". */
RatFun parse_scalar(const std::string& token) {
    std::string s = token;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    RatFun coeff(1);
    auto star = s.find('*');
    if (star != std::string::npos) {
        coeff = RatFun(Rat::from_string(s.substr(0, star)));
        s = s.substr(star + 1);
    }
    RatFun out;
    if (!s.empty() && s[0] == 't') {
        long long e = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw std::invalid_argument("bad scalar token: " + token);
            e = std::stoll(s.substr(2));
        }
        out = coeff * RatFun::t_pow(e);
    } else if (!s.empty()) {
        out = coeff * RatFun(Rat::from_string(s));
    } else {
        throw std::invalid_argument("empty scalar token");
    }
    return neg ? -out : out;
}

std::vector<RatFun> parse_scalar_list(const std::string& csv) {
    std::vector<RatFun> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
    return out;
}

std::vector<Signature> parse_chain(const std::string& s) {
    std::vector<Signature> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(jsonio::signature_from_csv(item));
    return out;
}

void emit(const json& payload, const std::string& format) {
    json doc = payload;
    doc["schema"] = 1;
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // csv: tabular views for entry/atom/count collections
    for (const char* key : {"entries", "atoms", "counts"}) {
        if (!payload.contains(key)) continue;
        for (const auto& row : payload[key]) {
            std::string sig;
            for (const auto& part : row[0]) {
                if (!sig.empty()) sig += " ";
                sig += std::to_string(part.get<long long>());
            }
            std::cout << "\"" << sig << "\",";
            if (row[1].is_string())
                std::cout << row[1].get<std::string>();
            else if (row[1].is_number())
                std::cout << row[1].dump();
            else if (row[1].is_object() && row[1].contains("num"))
                std::cout << "\"" << jsonio::ratfun_from_json(row[1]).str() << "\"";
            else
                std::cout << "\"" << row[1].dump() << "\"";
            std::cout << "\n";
        }
        return;
    }
    std::cout << doc.dump(2) << "\n";
}

struct Flags {
    std::string kase;
    std::string mu, nu, lambda, given, target, chain;
    int n = 0, m = 0, k = 0;
    std::string t;            // exact fraction "a/b"
    bool symbolic = false;
    long long p = 0;
    int precision = 8;
    std::optional<long long> nonresidue;
    uint64_t samples = 10000;
    uint64_t seed = 1;
    int threads = 1;
    long long cutoff = 4;
    std::string format = "json";
    std::string tolerance = "1/1000";
    std::string discard_cap = "1/100";
};

Rat t_of(const Flags& f) {
    if (f.symbolic) throw std::invalid_argument("a numeric t is required here");
    if (!f.t.empty()) return Rat::from_string(f.t);
    if (f.p > 0) return Rat(1, f.p);
    throw std::invalid_argument("pass --t a/b or --p prime");
}

lawbook::LawSpec::Case parse_case(const std::string& s) {
    if (s == "alt") return lawbook::LawSpec::Case::Alt;
    if (s == "alt_odd") return lawbook::LawSpec::Case::AltOdd;
    if (s == "alt_even") return lawbook::LawSpec::Case::AltEven;
    if (s == "her") return lawbook::LawSpec::Case::Her;
    throw std::invalid_argument("case must be alt, alt_odd, alt_even or her");
}

lawbook::HaarCase haar_case(lawbook::LawSpec::Case c) {
    switch (c) {
        case lawbook::LawSpec::Case::AltEven: return lawbook::HaarCase::AltEven;
        case lawbook::LawSpec::Case::AltOdd: return lawbook::HaarCase::AltOdd;
        case lawbook::LawSpec::Case::Her: return lawbook::HaarCase::Her;
        default: throw std::invalid_argument("haar/corner_invertible case: alt_even, alt_odd or her");
    }
}

json ratfun_or_value(const RatFun& f, const Flags& flags) {
    if (flags.symbolic) return json{{"value", jsonio::to_json(f)}};
    return json{{"value", f.eval(t_of(flags)).str()}};
}

int cmd_hl(const Flags& flags, const std::string& op, const std::string& kind,
           const std::string& xs_str, const std::string& ys_str, const std::string& x_str,
           const std::string& param_str, bool infinite, int vars_count,
           const std::string& poly_str, const std::string& xtail, const std::string& ytail) {
    RatFun param = param_str.empty() ? RatFun::t() : parse_scalar(param_str);
    if (op == "sym") {
        Signature lam = jsonio::signature_from_csv(flags.lambda);
        int n = flags.n ? flags.n : static_cast<int>(lam.size());
        emit(jsonio::to_json(hlpoly::hl_p_sym(lam, n, param)), flags.format);
        return kExitOk;
    }
    if (op == "gt") {
        Signature lam = jsonio::signature_from_csv(flags.lambda);
        int n = flags.n ? flags.n : static_cast<int>(lam.size());
        emit(jsonio::to_json(hlpoly::hl_p_gt(lam, n, param)), flags.format);
        return kExitOk;
    }
    if (op == "skew") {
        Signature outer = jsonio::signature_from_csv(flags.lambda);
        Signature inner = jsonio::signature_from_csv(flags.mu);
        std::vector<RatFun> xs = parse_scalar_list(xs_str);
        RatFun v = kind == "Q" ? hlpoly::skew_q_eval(outer, inner, xs, param)
                               : hlpoly::skew_p_eval(outer, inner, xs, param);
        emit(json{{"value", jsonio::to_json(v)}}, flags.format);
        return kExitOk;
    }
    if (op == "principal") {
        Signature lam = jsonio::signature_from_csv(flags.lambda);
        RatFun x = parse_scalar(x_str.empty() ? "1" : x_str);
        RatFun v;
        if (kind == "Q") {
            std::optional<long long> J;
            if (!infinite) J = vars_count;
            v = hlpoly::principal_q(lam, x, J, param);
        } else {
            v = hlpoly::principal_p(lam, x, param);
        }
        emit(json{{"value", jsonio::to_json(v)}}, flags.format);
        return kExitOk;
    }
    if (op == "cauchy") {
        hlpoly::Specialization a{parse_scalar_list(xs_str), {}};
        hlpoly::Specialization b{parse_scalar_list(ys_str), {}};
        if (!xtail.empty()) {
            auto parts = parse_scalar_list(xtail);
            if (parts.size() != 2) throw std::invalid_argument("--xtail first,ratio");
            a.tail = hlpoly::GeomTail{parts[0], parts[1]};
        }
        if (!ytail.empty()) {
            auto parts = parse_scalar_list(ytail);
            if (parts.size() != 2) throw std::invalid_argument("--ytail first,ratio");
            b.tail = hlpoly::GeomTail{parts[0], parts[1]};
        }
        if (flags.symbolic || (a.is_finite() && b.is_finite() && flags.t.empty())) {
            if (!a.is_finite() || !b.is_finite())
                throw std::invalid_argument("exact cauchy requires finite specializations");
            emit(json{{"value", jsonio::to_json(hlpoly::cauchy_exact(a.finite, b.finite, param))}},
                 flags.format);
            return kExitOk;
        }
        auto cv = hlpoly::cauchy_numeric(a, b, param, t_of(flags),
                                         Rat::from_string(flags.tolerance));
        emit(json{{"value", cv.value.str()}, {"error_bound", cv.bound.str()}}, flags.format);
        return kExitOk;
    }
    if (op == "expand") {
        json jpoly = json::parse(poly_str);
        hlpoly::LaurentSymPoly f(jpoly.at("nvars").get<int>());
        for (const auto& term : jpoly.at("terms")) {
            std::vector<int> e;
            for (const auto& v : term[0]) e.push_back(v.get<int>());
            f.add_term(e, jsonio::ratfun_from_json(term[1]));
        }
        auto m = hlpoly::expand_in_hl(f, param);
        json entries = json::array();
        for (const auto& [lam, c] : m)
            entries.push_back(json::array({jsonio::to_json(lam), jsonio::to_json(c)}));
        emit(json{{"entries", entries}}, flags.format);
        return kExitOk;
    }
    throw std::invalid_argument("hl: unknown --op");
}

int cmd_coeff(const Flags& flags, const std::string& op) {
    using namespace heckecoeff;
    CoeffCase cc = flags.kase == "std"   ? CoeffCase::Std
                   : flags.kase == "alt" ? CoeffCase::Alt
                                         : CoeffCase::Her;
    if (op == "table") {
        auto table = lr_table(cc, jsonio::signature_from_csv(flags.mu),
                              jsonio::signature_from_csv(flags.nu));
        emit(jsonio::to_json(table), flags.format);
        return kExitOk;
    }
    if (op == "hecke") {
        auto g = hecke_g(cc, jsonio::signature_from_csv(flags.mu),
                         jsonio::signature_from_csv(flags.nu),
                         jsonio::signature_from_csv(flags.lambda));
        emit(json{{"g", jsonio::to_json(RatFun(g.poly))},
                  {"sign_exponent", g.sign_exponent}},
             flags.format);
        return kExitOk;
    }
    if (op == "cosets") {
        emit(json{{"value", jsonio::to_json(coset_count(cc, jsonio::signature_from_csv(flags.mu)))}},
             flags.format);
        return kExitOk;
    }
    if (op == "volume") {
        emit(json{{"value",
                   jsonio::to_json(orbit_volume(cc, jsonio::signature_from_csv(flags.lambda)))}},
             flags.format);
        return kExitOk;
    }
    throw std::invalid_argument("coeff: unknown --op");
}

lawbook::LawSpec build_spec(const Flags& flags, const std::string& family) {
    lawbook::LawSpec spec;
    using Family = lawbook::LawSpec::Family;
    if (family == "product") spec.family = Family::Product;
    else if (family == "corner") spec.family = Family::Corner;
    else if (family == "haar") spec.family = Family::Haar;
    else if (family == "corner_invertible") spec.family = Family::CornerInvertible;
    else if (family == "joint_corners") spec.family = Family::JointCorners;
    else if (family == "joint_product") spec.family = Family::JointProduct;
    else if (family == "invertible") spec.family = Family::Invertible;
    else throw std::invalid_argument("unknown family: " + family);
    spec.kase = parse_case(flags.kase);
    spec.n = flags.n;
    spec.m = flags.m;
    spec.k = flags.k;
    if (!flags.mu.empty()) spec.mu = jsonio::signature_from_csv(flags.mu);
    if (!flags.nu.empty()) spec.nu = jsonio::signature_from_csv(flags.nu);
    if (!flags.given.empty()) spec.given = jsonio::signature_from_csv(flags.given);
    if (!flags.symbolic) spec.t = t_of(flags);
    return spec;
}

int cmd_prob(const Flags& flags, const std::string& family) {
    using namespace lawbook;
    if (family == "product") {
        MatCase mc = flags.kase == "alt" ? MatCase::Alt : MatCase::Her;
        RatFun v = product_prob(mc, jsonio::signature_from_csv(flags.mu),
                                jsonio::signature_from_csv(flags.nu),
                                jsonio::signature_from_csv(flags.lambda));
        emit(ratfun_or_value(v, flags), flags.format);
        return kExitOk;
    }
    if (family == "corner") {
        CornerKind kind = flags.kase == "alt_odd"    ? CornerKind::AltOddToEven
                          : flags.kase == "alt_even" ? CornerKind::AltEvenToOdd
                                                     : CornerKind::Her;
        RatFun v = corner_prob(kind, jsonio::signature_from_csv(flags.given),
                               jsonio::signature_from_csv(flags.target));
        emit(ratfun_or_value(v, flags), flags.format);
        return kExitOk;
    }
    if (family == "haar") {
        RatFun v = haar_sn_prob(haar_case(parse_case(flags.kase)), flags.n,
                                jsonio::signature_from_csv(flags.lambda));
        emit(ratfun_or_value(v, flags), flags.format);
        return kExitOk;
    }
    if (family == "corner_invertible") {
        RatFun v = corner_invertible_prob(haar_case(parse_case(flags.kase)), flags.n,
                                          flags.m, jsonio::signature_from_csv(flags.lambda));
        emit(ratfun_or_value(v, flags), flags.format);
        return kExitOk;
    }
    if (family == "invertible") {
        MatCase mc = flags.kase == "alt" ? MatCase::Alt : MatCase::Her;
        if (flags.symbolic) {
            emit(json{{"value", jsonio::to_json(invertible_prob_symbolic(mc, flags.n))}},
                 flags.format);
        } else {
            Rat q = flags.p > 0 ? Rat(flags.p) : t_of(flags).inverse();
            emit(json{{"value", invertible_prob(mc, flags.n, q).str()}}, flags.format);
        }
        return kExitOk;
    }
    if (family == "joint_corners" || family == "joint_product") {
        JointFamily jf =
            family == "joint_corners" ? JointFamily::Corners : JointFamily::Product;
        MatCase mc = flags.kase == "her" ? MatCase::Her : MatCase::Alt;
        auto chain = parse_chain(flags.chain);
        if (flags.symbolic) {
            emit(json{{"value", jsonio::to_json(joint_weight(jf, mc, chain))}}, flags.format);
        } else {
            emit(json{{"value", joint_weight_at(jf, mc, chain, t_of(flags)).str()}},
                 flags.format);
        }
        return kExitOk;
    }
    throw std::invalid_argument("prob: unknown family");
}

int cmd_dist(const Flags& flags, const std::string& family) {
    auto spec = build_spec(flags, family);
    auto dist = lawbook::exact_distribution(spec, flags.cutoff);
    emit(jsonio::to_json(dist), flags.format);
    return kExitOk;
}

int cmd_simulate(const Flags& flags, const std::string& family) {
    auto spec = build_spec(flags, family);
    if (spec.family == lawbook::LawSpec::Family::JointCorners ||
        spec.family == lawbook::LawSpec::Family::JointProduct) {
        auto chains = veristat::run_joint_experiment(spec, flags.samples, flags.seed,
                                                     flags.threads, flags.precision,
                                                     flags.nonresidue);
        json counts = json::array();
        for (const auto& [chain, c] : chains) {
            json key = json::array();
            for (const auto& s : chain) key.push_back(jsonio::to_json(s));
            counts.push_back(json::array({key, c}));
        }
        emit(json{{"chain_counts", counts}, {"samples", flags.samples}}, flags.format);
        return kExitOk;
    }
    auto h = veristat::run_experiment(spec, flags.samples, flags.seed, flags.threads,
                                      flags.precision, flags.cutoff, flags.nonresidue);
    emit(jsonio::to_json(h), flags.format);
    return kExitOk;
}

int cmd_verify(const Flags& flags, const std::string& family, const std::string& suite) {
    if (!suite.empty()) {
        auto res = veristat::run_suite(suite);
        json lines = json::array();
        for (const auto& l : res.lines) lines.push_back(l);
        emit(json{{"suite", res.name}, {"pass", res.pass}, {"detail", lines}}, flags.format);
        return res.pass ? kExitOk : kExitVerifyFail;
    }
    auto spec = build_spec(flags, family);
    auto h = veristat::run_experiment(spec, flags.samples, flags.seed, flags.threads,
                                      flags.precision, flags.cutoff, flags.nonresidue);
    auto ref = lawbook::exact_distribution(spec, flags.cutoff);
    auto rep = veristat::compare(h, ref, Rat::from_string(flags.tolerance).to_double(),
                                 Rat::from_string(flags.discard_cap).to_double());
    emit(jsonio::to_json(rep), flags.format);
    return rep.pass ? kExitOk : kExitVerifyFail;
}

int cmd_oracle(const Flags& flags, const std::string& kind) {
    using lawbook::MatCase;
    if (kind == "invertible") {
        MatCase mc = flags.kase == "alt" ? MatCase::Alt : MatCase::Her;
        auto frac = veristat::brute_invertible_fraction(mc, flags.n, flags.p);
        emit(json{{"value", frac.str()}}, flags.format);
        return kExitOk;
    }
    if (kind == "cosets") {
        auto mu = jsonio::signature_from_csv(flags.mu);
        uint64_t c = veristat::brute_coset_count(mu, flags.n, flags.p);
        emit(json{{"value", c}}, flags.format);
        return kExitOk;
    }
    if (kind == "corank") {
        MatCase mc = flags.kase == "alt" ? MatCase::Alt : MatCase::Her;
        auto dist = veristat::brute_corank_distribution(mc, flags.n, flags.p);
        json counts = json::array();
        for (const auto& [corank, c] : dist) counts.push_back(json::array({corank, c}));
        emit(json{{"corank_counts", counts}}, flags.format);
        return kExitOk;
    }
    throw std::invalid_argument("oracle: unknown --kind");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hall-Littlewood laws and p-adic matrix experiments"};
    app.require_subcommand(1);

    Flags flags;
    std::string op, kind, family, suite, xs_str, ys_str, x_str, param_str, poly_str;
    std::string xtail, ytail;
    bool infinite = false;
    int vars_count = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--case", flags.kase, "alt | alt_odd | alt_even | her | std");
        sub->add_option("--mu", flags.mu, "signature, comma separated");
        sub->add_option("--nu", flags.nu, "signature");
        sub->add_option("--lambda", flags.lambda, "signature");
        sub->add_option("--given", flags.given, "conditioning signature");
        sub->add_option("--target", flags.target, "target signature");
        sub->add_option("--chain", flags.chain, "semicolon-separated signatures");
        sub->add_option("--n", flags.n, "primary dimension");
        sub->add_option("--m", flags.m, "ambient dimension");
        sub->add_option("--k", flags.k, "chain length");
        auto* topt = sub->add_option("--t", flags.t, "exact parameter, e.g. 1/3");
        auto* sym = sub->add_flag("--symbolic", flags.symbolic, "symbolic output in t");
        sym->excludes(topt);
        topt->excludes(sym);
        sub->add_option("--p", flags.p, "odd prime (t = 1/p)");
        sub->add_option("--precision", flags.precision, "exponent K of p^K");
        sub->add_option("--nonresidue", [&flags](const std::vector<std::string>& v) {
            flags.nonresidue = std::stoll(v[0]);
            return true;
        }, "quadratic non-residue mod p");
        sub->add_option("--samples", flags.samples, "Monte Carlo sample count");
        sub->add_option("--seed", flags.seed, "rng seed");
        sub->add_option("--threads", flags.threads, "worker count")
            ->envname("PADIC_HL_THREADS");
        sub->add_option("--cutoff", flags.cutoff, "support cutoff on the leading part");
        sub->add_option("--format", flags.format, "json | csv");
        sub->add_option("--tolerance", flags.tolerance,
                        "numeric tolerance / chi-square p-threshold (exact fraction)");
        sub->add_option("--discard-cap", flags.discard_cap, "discard fraction cap");
    };

    CLI::App* hl = app.add_subcommand("hl", "Hall-Littlewood polynomials and kernels");
    add_common(hl);
    hl->add_option("--op", op, "sym | gt | skew | principal | cauchy | expand")->required();
    hl->add_option("--kind", kind, "P | Q");
    hl->add_option("--vars", xs_str, "comma-separated scalar tokens");
    hl->add_option("--ys", ys_str, "second variable list (cauchy)");
    hl->add_option("--x", x_str, "principal start value");
    hl->add_option("--param", param_str, "Hall-Littlewood parameter token (default t)");
    hl->add_flag("--infinite", infinite, "infinite principal Q");
    hl->add_option("--vars-count", vars_count, "number of principal Q variables");
    hl->add_option("--poly", poly_str, "LaurentSymPoly JSON for expand");
    hl->add_option("--xtail", xtail, "first,ratio geometric tail for the x side");
    hl->add_option("--ytail", ytail, "first,ratio geometric tail for the y side");

    CLI::App* coeff = app.add_subcommand("coeff", "structure coefficients and volumes");
    add_common(coeff);
    coeff->add_option("--op", op, "table | hecke | cosets | volume")->required();

    CLI::App* prob = app.add_subcommand("prob", "single law values");
    add_common(prob);
    prob->add_option("--family", family,
                     "product | corner | haar | corner_invertible | invertible | "
                     "joint_corners | joint_product")
        ->required();

    CLI::App* dist = app.add_subcommand("dist", "exact distributions with tails");
    add_common(dist);
    dist->add_option("--family", family, "product | corner | haar | corner_invertible")
        ->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo histograms");
    add_common(simulate);
    simulate->add_option("--family", family, "experiment family")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "statistical or deterministic verification");
    add_common(verify);
    verify->add_option("--family", family, "Monte Carlo family to verify");
    verify->add_option("--suite", suite,
                       "engine | hecke | normalization | corner-tables | "
                       "marginalization | reproducibility");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive brute-force counts");
    add_common(oracle);
    oracle->add_option("--kind", kind, "invertible | cosets | corank")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hl->parsed())
            return cmd_hl(flags, op, kind, xs_str, ys_str, x_str, param_str, infinite,
                          vars_count, poly_str, xtail, ytail);
        if (coeff->parsed()) return cmd_coeff(flags, op);
        if (prob->parsed()) return cmd_prob(flags, family);
        if (dist->parsed()) return cmd_dist(flags, family);
        if (simulate->parsed()) return cmd_simulate(flags, family);
        if (verify->parsed()) return cmd_verify(flags, family, suite);
        if (oracle->parsed()) return cmd_oracle(flags, kind);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
