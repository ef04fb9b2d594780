#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padichl/jsonio.hpp"
#include "padichl/suites.hpp"

namespace py = pybind11;
using namespace padichl;
using exactnum::Rat;
using exactnum::RatFun;
using sigcore::Signature;

namespace {

Signature sig_of(const std::vector<long long>& parts) {
    return Signature(std::vector<long long>(parts));
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

RatFun param_token(const std::string& tok) {
    if (tok == "t") return RatFun::t();
    if (tok == "t2") return RatFun::t() * RatFun::t();
    if (tok == "-t" || tok == "mt") return -RatFun::t();
    throw std::invalid_argument("parameter token must be t, t2 or -t");
}

lawbook::LawSpec spec_of(const std::string& family, const std::string& kase, int n, int m,
                         const std::vector<long long>& mu,
                         const std::vector<long long>& nu,
                         const std::vector<long long>& given, const std::string& t) {
    lawbook::LawSpec spec;
    using Family = lawbook::LawSpec::Family;
    if (family == "product") spec.family = Family::Product;
    else if (family == "corner") spec.family = Family::Corner;
    else if (family == "haar") spec.family = Family::Haar;
    else if (family == "corner_invertible") spec.family = Family::CornerInvertible;
    else throw std::invalid_argument("unknown family");
    if (kase == "alt") spec.kase = lawbook::LawSpec::Case::Alt;
    else if (kase == "alt_odd") spec.kase = lawbook::LawSpec::Case::AltOdd;
    else if (kase == "alt_even") spec.kase = lawbook::LawSpec::Case::AltEven;
    else if (kase == "her") spec.kase = lawbook::LawSpec::Case::Her;
    else throw std::invalid_argument("unknown case");
    spec.n = n;
    spec.m = m;
    spec.mu = sig_of(mu);
    spec.nu = sig_of(nu);
    spec.given = sig_of(given);
    spec.t = Rat::from_string(t);
    return spec;
}

}  // namespace

PYBIND11_MODULE(_padichl, mod) {
    mod.doc() = "exact Hall-Littlewood laws for p-adic alternating and Hermitian matrices";

    mod.def("signature_stats", [](const std::vector<long long>& parts) {
        auto st = sigcore::stats(sig_of(parts));
        py::dict d;
        d["size"] = st.size;
        d["weighted"] = st.weighted;
        d["length"] = st.length;
        py::dict mults;
        for (const auto& [k, v] : st.mults) mults[py::int_(k)] = v;
        d["mults"] = mults;
        return d;
    });

    mod.def("interlace", [](const std::string& kind, const std::vector<long long>& inner,
                            const std::vector<long long>& outer) {
        return sigcore::interlace(kind == "P" ? sigcore::InterlaceKind::P
                                              : sigcore::InterlaceKind::Q,
                                  sig_of(inner), sig_of(outer));
    });

    mod.def("enumerate_signatures",
            [](size_t n, long long low, long long high, std::optional<long long> size) {
                std::vector<std::vector<long long>> out;
                for (const auto& s : sigcore::enumerate_signatures(n, low, high, size))
                    out.push_back(s.parts());
                return out;
            },
            py::arg("n"), py::arg("low"), py::arg("high"), py::arg("size") = std::nullopt);

    mod.def("hl_p", [](const std::vector<long long>& lam, int n, const std::string& param) {
        return dump(jsonio::to_json(hlpoly::hl_p_sym(sig_of(lam), n, param_token(param))));
    }, py::arg("lam"), py::arg("n"), py::arg("param") = "t");

    mod.def("lr_table", [](const std::string& kase, const std::vector<long long>& mu,
                           const std::vector<long long>& nu) {
        auto cc = kase == "std"   ? heckecoeff::CoeffCase::Std
                  : kase == "alt" ? heckecoeff::CoeffCase::Alt
                                  : heckecoeff::CoeffCase::Her;
        return dump(jsonio::to_json(heckecoeff::lr_table(cc, sig_of(mu), sig_of(nu))));
    });

    mod.def("hecke_g", [](const std::string& kase, const std::vector<long long>& mu,
                          const std::vector<long long>& nu,
                          const std::vector<long long>& lam) {
        auto cc = kase == "alt" ? heckecoeff::CoeffCase::Alt : heckecoeff::CoeffCase::Her;
        auto g = heckecoeff::hecke_g(cc, sig_of(mu), sig_of(nu), sig_of(lam));
        return py::make_tuple(g.poly.str("q"), g.sign_exponent);
    });

    mod.def("product_prob", [](const std::string& kase, const std::vector<long long>& mu,
                               const std::vector<long long>& nu,
                               const std::vector<long long>& lam, const std::string& t) {
        auto mc = kase == "alt" ? lawbook::MatCase::Alt : lawbook::MatCase::Her;
        RatFun v = lawbook::product_prob(mc, sig_of(mu), sig_of(nu), sig_of(lam));
        if (t.empty()) return v.str();
        return v.eval(Rat::from_string(t)).str();
    }, py::arg("case"), py::arg("mu"), py::arg("nu"), py::arg("lam"), py::arg("t") = "");

    mod.def("corner_prob", [](const std::string& kase, const std::vector<long long>& given,
                              const std::vector<long long>& target, const std::string& t) {
        auto kind = kase == "alt_odd"    ? lawbook::CornerKind::AltOddToEven
                    : kase == "alt_even" ? lawbook::CornerKind::AltEvenToOdd
                                         : lawbook::CornerKind::Her;
        RatFun v = lawbook::corner_prob(kind, sig_of(given), sig_of(target));
        if (t.empty()) return v.str();
        return v.eval(Rat::from_string(t)).str();
    }, py::arg("case"), py::arg("given"), py::arg("target"), py::arg("t") = "");

    mod.def("haar_sn_prob", [](const std::string& kase, int n,
                               const std::vector<long long>& lam, const std::string& t) {
        auto hc = kase == "alt_even" ? lawbook::HaarCase::AltEven
                  : kase == "alt_odd" ? lawbook::HaarCase::AltOdd
                                      : lawbook::HaarCase::Her;
        RatFun v = lawbook::haar_sn_prob(hc, n, sig_of(lam));
        if (t.empty()) return v.str();
        return v.eval(Rat::from_string(t)).str();
    }, py::arg("case"), py::arg("n"), py::arg("lam"), py::arg("t") = "");

    mod.def("invertible_prob", [](const std::string& kase, int size, const std::string& q) {
        auto mc = kase == "alt" ? lawbook::MatCase::Alt : lawbook::MatCase::Her;
        return lawbook::invertible_prob(mc, size, Rat::from_string(q)).str();
    });

    mod.def("exact_distribution",
            [](const std::string& family, const std::string& kase, int n, int m,
               const std::vector<long long>& mu, const std::vector<long long>& nu,
               const std::vector<long long>& given, const std::string& t, long long cutoff) {
                auto spec = spec_of(family, kase, n, m, mu, nu, given, t);
                return dump(jsonio::to_json(lawbook::exact_distribution(spec, cutoff)));
            },
            py::arg("family"), py::arg("case"), py::arg("n") = 1, py::arg("m") = 0,
            py::arg("mu") = std::vector<long long>{}, py::arg("nu") = std::vector<long long>{},
            py::arg("given") = std::vector<long long>{}, py::arg("t") = "1/3",
            py::arg("cutoff") = 4);

    mod.def("run_experiment",
            [](const std::string& family, const std::string& kase, int n, int m,
               const std::vector<long long>& mu, const std::vector<long long>& nu,
               const std::vector<long long>& given, const std::string& t, uint64_t samples,
               uint64_t seed, int threads, int precision, long long cutoff) {
                auto spec = spec_of(family, kase, n, m, mu, nu, given, t);
                return dump(jsonio::to_json(veristat::run_experiment(
                    spec, samples, seed, threads, precision, cutoff)));
            },
            py::arg("family"), py::arg("case"), py::arg("n") = 1, py::arg("m") = 0,
            py::arg("mu") = std::vector<long long>{}, py::arg("nu") = std::vector<long long>{},
            py::arg("given") = std::vector<long long>{}, py::arg("t") = "1/3",
            py::arg("samples") = 10000, py::arg("seed") = 1, py::arg("threads") = 1,
            py::arg("precision") = 8, py::arg("cutoff") = 4);

    mod.def("verify",
            [](const std::string& family, const std::string& kase, int n, int m,
               const std::vector<long long>& mu, const std::vector<long long>& nu,
               const std::vector<long long>& given, const std::string& t, uint64_t samples,
               uint64_t seed, int threads, int precision, long long cutoff) {
                auto spec = spec_of(family, kase, n, m, mu, nu, given, t);
                auto h = veristat::run_experiment(spec, samples, seed, threads, precision,
                                                  cutoff);
                auto ref = lawbook::exact_distribution(spec, cutoff);
                return dump(jsonio::to_json(veristat::compare(h, ref)));
            },
            py::arg("family"), py::arg("case"), py::arg("n") = 1, py::arg("m") = 0,
            py::arg("mu") = std::vector<long long>{}, py::arg("nu") = std::vector<long long>{},
            py::arg("given") = std::vector<long long>{}, py::arg("t") = "1/3",
            py::arg("samples") = 10000, py::arg("seed") = 1, py::arg("threads") = 1,
            py::arg("precision") = 8, py::arg("cutoff") = 4);

    mod.def("run_suite", [](const std::string& name) {
        auto res = veristat::run_suite(name);
        py::dict d;
        d["suite"] = res.name;
        d["pass"] = res.pass;
        d["detail"] = res.lines;
        return d;
    });

    mod.def("brute_invertible_fraction",
            [](const std::string& kase, int size, long long q) {
                auto mc = kase == "alt" ? lawbook::MatCase::Alt : lawbook::MatCase::Her;
                return veristat::brute_invertible_fraction(mc, size, q).str();
            });

    mod.def("brute_coset_count", [](const std::vector<long long>& mu, int n, long long p) {
        return veristat::brute_coset_count(sig_of(mu), n, p);
    });
}
