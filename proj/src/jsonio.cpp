#include "padichl/jsonio.hpp"

#include <sstream>

namespace padichl::jsonio {

using exactnum::BigInt;
using exactnum::IntPoly;
using exactnum::Rat;
using exactnum::RatFun;
using sigcore::Signature;

json to_json(const Signature& s) {
    json a = json::array();
    for (long long p : s.parts()) a.push_back(p);
    return a;
}

Signature signature_from_json(const json& j) {
    std::vector<long long> parts;
    for (const auto& v : j) parts.push_back(v.get<long long>());
    return Signature(std::move(parts));
}

Signature signature_from_csv(const std::string& s) {
    std::vector<long long> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stoll(item));
    }
    return Signature(std::move(parts));
}

namespace {
json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, c.str()}));
    return a;
}
IntPoly poly_from_json(const json& j) {
    IntPoly p;
    for (const auto& term : j)
        p = p + IntPoly::monomial(term[0].get<long long>(),
                                  BigInt::from_string(term[1].get<std::string>()));
    return p;
}
}  // namespace

json to_json(const RatFun& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
    return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const Rat& r) { return r.str(); }

json to_json(const hlpoly::LaurentSymPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json expo = json::array();
        for (int x : e) expo.push_back(x);
        terms.push_back(json::array({expo, to_json(c)}));
    }
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

json to_json(const heckecoeff::CoeffTable& t) {
    const char* name = t.kase == heckecoeff::CoeffCase::Std   ? "std"
                       : t.kase == heckecoeff::CoeffCase::Alt ? "alt"
                                                              : "her";
    json entries = json::array();
    for (const auto& [lam, c] : t.entries)
        entries.push_back(json::array({to_json(lam), to_json(c)}));
    return json{{"case", name}, {"mu", to_json(t.mu)}, {"nu", to_json(t.nu)},
                {"entries", entries}};
}

json to_json(const lawbook::ExactDistribution& d) {
    json atoms = json::array();
    for (const auto& [lam, p] : d.atoms)
        atoms.push_back(json::array({to_json(lam), p.str()}));
    return json{{"atoms", atoms}, {"tail", d.tail_mass.str()}, {"cutoff", d.cutoff}};
}

json to_json(const veristat::Histogram& h) {
    json counts = json::array();
    for (const auto& [lam, c] : h.counts)
        counts.push_back(json::array({to_json(lam), c}));
    return json{{"counts", counts},
                {"discarded", h.discarded},
                {"total", h.total},
                {"tail_bin", h.tail_bin},
                {"cutoff", h.cutoff}};
}

json to_json(const veristat::ComparisonReport& r) {
    return json{{"tv_distance", r.tv_distance}, {"chi_square", r.chi_square},
                {"dof", r.dof},                 {"p_value", r.p_value},
                {"discard_fraction", r.discard_fraction}, {"pass", r.pass}};
}

json to_json(const randmat::LocalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) {
            const auto& e = m.at(i, j);
            std::string s = std::to_string(e.a);
            if (e.b != 0) s += "+" + std::to_string(e.b) + "*s";
            row.push_back(s);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace padichl::jsonio
