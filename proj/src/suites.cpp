#include "padichl/suites.hpp"

#include <sstream>

namespace padichl::veristat {

using exactnum::Rat;
using exactnum::RatFun;
using namespace lawbook;
using namespace hlpoly;
using heckecoeff::CoeffCase;
using heckecoeff::hecke_g;
using heckecoeff::lr_table;
using sigcore::enumerate_signatures;
using sigcore::Signature;

namespace {

const RatFun T = RatFun::t();

struct Check {
    SuiteResult& out;
    bool& ok;
    void operator()(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            out.lines.push_back("FAILED: " + what);
        }
    }
};

SuiteResult engine_suite() {
    SuiteResult res{"engine", true, {}};
    bool ok = true;
    Check check{res, ok};

    int count = 0;
    for (int n = 1; n <= 3; ++n)
        for (const Signature& lam : enumerate_signatures(n, 0, 3)) {
            check(hl_p_sym(lam, n, T) == hl_p_gt(lam, n, T),
                  "symmetrization vs branching at " + lam.str());
            ++count;
        }
    res.lines.push_back("symmetrization = branching on " + std::to_string(count) +
                        " signatures");

    count = 0;
    for (int n = 1; n <= 4; ++n)
        for (const Signature& lam : enumerate_signatures(n, 0, 6)) {
            if (lam.sum() > 6) continue;
            for (const RatFun& x : {RatFun(1), RatFun(2), T}) {
                std::vector<RatFun> xs;
                for (int i = 0; i < n; ++i) xs.push_back(x * T.pow(i));
                check(hl_p_gt(lam, n, T).eval(xs) == principal_p(lam, x, T),
                      "principal P at " + lam.str());
            }
            ++count;
        }
    res.lines.push_back("principal specialization = direct evaluation on " +
                        std::to_string(count) + " signatures, 3 sample points");

    // skew Cauchy, one symbolic x and y-degree cutoff 4, exact per degree
    using padichl::sigcore::interlace;
    using padichl::sigcore::InterlaceKind;
    std::vector<WeightedVar> xv{{0, RatFun(1)}};
    count = 0;
    for (const Signature& nu : enumerate_signatures(2, 0, 2))
        for (const Signature& mu : enumerate_signatures(3, 0, 2))
            for (int d = 0; d <= 4; ++d) {
                LaurentSymPoly lhs(1), rhs(1);
                std::vector<long long> kap(3);
                auto rec = [&](auto&& self, size_t i) -> void {
                    if (i == 3) {
                        Signature ks{std::vector<long long>(kap)};
                        if (ks.sum() != mu.sum() + d) return;
                        if (!interlace(InterlaceKind::Q, mu, ks)) return;
                        lhs = lhs +
                              skew_p_symbolic(ks, nu, 1, xv, T).scaled(phi_coeff(ks, mu, T));
                        return;
                    }
                    long long hi = mu[i] + d;
                    if (i > 0) hi = std::min(hi, kap[i - 1]);
                    for (long long v = hi; v >= mu[i]; --v) {
                        kap[i] = v;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);
                for (long long l2 = nu[1] - d; l2 <= nu[1]; ++l2)
                    for (long long l1 = std::max(nu[1], l2); l1 <= nu[0]; ++l1) {
                        Signature l{std::vector<long long>{l1, l2}};
                        long long f = nu.sum() - l.sum();
                        if (f < 0 || f > d) continue;
                        if (!interlace(InterlaceKind::Q, l, nu)) continue;
                        long long e = d - f;
                        RatFun pic = e == 0 ? RatFun(1) : RatFun(1) - T;
                        rhs = rhs + (LaurentSymPoly::monomial({static_cast<int>(e)}, pic) *
                                     skew_p_symbolic(mu, l, 1, xv, T))
                                        .scaled(phi_coeff(nu, l, T));
                    }
                check(lhs == rhs, "skew Cauchy at nu=" + nu.str() + " mu=" + mu.str() +
                                      " degree " + std::to_string(d));
                ++count;
            }
    res.lines.push_back("skew Cauchy identity on " + std::to_string(count) +
                        " (nu, mu, degree) triples");
    res.pass = ok;
    return res;
}

SuiteResult hecke_suite() {
    SuiteResult res{"hecke", true, {}};
    bool ok = true;
    Check check{res, ok};
    const std::vector<Rat> qs{Rat(2), Rat(3), Rat(4), Rat(5)};
    long long checked = 0;
    for (int n = 1; n <= 2; ++n) {
        for (const Signature& nu : enumerate_signatures(n, 0, 2)) {
            for (const Signature& mu : enumerate_signatures(2 * n, 0, 2)) {
                auto table = lr_table(CoeffCase::Alt, mu, nu);
                for (const auto& [lam, c] : table.entries) {
                    try {
                        auto g = hecke_g(CoeffCase::Alt, mu, nu, lam);
                        for (const Rat& q : qs)
                            check(g.poly.eval(q) >= Rat(0),
                                  "alt g >= 0 at " + mu.str() + nu.str() + lam.str());
                    } catch (const std::exception& e) {
                        check(false, std::string("alt integrality: ") + e.what());
                    }
                    ++checked;
                }
            }
            for (const Signature& mu : enumerate_signatures(n, 0, 2)) {
                auto table = lr_table(CoeffCase::Her, mu, nu);
                for (const auto& [lam, c] : table.entries) {
                    try {
                        auto g = hecke_g(CoeffCase::Her, mu, nu, lam);
                        for (const Rat& q : qs)
                            check(g.poly.eval(q) >= Rat(0),
                                  "her g >= 0 at " + mu.str() + nu.str() + lam.str());
                    } catch (const std::exception& e) {
                        check(false, std::string("her integrality: ") + e.what());
                    }
                    ++checked;
                }
            }
        }
    }
    res.lines.push_back("integrality and nonnegativity of " + std::to_string(checked) +
                        " structure coefficients at q in {2,3,4,5}");
    res.pass = ok;
    return res;
}

SuiteResult normalization_suite() {
    SuiteResult res{"normalization", true, {}};
    bool ok = true;
    Check check{res, ok};
    const std::vector<Rat> ts{Rat(1, 2), Rat(1, 3), Rat(1, 5)};
    long long families = 0;
    for (int n = 1; n <= 2; ++n) {
        for (const Signature& nu : enumerate_signatures(n, 0, 2)) {
            for (const Signature& mu : enumerate_signatures(2 * n, 0, 2)) {
                auto table = lr_table(CoeffCase::Alt, mu, nu);
                for (const Rat& t0 : ts) {
                    Rat total(0);
                    Rat pm = principal_p_at(mu, Rat(1), t0);
                    Rat pn = principal_p_at(nu, Rat(1), t0 * t0);
                    for (const auto& [lam, c] : table.entries)
                        total += c.eval(t0) * principal_p_at(lam, Rat(1), t0 * t0) / (pm * pn);
                    check(total == Rat(1), "alt product normalization at mu=" + mu.str() +
                                               " nu=" + nu.str() + " t=" + t0.str());
                }
                ++families;
            }
            for (const Signature& mu : enumerate_signatures(n, 0, 2)) {
                auto table = lr_table(CoeffCase::Her, mu, nu);
                for (const Rat& t0 : ts) {
                    Rat total(0);
                    Rat pm = principal_p_at(mu, Rat(1), t0 * t0);
                    Rat pn = principal_p_at(nu, Rat(1), -t0);
                    for (const auto& [lam, c] : table.entries)
                        total += c.eval(t0) * principal_p_at(lam, Rat(1), -t0) / (pm * pn);
                    check(total == Rat(1), "her product normalization at mu=" + mu.str() +
                                               " nu=" + nu.str() + " t=" + t0.str());
                }
                ++families;
            }
        }
    }
    res.lines.push_back("product laws sum to 1 exactly for " + std::to_string(families) +
                        " (mu, nu) pairs at t in {1/2, 1/3, 1/5}");

    long long corner_checks = 0;
    for (const Rat& t0 : ts) {
        for (int n = 1; n <= 3; ++n) {
            for (const Signature& given : enumerate_signatures(n, 0, 2)) {
                LawSpec spec;
                spec.family = LawSpec::Family::Corner;
                spec.kase = LawSpec::Case::Her;
                spec.given = given;
                spec.t = t0;
                try {
                    auto dist = exact_distribution(spec, given[0] + 4);  // asserts sum = 1
                    for (const auto& [tgt, p] : dist.atoms) {
                        check(p >= Rat(0) && p <= Rat(1),
                              "her corner value outside [0,1] at " + given.str());
                        ++corner_checks;
                    }
                } catch (const std::exception& e) {
                    check(false, std::string("her corner normalization: ") + e.what());
                }
            }
        }
    }
    res.lines.push_back("hermitian corner totals normalize with " +
                        std::to_string(corner_checks) + " atoms inside [0,1]");
    res.pass = ok;
    return res;
}

SuiteResult corner_tables_suite() {
    SuiteResult res{"corner-tables", true, {}};
    bool ok = true;
    Check check{res, ok};
    RatFun denom = RatFun(1) + T * T;
    // hermitian 1x1-of-2x2, m = 0..4 (all three regimes)
    for (long long m = 0; m <= 4; ++m) {
        Signature given{std::vector<long long>{m, 0}};
        for (long long j = 0; j <= m + 4; ++j) {
            RatFun expect;
            if (m == 0) {
                if (j == 0)
                    expect = (RatFun(1) - T) / denom;
                else
                    expect = (RatFun(1) - T * T) * T.pow(j) / denom;
            } else if (m % 2 == 1) {
                if (j == 0)
                    expect = RatFun(1) / denom;
                else if (j < m && j % 2 == 0)
                    expect = (RatFun(1) - T * T) * T.pow(j) / denom;
                else if (j == m)
                    expect = T.pow(m + 1) / denom;
            } else {
                if (j == 0)
                    expect = RatFun(1) / denom;
                else if (j < m && j % 2 == 0)
                    expect = (RatFun(1) - T * T) * T.pow(j) / denom;
                else if (j == m)
                    expect = (RatFun(1) - T - T * T) * T.pow(m) / denom;
                else if (j > m)
                    expect = (RatFun(1) - T * T) * T.pow(j) / denom;
            }
            check(corner_prob(CornerKind::Her, given,
                              Signature{std::vector<long long>{j}}) == expect,
                  "her corner table m=" + std::to_string(m) + " j=" + std::to_string(j));
        }
    }
    res.lines.push_back("hermitian 1x1-of-2x2 table matches for m in {0..4}");

    // alternating 2x2-of-3x3 from the zero signature
    RatFun alt_denom = RatFun(1) + T + T * T;
    check(corner_prob(CornerKind::AltOddToEven, Signature{std::vector<long long>{0}},
                      Signature{std::vector<long long>{0}}) == RatFun(1) / alt_denom,
          "alt corner table m=0");
    for (long long m = 1; m <= 6; ++m)
        check(corner_prob(CornerKind::AltOddToEven, Signature{std::vector<long long>{0}},
                          Signature{std::vector<long long>{m}}) ==
                  (RatFun(1) - T * T) * T.pow(m) / alt_denom,
              "alt corner table m=" + std::to_string(m));
    res.lines.push_back("alternating 2x2-of-3x3 table matches for m in {0..6}");

    // exact tail sums to 1 at three rational points
    for (const Rat& t0 : {Rat(1, 2), Rat(1, 3), Rat(1, 5)}) {
        for (long long m = 0; m <= 4; ++m) {
            LawSpec spec;
            spec.family = LawSpec::Family::Corner;
            spec.kase = LawSpec::Case::Her;
            spec.given = Signature{std::vector<long long>{m, 0}};
            spec.t = t0;
            try {
                exact_distribution(spec, m + 6);  // asserts atoms + tail = 1
            } catch (const std::exception& e) {
                check(false, std::string("her corner tail: ") + e.what());
            }
        }
        LawSpec alt;
        alt.family = LawSpec::Family::Corner;
        alt.kase = LawSpec::Case::AltOdd;
        alt.given = Signature{std::vector<long long>{0}};
        alt.t = t0;
        try {
            exact_distribution(alt, 6);
        } catch (const std::exception& e) {
            check(false, std::string("alt corner tail: ") + e.what());
        }
    }
    res.lines.push_back("tables sum to 1 with exact geometric tails at t in {1/2,1/3,1/5}");
    res.pass = ok;
    return res;
}

SuiteResult marginalization_suite() {
    SuiteResult res{"marginalization", true, {}};
    bool ok = true;
    Check check{res, ok};
    Rat t0(1, 3);

    // hermitian corners chains: sum over the 1x1 corner
    for (const Signature& top : enumerate_signatures(2, 0, 2)) {
        LawSpec cs;
        cs.family = LawSpec::Family::Corner;
        cs.kase = LawSpec::Case::Her;
        cs.given = top;
        cs.t = t0;
        auto corner_dist = exact_distribution(cs, top[0] + 6);
        Rat total(0);
        for (const auto& [lam1, p] : corner_dist.atoms)
            total += joint_weight_at(JointFamily::Corners, MatCase::Her, {lam1, top}, t0);
        Rat haar_top = haar_sn_prob(HaarCase::Her, 2, top).eval(t0);
        check(total + haar_top * corner_dist.tail_mass == haar_top,
              "her corners chain marginal at top=" + top.str());
    }
    res.lines.push_back("hermitian corners chains marginalize exactly (tails included)");

    // alternating corners chains: sum over the bottom 2x2 corner
    for (const Signature& top : enumerate_signatures(2, 0, 2)) {
        for (const Signature& mid : enumerate_signatures(1, 0, 2)) {
            LawSpec cs;
            cs.family = LawSpec::Family::Corner;
            cs.kase = LawSpec::Case::AltOdd;
            cs.given = mid;
            cs.t = t0;
            auto bottom_dist = exact_distribution(cs, mid[0] + 6);
            Rat total(0);
            for (const auto& [lam2, p] : bottom_dist.atoms)
                total +=
                    joint_weight_at(JointFamily::Corners, MatCase::Alt, {lam2, mid, top}, t0);
            Rat expect = haar_sn_prob(HaarCase::AltEven, 2, top).eval(t0) *
                         corner_prob(CornerKind::AltEvenToOdd, top, mid).eval(t0);
            check(total + expect * bottom_dist.tail_mass == expect,
                  "alt corners chain marginal at top=" + top.str() + " mid=" + mid.str());
        }
    }
    res.lines.push_back("alternating corners chains marginalize exactly (tails included)");

    // product chains: certified geometric envelope on exact slice masses
    const long long kDepth = 16;
    for (MatCase mc : {MatCase::Her, MatCase::Alt}) {
        HaarCase hc = mc == MatCase::Her ? HaarCase::Her : HaarCase::AltEven;
        Rat param = mc == MatCase::Her ? -t0 : t0 * t0;
        std::vector<SpecAt> psis;
        if (mc == MatCase::Her)
            psis = {SpecAt{{}, {{t0, t0}}}, SpecAt{{}, {{-t0, t0}}}};
        else
            psis = {SpecAt{{}, {{t0, t0}}}};
        Rat pi_star = mc == MatCase::Her
                          ? Rat(1) / ((Rat(1) - t0 * t0) * (Rat(1) - t0.pow(4)))
                          : Rat(1) / ((Rat(1) - t0) * (Rat(1) - t0 * t0) *
                                      (Rat(1) - t0.pow(3)) * (Rat(1) - t0.pow(4)));
        Rat envelope =
            mc == MatCase::Her ? t0 * t0 * (Rat(1) + t0) : t0 * (Rat(1) + t0);
        for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
            Rat base = joint_weight_at(JointFamily::Product, mc, {lam}, t0);
            auto qvals = skew_q_spec_all_at(lam.shifted(kDepth), lam, psis, param);
            Rat plam = principal_p_at(lam, Rat(1), param);
            std::map<long long, Rat> slice;
            for (const auto& [lam1, q] : qvals) {
                Rat w = base / plam * q * principal_p_at(lam1, Rat(1), param) / pi_star;
                check(w >= Rat(0), "negative product-chain weight");
                slice[lam1.sum() - lam.sum()] += w;
            }
            Rat partial(0), prev(-1), last_positive(0);
            for (long long d = 0; d <= kDepth; ++d) {
                Rat s = slice.count(d) ? slice[d] : Rat(0);
                if (d >= 6 && prev > Rat(0) && !s.is_zero())
                    check(s <= prev * envelope, "slice envelope violated");
                if (!s.is_zero()) {
                    prev = s;
                    last_positive = s;
                }
                partial += s;
            }
            Rat haar_val = haar_sn_prob(hc, 2, lam).eval(t0);
            Rat bound = last_positive * envelope / (Rat(1) - envelope);
            check((haar_val - partial).abs() <= bound,
                  "product chain marginal at lam=" + lam.str());
        }
    }
    res.lines.push_back(
        "product chains marginalize to the haar law within certified envelopes");

    // corner of the invertible matrix approaches the haar law as m grows
    Rat tol(1, 100000000ll);
    for (const Signature& lam : enumerate_signatures(2, 0, 4)) {
        if (lam.sum() > 4) continue;
        for (HaarCase c : {HaarCase::AltEven, HaarCase::AltOdd, HaarCase::Her}) {
            Rat lim = corner_invertible_prob_at(c, 2, 18, lam, t0);
            Rat closed = haar_sn_prob(c, 2, lam).eval(t0);
            check((lim - closed).abs() < tol,
                  "invertible-corner limit at " + lam.str());
        }
    }
    res.lines.push_back(
        "invertible-corner law at m=18 matches the haar law within 1e-8 for |lam| <= 4");
    res.pass = ok;
    return res;
}

SuiteResult reproducibility_suite() {
    SuiteResult res{"reproducibility", true, {}};
    bool ok = true;
    Check check{res, ok};
    LawSpec spec;
    spec.family = LawSpec::Family::Haar;
    spec.kase = LawSpec::Case::Her;
    spec.n = 2;
    spec.t = Rat(1, 3);
    auto h1 = run_experiment(spec, 20000, 20240607, 1, 8, 4);
    auto h4 = run_experiment(spec, 20000, 20240607, 4, 8, 4);
    auto h8 = run_experiment(spec, 20000, 20240607, 8, 8, 4);
    check(h1 == h4, "histograms differ between 1 and 4 workers");
    check(h1 == h8, "histograms differ between 1 and 8 workers");
    LawSpec alt;
    alt.family = LawSpec::Family::Product;
    alt.kase = LawSpec::Case::Alt;
    alt.mu = Signature{std::vector<long long>{1, 0, 0, 0}};
    alt.nu = Signature{std::vector<long long>{1, 0}};
    alt.t = Rat(1, 3);
    auto g1 = run_experiment(alt, 2000, 9, 1, 8, 4);
    auto g4 = run_experiment(alt, 2000, 9, 4, 8, 4);
    auto g8 = run_experiment(alt, 2000, 9, 8, 8, 4);
    check(g1 == g4 && g1 == g8, "product histograms differ across worker counts");
    res.lines.push_back("histograms identical across worker counts {1,4,8}");
    res.pass = ok;
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"engine",          "hecke",           "normalization",
            "corner-tables",   "marginalization", "reproducibility"};
}

SuiteResult run_suite(const std::string& name) {
    if (name == "engine") return engine_suite();
    if (name == "hecke") return hecke_suite();
    if (name == "normalization") return normalization_suite();
    if (name == "corner-tables") return corner_tables_suite();
    if (name == "marginalization") return marginalization_suite();
    if (name == "reproducibility") return reproducibility_suite();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace padichl::veristat
