#include "doctest.h"
#include "padichl/hecke.hpp"

using namespace padichl::heckecoeff;
using padichl::exactnum::RatFun;
using padichl::hlpoly::hl_p_gt;
using padichl::hlpoly::LaurentSymPoly;
using padichl::sigcore::enumerate_signatures;
using padichl::sigcore::Signature;

namespace {
Signature sig(std::vector<long long> v) { return Signature(std::move(v)); }
const RatFun T = RatFun::t();

LaurentSymPoly rebuild(const CoeffTable& table) {
    int n = static_cast<int>(table.nu.size());
    LaurentSymPoly acc(n);
    for (const auto& [lam, c] : table.entries)
        acc = acc + hl_p_gt(lam, n, lr_param(table.kase)).scaled(c);
    return acc;
}
}  // namespace

TEST_CASE("alternating Pieri example gives 1+t") {
    for (const Signature& nu : {sig({1, 0}), sig({2, 0}), sig({2, 1})}) {
        auto table = lr_table(CoeffCase::Alt, sig({1, 0, 0, 0}), nu);
        Signature lam = sig({nu[0] + 1, nu[1]});
        CAPTURE(nu.str());
        REQUIRE(table.entries.count(lam));
        CHECK(table.entries.at(lam) == RatFun(1) + T);
    }
}

TEST_CASE("hermitian Pieri example gives 1") {
    {
        auto table = lr_table(CoeffCase::Her, sig({1, 0}), sig({2, 1}));
        CHECK(table.entries.at(sig({4, 1})) == RatFun(1));
    }
    {
        auto table = lr_table(CoeffCase::Her, sig({1, 0, 0}), sig({2, 1, 0}));
        CHECK(table.entries.at(sig({4, 1, 0})) == RatFun(1));
    }
}

TEST_CASE("constant mu collapses to a single shifted atom") {
    // 2n = 2: P_{(N,N)}(x, xt; t) = x^{2N} t^N
    auto t2 = lr_table(CoeffCase::Alt, sig({2, 2}), sig({1}));
    REQUIRE(t2.entries.size() == 1);
    CHECK(t2.entries.at(sig({5})) == T.pow(2));
    // 2n = 4: the t-exponent is n*N = 2
    auto t4 = lr_table(CoeffCase::Alt, sig({1, 1, 1, 1}), sig({1, 0}));
    REQUIRE(t4.entries.size() == 1);
    CHECK(t4.entries.at(sig({3, 2})) == T.pow(2));
    // hermitian: mu = N[n] doubles
    auto th = lr_table(CoeffCase::Her, sig({1, 1}), sig({1, 0}));
    REQUIRE(th.entries.size() == 1);
    CHECK(th.entries.at(sig({3, 2})) == RatFun(1));
}

TEST_CASE("tables rebuild their defining product") {
    for (const Signature& nu : enumerate_signatures(2, 0, 2)) {
        for (const Signature& mu : enumerate_signatures(4, 0, 1)) {
            auto table = lr_table(CoeffCase::Alt, mu, nu);
            CHECK(rebuild(table) == lr_product(CoeffCase::Alt, mu, nu));
        }
        for (const Signature& mu : enumerate_signatures(2, 0, 2)) {
            auto her = lr_table(CoeffCase::Her, mu, nu);
            CHECK(rebuild(her) == lr_product(CoeffCase::Her, mu, nu));
            auto std_table = lr_table(CoeffCase::Std, mu, nu);
            CHECK(rebuild(std_table) == lr_product(CoeffCase::Std, mu, nu));
        }
    }
}

TEST_CASE("single-row mu reduces to standard coefficients at t^2") {
    // c^{alt,kappa}_{(r,0[2n-1]),lam}(t) = (1+t) c^{kappa}_{(r,0[n-1]),lam}(t^2)
    for (int n = 1; n <= 2; ++n) {
        for (long long r = 1; r <= 3; ++r) {
            Signature mu_alt = Signature::constant(0, 2 * n).shifted(0);
            std::vector<long long> m(2 * n, 0);
            m[0] = r;
            mu_alt = sig(std::move(m));
            std::vector<long long> ms(n, 0);
            ms[0] = r;
            Signature mu_std = sig(std::move(ms));
            for (const Signature& lam : enumerate_signatures(n, 0, 2)) {
                auto alt = lr_table(CoeffCase::Alt, mu_alt, lam);
                auto std_t = lr_table(CoeffCase::Std, mu_std, lam);
                for (const auto& [kappa, c] : alt.entries) {
                    auto it = std_t.entries.find(kappa);
                    RatFun expect = it == std_t.entries.end()
                                        ? RatFun()
                                        : (RatFun(1) + T) * it->second.subst_square();
                    CHECK(c == expect);
                }
            }
        }
    }
}

TEST_CASE("coproduct relation for the mixed coefficients") {
    using padichl::hlpoly::skew_q_symbolic;
    using padichl::hlpoly::WeightedVar;
    for (int m = 1; m <= 2; ++m) {
        std::vector<WeightedVar> plain, paired;
        for (int i = 0; i < m; ++i) plain.push_back({i, RatFun(1)});
        for (int i = 0; i < m; ++i) {
            paired.push_back({i, RatFun(1)});
            paired.push_back({i, RatFun(-1)});
        }
        for (const Signature& nu : enumerate_signatures(2, 0, 1)) {
            for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
                // alternating: sum_mu c^{alt,lam}_{mu,nu}(t) Q_{mu/0[4]}(x;t)
                //            = Q_{lam/nu}(x;t^2)
                long long d = lam.sum() - nu.sum();
                LaurentSymPoly lhs(m);
                if (d >= 0) {
                    for (const Signature& mu : enumerate_signatures(4, 0, d, d)) {
                        auto table = lr_table(CoeffCase::Alt, mu, nu);
                        auto it = table.entries.find(lam);
                        if (it == table.entries.end()) continue;
                        lhs = lhs + skew_q_symbolic(mu, Signature::constant(0, 4), m,
                                                    plain, T)
                                        .scaled(it->second);
                    }
                }
                LaurentSymPoly rhs = skew_q_symbolic(lam, nu, m, plain, T * T);
                CAPTURE(nu.str());
                CAPTURE(lam.str());
                CHECK(lhs == rhs);

                // hermitian: sum_mu c^{her,lam}_{mu,nu}(t) Q_{mu/0[2]}(x^2;t^2)
                //          = Q_{lam/nu}(x1,-x1,...;-t)
                LaurentSymPoly lhs_h(m);
                if (d >= 0 && d % 2 == 0) {
                    for (const Signature& mu : enumerate_signatures(2, 0, d / 2, d / 2)) {
                        auto table = lr_table(CoeffCase::Her, mu, nu);
                        auto it = table.entries.find(lam);
                        if (it == table.entries.end()) continue;
                        lhs_h = lhs_h + skew_q_symbolic(mu, Signature::constant(0, 2), m,
                                                        plain, T * T)
                                            .doubled_expos()
                                            .scaled(it->second);
                    }
                }
                LaurentSymPoly rhs_h = skew_q_symbolic(lam, nu, m, paired, -T);
                CHECK(lhs_h == rhs_h);
            }
        }
    }
}

TEST_CASE("hecke g: frozen example and integrality grid") {
    auto g = hecke_g(CoeffCase::Alt, sig({1, 0, 0, 0}), sig({1, 0}), sig({2, 0}));
    CHECK(RatFun(g.poly) == T + RatFun(1));  // q + 1
    CHECK(g.sign_exponent == 0);

    // homogeneity violation gives the zero coefficient
    CHECK(hecke_g(CoeffCase::Alt, sig({1, 0, 0, 0}), sig({1, 0}), sig({3, 0})).zero());

    // integrality + nonnegativity over a small grid
    using padichl::exactnum::Rat;
    for (const Signature& nu : enumerate_signatures(2, 0, 2)) {
        for (const Signature& mu : enumerate_signatures(4, 0, 2)) {
            auto table = lr_table(CoeffCase::Alt, mu, nu);
            for (const auto& [lam, c] : table.entries) {
                auto gg = hecke_g(CoeffCase::Alt, mu, nu, lam);  // throws on failure
                for (long long q : {2, 3, 4, 5}) CHECK(gg.poly.eval(Rat(q)) >= Rat(0));
            }
        }
        for (const Signature& mu : enumerate_signatures(2, 0, 2)) {
            auto table = lr_table(CoeffCase::Her, mu, nu);
            for (const auto& [lam, c] : table.entries) {
                auto gg = hecke_g(CoeffCase::Her, mu, nu, lam);
                for (long long q : {2, 3, 4, 5}) CHECK(gg.poly.eval(Rat(q)) >= Rat(0));
            }
        }
    }
}

TEST_CASE("hecke g shift identities") {
    for (long long N : {-1ll, 1ll, 2ll}) {
        for (const Signature& nu : enumerate_signatures(2, 0, 1)) {
            for (const Signature& mu : enumerate_signatures(4, 0, 1)) {
                auto table = lr_table(CoeffCase::Alt, mu, nu);
                for (const auto& [lam, c] : table.entries) {
                    auto base = hecke_g(CoeffCase::Alt, mu, nu, lam);
                    auto nu_shift =
                        hecke_g(CoeffCase::Alt, mu, nu.shifted(N), lam.shifted(N));
                    auto mu_shift =
                        hecke_g(CoeffCase::Alt, mu.shifted(N), nu, lam.shifted(2 * N));
                    CHECK(base.poly == nu_shift.poly);
                    CHECK(base.poly == mu_shift.poly);
                }
            }
            for (const Signature& mu : enumerate_signatures(2, 0, 1)) {
                auto table = lr_table(CoeffCase::Her, mu, nu);
                for (const auto& [lam, c] : table.entries) {
                    auto base = hecke_g(CoeffCase::Her, mu, nu, lam);
                    auto nu_shift =
                        hecke_g(CoeffCase::Her, mu, nu.shifted(N), lam.shifted(N));
                    auto mu_shift =
                        hecke_g(CoeffCase::Her, mu.shifted(N), nu, lam.shifted(2 * N));
                    CHECK(base.poly == nu_shift.poly);
                    CHECK(base.poly == mu_shift.poly);
                }
            }
        }
    }
}

TEST_CASE("coset counts") {
    CHECK(coset_count(CoeffCase::Alt, sig({1, 0})) == RatFun(1) + T);       // 1 + q
    CHECK(coset_count(CoeffCase::Her, sig({1, 0})) == RatFun(1) + T * T);   // 1 + q^2
    CHECK(coset_count(CoeffCase::Alt, sig({0, 0, 0, 0})) == RatFun(1));
    CHECK(coset_count(CoeffCase::Her, sig({0, 0})) == RatFun(1));
    // N_mu for mu = (1,0,0,0): 1 + q + q^2 + q^3
    CHECK(coset_count(CoeffCase::Alt, sig({1, 0, 0, 0})) ==
          RatFun(1) + T + T * T + T.pow(3));
    CHECK_THROWS(coset_count(CoeffCase::Alt, sig({0, -1})));
}

TEST_CASE("orbit volumes") {
    CHECK(orbit_volume(CoeffCase::Alt, sig({0})) == RatFun(1));
    CHECK(orbit_volume(CoeffCase::Her, sig({0, 0})) == RatFun(1));
    CHECK(orbit_volume(CoeffCase::Alt, sig({1})) == RatFun(1));
    CHECK(orbit_volume(CoeffCase::Her, sig({1, 0})) == T - RatFun(1));  // q - 1
}

TEST_CASE("rho pairing") {
    CHECK(rho_pairing_doubled(sig({1})) == 0);
    CHECK(rho_pairing_doubled(sig({1, 0})) == 1);
    CHECK(rho_pairing_doubled(sig({2, 1, 0})) == 2 * 3 - 2 * 1);
}
