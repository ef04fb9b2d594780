#include <vector>

#include "doctest.h"
#include "padichl/hall.hpp"

using namespace padichl::hlpoly;
using padichl::exactnum::Rat;
using padichl::exactnum::RatFun;
using padichl::sigcore::enumerate_signatures;
using padichl::sigcore::Signature;

namespace {

Signature sig(std::vector<long long> v) { return Signature(std::move(v)); }
const RatFun T = RatFun::t();

LaurentSymPoly mono(std::vector<int> e, RatFun c = RatFun(1)) {
    return LaurentSymPoly::monomial(std::move(e), std::move(c));
}

}  // namespace

TEST_CASE("hl_p_sym small closed forms") {
    CHECK(hl_p_sym(sig({1, 0}), 2, T) == mono({1, 0}) + mono({0, 1}));
    CHECK(hl_p_sym(sig({1, 1}), 2, T) == mono({1, 1}));
    LaurentSymPoly expect = mono({2, 0}) + mono({0, 2}) + mono({1, 1}, RatFun(1) - T);
    CHECK(hl_p_sym(sig({2, 0}), 2, T) == expect);
    // negative parts via shift
    CHECK(hl_p_sym(sig({0, -1}), 2, T) == mono({0, -1}) + mono({-1, 0}));
}

TEST_CASE("symmetrization equals GT branching") {
    for (int n = 1; n <= 3; ++n) {
        for (const Signature& lam : enumerate_signatures(n, 0, 3)) {
            CAPTURE(lam.str());
            CHECK(hl_p_sym(lam, n, T) == hl_p_gt(lam, n, T));
        }
    }
    // spot-check a negative-part case and a second parameter
    CHECK(hl_p_sym(sig({1, -2}), 2, T) == hl_p_gt(sig({1, -2}), 2, T));
    RatFun mt = -T;
    CHECK(hl_p_sym(sig({2, 1, 0}), 3, mt) == hl_p_gt(sig({2, 1, 0}), 3, mt));
    RatFun t2 = T * T;
    CHECK(hl_p_sym(sig({3, 1}), 2, t2) == hl_p_gt(sig({3, 1}), 2, t2));
}

TEST_CASE("branching coefficients pinned by expansion oracle") {
    // coefficient of x1^1 x2^1 in P_(2,0) is (1-t), so psi_{(2,0)/(1)} = 1-t
    CHECK(psi_coeff(sig({2, 0}), sig({1}), T) == RatFun(1) - T);
    CHECK(psi_coeff(sig({1, 0}), sig({0}), T) == RatFun(1));
    CHECK(psi_coeff(sig({1, 0}), sig({1}), T) == RatFun(1));
    CHECK(phi_coeff(sig({2, 0}), sig({2, 0}), T) == RatFun(1));
    CHECK_THROWS(psi_coeff(sig({2, 0}), sig({3}), T));

    // exhaustive: single-step branch of P matches coefficient extraction
    for (const Signature& lam : enumerate_signatures(2, 0, 3)) {
        LaurentSymPoly p = hl_p_sym(lam, 2, T);
        for (long long m = lam[1]; m <= lam[0]; ++m) {
            // coefficient of x1^m x2^{|lam|-m}
            RatFun got = skew_p_eval(lam, sig({m}), {RatFun(1)}, T);
            RatFun expect = p.coeff({static_cast<int>(m), static_cast<int>(lam.sum() - m)});
            CHECK(got == expect);
        }
    }
}

TEST_CASE("skew_eval examples") {
    // P_{(2,0)/(1)}(x;t): GT sum matches branch of hl_p_sym
    RatFun v = skew_p_eval(sig({2, 0}), sig({1}), {T + RatFun(2)}, T);
    RatFun x = T + RatFun(2);
    CHECK(v == (RatFun(1) - T) * x);
    // Q_{lam/lam} with one variable is 1
    CHECK(skew_q_eval(sig({2, 1}), sig({2, 1}), {x}, T) == RatFun(1));
    // empty interlacing set gives zero
    CHECK(skew_p_eval(sig({0, 0}), sig({1}), {x}, T).is_zero());
}

TEST_CASE("straight Q equals product of pochhammers times P") {
    for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
        std::vector<WeightedVar> vars{{0, RatFun(1)}, {1, RatFun(1)}};
        LaurentSymPoly q =
            skew_q_symbolic(lam, Signature::constant(0, 2), 2, vars, T);
        RatFun b(1);
        for (const auto& [value, mult] : lam.mults())
            if (value > 0) b *= pochhammer(T, T, mult);
        CHECK(q == hl_p_sym(lam, 2, T).scaled(b));
    }
}

TEST_CASE("principal specializations") {
    CHECK(principal_p(sig({0, 0}), RatFun(1), T) == RatFun(1));
    // P principal equals symmetric evaluation at (x, xt, ..., x t^{n-1})
    for (int n = 2; n <= 4; ++n) {
        for (const Signature& lam : enumerate_signatures(n, 0, 6 / n)) {
            if (lam.sum() > 6) continue;
            for (const RatFun& x : {RatFun(1), RatFun(2), T, -T, RatFun(1) + T}) {
                std::vector<RatFun> xs;
                for (int i = 0; i < n; ++i) xs.push_back(x * T.pow(i));
                CHECK(hl_p_gt(lam, n, T).eval(xs) == principal_p(lam, x, T));
            }
        }
    }
    // Q indicator cases
    CHECK_FALSE(principal_q(sig({1, 0, 0}), RatFun(1), 1, T).is_zero());
    CHECK(principal_q(sig({1, 1, 1}), RatFun(1), 1, T).is_zero());
    // finite principal Q equals the GT sum
    for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
        for (long long J = 1; J <= 3; ++J) {
            std::vector<RatFun> xs;
            for (long long i = 0; i < J; ++i) xs.push_back(T.pow(i + 1));
            CHECK(skew_q_eval(lam, Signature::constant(0, 2), xs, T) ==
                  principal_q(lam, T, J, T));
        }
    }
}

TEST_CASE("geometric-tail Q matches the infinite principal formula") {
    // Q_lam(x, x t, x t^2, ...; t) = x^{|lam|} t^{n(lam)}
    for (const Signature& lam : enumerate_signatures(2, 0, 3)) {
        RatFun got = skew_q_spec(lam, Signature::constant(0, 2),
                                 {Specialization::geometric(T, T)}, T);
        CHECK(got == principal_q(lam, T, {}, T));
    }
    for (const Signature& lam : enumerate_signatures(3, 0, 2)) {
        RatFun got = skew_q_spec(lam, Signature::constant(0, 3),
                                 {Specialization::geometric(T * T, T)}, T);
        CHECK(got == principal_q(lam, T * T, {}, T));
    }
    // skew case against a deep finite truncation at t = 1/3
    Rat t0(1, 3);
    Signature outer = sig({3, 1}), inner = sig({1, 0});
    RatFun exact = skew_q_spec(outer, inner, {Specialization::geometric(T, T)}, T);
    std::vector<RatFun> xs;
    for (int i = 1; i <= 40; ++i) xs.push_back(T.pow(i));
    Rat truncated = skew_q_eval(outer, inner, xs, T).eval(t0);
    Rat diff = (exact.eval(t0) - truncated).abs();
    CHECK(diff < Rat(1, 1000000000000ll));
}

TEST_CASE("spec_concat_q composes branchings") {
    Signature outer = sig({2, 1}), inner = sig({1, 0});
    Specialization fin = Specialization::of({T, RatFun(2)});
    // empty second piece reduces to a single skew evaluation
    CHECK(spec_concat_q(outer, inner, fin, Specialization::of({}), T) ==
          skew_q_eval(outer, inner, {T, RatFun(2)}, T));
    // outer == inner gives 1
    CHECK(spec_concat_q(outer, outer, fin, Specialization::of({}), T) == RatFun(1));
    // hermitian psi^* = (t,-t,t^2,-t^2,...) as two geometric tails vs truncation
    RatFun mt = -T;
    Rat t0(1, 3);
    Specialization tail_pos = Specialization::geometric(T, T);
    Specialization tail_neg = Specialization::geometric(-T, T);
    RatFun exact = spec_concat_q(outer, inner, tail_pos, tail_neg, mt);
    std::vector<RatFun> xs;
    for (int i = 1; i <= 40; ++i) {
        xs.push_back(T.pow(i));
        xs.push_back(-T.pow(i));
    }
    Rat truncated = skew_q_eval(outer, inner, xs, mt).eval(t0);
    CHECK((exact.eval(t0) - truncated).abs() < Rat(1, 10000000000ll));
}

TEST_CASE("cauchy kernel") {
    // single pair
    std::vector<RatFun> xs{T + RatFun(1)}, ys{T};
    CHECK(cauchy_exact(xs, ys, T) ==
          (RatFun(1) - T * (T + RatFun(1)) * T) / (RatFun(1) - (T + RatFun(1)) * T));
    // Pi_{t^2}(t; 1) = (1-t^3)/(1-t) = 1 + t + t^2
    CHECK(cauchy_exact({T}, {RatFun(1)}, T * T) == RatFun(1) + T + T * T);
    CHECK_THROWS(cauchy_exact({T}, {RatFun(1) / T}, T));
}

TEST_CASE("cauchy numeric with tail matches deep truncation") {
    // Pi_{-t}(1; geometric(t, -t)) at t = 1/3
    Rat t0(1, 3), tol(1, 1000000000000ll);
    Specialization a = Specialization::of({RatFun(1)});
    Specialization b = Specialization::geometric(T, -T);
    CertifiedValue got = cauchy_numeric(a, b, -T, t0, tol);
    CHECK(got.bound <= tol);
    // truncate at 80 terms by hand
    Rat p = (-T).eval(t0);
    Rat prod(1), cur = T.eval(t0), ratio = (-T).eval(t0);
    for (int i = 0; i < 80; ++i) {
        prod = prod * (Rat(1) - p * cur) / (Rat(1) - cur);
        cur = cur * ratio;
    }
    CHECK((got.value - prod).abs() < Rat(1, 10000000000ll));
    // exact finite case comes back with zero bound
    CertifiedValue fin = cauchy_numeric(Specialization::of({T}), Specialization::of({T}),
                                        T, t0, tol);
    CHECK(fin.bound == Rat(0));
    CHECK(fin.value == cauchy_exact({T}, {T}, T).eval(t0));
}

TEST_CASE("expand_in_hl") {
    SUBCASE("basis element") {
        auto m = expand_in_hl(hl_p_gt(sig({2, 0}), 2, T), T);
        REQUIRE(m.size() == 1);
        CHECK(m.at(sig({2, 0})) == RatFun(1));
    }
    SUBCASE("(x1+x2)^2 = P_(2,0) + (1+t) P_(1,1)") {
        LaurentSymPoly f = mono({1, 0}) + mono({0, 1});
        auto m = expand_in_hl(f * f, T);
        REQUIRE(m.size() == 2);
        CHECK(m.at(sig({2, 0})) == RatFun(1));
        CHECK(m.at(sig({1, 1})) == RatFun(1) + T);
    }
    SUBCASE("homogeneity shift") {
        LaurentSymPoly f = mono({1, 1}) * hl_p_gt(sig({1, 0}), 2, T);
        auto m = expand_in_hl(f, T);
        REQUIRE(m.size() == 1);
        CHECK(m.at(sig({2, 1})) == RatFun(1));
    }
    SUBCASE("round trip over random basis products") {
        uint64_t s = 123456789ull;
        auto next = [&s]() {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return (s >> 33) % 3;
        };
        for (int iter = 0; iter < 50; ++iter) {
            Signature a = sig({(long long)next() + 1, (long long)next() - 1});
            Signature b = sig({(long long)next() + 1, (long long)next() - 1});
            LaurentSymPoly f = hl_p_gt(a, 2, T) * hl_p_gt(b, 2, T);
            auto m = expand_in_hl(f, T);
            LaurentSymPoly back(2);
            for (const auto& [lam, c] : m) back = back + hl_p_gt(lam, 2, T).scaled(c);
            CHECK(back == f);
        }
    }
    SUBCASE("non-symmetric input rejected") {
        CHECK_THROWS(expand_in_hl(mono({2, 0}), T));
    }
}

TEST_CASE("shift and inversion stability") {
    // P_{(lam+d)/(mu+d)}(x;t) = (x1...xk)^d P_{lam/mu}(x;t)
    std::vector<WeightedVar> one_var{{0, RatFun(1)}};
    for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
        for (const Signature& mu : enumerate_signatures(1, 0, 2)) {
            LaurentSymPoly base = skew_p_symbolic(lam, mu, 1, one_var, T);
            for (long long d : {-1ll, 1ll, 2ll}) {
                LaurentSymPoly shifted =
                    skew_p_symbolic(lam.shifted(d), mu.shifted(d), 1, one_var, T);
                CHECK(shifted == base.shifted_all(static_cast<int>(d)));
            }
            // P_{-lam/-mu}(x) = P_{lam/mu}(1/x)
            LaurentSymPoly negated =
                skew_p_symbolic(lam.negated(), mu.negated(), 1, one_var, T);
            CHECK(negated == base.inverted_vars());
        }
    }
    // Q variant of the shift identity
    for (const Signature& lam : enumerate_signatures(2, 0, 2)) {
        for (const Signature& nu : enumerate_signatures(2, 0, 2)) {
            if (!lam.contains(nu)) continue;
            LaurentSymPoly base = skew_q_symbolic(lam, nu, 1, one_var, T);
            LaurentSymPoly shifted =
                skew_q_symbolic(lam.shifted(2), nu.shifted(2), 1, one_var, T);
            CHECK(shifted == base);
        }
    }
}

TEST_CASE("skew Cauchy identity, one x and one y, coefficientwise in y") {
    // sum_k Q_{k/mu}(y) P_{k/nu}(x) = Pi(x;y) sum_l Q_{nu/l}(y) P_{mu/l}(x)
    const int kMaxDeg = 4;
    std::vector<WeightedVar> xv{{0, RatFun(1)}};
    for (const Signature& nu : enumerate_signatures(2, 0, 2)) {
        for (const Signature& mu : enumerate_signatures(3, 0, 2)) {
            // RHS base: sum over l <_Q nu with |nu|-|l| <= kMaxDeg
            // Pi(x;y) coefficient of y^e is (1-t) x^e for e >= 1, 1 for e = 0.
            for (int d = 0; d <= kMaxDeg; ++d) {
                LaurentSymPoly lhs(1), rhs(1);
                // kappa in Sig3, mu <_Q kappa, |kappa| = |mu| + d
                std::vector<long long> kap(3);
                auto rec = [&](auto&& self, size_t i) -> void {
                    if (i == 3) {
                        Signature ks{std::vector<long long>(kap)};
                        if (ks.sum() != mu.sum() + d) return;
                        if (!padichl::sigcore::interlace(padichl::sigcore::InterlaceKind::Q,
                                                         mu, ks))
                            return;
                        lhs = lhs + skew_p_symbolic(ks, nu, 1, xv, T)
                                        .scaled(phi_coeff(ks, mu, T));
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
                // rhs: conv of Pi coefficients with Q_{nu/l}(y)
                for (long long l2 = nu[1] - kMaxDeg; l2 <= nu[1]; ++l2)
                    for (long long l1 = std::max(nu[1], l2); l1 <= nu[0]; ++l1) {
                        Signature l = sig({l1, l2});
                        long long f = nu.sum() - l.sum();
                        if (f < 0 || f > d) continue;
                        if (!padichl::sigcore::interlace(padichl::sigcore::InterlaceKind::Q,
                                                         l, nu))
                            continue;
                        long long e = d - f;
                        RatFun pic = e == 0 ? RatFun(1) : RatFun(1) - T;
                        LaurentSymPoly xe =
                            LaurentSymPoly::monomial({static_cast<int>(e)}, pic);
                        rhs = rhs + (xe * skew_p_symbolic(mu, l, 1, xv, T))
                                        .scaled(phi_coeff(nu, l, T));
                    }
                CAPTURE(nu.str());
                CAPTURE(mu.str());
                CAPTURE(d);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("engine error paths") {
    CHECK_THROWS(hl_p_sym(sig({1}), 0, T));
    CHECK_THROWS(skew_p_eval(sig({2, 0}), sig({1}), {T, T}, T));
    CHECK_THROWS(principal_q(sig({0, -1}), T, 2, T));
    CHECK_THROWS(cauchy_numeric(Specialization::of({RatFun(1)}),
                                Specialization::geometric(RatFun(1), RatFun(1)), T,
                                Rat(1, 3), Rat(1, 100)));
}
