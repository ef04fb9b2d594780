#include <cmath>
#include "doctest.h"
#include "padichl/montecarlo.hpp"

using namespace padichl::veristat;
using padichl::exactnum::Rat;
using padichl::lawbook::exact_distribution;
using padichl::lawbook::LawSpec;
using padichl::sigcore::Signature;

namespace {
Signature sig(std::vector<long long> v) { return Signature(std::move(v)); }

LawSpec haar_her_spec(int n) {
    LawSpec s;
    s.family = LawSpec::Family::Haar;
    s.kase = LawSpec::Case::Her;
    s.n = n;
    s.t = Rat(1, 3);
    return s;
}
}  // namespace

TEST_CASE("brute-force invertible fractions") {
    CHECK(brute_invertible_fraction(padichl::lawbook::MatCase::Alt, 2, 2) == Rat(1, 2));
    CHECK(brute_invertible_fraction(padichl::lawbook::MatCase::Alt, 4, 2) == Rat(7, 16));
    CHECK(brute_invertible_fraction(padichl::lawbook::MatCase::Her, 2, 3) == Rat(20, 27));
    // against the closed form at another size
    CHECK(brute_invertible_fraction(padichl::lawbook::MatCase::Her, 1, 3) ==
          padichl::lawbook::invertible_prob(padichl::lawbook::MatCase::Her, 1, Rat(3)));
}

TEST_CASE("brute-force coset counts") {
    CHECK(brute_coset_count(sig({1, 0}), 2, 2) == 3);
    CHECK(brute_coset_count(sig({1, 0}), 2, 3) == 4);
    CHECK(brute_coset_count(sig({0, 0}), 2, 3) == 1);
    CHECK(brute_coset_count(sig({1, 1}), 2, 3) == 1);
    // N_(2,0) = 1 + q + q^2 at n = 2 from the closed form
    using padichl::heckecoeff::CoeffCase;
    using padichl::heckecoeff::coset_count;
    Rat closed = coset_count(CoeffCase::Alt, sig({2, 0})).eval(Rat(2));
    CHECK(Rat(static_cast<long long>(brute_coset_count(sig({2, 0}), 2, 2))) == closed);
}

TEST_CASE("corank distribution marginal matches the haar law") {
    // P(corank = c) over Her_2(F_9) equals the lambda-support marginal
    auto dist = brute_corank_distribution(padichl::lawbook::MatCase::Her, 2, 3);
    uint64_t total = 0;
    for (auto& [c, k] : dist) total += k;
    CHECK(total == 81);
    CHECK(Rat(static_cast<long long>(dist[0]), static_cast<long long>(total)) ==
          Rat(20, 27));
}

TEST_CASE("chi-square p-values") {
    CHECK(chi_square_pvalue(0.0, 3) == doctest::Approx(1.0));
    // chi2 = dof has p-value around 0.39 for dof = 4
    CHECK(chi_square_pvalue(4.0, 4) == doctest::Approx(0.4060058).epsilon(1e-4));
    CHECK(chi_square_pvalue(30.0, 4) < 1e-4);
}

TEST_CASE("histogram reproducibility and worker independence") {
    LawSpec spec = haar_her_spec(2);
    auto h1 = run_experiment(spec, 2000, 12345, 1, 8, 4);
    auto h1b = run_experiment(spec, 2000, 12345, 1, 8, 4);
    auto h4 = run_experiment(spec, 2000, 12345, 4, 8, 4);
    auto h8 = run_experiment(spec, 2000, 12345, 8, 8, 4);
    CHECK(h1 == h1b);
    CHECK(h1 == h4);
    CHECK(h1 == h8);
    CHECK(h1.total == 2000);
}

TEST_CASE("haar experiment matches the exact law") {
    LawSpec spec = haar_her_spec(1);
    auto h = run_experiment(spec, 20000, 7, 4, 8, 4);
    auto ref = exact_distribution(spec, 4);
    auto rep = compare(h, ref);
    CHECK(rep.pass);
    CHECK(rep.discard_fraction < 1e-3);
}

TEST_CASE("calibration: multinomial draws from the law itself pass") {
    LawSpec spec = haar_her_spec(2);
    auto ref = exact_distribution(spec, 4);
    int passes = 0;
    for (uint64_t rep = 0; rep < 100; ++rep) {
        auto h = multinomial_sample(ref, 5000, 1000 + rep);
        if (compare(h, ref).pass) ++passes;
    }
    CHECK(passes >= 95);
}

TEST_CASE("power: a wrong law is rejected") {
    LawSpec spec = haar_her_spec(1);
    auto h = run_experiment(spec, 20000, 21, 4, 8, 4);
    LawSpec wrong = spec;
    wrong.t = spec.t * spec.t;  // t replaced by t^2
    auto ref = exact_distribution(wrong, 4);
    CHECK_FALSE(compare(h, ref).pass);
}

TEST_CASE("degenerate comparisons are rejected") {
    LawSpec spec = haar_her_spec(1);
    auto ref = exact_distribution(spec, 4);
    Histogram empty;
    empty.cutoff = 4;
    CHECK_THROWS(compare(empty, ref));
    Histogram mismatched = multinomial_sample(ref, 100, 1);
    mismatched.cutoff = 5;
    CHECK_THROWS(compare(mismatched, ref));
}

TEST_CASE("joint corners experiment is consistent with single-level laws") {
    LawSpec spec;
    spec.family = LawSpec::Family::JointCorners;
    spec.kase = LawSpec::Case::Her;
    spec.n = 2;
    spec.t = Rat(1, 3);
    auto chains = run_joint_experiment(spec, 5000, 3, 4, 8);
    uint64_t total = 0, zero_top = 0;
    for (const auto& [chain, c] : chains) {
        REQUIRE(chain.size() == 2);
        total += c;
        if (chain[1] == sig({0, 0})) zero_top += c;
    }
    CHECK(total >= 4985);  // censored samples are rare at K = 8
    double expect =
        padichl::lawbook::haar_sn_prob(padichl::lawbook::HaarCase::Her, 2, sig({0, 0}))
            .eval(Rat(1, 3))
            .to_double();
    double sigma = std::sqrt(5000 * expect * (1 - expect));
    CHECK(std::fabs(double(zero_top) - 5000 * expect) < 5 * sigma);
}
