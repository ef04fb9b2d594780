#include <cmath>
#include "doctest.h"
#include "padichl/matrices.hpp"

using namespace padichl::randmat;
using padichl::padicring::base_neg;
using padichl::padicring::ext_of;
using padichl::padicring::RingCfg;
using padichl::padicring::Rng;
using padichl::sigcore::Signature;

namespace {
Signature sig(std::vector<long long> v) { return Signature(std::move(v)); }
}

TEST_CASE("canonical matrices") {
    RingCfg cfg = RingCfg::make(3, 6);
    LocalMatrix her = canonical_matrix(Symmetry::Hermitian, sig({1, 0}), 2, cfg);
    CHECK(her.at(0, 0) == ext_of(3));
    CHECK(her.at(1, 1) == ext_of(1));
    LocalMatrix alt = canonical_matrix(Symmetry::Alternating, sig({1}), 3, cfg);
    CHECK(alt.at(0, 1) == ext_of(3));
    CHECK(alt.at(1, 0) == ext_of(base_neg(cfg, 3)));
    CHECK(alt.at(2, 2) == ext_of(0));
    CHECK(alt.at(0, 2) == ext_of(0));
    LocalMatrix a2 = canonical_matrix(Symmetry::Alternating, sig({0}), 2, cfg);
    CHECK(a2.at(0, 1) == ext_of(1));
    CHECK_THROWS(canonical_matrix(Symmetry::Hermitian, sig({7, 0}), 2, cfg));
}

TEST_CASE("singular numbers of canonical matrices") {
    RingCfg cfg = RingCfg::make(3, 8);
    for (const Signature& lam :
         {sig({2, 1}), sig({0, 0}), sig({3, 3}), sig({2, 1, 0})}) {
        LocalMatrix a =
            canonical_matrix(Symmetry::Hermitian, lam, static_cast<int>(lam.size()), cfg);
        CHECK(sn_minors(a).sn == lam);
        CHECK(sn_elim(a).sn == lam);
        CHECK(sn_minors(a).reliable);
    }
    for (const Signature& lam : {sig({2, 1}), sig({1}), sig({0, 0})}) {
        for (int extra : {0, 1}) {
            int size = 2 * static_cast<int>(lam.size()) + extra;
            LocalMatrix a = canonical_matrix(Symmetry::Alternating, lam, size, cfg);
            CHECK(sn_minors(a).sn == lam);
            CHECK(sn_elim(a).sn == lam);
        }
    }
}

TEST_CASE("off-diagonal hermitian minimum requires non-principal minors") {
    // A = (p, 1; 1, p) has SN = (0, 0)
    RingCfg cfg = RingCfg::make(3, 6);
    LocalMatrix a = LocalMatrix::zero(2, Symmetry::Hermitian, cfg);
    a.at(0, 0) = ext_of(3);
    a.at(1, 1) = ext_of(3);
    a.at(0, 1) = ext_of(1);
    a.at(1, 0) = ext_of(1);
    CHECK(sn_minors(a).sn == sig({0, 0}));
    CHECK(sn_elim(a).sn == sig({0, 0}));
}

TEST_CASE("congruence invariance of singular numbers") {
    RingCfg cfg = RingCfg::make(3, 8);
    Rng rng(7, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        LocalMatrix a = sample_invariant(Symmetry::Hermitian, sig({2, 1, 0}), 3, cfg, rng);
        SNResult r = sn_elim(a);
        REQUIRE(r.reliable);
        CHECK(r.sn == sig({2, 1, 0}));
    }
    for (int rep = 0; rep < 1000; ++rep) {
        LocalMatrix a = sample_invariant(Symmetry::Alternating, sig({1, 0}), 4, cfg, rng);
        SNResult r = sn_elim(a);
        REQUIRE(r.reliable);
        CHECK(r.sn == sig({1, 0}));
    }
    for (int rep = 0; rep < 100; ++rep) {
        LocalMatrix a = sample_invariant(Symmetry::Alternating, sig({2, 1}), 5, cfg, rng);
        CHECK(sn_elim(a).sn == sig({2, 1}));
    }
}

TEST_CASE("elimination agrees with the minors oracle on random samples") {
    RingCfg cfg = RingCfg::make(3, 8);
    Rng rng(99, 0);
    for (int rep = 0; rep < 2000; ++rep) {
        LocalMatrix a = sample_haar_symmetric(Symmetry::Hermitian, 3, cfg, rng);
        SNResult x = sn_minors(a), y = sn_elim(a);
        // elimination certifies at least as much as the minors route
        if (x.reliable) {
            REQUIRE(y.reliable);
            CHECK(x.sn == y.sn);
        }
    }
    for (int rep = 0; rep < 2000; ++rep) {
        LocalMatrix a = sample_haar_symmetric(Symmetry::Alternating, 4, cfg, rng);
        SNResult x = sn_minors(a), y = sn_elim(a);
        if (x.reliable) {
            REQUIRE(y.reliable);
            CHECK(x.sn == y.sn);
        }
    }
    for (int rep = 0; rep < 500; ++rep) {
        LocalMatrix a = sample_haar_symmetric(Symmetry::Alternating, 5, cfg, rng);
        SNResult x = sn_minors(a), y = sn_elim(a);
        if (x.reliable) CHECK(x.sn == y.sn);
    }
}

TEST_CASE("alternating partial sums are even") {
    // implicitly asserted inside sn_minors; exercise it on random samples
    RingCfg cfg = RingCfg::make(3, 6);
    Rng rng(123, 5);
    for (int rep = 0; rep < 500; ++rep) {
        LocalMatrix a = sample_haar_symmetric(Symmetry::Alternating, 4, cfg, rng);
        CHECK_NOTHROW(sn_minors(a));
    }
}

TEST_CASE("corner and sandwich") {
    RingCfg cfg = RingCfg::make(3, 8);
    Rng rng(55, 0);
    LocalMatrix a = canonical_matrix(Symmetry::Hermitian, sig({0, 0}), 2, cfg);
    CHECK(corner(a, 1).at(0, 0) == ext_of(1));
    // sandwich preserves the hermitian structure
    LocalMatrix h = sample_haar_symmetric(Symmetry::Hermitian, 3, cfg, rng);
    LocalMatrix b = sample_haar_gl(3, true, cfg, rng);
    LocalMatrix c = sandwich(h, b);
    CHECK(c.sym == Symmetry::Hermitian);
    for (int i = 0; i < 3; ++i) {
        CHECK(c.at(i, i).b == 0);
        for (int j = 0; j < 3; ++j)
            CHECK(c.at(i, j) == padichl::padicring::ext_conj(cfg, c.at(j, i)));
    }
    // diag(1, p^r) A diag(1, p^r) shifts the singular numbers per the
    // reduction used for corner laws: SN = (2r + |lam| - |nu|, nu)
    Rng rng2(56, 0);
    for (int rep = 0; rep < 50; ++rep) {
        LocalMatrix inv = sample_invariant(Symmetry::Hermitian, sig({1, 0}), 2, cfg, rng2);
        SNResult nu = sn_elim(corner(inv, 1));
        REQUIRE(nu.reliable);
        int r = 2;
        LocalMatrix d = LocalMatrix::zero(2, Symmetry::None, cfg);
        d.at(0, 0) = ext_of(1);
        uint64_t pr = 9;  // p^r
        d.at(1, 1) = ext_of(pr);
        SNResult shifted = sn_elim(sandwich(inv, d));
        REQUIRE(shifted.reliable);
        long long top = 2 * r + 1 - nu.sn.sum();
        CHECK(shifted.sn == sig({top, nu.sn[0]}));
    }
}

TEST_CASE("haar GL acceptance rate is the classical product") {
    RingCfg cfg = RingCfg::make(3, 4);
    Rng rng(31, 0);
    const int N = 20000;
    int accepted = 0;
    for (int i = 0; i < N; ++i) {
        LocalMatrix m = LocalMatrix::zero(2, Symmetry::None, cfg);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                m.at(r, c) = ext_of(padichl::padicring::sample_base(cfg, rng));
        auto v = padichl::padicring::ext_val(cfg, determinant(m));
        if (v.exact && v.v == 0) ++accepted;
    }
    double p = (1 - 1.0 / 3) * (1 - 1.0 / 9);
    double sigma = std::sqrt(N * p * (1 - p));
    CHECK(std::fabs(accepted - N * p) < 4 * sigma);
}

TEST_CASE("size bound enforced for minors") {
    RingCfg cfg = RingCfg::make(3, 4);
    LocalMatrix a = LocalMatrix::zero(8, Symmetry::Hermitian, cfg);
    for (int i = 0; i < 8; ++i) a.at(i, i) = ext_of(1);
    CHECK_THROWS(sn_minors(a));
    CHECK_NOTHROW(sn_minors(a, 8));
}
