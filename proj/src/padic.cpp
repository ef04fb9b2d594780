#include "padichl/padic.hpp"

#include <algorithm>

namespace padichl::padicring {

namespace {

bool is_prime_small(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
    unsigned __int128 acc = 1, base = b % m;
    while (e) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

}  // namespace

RingCfg RingCfg::make(long long p, int K, std::optional<long long> nonresidue) {
    if (!is_prime_small(p) || p == 2)
        throw std::invalid_argument("RingCfg: p must be an odd prime");
    if (K < 1) throw std::invalid_argument("RingCfg: K >= 1 required");
    RingCfg cfg;
    cfg.p = p;
    cfg.K = K;
    unsigned __int128 m = 1;
    for (int i = 0; i < K; ++i) {
        m *= static_cast<unsigned>(p);
        if (m > (unsigned __int128)1 << 62)
            throw std::overflow_error("RingCfg: p^K exceeds the 62-bit budget");
    }
    cfg.modulus = static_cast<uint64_t>(m);
    if (nonresidue) {
        long long d = ((*nonresidue % p) + p) % p;
        if (d == 0 || pow_mod(d, (p - 1) / 2, p) != uint64_t(p - 1))
            throw std::invalid_argument("RingCfg: d is not a quadratic non-residue mod p");
        cfg.d = d;
    } else {
        for (long long d = 2; d < p; ++d)
            if (pow_mod(d, (p - 1) / 2, p) == uint64_t(p - 1)) {
                cfg.d = d;
                break;
            }
        // p = 3 gives d = 2; every odd prime has a non-residue
    }
    return cfg;
}

uint64_t base_add(const RingCfg& c, uint64_t x, uint64_t y) {
    uint64_t s = x + y;
    return s >= c.modulus ? s - c.modulus : s;
}
uint64_t base_sub(const RingCfg& c, uint64_t x, uint64_t y) {
    return x >= y ? x - y : x + c.modulus - y;
}
uint64_t base_mul(const RingCfg& c, uint64_t x, uint64_t y) {
    return static_cast<uint64_t>((unsigned __int128)x * y % c.modulus);
}
uint64_t base_neg(const RingCfg& c, uint64_t x) { return x ? c.modulus - x : 0; }

Valuation base_val(const RingCfg& c, uint64_t x) {
    if (x == 0) return {c.K, false};
    int v = 0;
    while (x % uint64_t(c.p) == 0) {
        x /= uint64_t(c.p);
        ++v;
    }
    return {v, true};
}

uint64_t base_inv(const RingCfg& c, uint64_t x) {
    if (x % uint64_t(c.p) == 0) throw std::domain_error("base_inv: not a unit");
    // extended Euclid on (x, p^K)
    long long r0 = static_cast<long long>(c.modulus), r1 = static_cast<long long>(x);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    long long inv = s0 % static_cast<long long>(c.modulus);
    if (inv < 0) inv += static_cast<long long>(c.modulus);
    return static_cast<uint64_t>(inv);
}

uint64_t base_shift_down(const RingCfg& c, uint64_t x, int m) {
    for (int i = 0; i < m; ++i) {
        if (x % uint64_t(c.p) != 0) throw std::domain_error("base_shift_down: inexact");
        x /= uint64_t(c.p);
    }
    return x;
}

ExtElem ext_add(const RingCfg& c, const ExtElem& x, const ExtElem& y) {
    return {base_add(c, x.a, y.a), base_add(c, x.b, y.b)};
}
ExtElem ext_sub(const RingCfg& c, const ExtElem& x, const ExtElem& y) {
    return {base_sub(c, x.a, y.a), base_sub(c, x.b, y.b)};
}
ExtElem ext_mul(const RingCfg& c, const ExtElem& x, const ExtElem& y) {
    // (a + bs)(e + fs) = ae + bfd + (af + be) s
    uint64_t ae = base_mul(c, x.a, y.a);
    uint64_t bf = base_mul(c, x.b, y.b);
    uint64_t af = base_mul(c, x.a, y.b);
    uint64_t be = base_mul(c, x.b, y.a);
    return {base_add(c, ae, base_mul(c, bf, uint64_t(c.d))), base_add(c, af, be)};
}
ExtElem ext_neg(const RingCfg& c, const ExtElem& x) {
    return {base_neg(c, x.a), base_neg(c, x.b)};
}
ExtElem ext_conj(const RingCfg& c, const ExtElem& x) { return {x.a, base_neg(c, x.b)}; }
uint64_t ext_trace(const RingCfg& c, const ExtElem& x) { return base_add(c, x.a, x.a); }
uint64_t ext_norm(const RingCfg& c, const ExtElem& x) {
    return base_sub(c, base_mul(c, x.a, x.a), base_mul(c, base_mul(c, x.b, x.b), uint64_t(c.d)));
}
Valuation ext_val(const RingCfg& c, const ExtElem& x) {
    Valuation va = base_val(c, x.a), vb = base_val(c, x.b);
    if (!va.exact && !vb.exact) return {c.K, false};
    return {std::min(va.exact ? va.v : c.K, vb.exact ? vb.v : c.K), true};
}
ExtElem ext_inv(const RingCfg& c, const ExtElem& x) {
    Valuation v = ext_val(c, x);
    if (!v.exact || v.v > 0) throw std::domain_error("ext_inv: not a unit");
    uint64_t ninv = base_inv(c, ext_norm(c, x));
    ExtElem cj = ext_conj(c, x);
    return {base_mul(c, cj.a, ninv), base_mul(c, cj.b, ninv)};
}
ExtElem ext_shift_down(const RingCfg& c, const ExtElem& x, int m) {
    return {base_shift_down(c, x.a, m), base_shift_down(c, x.b, m)};
}

namespace {
uint64_t splitmix(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace

Rng::Rng(uint64_t seed, uint64_t stream) {
    // decorrelate the (seed, stream) pair before use
    uint64_t s = seed;
    uint64_t a = splitmix(s);
    s = stream ^ 0x6a09e667f3bcc908ull;
    uint64_t b = splitmix(s);
    state_ = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

uint64_t Rng::next() { return splitmix(state_); }

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t x = next();
        if (x < limit) return x % n;
    }
}

uint64_t sample_base(const RingCfg& c, Rng& rng) { return rng.below(c.modulus); }

ExtElem sample_ext(const RingCfg& c, Rng& rng) {
    if (!c.has_ext()) throw std::logic_error("sample_ext: cfg has no extension");
    return {rng.below(c.modulus), rng.below(c.modulus)};
}

uint64_t sample_base_unit(const RingCfg& c, Rng& rng) {
    for (;;) {
        uint64_t x = rng.below(c.modulus);
        if (x % uint64_t(c.p) != 0) return x;
    }
}

}  // namespace padichl::padicring
