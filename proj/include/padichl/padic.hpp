#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace padichl::padicring {

/* Arithmetic in Z/p^K and its unramified quadratic extension
 * (Z/p^K)[s]/(s^2 - d), p an odd prime, d a quadratic non-residue mod p. */
struct RingCfg {
    long long p = 3;
    int K = 8;
    long long d = 0;        // 0 when the extension is unused
    uint64_t modulus = 0;   // p^K

    static RingCfg make(long long p, int K, std::optional<long long> nonresidue = {});
    bool has_ext() const { return d != 0; }
};

/* a + b s with canonical residues in [0, p^K). */
struct ExtElem {
    uint64_t a = 0;
    uint64_t b = 0;
    bool operator==(const ExtElem&) const = default;
};

struct Valuation {
    int v = 0;
    bool exact = true;  // false means the element is 0 mod p^K, so v >= K
};

uint64_t base_add(const RingCfg&, uint64_t x, uint64_t y);
uint64_t base_sub(const RingCfg&, uint64_t x, uint64_t y);
uint64_t base_mul(const RingCfg&, uint64_t x, uint64_t y);
uint64_t base_neg(const RingCfg&, uint64_t x);
/* Inverse of a unit; throws std::domain_error otherwise. */
uint64_t base_inv(const RingCfg&, uint64_t x);
Valuation base_val(const RingCfg&, uint64_t x);
/* Exact division by p^m; requires v(x) >= m. */
uint64_t base_shift_down(const RingCfg&, uint64_t x, int m);

ExtElem ext_add(const RingCfg&, const ExtElem& x, const ExtElem& y);
ExtElem ext_sub(const RingCfg&, const ExtElem& x, const ExtElem& y);
ExtElem ext_mul(const RingCfg&, const ExtElem& x, const ExtElem& y);
ExtElem ext_neg(const RingCfg&, const ExtElem& x);
ExtElem ext_inv(const RingCfg&, const ExtElem& x);
ExtElem ext_conj(const RingCfg&, const ExtElem& x);
uint64_t ext_trace(const RingCfg&, const ExtElem& x);
uint64_t ext_norm(const RingCfg&, const ExtElem& x);
Valuation ext_val(const RingCfg&, const ExtElem& x);
ExtElem ext_shift_down(const RingCfg&, const ExtElem& x, int m);
inline ExtElem ext_of(uint64_t a) { return {a, 0}; }

/* Splittable counter-based generator: the stream is fully determined by
 * (seed, stream id), independent across stream ids. */
class Rng {
public:
    Rng(uint64_t seed, uint64_t stream);
    uint64_t next();
    /* uniform on [0, n), unbiased by rejection */
    uint64_t below(uint64_t n);

private:
    uint64_t state_;
};

uint64_t sample_base(const RingCfg&, Rng&);
ExtElem sample_ext(const RingCfg&, Rng&);
uint64_t sample_base_unit(const RingCfg&, Rng&);

}  // namespace padichl::padicring
