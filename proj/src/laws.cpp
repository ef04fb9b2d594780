#include "padichl/laws.hpp"

#include <functional>
#include <stdexcept>

namespace padichl::lawbook {

using exactnum::pochhammer;
using heckecoeff::CoeffCase;
using heckecoeff::lr_table;
using hlpoly::cauchy_exact;
using hlpoly::cauchy_numeric;
using hlpoly::principal_p;
using hlpoly::principal_q;
using hlpoly::Specialization;
using hlpoly::skew_p_eval;
using hlpoly::skew_q_eval;
using hlpoly::skew_q_spec;
using sigcore::enumerate_signatures;
using sigcore::Signature;

namespace {

const RatFun kT = RatFun::t();

/* (t^a; t^r)_m-style helper: prod_{j=0}^{m-1} (1 - base * step^j). */
RatFun poch(const RatFun& base, const RatFun& step, long long m) {
    return pochhammer(base, step, m);
}

std::vector<RatFun> geometric_list(const RatFun& first, const RatFun& ratio, int count) {
    std::vector<RatFun> out;
    RatFun cur = first;
    for (int i = 0; i < count; ++i) {
        out.push_back(cur);
        cur *= ratio;
    }
    return out;
}

}  // namespace

RatFun product_prob(MatCase kase, const Signature& mu, const Signature& nu,
                    const Signature& lam) {
    size_t n = nu.size();
    if (lam.size() != n) throw std::invalid_argument("product_prob: len(lambda) != len(nu)");
    if (kase == MatCase::Alt) {
        if (mu.size() != 2 * n)
            throw std::invalid_argument("product_prob(alt): need len(mu) = 2 len(nu)");
        if (lam.sum() != mu.sum() + nu.sum()) return RatFun();
        auto table = lr_table(CoeffCase::Alt, mu, nu);
        auto it = table.entries.find(lam);
        if (it == table.entries.end()) return RatFun();
        return it->second * principal_p(lam, RatFun(1), kT * kT) /
               (principal_p(mu, RatFun(1), kT) * principal_p(nu, RatFun(1), kT * kT));
    }
    if (mu.size() != n) throw std::invalid_argument("product_prob(her): length mismatch");
    if (lam.sum() != 2 * mu.sum() + nu.sum()) return RatFun();
    auto table = lr_table(CoeffCase::Her, mu, nu);
    auto it = table.entries.find(lam);
    if (it == table.entries.end()) return RatFun();
    return it->second * principal_p(lam, RatFun(1), -kT) /
           (principal_p(mu, RatFun(1), kT * kT) * principal_p(nu, RatFun(1), -kT));
}

RatFun corner_prob(CornerKind kind, const Signature& given, const Signature& target) {
    const RatFun t = kT;
    switch (kind) {
        case CornerKind::AltOddToEven: {
            size_t n = given.size();
            if (target.size() != n)
                throw std::invalid_argument("corner_prob(alt_odd): lengths must match");
            RatFun q = skew_q_eval(target, given, {t}, t * t);
            if (q.is_zero()) return RatFun();
            RatFun pi = cauchy_exact({t}, geometric_list(RatFun(1), t * t, static_cast<int>(n)),
                                     t * t);
            return q * principal_p(target, RatFun(1), t * t) /
                   (principal_p(given, RatFun(1), t * t) * pi);
        }
        case CornerKind::AltEvenToOdd: {
            size_t n = given.size();
            if (target.size() + 1 != n)
                throw std::invalid_argument("corner_prob(alt_even): target one shorter");
            RatFun p = skew_p_eval(given, target, {RatFun(1)}, t * t);
            if (p.is_zero()) return RatFun();
            return p * principal_p(target, t * t, t * t) /
                   principal_p(given, RatFun(1), t * t);
        }
        case CornerKind::Her: {
            size_t n = given.size();
            if (target.size() + 1 != n)
                throw std::invalid_argument("corner_prob(her): target one shorter");
            const RatFun mt = -t;
            // kappa <_P given and kappa <_Q target; the P box is finite
            RatFun ksum;
            if (n == 1) {
                ksum = skew_p_eval(given, Signature(), {RatFun(1)}, mt);
            } else {
                Signature floor_sig = given.slice(1, n - 1);
                Signature ceil_sig = given.slice(0, n - 1);
                for (const Signature& kappa : hlpoly::signatures_between(floor_sig, ceil_sig)) {
                    if (!sigcore::interlace(sigcore::InterlaceKind::P, kappa, given)) continue;
                    RatFun qpart = skew_q_eval(target, kappa, {RatFun(-1)}, mt);
                    if (qpart.is_zero()) continue;
                    ksum += skew_p_eval(given, kappa, {RatFun(1)}, mt) * qpart;
                }
            }
            if (ksum.is_zero()) return RatFun();
            std::vector<RatFun> ys;  // -(-t)^j, j = 1..n-1
            for (size_t j = 1; j < n; ++j) ys.push_back(-(-t).pow(static_cast<long long>(j)));
            RatFun pi = cauchy_exact({RatFun(1)}, ys, mt);
            return ksum * principal_p(target, mt, mt) / (principal_p(given, RatFun(1), mt) * pi);
        }
    }
    throw std::logic_error("corner_prob");
}

namespace {

struct HaarShape {
    std::vector<long long> coord_exp;  // exponent of t carried by lambda_i
    RatFun s;                          // Pochhammer base for multiplicities
    RatFun constant;                   // lambda-independent prefactor
};

HaarShape haar_shape(HaarCase kase, int n) {
    const RatFun t = kT;
    HaarShape shape;
    shape.coord_exp.resize(n);
    switch (kase) {
        case HaarCase::AltEven:
            for (int i = 0; i < n; ++i) shape.coord_exp[i] = 4 * i + 1;
            shape.s = t * t;
            shape.constant = poch(t, t, 2 * n);
            break;
        case HaarCase::AltOdd:
            for (int i = 0; i < n; ++i) shape.coord_exp[i] = 4 * i + 3;
            shape.s = t * t;
            shape.constant = poch(t * t, t, 2 * n);
            break;
        case HaarCase::Her:
            for (int i = 0; i < n; ++i) shape.coord_exp[i] = 2 * i + 1;
            shape.s = -t;
            shape.constant = poch(t * t, t * t, n);
            break;
    }
    return shape;
}

RatFun shape_weight(const HaarShape& shape, const Signature& lam,
                    const std::function<RatFun(long long)>& zero_factor) {
    RatFun out = shape.constant;
    long long e = 0;
    for (size_t i = 0; i < lam.size(); ++i) e += shape.coord_exp[i] * lam[i];
    out *= kT.pow(e);
    for (const auto& [value, mult] : lam.mults()) {
        if (value == 0) continue;
        out /= poch(shape.s, shape.s, mult);
    }
    RatFun z = zero_factor(lam.mult_of(0));
    if (z.is_zero()) return RatFun();
    return out * z;
}

/* Exact sum over all of Sig_n^+ of constant * t^{sum coord_exp_i lambda_i}
 * / (positive-value Pochhammers) * zero_factor(m_0), by enumerating the
 * 2^n patterns of positive gaps d_j = lambda_j - lambda_{j+1}. */
RatFun pattern_total(const HaarShape& shape, int n,
                     const std::function<RatFun(long long)>& zero_factor) {
    std::vector<RatFun> gap;  // gap[j] = t^{A_j}/(1 - t^{A_j}), A_j = sum_{i<=j} coord_exp
    long long acc = 0;
    for (int j = 0; j < n; ++j) {
        acc += shape.coord_exp[j];
        RatFun x = kT.pow(acc);
        gap.push_back(x / (RatFun(1) - x));
    }
    RatFun total;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        // boundaries: j in [1, n-1] with d_j > 0, plus the split on d_n
        std::vector<int> ends;  // 1-based end positions of equal-value blocks
        for (int j = 1; j < n; ++j)
            if (mask & (1u << (j - 1))) ends.push_back(j);
        ends.push_back(n);
        RatFun gaps_part(1);
        for (int j = 1; j < n; ++j)
            if (mask & (1u << (j - 1))) gaps_part *= gap[j - 1];
        // block sizes
        std::vector<long long> blocks;
        int prev = 0;
        for (int e : ends) {
            blocks.push_back(e - prev);
            prev = e;
        }
        // case d_n = 0: last block sits at value 0
        {
            RatFun term = gaps_part;
            for (size_t b = 0; b + 1 < blocks.size(); ++b)
                term /= poch(shape.s, shape.s, blocks[b]);
            term *= zero_factor(blocks.back());
            total += term;
        }
        // case d_n >= 1: all blocks at positive values
        {
            RatFun term = gaps_part * gap[n - 1];
            for (long long b : blocks) term /= poch(shape.s, shape.s, b);
            term *= zero_factor(0);
            total += term;
        }
    }
    return shape.constant * total;
}

}  // namespace

RatFun haar_sn_prob(HaarCase kase, int n, const Signature& lam) {
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("haar_sn_prob: len(lambda) != n");
    if (!lam.all_nonnegative()) return RatFun();
    HaarShape shape = haar_shape(kase, n);
    return shape_weight(shape, lam,
                        [&](long long m0) { return poch(shape.s, shape.s, m0).inverse(); });
}

RatFun haar_total_mass(HaarCase kase, int n) {
    HaarShape shape = haar_shape(kase, n);
    return pattern_total(shape, n,
                         [&](long long m0) { return poch(shape.s, shape.s, m0).inverse(); });
}

namespace {

struct MeasureSpecs {
    std::vector<RatFun> theta;          // finite P-side specialization
    std::vector<Specialization> psi;    // Q-side pieces (tails)
    RatFun param;
};

MeasureSpecs haar_specs(HaarCase kase, int n) {
    const RatFun t = kT;
    MeasureSpecs ms;
    switch (kase) {
        case HaarCase::AltEven:
            ms.param = t * t;
            ms.theta = geometric_list(RatFun(1), t * t, n);
            ms.psi = {Specialization::geometric(t, t * t)};
            break;
        case HaarCase::AltOdd:
            ms.param = t * t;
            ms.theta = geometric_list(RatFun(1), t * t, n);
            ms.psi = {Specialization::geometric(t.pow(3), t * t)};
            break;
        case HaarCase::Her:
            ms.param = -t;
            ms.theta = geometric_list(RatFun(1), -t, n);
            ms.psi = {Specialization::geometric(t, -t)};
            break;
    }
    return ms;
}

}  // namespace

CertifiedValue haar_sn_prob_numeric(HaarCase kase, int n, const Signature& lam,
                                    const Rat& t0, const Rat& tol) {
    MeasureSpecs ms = haar_specs(kase, n);
    RatFun p = principal_p(lam, RatFun(1), ms.param);
    RatFun q = skew_q_spec(lam, Signature::constant(0, n), ms.psi, ms.param);
    Rat numer = (p * q).eval(t0);
    Specialization theta_spec = Specialization::of(ms.theta);
    if (ms.psi.size() != 1)
        throw std::logic_error("haar_sn_prob_numeric: single tail expected");
    CertifiedValue pi = cauchy_numeric(theta_spec, ms.psi[0], ms.param, t0, tol);
    // |numer/pi - numer/pi_hat| <= |numer| b / (|pi_hat| (|pi_hat| - b))
    Rat denom_low = pi.value.abs() - pi.bound;
    if (!(denom_low > Rat(0)))
        throw std::runtime_error("haar_sn_prob_numeric: normalization not resolved");
    Rat bound = numer.abs() * pi.bound / (pi.value.abs() * denom_low);
    return {numer / pi.value, bound};
}

namespace {

struct InvertibleCornerShape {
    RatFun x_q;     // Q-side principal start
    long long jq;   // number of Q-side variables
    HaarShape base;
};

InvertibleCornerShape corner_invertible_shape(HaarCase kase, int n, int m) {
    const RatFun t = kT;
    if (m <= n) throw std::invalid_argument("corner_invertible: need m > n");
    InvertibleCornerShape sh;
    switch (kase) {
        case HaarCase::AltEven: {
            sh.base = haar_shape(HaarCase::AltEven, n);
            sh.x_q = t;
            sh.jq = m - n;
            break;
        }
        case HaarCase::AltOdd: {
            sh.base = haar_shape(HaarCase::AltOdd, n);
            sh.x_q = t.pow(3);
            sh.jq = m - n - 1;
            break;
        }
        case HaarCase::Her: {
            sh.base = haar_shape(HaarCase::Her, n);
            sh.x_q = t;
            sh.jq = m - n;
            break;
        }
    }
    return sh;
}

RatFun corner_invertible_constant(HaarCase kase, int n, int m) {
    const RatFun t = kT;
    RatFun param, pi;
    std::vector<RatFun> theta, psi;
    switch (kase) {
        case HaarCase::AltEven:
            param = t * t;
            theta = geometric_list(RatFun(1), t * t, n);
            psi = geometric_list(t, t * t, m - n);
            break;
        case HaarCase::AltOdd:
            param = t * t;
            theta = geometric_list(RatFun(1), t * t, n);
            psi = geometric_list(t.pow(3), t * t, m - n - 1);
            break;
        case HaarCase::Her:
            param = -t;
            theta = geometric_list(RatFun(1), -t, n);
            psi = geometric_list(t, -t, m - n);
            break;
    }
    return cauchy_exact(theta, psi, param).inverse();
}

}  // namespace

RatFun corner_invertible_prob(HaarCase kase, int n, int m, const Signature& lam) {
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("corner_invertible_prob: len(lambda) != n");
    if (!lam.all_nonnegative()) return RatFun();
    InvertibleCornerShape sh = corner_invertible_shape(kase, n, m);
    RatFun p = principal_p(lam, RatFun(1), sh.base.s);
    RatFun q = principal_q(lam, sh.x_q, sh.jq, sh.base.s);
    return p * q * corner_invertible_constant(kase, n, m);
}

Rat corner_invertible_prob_at(HaarCase kase, int n, int m, const Signature& lam,
                              const Rat& t0) {
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("corner_invertible_prob: len(lambda) != n");
    if (!lam.all_nonnegative()) return Rat(0);
    InvertibleCornerShape sh = corner_invertible_shape(kase, n, m);
    Rat s = sh.base.s.eval(t0);
    Rat p = hlpoly::principal_p_at(lam, Rat(1), s);
    Rat q = hlpoly::principal_q_at(lam, sh.x_q.eval(t0), sh.jq, s);
    // the normalizing Cauchy kernel over finite rational lists
    const Rat t = t0;
    std::vector<Rat> theta, psi;
    Rat param;
    auto geom = [](Rat first, Rat ratio, int count) {
        std::vector<Rat> out;
        for (int i = 0; i < count; ++i) {
            out.push_back(first);
            first *= ratio;
        }
        return out;
    };
    switch (kase) {
        case HaarCase::AltEven:
            param = t * t;
            theta = geom(Rat(1), t * t, n);
            psi = geom(t, t * t, m - n);
            break;
        case HaarCase::AltOdd:
            param = t * t;
            theta = geom(Rat(1), t * t, n);
            psi = geom(t * t * t, t * t, m - n - 1);
            break;
        case HaarCase::Her:
            param = -t;
            theta = geom(Rat(1), -t, n);
            psi = geom(t, -t, m - n);
            break;
    }
    Rat pi(1);
    for (const Rat& x : theta)
        for (const Rat& y : psi) pi *= (Rat(1) - param * x * y) / (Rat(1) - x * y);
    return p * q / pi;
}

RatFun corner_invertible_total_mass(HaarCase kase, int n, int m) {
    InvertibleCornerShape sh = corner_invertible_shape(kase, n, m);
    // P_lam(1,...) Q_lam(x,...) = t^{sum a_i lam_i} (s;s)_n (s;s)_J /
    //   ( prod_{i} (s;s)_{m_i} * (s;s)_{m_0 + J - n} ) with the P-side m_0
    // folded into the zero factor.
    const RatFun s = sh.base.s;
    long long J = sh.jq;
    long long n_ll = n;
    HaarShape shape = sh.base;  // coord exponents match P*Q combined
    shape.constant = poch(s, s, n_ll) * poch(s, s, J) * corner_invertible_constant(kase, n, m);
    auto zero_factor = [&](long long m0) -> RatFun {
        if (m0 + J - n_ll < 0) return RatFun();
        return (poch(s, s, m0) * poch(s, s, m0 + J - n_ll)).inverse();
    };
    return pattern_total(shape, n, zero_factor);
}

RatFun invertible_prob_symbolic(MatCase kase, int size) {
    if (size < 1) throw std::invalid_argument("invertible_prob: size >= 1 required");
    if (kase == MatCase::Alt) {
        if (size % 2 != 0)
            throw std::invalid_argument("invertible_prob(alt): odd matrices are singular");
        RatFun out(1);
        for (int j = 1; j <= size / 2; ++j)
            out *= RatFun(1) - RatFun::t_pow(-(2 * j - 1));
        return out;
    }
    RatFun out(1);
    for (int j = 1; j <= size; ++j) {
        RatFun term = RatFun::t_pow(-j);
        if (j % 2 != 0) term = -term;
        out *= RatFun(1) + term;  // 1 + (-q)^{-j}
    }
    return out;
}

Rat invertible_prob(MatCase kase, int size, const Rat& q) {
    return invertible_prob_symbolic(kase, size).eval(q);
}

RatFun joint_weight(JointFamily family, MatCase kase, const std::vector<Signature>& chain) {
    if (chain.empty()) throw std::invalid_argument("joint_weight: empty chain");
    const RatFun t = kT;
    if (family == JointFamily::Corners) {
        if (kase == MatCase::Alt) {
            // chain[i] is the SN of the (i+2) x (i+2) corner
            int top = static_cast<int>(chain.size()) + 1;  // largest size
            if (top % 2 != 0 || top < 2)
                throw std::invalid_argument("joint_weight(corners alt): chain must end at an even size");
            int n = top / 2;
            for (size_t i = 0; i < chain.size(); ++i)
                if (chain[i].size() != (i + 2) / 2)
                    throw std::invalid_argument("joint_weight: bad chain signature length");
            RatFun w = haar_sn_prob(HaarCase::AltEven, n, chain.back());
            for (int s = top; s >= 3; --s) {
                const Signature& g = chain[s - 2];
                const Signature& tr = chain[s - 3];
                w *= corner_prob(s % 2 == 0 ? CornerKind::AltEvenToOdd
                                            : CornerKind::AltOddToEven,
                                 g, tr);
            }
            return w;
        }
        int n = static_cast<int>(chain.size());
        for (size_t i = 0; i < chain.size(); ++i)
            if (chain[i].size() != i + 1)
                throw std::invalid_argument("joint_weight: bad chain signature length");
        RatFun w = haar_sn_prob(HaarCase::Her, n, chain.back());
        for (int s = n; s >= 2; --s) w *= corner_prob(CornerKind::Her, chain[s - 1], chain[s - 2]);
        return w;
    }

    // product chains
    size_t n = chain[0].size();
    for (const Signature& c : chain)
        if (c.size() != n || !c.all_nonnegative())
            throw std::invalid_argument("joint_weight(product): chain in Sig_n^+ required");
    long long k = static_cast<long long>(chain.size()) - 1;
    if (kase == MatCase::Alt) {
        RatFun param = t * t;
        Specialization psi0 = Specialization::geometric(t, t * t);
        Specialization psis = Specialization::geometric(t, t);
        RatFun w = skew_q_spec(chain[0], Signature::constant(0, n), {psi0}, param);
        for (size_t i = 1; i < chain.size(); ++i)
            w *= skew_q_spec(chain[i], chain[i - 1], {psis}, param);
        w *= principal_p(chain.back(), RatFun(1), param);
        RatFun pi0 = poch(param, param, n) / poch(t, t, 2 * n);   // Pi_{t^2}(theta; t,t^3,...)
        RatFun pis = poch(t, t, 2 * n).inverse();                  // Pi_{t^2}(theta; t,t^2,...)
        return w / (pi0 * pis.pow(k));
    }
    RatFun param = -t;
    Specialization psi0 = Specialization::geometric(t, -t);
    RatFun w = skew_q_spec(chain[0], Signature::constant(0, n), {psi0}, param);
    for (size_t i = 1; i < chain.size(); ++i)
        w *= skew_q_spec(chain[i], chain[i - 1],
                         {Specialization::geometric(t, t), Specialization::geometric(-t, t)},
                         param);
    w *= principal_p(chain.back(), RatFun(1), param);
    RatFun pi0 = poch(-t, -t, n) / poch(t * t, t * t, n);  // Pi_{-t}(theta; t,-t^2,...)
    RatFun pis = poch(t * t, t * t, n).inverse();          // Pi_{-t}(theta; psi^*)
    return w / (pi0 * pis.pow(k));
}

Rat joint_weight_at(JointFamily family, MatCase kase, const std::vector<Signature>& chain,
                    const Rat& t0) {
    if (chain.empty()) throw std::invalid_argument("joint_weight_at: empty chain");
    using hlpoly::principal_p_at;
    using hlpoly::skew_q_spec_at;
    using hlpoly::SpecAt;
    auto poch_at = [](const Rat& base, const Rat& step, long long m) {
        Rat out(1), p = base;
        for (long long j = 0; j < m; ++j) {
            out *= Rat(1) - p;
            p *= step;
        }
        return out;
    };
    if (family == JointFamily::Corners) {
        // chains are short; evaluate the symbolic per-step laws
        return joint_weight(family, kase, chain).eval(t0);
    }
    size_t n = chain[0].size();
    for (const Signature& c : chain)
        if (c.size() != n || !c.all_nonnegative())
            throw std::invalid_argument("joint_weight_at(product): chain in Sig_n^+ required");
    long long k = static_cast<long long>(chain.size()) - 1;
    const Rat t = t0;
    if (kase == MatCase::Alt) {
        Rat param = t * t;
        SpecAt psi0{{}, {{t, t * t}}};
        SpecAt psis{{}, {{t, t}}};
        Rat w = skew_q_spec_at(chain[0], Signature::constant(0, n), {psi0}, param);
        for (size_t i = 1; i < chain.size(); ++i)
            w *= skew_q_spec_at(chain[i], chain[i - 1], {psis}, param);
        w *= principal_p_at(chain.back(), Rat(1), param);
        Rat pi0 = poch_at(param, param, n) / poch_at(t, t, 2 * n);
        Rat pis = Rat(1) / poch_at(t, t, 2 * n);
        return w / (pi0 * pis.pow(k));
    }
    Rat param = -t;
    SpecAt psi0{{}, {{t, -t}}};
    SpecAt tail_pos{{}, {{t, t}}};
    SpecAt tail_neg{{}, {{-t, t}}};
    Rat w = skew_q_spec_at(chain[0], Signature::constant(0, n), {psi0}, param);
    for (size_t i = 1; i < chain.size(); ++i)
        w *= skew_q_spec_at(chain[i], chain[i - 1], {tail_pos, tail_neg}, param);
    w *= principal_p_at(chain.back(), Rat(1), param);
    Rat pi0 = poch_at(-t, -t, n) / poch_at(t * t, t * t, n);
    Rat pis = Rat(1) / poch_at(t * t, t * t, n);
    return w / (pi0 * pis.pow(k));
}

namespace {

/* Targets with parts in [0, hi], by decreasing first part. */
std::vector<Signature> box_targets(size_t len, long long hi) {
    if (len == 0) return {Signature()};
    return enumerate_signatures(len, 0, hi, {}, 1 << 20);
}

}  // namespace

ExactDistribution exact_distribution(const LawSpec& spec, long long cutoff) {
    ExactDistribution out;
    out.cutoff = cutoff;
    const Rat& t0 = spec.t;
    if (!(t0 > Rat(0) && t0 < Rat(1)))
        throw std::invalid_argument("exact_distribution: need 0 < t < 1");
    Rat total(0);

    auto add_atom = [&](const Signature& lam, const Rat& p) {
        if (p.is_zero()) return;
        if (p < Rat(0))
            throw std::logic_error("exact_distribution: negative atom at " + lam.str());
        out.atoms[lam] = p;
        total += p;
    };

    switch (spec.family) {
        case LawSpec::Family::Product: {
            if (spec.kase != LawSpec::Case::Alt && spec.kase != LawSpec::Case::Her)
                throw std::invalid_argument("exact_distribution(product): case alt|her");
            MatCase mc = spec.kase == LawSpec::Case::Alt ? MatCase::Alt : MatCase::Her;
            auto table = lr_table(mc == MatCase::Alt ? CoeffCase::Alt : CoeffCase::Her,
                                  spec.mu, spec.nu);
            Rat outside(0);
            for (const auto& [lam, coeff] : table.entries) {
                Rat p = product_prob(mc, spec.mu, spec.nu, lam).eval(t0);
                if (!lam.all_nonnegative() || lam[0] > cutoff)
                    outside += p;
                else
                    add_atom(lam, p);
            }
            out.tail_mass = outside;
            break;
        }
        case LawSpec::Family::Corner: {
            CornerKind kind;
            size_t target_len;
            if (spec.kase == LawSpec::Case::AltOdd) {
                kind = CornerKind::AltOddToEven;
                target_len = spec.given.size();
            } else if (spec.kase == LawSpec::Case::AltEven) {
                kind = CornerKind::AltEvenToOdd;
                target_len = spec.given.size() - 1;
            } else if (spec.kase == LawSpec::Case::Her) {
                kind = CornerKind::Her;
                target_len = spec.given.size() - 1;
            } else {
                throw std::invalid_argument("exact_distribution(corner): bad case");
            }
            if (spec.given.empty())
                throw std::invalid_argument("exact_distribution(corner): empty conditioning");
            if (!spec.given.all_nonnegative())
                throw std::invalid_argument("exact_distribution(corner): given must be >= 0");
            if (cutoff < spec.given[0] + 1)
                throw std::invalid_argument("exact_distribution(corner): cutoff below conditioning");
            for (const Signature& tgt : box_targets(target_len, cutoff))
                add_atom(tgt, corner_prob(kind, spec.given, tgt).eval(t0));
            if (kind == CornerKind::AltEvenToOdd) {
                out.tail_mass = Rat(0);  // support inside the P-interlacing box
            } else {
                // geometric in the leading target part beyond the cutoff
                Rat slice(0), slice_next(0);
                for (const Signature& sub :
                     box_targets(target_len == 0 ? 0 : target_len - 1, cutoff)) {
                    if (target_len == 0) break;
                    std::vector<long long> v{cutoff + 1};
                    for (long long x : sub.parts()) v.push_back(x);
                    Signature s1{std::move(v)};
                    std::vector<long long> w{cutoff + 2};
                    for (long long x : sub.parts()) w.push_back(x);
                    Signature s2{std::move(w)};
                    slice += corner_prob(kind, spec.given, s1).eval(t0);
                    slice_next += corner_prob(kind, spec.given, s2).eval(t0);
                }
                if (target_len == 0) {
                    out.tail_mass = Rat(0);
                } else {
                    if (!(slice_next == slice * t0))
                        throw std::logic_error(
                            "exact_distribution(corner): slice not geometric; raise cutoff");
                    out.tail_mass = slice / (Rat(1) - t0);
                }
            }
            break;
        }
        case LawSpec::Family::Haar: {
            HaarCase hc = spec.kase == LawSpec::Case::AltEven ? HaarCase::AltEven
                          : spec.kase == LawSpec::Case::AltOdd ? HaarCase::AltOdd
                                                               : HaarCase::Her;
            for (const Signature& lam : box_targets(spec.n, cutoff))
                add_atom(lam, haar_sn_prob(hc, spec.n, lam).eval(t0));
            out.tail_mass = haar_total_mass(hc, spec.n).eval(t0) - total;
            break;
        }
        case LawSpec::Family::CornerInvertible: {
            HaarCase hc = spec.kase == LawSpec::Case::AltEven ? HaarCase::AltEven
                          : spec.kase == LawSpec::Case::AltOdd ? HaarCase::AltOdd
                                                               : HaarCase::Her;
            for (const Signature& lam : box_targets(spec.n, cutoff))
                add_atom(lam, corner_invertible_prob(hc, spec.n, spec.m, lam).eval(t0));
            out.tail_mass = corner_invertible_total_mass(hc, spec.n, spec.m).eval(t0) - total;
            break;
        }
        default:
            throw std::invalid_argument(
                "exact_distribution: family must have signature-valued outcomes");
    }

    if (out.tail_mass < Rat(0))
        throw std::logic_error("exact_distribution: negative tail mass");
    if (!(total + out.tail_mass == Rat(1)))
        throw std::logic_error("exact_distribution: mass does not sum to 1");
    return out;
}

}  // namespace padichl::lawbook
