#pragma once

#include "padichl/hecke.hpp"

namespace padichl::lawbook {

using exactnum::Rat;
using exactnum::RatFun;
using hlpoly::CertifiedValue;
using sigcore::Signature;

enum class MatCase { Alt, Her };
enum class CornerKind { AltOddToEven, AltEvenToOdd, Her };
enum class HaarCase { AltEven, AltOdd, Her };
enum class JointFamily { Corners, Product };

/* Singular numbers of B^T A B (alt) / B^* A B (her) for invariant A with
 * SN = nu and any B with SN = mu; symbolic in t = 1/q.
 * alt: mu in Sig_{2n}, nu and lam in Sig_n; her: all lengths n. */
RatFun product_prob(MatCase kase, const Signature& mu, const Signature& nu,
                    const Signature& lam);

/* One corner step.  AltOddToEven: given in Sig_n is the SN of the
 * (2n+1)-matrix, target in Sig_n that of its 2n-corner.  AltEvenToOdd:
 * given in Sig_n (2n-matrix), target in Sig_{n-1} ((2n-1)-corner).
 * Her: given in Sig_n, target in Sig_{n-1}. */
RatFun corner_prob(CornerKind kind, const Signature& given, const Signature& target);

/* Singular-number law of the i.i.d. additive-Haar matrix: closed product
 * form, exact.  n is the half-size in the alternating cases. */
RatFun haar_sn_prob(HaarCase kase, int n, const Signature& lam);

/* Same law through the P*Q/Pi route with an infinite specialization: Q is
 * summed exactly, Pi numerically with a certified bound. */
CertifiedValue haar_sn_prob_numeric(HaarCase kase, int n, const Signature& lam,
                                    const Rat& t0, const Rat& tol);

/* Corner of a Haar-distributed invertible matrix, sizes n < m (half-sizes
 * in the alternating cases; AltOdd means the (2n+1)-corner of a 2m-matrix). */
RatFun corner_invertible_prob(HaarCase kase, int n, int m, const Signature& lam);
Rat corner_invertible_prob_at(HaarCase kase, int n, int m, const Signature& lam,
                              const Rat& t0);

/* P(SN = 0) for the i.i.d. Haar matrix; alt requires even size. */
RatFun invertible_prob_symbolic(MatCase kase, int size);  // in the q symbol
Rat invertible_prob(MatCase kase, int size, const Rat& q);

/* Joint weight of a corners chain (sizes 2..2n alt / 1..n her, smallest
 * first) or a product chain (SN(A), SN(B1*A B1), ..., all in Sig_n^+). */
RatFun joint_weight(JointFamily family, MatCase kase, const std::vector<Signature>& chain);
Rat joint_weight_at(JointFamily family, MatCase kase, const std::vector<Signature>& chain,
                    const Rat& t0);

/* Exact total mass of the Haar law (equals 1; kept as an independent
 * normalization check computed by block-pattern summation). */
RatFun haar_total_mass(HaarCase kase, int n);
RatFun corner_invertible_total_mass(HaarCase kase, int n, int m);

struct LawSpec {
    enum class Family { Product, Corner, Haar, CornerInvertible, JointCorners, JointProduct, Invertible };
    enum class Case { Alt, AltOdd, AltEven, Her };
    Family family = Family::Haar;
    Case kase = Case::Her;
    int n = 1;
    int m = 0;              // ambient (half-)size for corner_invertible
    int k = 0;              // number of factors for joint product
    Signature mu, nu;       // product conditioning
    Signature given;        // corner conditioning
    Rat t;                  // evaluation point, e.g. 1/p
};

struct ExactDistribution {
    std::map<Signature, Rat> atoms;
    Rat tail_mass;
    long long cutoff = 0;
};

/* Atoms for every target signature with parts in [0, cutoff]; the tail is
 * computed exactly (finite support, geometric slice, or pattern-sum total)
 * and the full mass is asserted to be exactly 1. */
ExactDistribution exact_distribution(const LawSpec& spec, long long cutoff);

}  // namespace padichl::lawbook
