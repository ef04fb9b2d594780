#pragma once

#include "padichl/hall.hpp"

namespace padichl::heckecoeff {

using exactnum::IntPoly;
using exactnum::RatFun;
using hlpoly::LaurentSymPoly;
using sigcore::Signature;

enum class CoeffCase { Std, Alt, Her };

/* Expansion table of a structure-coefficient family.  Entries live in the
 * Hall-Littlewood parameter t; homogeneity restricts the support to
 * |lambda| = |mu| + |nu| (std/alt) or 2|mu| + |nu| (her). */
struct CoeffTable {
    CoeffCase kase;
    Signature mu, nu;
    std::map<Signature, RatFun> entries;
};

/* std: P_mu(x;t) P_nu(x;t) expanded in P_lambda(x;t).
 * alt: P_mu(x1,x1 t,...,xn,xn t;t) P_nu(x;t^2) expanded at parameter t^2,
 *      mu of length 2n; the paired evaluation never materializes 2n
 *      variables.
 * her: P_mu(x^2;t^2) P_nu(x;-t) expanded at parameter -t. */
CoeffTable lr_table(CoeffCase kase, const Signature& mu, const Signature& nu);

/* The left-hand side product of the defining identity, for table
 * verification by re-multiplication. */
LaurentSymPoly lr_product(CoeffCase kase, const Signature& mu, const Signature& nu);
RatFun lr_param(CoeffCase kase);  // expansion parameter: t, t^2 or -t

struct HeckeCoeff {
    CoeffCase kase;
    IntPoly poly;              // g(q) with the sign included
    long long sign_exponent;   // n(lambda) - n(nu) for her, 0 for alt
    bool zero() const { return poly.is_zero(); }
};

/* Hecke-module structure coefficient g^{alt/her}(q): the q-power prefactor
 * applied to c(1/q), cleared to an integer polynomial in q.  Integrality
 * failure would falsify the underlying counting interpretation and throws. */
HeckeCoeff hecke_g(CoeffCase kase, const Signature& mu, const Signature& nu,
                   const Signature& lam);

/* 2 <lambda, rho_n> = (n-1)|lambda| - 2 n(lambda). */
long long rho_pairing_doubled(const Signature& lam);

/* Number of left cosets in K pi_mu K, as a polynomial in q.
 * alt: mu in Sig_{2n}, GL_{2n} over the base field;
 * her: mu in Sig_n, GL_n over the quadratic extension (residue order q^2).
 * Requires nonnegative parts. */
RatFun coset_count(CoeffCase kase, const Signature& mu);

/* Volume of the congruence orbit of the canonical matrix with singular
 * numbers lambda, normalized so the orbit of the identity has volume 1. */
RatFun orbit_volume(CoeffCase kase, const Signature& lam);

}  // namespace padichl::heckecoeff
