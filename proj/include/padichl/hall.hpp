#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padichl/laurent.hpp"

namespace padichl::hlpoly {

/* Guard on Gelfand-Tsetlin enumeration; exceeding it throws. */
inline constexpr long long kDefaultPatternGuard = 1000000;

/* V_m(t) = (t;t)_m / (1-t)^m and V_lambda(t) = prod_i V_{m_i(lambda)}(t). */
RatFun v_m(long long m, const RatFun& param);
RatFun v_factor(const Signature& lam, const RatFun& param);

/* Branching coefficients.  psi requires inner interlacing outer in the P
 * sense (lengths differ by one); phi requires the Q sense (equal lengths). */
RatFun psi_coeff(const Signature& outer, const Signature& inner, const RatFun& param);
RatFun phi_coeff(const Signature& outer, const Signature& inner, const RatFun& param);

/* Straight Hall-Littlewood P via the symmetrization formula: antisymmetrize
 * x^lambda prod_{i<j}(x_i - t x_j), divide by the Vandermonde, normalize by
 * V_lambda. */
LaurentSymPoly hl_p_sym(const Signature& lam, int n, const RatFun& param);

/* Straight P via the Gelfand-Tsetlin branching sum (cross-check route). */
LaurentSymPoly hl_p_gt(const Signature& lam, int n, const RatFun& param);

/* A GT variable slot: monomial index among nvars output variables plus a
 * scalar coefficient.  Lets several chain levels share one output variable,
 * e.g. P_mu(x_1, x_1 t, ..., x_n, x_n t; t) collected in n variables. */
struct WeightedVar {
    int index;
    RatFun coeff;
};

LaurentSymPoly skew_p_symbolic(const Signature& outer, const Signature& inner, int nvars,
                               const std::vector<WeightedVar>& vars, const RatFun& param,
                               long long guard = kDefaultPatternGuard);
LaurentSymPoly skew_q_symbolic(const Signature& outer, const Signature& inner, int nvars,
                               const std::vector<WeightedVar>& vars, const RatFun& param,
                               long long guard = kDefaultPatternGuard);

/* Skew P/Q at finite lists of values (the GT sum, evaluated). */
RatFun skew_p_eval(const Signature& outer, const Signature& inner,
                   const std::vector<RatFun>& xs, const RatFun& param,
                   long long guard = kDefaultPatternGuard);
RatFun skew_q_eval(const Signature& outer, const Signature& inner,
                   const std::vector<RatFun>& xs, const RatFun& param,
                   long long guard = kDefaultPatternGuard);

/* Exact skew Q at a concatenation of specializations, geometric tails
 * included.  Tails are summed in closed form by a linear recursion over the
 * containment interval [inner, outer]; no truncation is involved. */
RatFun skew_q_spec(const Signature& outer, const Signature& inner,
                   const std::vector<Specialization>& pieces, const RatFun& param);

/* Rational-point counterparts of the heavy evaluations; same algorithms run
 * over exact rationals instead of rational functions. */
struct SpecAt {
    std::vector<Rat> finite;
    std::optional<std::pair<Rat, Rat>> tail;  // (first, ratio)
};
Rat skew_q_spec_at(const Signature& outer, const Signature& inner,
                   const std::vector<SpecAt>& pieces, const Rat& param);
/* Q_{tau/inner}(pieces) for every tau with inner c tau c ceiling, in one
 * sweep over the containment interval. */
std::map<Signature, Rat> skew_q_spec_all_at(const Signature& ceiling,
                                            const Signature& inner,
                                            const std::vector<SpecAt>& pieces,
                                            const Rat& param);
Rat skew_p_eval_at(const Signature& outer, const Signature& inner,
                   const std::vector<Rat>& xs, const Rat& param);
Rat skew_q_eval_at(const Signature& outer, const Signature& inner,
                   const std::vector<Rat>& xs, const Rat& param);
Rat principal_p_at(const Signature& lam, const Rat& x, const Rat& param);
Rat principal_q_at(const Signature& lam, const Rat& x, std::optional<long long> J,
                   const Rat& param);

/* Principal specializations.  P takes exactly len(lam) variables
 * (x, x t, ..., x t^{n-1}); negative parts are shifted internally.
 * Q takes J variables (J = nullopt means the infinite list) and requires
 * nonnegative parts; it returns 0 when the indicator m_0 + J - n >= 0
 * fails. */
RatFun principal_p(const Signature& lam, const RatFun& x, const RatFun& param);
RatFun principal_q(const Signature& lam, const RatFun& x, std::optional<long long> J,
                   const RatFun& param);

/* Cauchy kernel prod (1 - t x_i y_j)/(1 - x_i y_j). */
RatFun cauchy_exact(const std::vector<RatFun>& xs, const std::vector<RatFun>& ys,
                    const RatFun& param);

struct CertifiedValue {
    Rat value;
    Rat bound;  // |true - value| <= bound
};

/* Numeric Cauchy kernel at t = t0 with geometric tails; the truncation
 * error is controlled through a bound on the log of the remaining product. */
CertifiedValue cauchy_numeric(const Specialization& a, const Specialization& b,
                              const RatFun& param, const Rat& t0, const Rat& tol);

/* Expansion of a symmetric Laurent polynomial in the P basis by leading-term
 * elimination.  Exact; throws on non-symmetric input. */
std::map<Signature, RatFun> expand_in_hl(const LaurentSymPoly& f, const RatFun& param);

/* Q_{outer/inner}(psi1 then psi2) = sum over inner c kappa c outer of
 * Q_{outer/kappa}(psi2) Q_{kappa/inner}(psi1). */
RatFun spec_concat_q(const Signature& outer, const Signature& inner,
                     const Specialization& psi1, const Specialization& psi2,
                     const RatFun& param);

/* All signatures kappa with inner_i <= kappa_i <= outer_i (componentwise,
 * equal lengths, weakly decreasing). */
std::vector<Signature> signatures_between(const Signature& inner, const Signature& outer);

}  // namespace padichl::hlpoly
