#include "padichl/hall.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padichl::hlpoly {

using sigcore::InterlaceKind;
using sigcore::interlace;

RatFun v_m(long long m, const RatFun& param) {
    // (t;t)_m / (1-t)^m
    RatFun out(1);
    RatFun p = param;
    for (long long j = 1; j <= m; ++j) {
        out *= (RatFun(1) - p) / (RatFun(1) - param);
        p *= param;
    }
    return out;
}

RatFun v_factor(const Signature& lam, const RatFun& param) {
    RatFun out(1);
    for (const auto& [value, mult] : lam.mults()) out *= v_m(mult, param);
    return out;
}

namespace {

/* The GT machinery below is generic over the coefficient field F: RatFun
 * for symbolic results, Rat for evaluation at a rational parameter. */

template <class F>
F psi_coeff_t(const Signature& outer, const Signature& inner, const F& param) {
    F out(1);
    for (const auto& [value, mult] : inner.mults())
        if (mult == outer.mult_of(value) + 1) out *= F(1) - param.pow(mult);
    return out;
}

template <class F>
F phi_coeff_t(const Signature& outer, const Signature& inner, const F& param) {
    F out(1);
    for (const auto& [value, mult] : outer.mults())
        if (mult == inner.mult_of(value) + 1) out *= F(1) - param.pow(mult);
    return out;
}

struct GTCounter {
    long long count = 0;
    long long limit = kDefaultPatternGuard;
    void tick() {
        if (++count > limit) throw std::runtime_error("GT enumeration guard exceeded");
    }
};

/* DFS over P-chains inner <_P ... <_P outer, emitting (weights, psi-product)
 * at the leaves.  Weights come in order of descent: step k first. */
template <class F, typename Leaf>
void walk_p_chains(const Signature& outer, const Signature& inner, GTCounter& guard,
                   std::vector<long long>& weights, F acc, const F& param, Leaf&& leaf) {
    size_t depth = outer.size() - inner.size();
    if (depth == 0) {
        if (outer == inner) {
            guard.tick();
            leaf(weights, acc);
        }
        return;
    }
    if (depth == 1) {
        if (interlace(InterlaceKind::P, inner, outer)) {
            guard.tick();
            weights.push_back(outer.sum() - inner.sum());
            leaf(weights, acc * psi_coeff_t(outer, inner, param));
            weights.pop_back();
        }
        return;
    }
    size_t m = outer.size() - 1;
    std::vector<long long> mu(m);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == m) {
            Signature ms{std::vector<long long>(mu)};
            for (size_t k = 0; k < inner.size(); ++k)
                if (ms[k] < inner[k]) return;
            weights.push_back(outer.sum() - ms.sum());
            walk_p_chains(ms, inner, guard, weights, acc * psi_coeff_t(outer, ms, param),
                          param, leaf);
            weights.pop_back();
            return;
        }
        for (long long v = outer[i]; v >= outer[i + 1]; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

/* DFS over Q-chains inner <_Q ... <_Q outer with exactly k steps. */
template <class F, typename Leaf>
void walk_q_chains(const Signature& outer, const Signature& inner, size_t k,
                   GTCounter& guard, std::vector<long long>& weights, F acc,
                   const F& param, Leaf&& leaf) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("walk_q_chains: length mismatch");
    if (k == 0) {
        if (outer == inner) {
            guard.tick();
            leaf(weights, acc);
        }
        return;
    }
    if (k == 1) {
        if (interlace(InterlaceKind::Q, inner, outer)) {
            guard.tick();
            weights.push_back(outer.sum() - inner.sum());
            leaf(weights, acc * phi_coeff_t(outer, inner, param));
            weights.pop_back();
        }
        return;
    }
    size_t n = outer.size();
    std::vector<long long> sig(n);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            Signature ms{std::vector<long long>(sig)};
            weights.push_back(outer.sum() - ms.sum());
            walk_q_chains(ms, inner, k - 1, guard, weights,
                          acc * phi_coeff_t(outer, ms, param), param, leaf);
            weights.pop_back();
            return;
        }
        long long hi = outer[i];
        if (i > 0) hi = std::min(hi, sig[i - 1]);
        long long lo = inner[i];
        if (i + 1 < n) lo = std::max(lo, outer[i + 1]);
        for (long long v = hi; v >= lo; --v) {
            sig[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

template <class F>
F skew_p_eval_t(const Signature& outer, const Signature& inner, const std::vector<F>& xs,
                const F& param, long long guard_limit) {
    if (xs.size() != outer.size() - inner.size())
        throw std::invalid_argument("skew_p_eval: need len(outer)-len(inner) variables");
    F out{};
    GTCounter g{0, guard_limit};
    std::vector<long long> weights;
    auto leaf = [&](const std::vector<long long>& w, const F& acc) {
        F term = acc;
        size_t k = xs.size();
        for (size_t j = 0; j < w.size(); ++j) term *= xs[k - 1 - j].pow(w[j]);
        out += term;
    };
    walk_p_chains(outer, inner, g, weights, F(1), param, leaf);
    return out;
}

template <class F>
F skew_q_eval_t(const Signature& outer, const Signature& inner, const std::vector<F>& xs,
                const F& param, long long guard_limit) {
    F out{};
    GTCounter g{0, guard_limit};
    std::vector<long long> weights;
    auto leaf = [&](const std::vector<long long>& w, const F& acc) {
        F term = acc;
        size_t k = xs.size();
        for (size_t j = 0; j < w.size(); ++j) term *= xs[k - 1 - j].pow(w[j]);
        out += term;
    };
    walk_q_chains(outer, inner, xs.size(), g, weights, F(1), param, leaf);
    return out;
}

/* Exact Q_{top/sigma}(a, a r, a r^2, ...) for every sigma in [floor, top]:
 * peeling the first tail variable and rescaling the rest gives
 *   (1 - r^{|top|-|sigma|}) G_sigma =
 *       sum_{tau != sigma, sigma <_Q tau c top}
 *           phi_{tau/sigma} a^{|tau|-|sigma|} r^{|top|-|tau|} G_tau. */
template <class F>
std::map<Signature, F> q_geometric_all_t(const Signature& top, const Signature& floor_sig,
                                         const F& a, const F& r, const F& param) {
    std::vector<Signature> box = signatures_between(floor_sig, top);
    std::sort(box.begin(), box.end(),
              [](const Signature& x, const Signature& y) { return x.sum() > y.sum(); });
    std::map<Signature, F> g;
    for (const Signature& sigma : box) {
        if (sigma == top) {
            g.emplace(sigma, F(1));
            continue;
        }
        F acc{};
        size_t n = sigma.size();
        std::vector<long long> tau(n);
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == n) {
                Signature ts{std::vector<long long>(tau)};
                if (ts == sigma) return;
                acc += phi_coeff_t(ts, sigma, param) * a.pow(ts.sum() - sigma.sum()) *
                       r.pow(top.sum() - ts.sum()) * g.at(ts);
                return;
            }
            long long hi = top[i];
            if (i > 0) hi = std::min(hi, sigma[i - 1]);
            for (long long v = hi; v >= sigma[i]; --v) {
                tau[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        F denom = F(1) - r.pow(top.sum() - sigma.sum());
        if (denom.is_zero())
            throw std::domain_error("skew_q_spec: geometric tail with r^d = 1");
        g.emplace(sigma, acc / denom);
    }
    return g;
}

template <class F>
struct GenSpec {
    std::vector<F> finite;
    std::optional<std::pair<F, F>> tail;
};

template <class F>
std::map<Signature, F> skew_q_spec_all_t(const Signature& ceiling, const Signature& inner,
                                         const std::vector<GenSpec<F>>& pieces,
                                         const F& param) {
    if (ceiling.size() != inner.size())
        throw std::invalid_argument("skew_q_spec: length mismatch");
    if (!ceiling.contains(inner)) return {};

    std::vector<Signature> box = signatures_between(inner, ceiling);
    std::map<Signature, F> acc;
    acc.emplace(inner, F(1));

    auto apply_finite = [&](const std::vector<F>& xs) {
        if (xs.empty()) return;
        std::map<Signature, F> next;
        for (const auto& [sigma, val] : acc) {
            if (val.is_zero()) continue;
            for (const Signature& tau : box) {
                if (!tau.contains(sigma)) continue;
                F q = skew_q_eval_t(tau, sigma, xs, param, kDefaultPatternGuard);
                if (!q.is_zero()) {
                    auto [it, inserted] = next.emplace(tau, val * q);
                    if (!inserted) it->second += val * q;
                }
            }
        }
        acc = std::move(next);
    };
    auto apply_tail = [&](const F& first, const F& ratio) {
        std::map<Signature, F> next;
        for (const Signature& tau : box) {
            auto g = q_geometric_all_t(tau, inner, first, ratio, param);
            F total{};
            for (const auto& [sigma, val] : acc) {
                if (!tau.contains(sigma)) continue;
                auto it = g.find(sigma);
                if (it != g.end()) total += val * it->second;
            }
            if (!total.is_zero()) next.emplace(tau, total);
        }
        acc = std::move(next);
    };

    for (const auto& piece : pieces) {
        apply_finite(piece.finite);
        if (piece.tail) apply_tail(piece.tail->first, piece.tail->second);
    }
    return acc;
}

template <class F>
F skew_q_spec_t(const Signature& outer, const Signature& inner,
                const std::vector<GenSpec<F>>& pieces, const F& param) {
    auto all = skew_q_spec_all_t(outer, inner, pieces, param);
    auto it = all.find(outer);
    return it == all.end() ? F{} : it->second;
}

template <class F>
F principal_p_t(const Signature& lam, const F& x, const F& param) {
    size_t n = lam.size();
    if (n == 0) return F(1);
    if (!lam.all_nonnegative()) {
        long long d = lam[n - 1];
        F pre = (x.pow(static_cast<long long>(n)) *
                 param.pow(static_cast<long long>(n) * (n - 1) / 2))
                    .pow(d);
        return pre * principal_p_t(lam.shifted(-d), x, param);
    }
    auto poch_tt = [&](long long m) {
        F out(1);
        F p = param;
        for (long long j = 0; j < m; ++j) {
            out *= F(1) - p;
            p *= param;
        }
        return out;
    };
    F out = x.pow(lam.sum()) * param.pow(lam.weighted());
    out *= poch_tt(static_cast<long long>(n));
    for (const auto& [value, mult] : lam.mults()) out /= poch_tt(mult);
    return out;
}

template <class F>
F principal_q_t(const Signature& lam, const F& x, std::optional<long long> J,
                const F& param) {
    if (!lam.all_nonnegative())
        throw std::invalid_argument("principal_q: nonnegative parts required");
    long long n = static_cast<long long>(lam.size());
    long long m0 = lam.mult_of(0);
    auto poch_tt = [&](long long m) {
        F out(1);
        F p = param;
        for (long long j = 0; j < m; ++j) {
            out *= F(1) - p;
            p *= param;
        }
        return out;
    };
    F out = x.pow(lam.sum()) * param.pow(lam.weighted());
    if (J) {
        if (m0 + *J - n < 0) return F{};
        out *= poch_tt(*J);
        out /= poch_tt(m0 + *J - n);
    }
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int sgn = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

/* Exact division of a polynomial (nonnegative exponents) by (x_i - x_j):
 * synthetic division in x_i with x_j absorbed into the coefficients. */
LaurentSymPoly divide_by_difference(const LaurentSymPoly& f, int i, int j) {
    LaurentSymPoly q(f.nvars());
    std::map<int, std::vector<std::pair<std::vector<int>, RatFun>>> by_deg;
    int maxdeg = 0;
    for (const auto& [e, c] : f.terms()) {
        by_deg[e[i]].push_back({e, c});
        maxdeg = std::max(maxdeg, e[i]);
    }
    for (int k = 1; k <= maxdeg; ++k) {
        for (int l = k; l <= maxdeg; ++l) {
            auto it = by_deg.find(l);
            if (it == by_deg.end()) continue;
            for (const auto& [e, c] : it->second) {
                std::vector<int> e2 = e;
                e2[i] = k - 1;
                e2[j] += l - k;
                q.add_term(e2, c);
            }
        }
    }
    LaurentSymPoly rem(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        e2[j] += e2[i];
        e2[i] = 0;
        rem.add_term(e2, c);
    }
    if (!rem.is_zero())
        throw std::logic_error("divide_by_difference: inexact (input not antisymmetric?)");
    return q;
}

LaurentSymPoly chains_to_poly(const Signature& outer, const Signature& inner, int nvars,
                              const std::vector<WeightedVar>& vars, const RatFun& param,
                              bool pkind, long long guard_limit) {
    LaurentSymPoly out(nvars);
    GTCounter guard{0, guard_limit};
    std::vector<long long> weights;
    auto leaf = [&](const std::vector<long long>& w, const RatFun& acc) {
        std::vector<int> expo(nvars, 0);
        RatFun c = acc;
        size_t k = vars.size();
        for (size_t j = 0; j < w.size(); ++j) {
            const WeightedVar& slot = vars[k - 1 - j];
            expo[slot.index] += static_cast<int>(w[j]);
            if (!slot.coeff.is_one()) c *= slot.coeff.pow(w[j]);
        }
        out.add_term(expo, c);
    };
    if (pkind)
        walk_p_chains(outer, inner, guard, weights, RatFun(1), param, leaf);
    else
        walk_q_chains(outer, inner, vars.size(), guard, weights, RatFun(1), param, leaf);
    return out;
}

std::vector<GenSpec<RatFun>> lift_specs(const std::vector<Specialization>& pieces) {
    std::vector<GenSpec<RatFun>> out;
    for (const Specialization& p : pieces) {
        GenSpec<RatFun> g{p.finite, {}};
        if (p.tail) g.tail = {{p.tail->first, p.tail->ratio}};
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GenSpec<Rat>> lift_specs_at(const std::vector<SpecAt>& pieces) {
    std::vector<GenSpec<Rat>> out;
    for (const SpecAt& p : pieces) {
        GenSpec<Rat> g{p.finite, {}};
        if (p.tail) g.tail = {{p.tail->first, p.tail->second}};
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

RatFun psi_coeff(const Signature& outer, const Signature& inner, const RatFun& param) {
    if (!interlace(InterlaceKind::P, inner, outer))
        throw std::invalid_argument("psi_coeff: interlacing violated");
    return psi_coeff_t(outer, inner, param);
}

RatFun phi_coeff(const Signature& outer, const Signature& inner, const RatFun& param) {
    if (!interlace(InterlaceKind::Q, inner, outer))
        throw std::invalid_argument("phi_coeff: interlacing violated");
    return phi_coeff_t(outer, inner, param);
}

LaurentSymPoly hl_p_sym(const Signature& lam, int n, const RatFun& param) {
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("hl_p_sym: len(lambda) must equal n");
    if (n == 0) return LaurentSymPoly::one(0);
    long long shift = 0;
    Signature l = lam;
    if (!lam.all_nonnegative()) {
        shift = lam[lam.size() - 1];
        l = lam.shifted(-shift);
    }

    // base = x^l * prod_{i<j} (x_i - t x_j)
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(l[i]);
    LaurentSymPoly base = LaurentSymPoly::monomial(e, RatFun(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LaurentSymPoly factor(n);
            std::vector<int> ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            factor.add_term(ei, RatFun(1));
            factor.add_term(ej, -param);
            base = base * factor;
        }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentSymPoly num(n);
    do {
        int sgn = permutation_sign(perm);
        for (const auto& [expo, c] : base.terms()) {
            std::vector<int> e2(n);
            for (int i = 0; i < n; ++i) e2[perm[i]] = expo[i];
            num.add_term(e2, sgn > 0 ? c : -c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) num = divide_by_difference(num, i, j);
    LaurentSymPoly out = num.scaled(v_factor(l, param).inverse());
    if (shift != 0) out = out.shifted_all(static_cast<int>(shift));
    return out;
}

LaurentSymPoly skew_p_symbolic(const Signature& outer, const Signature& inner, int nvars,
                               const std::vector<WeightedVar>& vars, const RatFun& param,
                               long long guard) {
    if (vars.size() != outer.size() - inner.size())
        throw std::invalid_argument("skew_p_symbolic: need len(outer)-len(inner) variables");
    return chains_to_poly(outer, inner, nvars, vars, param, true, guard);
}

LaurentSymPoly skew_q_symbolic(const Signature& outer, const Signature& inner, int nvars,
                               const std::vector<WeightedVar>& vars, const RatFun& param,
                               long long guard) {
    return chains_to_poly(outer, inner, nvars, vars, param, false, guard);
}

LaurentSymPoly hl_p_gt(const Signature& lam, int n, const RatFun& param) {
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("hl_p_gt: len(lambda) must equal n");
    std::vector<WeightedVar> vars;
    for (int i = 0; i < n; ++i) vars.push_back({i, RatFun(1)});
    return skew_p_symbolic(lam, Signature(), n, vars, param);
}

RatFun skew_p_eval(const Signature& outer, const Signature& inner,
                   const std::vector<RatFun>& xs, const RatFun& param, long long guard) {
    return skew_p_eval_t(outer, inner, xs, param, guard);
}

RatFun skew_q_eval(const Signature& outer, const Signature& inner,
                   const std::vector<RatFun>& xs, const RatFun& param, long long guard) {
    return skew_q_eval_t(outer, inner, xs, param, guard);
}

Rat skew_p_eval_at(const Signature& outer, const Signature& inner,
                   const std::vector<Rat>& xs, const Rat& param) {
    return skew_p_eval_t(outer, inner, xs, param, kDefaultPatternGuard);
}

Rat skew_q_eval_at(const Signature& outer, const Signature& inner,
                   const std::vector<Rat>& xs, const Rat& param) {
    return skew_q_eval_t(outer, inner, xs, param, kDefaultPatternGuard);
}

std::vector<Signature> signatures_between(const Signature& inner, const Signature& outer) {
    if (inner.size() != outer.size())
        throw std::invalid_argument("signatures_between: length mismatch");
    std::vector<Signature> out;
    size_t n = inner.size();
    if (n == 0) return {Signature()};
    std::vector<long long> cur(n);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            out.emplace_back(std::vector<long long>(cur));
            return;
        }
        long long hi = outer[i];
        if (i > 0) hi = std::min(hi, cur[i - 1]);
        for (long long v = hi; v >= inner[i]; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

RatFun skew_q_spec(const Signature& outer, const Signature& inner,
                   const std::vector<Specialization>& pieces, const RatFun& param) {
    return skew_q_spec_t(outer, inner, lift_specs(pieces), param);
}

Rat skew_q_spec_at(const Signature& outer, const Signature& inner,
                   const std::vector<SpecAt>& pieces, const Rat& param) {
    return skew_q_spec_t(outer, inner, lift_specs_at(pieces), param);
}

std::map<Signature, Rat> skew_q_spec_all_at(const Signature& ceiling,
                                            const Signature& inner,
                                            const std::vector<SpecAt>& pieces,
                                            const Rat& param) {
    return skew_q_spec_all_t(ceiling, inner, lift_specs_at(pieces), param);
}

RatFun principal_p(const Signature& lam, const RatFun& x, const RatFun& param) {
    return principal_p_t(lam, x, param);
}

RatFun principal_q(const Signature& lam, const RatFun& x, std::optional<long long> J,
                   const RatFun& param) {
    return principal_q_t(lam, x, J, param);
}

Rat principal_p_at(const Signature& lam, const Rat& x, const Rat& param) {
    return principal_p_t(lam, x, param);
}

Rat principal_q_at(const Signature& lam, const Rat& x, std::optional<long long> J,
                   const Rat& param) {
    return principal_q_t(lam, x, J, param);
}

RatFun cauchy_exact(const std::vector<RatFun>& xs, const std::vector<RatFun>& ys,
                    const RatFun& param) {
    RatFun out(1);
    for (const RatFun& x : xs)
        for (const RatFun& y : ys) {
            RatFun den = RatFun(1) - x * y;
            if (den.is_zero()) throw std::domain_error("cauchy_exact: divergent (x*y = 1)");
            out *= (RatFun(1) - param * x * y) / den;
        }
    return out;
}

CertifiedValue cauchy_numeric(const Specialization& a, const Specialization& b,
                              const RatFun& param, const Rat& t0, const Rat& tol) {
    const Rat p = param.eval(t0);
    auto values = [&](const Specialization& s, size_t tail_terms, Rat& tail_head,
                      Rat& tail_ratio) {
        std::vector<Rat> out;
        for (const RatFun& f : s.finite) out.push_back(f.eval(t0));
        tail_head = Rat(0);
        tail_ratio = Rat(0);
        if (s.tail) {
            Rat first = s.tail->first.eval(t0);
            Rat ratio = s.tail->ratio.eval(t0);
            if (!(ratio.abs() < Rat(1)))
                throw std::domain_error("cauchy_numeric: tail ratio must satisfy |r| < 1");
            Rat cur = first;
            for (size_t k = 0; k < tail_terms; ++k) {
                out.push_back(cur);
                cur = cur * ratio;
            }
            tail_head = cur;  // first omitted element
            tail_ratio = ratio;
        }
        return out;
    };

    Rat one(1);
    for (size_t m = 8;; m *= 2) {
        Rat heada, ratea, headb, rateb;
        std::vector<Rat> va = values(a, m, heada, ratea);
        std::vector<Rat> vb = values(b, m, headb, rateb);

        Rat prod(1);
        bool diverged = false;
        for (const Rat& u : va) {
            for (const Rat& v : vb) {
                Rat z = u * v;
                if (z == one) {
                    diverged = true;
                    break;
                }
                prod = prod * (one - p * z) / (one - z);
            }
            if (diverged) break;
        }
        if (diverged) throw std::domain_error("cauchy_numeric: divergent (x*y = 1)");

        // remaining pairs involve at least one omitted tail element
        Rat sa_trunc(0), sb_trunc(0);
        for (const Rat& u : va) sa_trunc += u.abs();
        for (const Rat& v : vb) sb_trunc += v.abs();
        Rat sa_full = sa_trunc, sb_full = sb_trunc;
        Rat za(0), zb(0);
        if (a.tail) {
            sa_full += heada.abs() / (one - ratea.abs());
            za = heada.abs();
        }
        if (b.tail) {
            sb_full += headb.abs() / (one - rateb.abs());
            zb = headb.abs();
        }
        Rat rem_mass = sa_full * sb_full - sa_trunc * sb_trunc;
        Rat zmax = za * sb_full > zb * sa_full ? za * sb_full : zb * sa_full;
        if (p.abs() > Rat(1)) zmax = zmax * p.abs();  // |pz| can dominate |z|
        if (!(zmax < one)) continue;

        Rat logbound = (one + p.abs()) / (one - zmax) * rem_mass;
        if (!(logbound < one)) continue;
        Rat err = prod.abs() * logbound / (one - logbound);
        if (err <= tol) return {prod, err};
        if (m > (1u << 20)) throw std::runtime_error("cauchy_numeric: tolerance unreachable");
    }
}

std::map<Signature, RatFun> expand_in_hl(const LaurentSymPoly& f, const RatFun& param) {
    if (!f.is_symmetric()) throw std::invalid_argument("expand_in_hl: input not symmetric");
    std::map<Signature, RatFun> out;
    LaurentSymPoly g = f;
    int steps = 0;
    while (!g.is_zero()) {
        if (++steps > 100000) throw std::runtime_error("expand_in_hl: failed to terminate");
        const std::vector<int>& e = g.leading_expo();
        std::vector<long long> parts(e.begin(), e.end());
        Signature lam{std::move(parts)};  // throws unless weakly decreasing
        RatFun c = g.coeff(e);
        out[lam] = c;
        g = g - hl_p_gt(lam, g.nvars(), param).scaled(c);
    }
    return out;
}

RatFun spec_concat_q(const Signature& outer, const Signature& inner,
                     const Specialization& psi1, const Specialization& psi2,
                     const RatFun& param) {
    return skew_q_spec(outer, inner, {psi1, psi2}, param);
}

}  // namespace padichl::hlpoly
