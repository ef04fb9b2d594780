#include "padichl/hecke.hpp"

#include <stdexcept>

namespace padichl::heckecoeff {

using exactnum::BigInt;
using hlpoly::hl_p_gt;
using hlpoly::skew_p_symbolic;
using hlpoly::v_m;
using hlpoly::WeightedVar;

RatFun lr_param(CoeffCase kase) {
    RatFun t = RatFun::t();
    switch (kase) {
        case CoeffCase::Std: return t;
        case CoeffCase::Alt: return t * t;
        case CoeffCase::Her: return -t;
    }
    throw std::logic_error("lr_param");
}

LaurentSymPoly lr_product(CoeffCase kase, const Signature& mu, const Signature& nu) {
    RatFun t = RatFun::t();
    int n = static_cast<int>(nu.size());
    switch (kase) {
        case CoeffCase::Std: {
            if (mu.size() != nu.size())
                throw std::invalid_argument("lr_product(std): length mismatch");
            return hl_p_gt(mu, n, t) * hl_p_gt(nu, n, t);
        }
        case CoeffCase::Alt: {
            if (mu.size() != 2 * nu.size())
                throw std::invalid_argument("lr_product(alt): need len(mu) = 2 len(nu)");
            // P_mu(x1, x1 t, ..., xn, xn t; t) collected in n variables
            std::vector<WeightedVar> vars;
            for (int i = 0; i < n; ++i) {
                vars.push_back({i, RatFun(1)});
                vars.push_back({i, t});
            }
            LaurentSymPoly paired = skew_p_symbolic(mu, Signature(), n, vars, t);
            return paired * hl_p_gt(nu, n, t * t);
        }
        case CoeffCase::Her: {
            if (mu.size() != nu.size())
                throw std::invalid_argument("lr_product(her): length mismatch");
            LaurentSymPoly squared = hl_p_gt(mu, n, t * t).doubled_expos();
            return squared * hl_p_gt(nu, n, -t);
        }
    }
    throw std::logic_error("lr_product");
}

CoeffTable lr_table(CoeffCase kase, const Signature& mu, const Signature& nu) {
    CoeffTable table{kase, mu, nu, {}};
    table.entries = hlpoly::expand_in_hl(lr_product(kase, mu, nu), lr_param(kase));
    long long degree = (kase == CoeffCase::Her ? 2 : 1) * mu.sum() + nu.sum();
    for (const auto& [lam, c] : table.entries)
        if (lam.sum() != degree)
            throw std::logic_error("lr_table: homogeneity violated");
    return table;
}

long long rho_pairing_doubled(const Signature& lam) {
    long long n = static_cast<long long>(lam.size());
    return (n - 1) * lam.sum() - 2 * lam.weighted();
}

HeckeCoeff hecke_g(CoeffCase kase, const Signature& mu, const Signature& nu,
                   const Signature& lam) {
    if (kase == CoeffCase::Std) throw std::invalid_argument("hecke_g: case must be alt or her");
    HeckeCoeff out{kase, IntPoly(), 0};
    long long degree = (kase == CoeffCase::Her ? 2 : 1) * mu.sum() + nu.sum();
    if (lam.sum() != degree || lam.size() != nu.size()) return out;

    CoeffTable table = lr_table(kase, mu, nu);
    auto it = table.entries.find(lam);
    if (it == table.entries.end()) return out;
    RatFun c_inv = it->second.subst_inv();  // c(q^{-1}) in the q symbol

    RatFun g;
    if (kase == CoeffCase::Alt) {
        long long e = 2 * lam.weighted() - 2 * nu.weighted() - mu.weighted() + mu.sum();
        g = RatFun::t_pow(e) * c_inv;
    } else {
        out.sign_exponent = lam.weighted() - nu.weighted();
        long long e = lam.weighted() - nu.weighted() - 2 * mu.weighted();
        g = RatFun::t_pow(e) * c_inv;
        if (out.sign_exponent % 2 != 0) g = -g;
    }
    auto rep = g.to_int_poly();
    if (!rep.ok)
        throw std::logic_error("hecke_g: integrality failed, remainder " +
                               rep.remainder_num.str() + " over " + rep.remainder_den.str());
    out.poly = rep.value;
    return out;
}

RatFun coset_count(CoeffCase kase, const Signature& mu) {
    if (!mu.all_nonnegative())
        throw std::invalid_argument("coset_count: shift mu to nonnegative parts first");
    if (kase == CoeffCase::Alt) {
        RatFun qinv = RatFun::t_pow(-1);
        long long n2 = static_cast<long long>(mu.size());
        return RatFun::t_pow(rho_pairing_doubled(mu)) * v_m(n2, qinv) /
               hlpoly::v_factor(mu, qinv);
    }
    if (kase == CoeffCase::Her) {
        RatFun qinv2 = RatFun::t_pow(-2);
        long long n = static_cast<long long>(mu.size());
        return RatFun::t_pow(2 * rho_pairing_doubled(mu)) * v_m(n, qinv2) /
               hlpoly::v_factor(mu, qinv2);
    }
    throw std::invalid_argument("coset_count: case must be alt or her");
}

RatFun orbit_volume(CoeffCase kase, const Signature& lam) {
    long long n = static_cast<long long>(lam.size());
    if (kase == CoeffCase::Alt) {
        RatFun qinv2 = RatFun::t_pow(-2);
        return RatFun::t_pow(2 * rho_pairing_doubled(lam)) * v_m(n, qinv2) /
               hlpoly::v_factor(lam, qinv2);
    }
    if (kase == CoeffCase::Her) {
        RatFun mqinv = -RatFun::t_pow(-1);
        return RatFun::t_pow(rho_pairing_doubled(lam)) * v_m(n, mqinv) /
               hlpoly::v_factor(lam, mqinv);
    }
    throw std::invalid_argument("orbit_volume: case must be alt or her");
}

}  // namespace padichl::heckecoeff
