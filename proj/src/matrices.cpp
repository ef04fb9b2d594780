#include "padichl/matrices.hpp"

#include <algorithm>
#include <stdexcept>

namespace padichl::randmat {

using namespace padicring;

LocalMatrix LocalMatrix::zero(int n, Symmetry sym, const RingCfg& cfg) {
    LocalMatrix m;
    m.n = n;
    m.sym = sym;
    m.cfg = cfg;
    m.e.assign(size_t(n) * n, ExtElem{});
    return m;
}

LocalMatrix canonical_matrix(Symmetry sym, const Signature& lam, int size,
                             const RingCfg& cfg) {
    for (size_t i = 0; i < lam.size(); ++i)
        if (lam[i] < 0 || lam[i] >= cfg.K)
            throw std::invalid_argument("canonical_matrix: parts must lie in [0, K)");
    LocalMatrix m = LocalMatrix::zero(size, sym, cfg);
    auto ppow = [&](long long k) {
        uint64_t x = 1;
        for (long long i = 0; i < k; ++i) x *= uint64_t(cfg.p);
        return x;
    };
    if (sym == Symmetry::Hermitian) {
        if (static_cast<int>(lam.size()) != size)
            throw std::invalid_argument("canonical_matrix(her): length mismatch");
        for (int i = 0; i < size; ++i) m.at(i, i) = ext_of(ppow(lam[i]));
        return m;
    }
    if (sym == Symmetry::Alternating) {
        if (static_cast<int>(lam.size()) != size / 2)
            throw std::invalid_argument("canonical_matrix(alt): need floor(size/2) parts");
        for (int b = 0; b < size / 2; ++b) {
            uint64_t v = ppow(lam[b]);
            m.at(2 * b, 2 * b + 1) = ext_of(v);
            m.at(2 * b + 1, 2 * b) = ext_of(base_neg(cfg, v));
        }
        return m;
    }
    if (static_cast<int>(lam.size()) != size)
        throw std::invalid_argument("canonical_matrix: length mismatch");
    for (int i = 0; i < size; ++i) m.at(i, i) = ext_of(ppow(lam[i]));
    return m;
}

ExtElem determinant(const LocalMatrix& A) {
    // Laplace expansion with a column-subset table; division-free
    int n = A.n;
    if (n == 0) return ext_of(1);
    if (n > 20) throw std::invalid_argument("determinant: size too large");
    const RingCfg& c = A.cfg;
    std::vector<ExtElem> dp(size_t(1) << n, ExtElem{});
    dp[0] = ext_of(1);
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        ExtElem acc{};
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (uint32_t(1) << j))) continue;
            ExtElem term = ext_mul(c, A.at(row, j), dp[mask ^ (uint32_t(1) << j)]);
            acc = sign > 0 ? ext_add(c, acc, term) : ext_sub(c, acc, term);
            sign = -sign;
        }
        dp[mask] = acc;
    }
    return dp[(size_t(1) << n) - 1];
}

LocalMatrix sample_haar_gl(int n, bool ext_entries, const RingCfg& cfg, Rng& rng) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
        LocalMatrix m = LocalMatrix::zero(n, Symmetry::None, cfg);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = ext_entries ? sample_ext(cfg, rng)
                                         : ext_of(sample_base(cfg, rng));
        Valuation v = ext_val(cfg, determinant(m));
        if (v.exact && v.v == 0) return m;
    }
    throw std::runtime_error("sample_haar_gl: rejection cap exceeded");
}

LocalMatrix sample_haar_symmetric(Symmetry sym, int size, const RingCfg& cfg, Rng& rng) {
    LocalMatrix m = LocalMatrix::zero(size, sym, cfg);
    if (sym == Symmetry::Alternating) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                uint64_t x = sample_base(cfg, rng);
                m.at(i, j) = ext_of(x);
                m.at(j, i) = ext_of(base_neg(cfg, x));
            }
        return m;
    }
    if (sym == Symmetry::Hermitian) {
        if (!cfg.has_ext())
            throw std::invalid_argument("sample_haar_symmetric(her): extension required");
        for (int i = 0; i < size; ++i) {
            m.at(i, i) = ext_of(sample_base(cfg, rng));
            for (int j = i + 1; j < size; ++j) {
                ExtElem x = sample_ext(cfg, rng);
                m.at(i, j) = x;
                m.at(j, i) = ext_conj(cfg, x);
            }
        }
        return m;
    }
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m.at(i, j) = cfg.has_ext() ? sample_ext(cfg, rng) : ext_of(sample_base(cfg, rng));
    return m;
}

LocalMatrix conj_transpose(const LocalMatrix& B) {
    LocalMatrix out = LocalMatrix::zero(B.n, Symmetry::None, B.cfg);
    bool herm = B.cfg.has_ext();
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j)
            out.at(i, j) = herm ? ext_conj(B.cfg, B.at(j, i)) : B.at(j, i);
    return out;
}

LocalMatrix matmul(const LocalMatrix& A, const LocalMatrix& B) {
    if (A.n != B.n) throw std::invalid_argument("matmul: size mismatch");
    const RingCfg& c = A.cfg;
    LocalMatrix out = LocalMatrix::zero(A.n, Symmetry::None, c);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            ExtElem aik = A.at(i, k);
            if (aik.a == 0 && aik.b == 0) continue;
            for (int j = 0; j < A.n; ++j)
                out.at(i, j) = ext_add(c, out.at(i, j), ext_mul(c, aik, B.at(k, j)));
        }
    return out;
}

LocalMatrix sandwich(const LocalMatrix& A, const LocalMatrix& B) {
    if (A.n != B.n) throw std::invalid_argument("sandwich: size mismatch");
    LocalMatrix bt = conj_transpose(B);  // plain transpose when no extension
    LocalMatrix out = matmul(matmul(bt, A), B);
    out.sym = A.sym;
    return out;
}

LocalMatrix sample_invariant(Symmetry sym, const Signature& lam, int size,
                             const RingCfg& cfg, Rng& rng) {
    LocalMatrix pi = canonical_matrix(sym, lam, size, cfg);
    LocalMatrix u = sample_haar_gl(size, sym == Symmetry::Hermitian, cfg, rng);
    return sandwich(pi, u);
}

LocalMatrix corner(const LocalMatrix& A, int k) {
    if (k > A.n) throw std::invalid_argument("corner: k exceeds the matrix size");
    LocalMatrix out = LocalMatrix::zero(k, A.sym, A.cfg);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.at(i, j) = A.at(i, j);
    return out;
}

namespace {

/* Minimum valuation of det over the given square submatrices. */
int min_minor_valuation(const LocalMatrix& A, int k, bool principal_only, bool& exact) {
    const RingCfg& c = A.cfg;
    int best = c.K;
    exact = false;
    std::vector<int> rows(k), cols(k);
    // iterate over k-subsets
    auto subsets = [&](auto&& body) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            body(idx);
            int i = k - 1;
            while (i >= 0 && idx[i] == A.n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    subsets([&](const std::vector<int>& r) {
        auto eval_minor = [&](const std::vector<int>& cset) {
            LocalMatrix sub = LocalMatrix::zero(k, Symmetry::None, c);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(r[i], cset[j]);
            Valuation v = ext_val(c, determinant(sub));
            if (v.exact && v.v < best) {
                best = v.v;
                exact = true;
            }
        };
        if (principal_only) {
            eval_minor(r);
        } else {
            subsets([&](const std::vector<int>& cset) { eval_minor(cset); });
        }
    });
    return best;
}

SNResult assemble_from_partials(const std::vector<long long>& partial, bool censored,
                                int K) {
    // partial[k] = lam_n + ... + lam_{n-k+1}
    std::vector<long long> parts;
    long long prev = 0;
    for (size_t k = 0; k < partial.size(); ++k) {
        parts.push_back(partial[k] - prev);
        prev = partial[k];
    }
    std::reverse(parts.begin(), parts.end());
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) {
            // only possible under censoring; clamp to a valid signature
            censored = true;
            std::sort(parts.rbegin(), parts.rend());
            break;
        }
    (void)K;
    return {Signature(std::move(parts)), !censored};
}

}  // namespace

SNResult sn_minors(const LocalMatrix& A, int size_bound) {
    if (A.n > size_bound) throw std::invalid_argument("sn_minors: size over bound");
    const RingCfg& c = A.cfg;
    if (A.sym == Symmetry::Hermitian || A.sym == Symmetry::None) {
        int n = A.n;
        std::vector<long long> partial;
        bool censored = false;
        for (int k = 1; k <= n; ++k) {
            bool exact = false;
            int v = min_minor_valuation(A, k, false, exact);
            if (!exact) censored = true;
            partial.push_back(v);
        }
        return assemble_from_partials(partial, censored, c.K);
    }
    // alternating: 2k x 2k principal minors, even valuations
    int n = A.n / 2;
    std::vector<long long> partial;
    bool censored = false;
    for (int k = 1; k <= n; ++k) {
        bool exact = false;
        int v = min_minor_valuation(A, 2 * k, true, exact);
        if (!exact) {
            censored = true;
            partial.push_back(c.K);
            continue;
        }
        if (v % 2 != 0) throw std::logic_error("sn_minors(alt): odd minor valuation");
        partial.push_back(v / 2);
    }
    return assemble_from_partials(partial, censored, c.K);
}

namespace {

struct ElimState {
    LocalMatrix m;      // working copy, shrinking
    std::vector<long long> parts;
    bool censored = false;
};

void remove_index(LocalMatrix& a, int idx) {
    LocalMatrix out = LocalMatrix::zero(a.n - 1, a.sym, a.cfg);
    for (int i = 0, io = 0; i < a.n; ++i) {
        if (i == idx) continue;
        for (int j = 0, jo = 0; j < a.n; ++j) {
            if (j == idx) continue;
            out.at(io, jo) = a.at(i, j);
            ++jo;
        }
        ++io;
    }
    a = std::move(out);
}

void remove_two(LocalMatrix& a, int i1, int i2) {
    remove_index(a, std::max(i1, i2));
    remove_index(a, std::min(i1, i2));
}

/* row_k += u * row_j and col_k += conj(u) * col_j, preserving hermitian
 * structure. */
void herm_rowcol_add(LocalMatrix& a, int k, int j, const ExtElem& u) {
    const RingCfg& c = a.cfg;
    for (int l = 0; l < a.n; ++l) a.at(k, l) = ext_add(c, a.at(k, l), ext_mul(c, u, a.at(j, l)));
    ExtElem ub = ext_conj(c, u);
    for (int l = 0; l < a.n; ++l) a.at(l, k) = ext_add(c, a.at(l, k), ext_mul(c, ub, a.at(l, j)));
}

/* row_k += u * row_j and col_k += u * col_j (congruence by I + u e_{k,j}). */
void alt_rowcol_add(LocalMatrix& a, int k, int j, const ExtElem& u) {
    const RingCfg& c = a.cfg;
    for (int l = 0; l < a.n; ++l) a.at(k, l) = ext_add(c, a.at(k, l), ext_mul(c, u, a.at(j, l)));
    for (int l = 0; l < a.n; ++l) a.at(l, k) = ext_add(c, a.at(l, k), ext_mul(c, u, a.at(l, j)));
}

bool all_zero(const LocalMatrix& a) {
    for (const ExtElem& x : a.e)
        if (x.a != 0 || x.b != 0) return false;
    return true;
}

}  // namespace

SNResult sn_elim(const LocalMatrix& A) {
    const RingCfg& c = A.cfg;
    if (A.sym == Symmetry::Hermitian) {
        LocalMatrix a = A;
        std::vector<long long> parts;
        bool censored = false;
        while (a.n > 0) {
            if (all_zero(a)) {
                for (int i = 0; i < a.n; ++i) parts.push_back(c.K);
                censored = true;
                break;
            }
            // locate the minimum valuation
            int best = c.K + 1, bi = -1, bj = -1;
            for (int i = 0; i < a.n; ++i)
                for (int j = 0; j < a.n; ++j) {
                    Valuation v = ext_val(c, a.at(i, j));
                    if (v.exact && v.v < best) {
                        best = v.v;
                        bi = i;
                        bj = j;
                    }
                }
            int m = best;
            int pivot = -1;
            for (int i = 0; i < a.n; ++i) {
                Valuation v = ext_val(c, a.at(i, i));
                if (v.exact && v.v == m) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) {
                // repair the diagonal with a unit multiplier u in {1,-1,s,-s}
                const ExtElem cand[4] = {ext_of(1), ext_of(base_neg(c, 1)),
                                         ExtElem{0, 1}, ExtElem{0, base_neg(c, 1)}};
                for (const ExtElem& u : cand) {
                    LocalMatrix probe = a;
                    herm_rowcol_add(probe, bi, bj, u);
                    Valuation v = ext_val(c, probe.at(bi, bi));
                    if (v.exact && v.v == m) {
                        a = std::move(probe);
                        pivot = bi;
                        break;
                    }
                }
                if (pivot < 0) {
                    // fall back to the minors formula
                    if (A.n <= 6) return sn_minors(A);
                    throw std::runtime_error("sn_elim(her): pivot failure");
                }
            }
            // clear row and column of the pivot
            ExtElem unit = ext_shift_down(c, a.at(pivot, pivot), m);
            ExtElem unit_inv = ext_inv(c, unit);
            for (int k = 0; k < a.n; ++k) {
                if (k == pivot) continue;
                Valuation vk = ext_val(c, a.at(k, pivot));
                if (!vk.exact) continue;  // already 0 mod p^K
                ExtElem q = ext_mul(c, ext_shift_down(c, a.at(k, pivot), m), unit_inv);
                herm_rowcol_add(a, k, pivot, ext_neg(c, q));
            }
            parts.push_back(m);
            remove_index(a, pivot);
        }
        std::sort(parts.rbegin(), parts.rend());
        return {Signature(std::move(parts)), !censored};
    }
    if (A.sym == Symmetry::Alternating) {
        LocalMatrix a = A;
        std::vector<long long> parts;
        bool censored = false;
        while (a.n >= 2) {
            if (all_zero(a)) {
                if (a.n >= 2) {
                    for (int b = 0; b < a.n / 2; ++b) parts.push_back(c.K);
                    censored = true;
                }
                break;
            }
            int best = c.K + 1, bi = -1, bj = -1;
            for (int i = 0; i < a.n; ++i)
                for (int j = i + 1; j < a.n; ++j) {
                    Valuation v = ext_val(c, a.at(i, j));
                    if (v.exact && v.v < best) {
                        best = v.v;
                        bi = i;
                        bj = j;
                    }
                }
            int m = best;
            ExtElem piv = a.at(bi, bj);
            ExtElem unit_inv = ext_inv(c, ext_shift_down(c, piv, m));
            for (int k = 0; k < a.n; ++k) {
                if (k == bi || k == bj) continue;
                // kill a_{k,bj} using row bi, then a_{k,bi} using row bj
                Valuation v1 = ext_val(c, a.at(k, bj));
                if (v1.exact) {
                    ExtElem q = ext_mul(c, ext_shift_down(c, a.at(k, bj), m), unit_inv);
                    alt_rowcol_add(a, k, bi, ext_neg(c, q));
                }
                Valuation v2 = ext_val(c, a.at(k, bi));
                if (v2.exact) {
                    // a_{bj,bi} = -pi^m u, so add +q' row bj
                    ExtElem q = ext_mul(c, ext_shift_down(c, a.at(k, bi), m), unit_inv);
                    alt_rowcol_add(a, k, bj, q);
                }
            }
            parts.push_back(m);
            remove_two(a, bi, bj);
        }
        std::sort(parts.rbegin(), parts.rend());
        return {Signature(std::move(parts)), !censored};
    }
    throw std::invalid_argument("sn_elim: symmetry tag required");
}

}  // namespace padichl::randmat
