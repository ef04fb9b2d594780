#pragma once

#include <vector>

#include "padichl/padic.hpp"
#include "padichl/signature.hpp"

namespace padichl::randmat {

using padicring::ExtElem;
using padicring::RingCfg;
using padicring::Rng;
using sigcore::Signature;

enum class Symmetry { None, Alternating, Hermitian };

/* Square matrix over Z/p^K or its quadratic extension.  Alternating and
 * plain matrices keep b = 0 in every entry; Hermitian matrices satisfy
 * a_ij = conj(a_ji) with a fixed-subring diagonal. */
struct LocalMatrix {
    int n = 0;
    Symmetry sym = Symmetry::None;
    RingCfg cfg;
    std::vector<ExtElem> e;

    static LocalMatrix zero(int n, Symmetry sym, const RingCfg& cfg);
    ExtElem& at(int i, int j) { return e[size_t(i) * n + j]; }
    const ExtElem& at(int i, int j) const { return e[size_t(i) * n + j]; }
};

struct SNResult {
    Signature sn;
    bool reliable = true;
};

/* diag(pi^{lam_1}, ...) for Hermitian; 2x2 blocks (0, pi^{lam_i}; -, 0) for
 * alternating, with a zero trailing row/column at odd sizes. */
LocalMatrix canonical_matrix(Symmetry sym, const Signature& lam, int size,
                             const RingCfg& cfg);

/* Haar on GL_n: uniform entries conditioned on a unit determinant. */
LocalMatrix sample_haar_gl(int n, bool ext_entries, const RingCfg& cfg, Rng& rng);
/* i.i.d. additive-Haar entries subject to the symmetry. */
LocalMatrix sample_haar_symmetric(Symmetry sym, int size, const RingCfg& cfg, Rng& rng);
/* U pi_lam U^T (alternating) or U pi_lam U^* (Hermitian) with U Haar. */
LocalMatrix sample_invariant(Symmetry sym, const Signature& lam, int size,
                             const RingCfg& cfg, Rng& rng);

/* Determinant in the ring, division-free. */
ExtElem determinant(const LocalMatrix& A);

/* Singular numbers through minor-valuation minima: all k x k minors in the
 * Hermitian case, 2k x 2k principal minors in the alternating case. */
SNResult sn_minors(const LocalMatrix& A, int size_bound = 6);
/* Congruence elimination fast path; agrees with sn_minors on reliable
 * samples. */
SNResult sn_elim(const LocalMatrix& A);

LocalMatrix corner(const LocalMatrix& A, int k);
/* B^T A B (alternating / plain) or B^* A B (Hermitian). */
LocalMatrix sandwich(const LocalMatrix& A, const LocalMatrix& B);
LocalMatrix matmul(const LocalMatrix& A, const LocalMatrix& B);
LocalMatrix conj_transpose(const LocalMatrix& B);

}  // namespace padichl::randmat
