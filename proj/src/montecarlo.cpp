#include "padichl/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace padichl::veristat {

using namespace randmat;
using padicring::RingCfg;
using padicring::Rng;

namespace {

long long prime_from_t(const Rat& t) {
    if (!t.num().is_one()) throw std::invalid_argument("experiment: t must be 1/p");
    long long p = t.den().to_ll();
    return p;
}

struct Experiment {
    LawSpec spec;
    RingCfg cfg;

    SNResult draw(Rng& rng) const {
        using Case = LawSpec::Case;
        switch (spec.family) {
            case LawSpec::Family::Haar: {
                int size = spec.kase == Case::Her ? spec.n
                           : spec.kase == Case::AltEven ? 2 * spec.n
                                                        : 2 * spec.n + 1;
                Symmetry sym =
                    spec.kase == Case::Her ? Symmetry::Hermitian : Symmetry::Alternating;
                return sn_elim(sample_haar_symmetric(sym, size, cfg, rng));
            }
            case LawSpec::Family::Corner: {
                if (spec.given.empty())
                    throw std::invalid_argument("corner experiment: empty conditioning");
                Symmetry sym =
                    spec.kase == Case::Her ? Symmetry::Hermitian : Symmetry::Alternating;
                int size, csize;
                if (spec.kase == Case::AltOdd) {
                    size = 2 * static_cast<int>(spec.given.size()) + 1;
                    csize = size - 1;
                } else if (spec.kase == Case::AltEven) {
                    size = 2 * static_cast<int>(spec.given.size());
                    csize = size - 1;
                } else {
                    size = static_cast<int>(spec.given.size());
                    csize = size - 1;
                }
                LocalMatrix a = sample_invariant(sym, spec.given, size, cfg, rng);
                return sn_elim(corner(a, csize));
            }
            case LawSpec::Family::Product: {
                if (spec.mu.empty() || spec.nu.empty())
                    throw std::invalid_argument("product experiment: empty mu or nu");
                Symmetry sym =
                    spec.kase == Case::Her ? Symmetry::Hermitian : Symmetry::Alternating;
                int size = static_cast<int>(spec.mu.size());
                LocalMatrix a =
                    sample_invariant(sym, spec.nu, size, cfg, rng);
                bool ext = spec.kase == Case::Her;
                LocalMatrix u1 = sample_haar_gl(size, ext, cfg, rng);
                LocalMatrix u2 = sample_haar_gl(size, ext, cfg, rng);
                LocalMatrix b =
                    matmul(matmul(u1, canonical_matrix(Symmetry::None, spec.mu, size, cfg)),
                           u2);
                return sn_elim(sandwich(a, b));
            }
            case LawSpec::Family::CornerInvertible: {
                Symmetry sym =
                    spec.kase == Case::Her ? Symmetry::Hermitian : Symmetry::Alternating;
                int ambient = spec.kase == Case::Her ? spec.m : 2 * spec.m;
                int csize = spec.kase == Case::Her ? spec.n
                            : spec.kase == Case::AltEven ? 2 * spec.n
                                                         : 2 * spec.n + 1;
                for (int attempt = 0; attempt < 100000; ++attempt) {
                    LocalMatrix a = sample_haar_symmetric(sym, ambient, cfg, rng);
                    padicring::Valuation v = padicring::ext_val(cfg, determinant(a));
                    if (!v.exact || v.v != 0) continue;
                    return sn_elim(corner(a, csize));
                }
                throw std::runtime_error("corner_invertible: rejection cap exceeded");
            }
            default:
                throw std::invalid_argument("run_experiment: unsupported family");
        }
    }
};

}  // namespace

Histogram run_experiment(const LawSpec& spec, uint64_t samples, uint64_t seed,
                         int workers, int precision, long long cutoff,
                         std::optional<long long> nonresidue) {
    if (precision < cutoff + 4)
        throw std::invalid_argument("run_experiment: require K >= cutoff + 4");
    long long p = prime_from_t(spec.t);
    RingCfg cfg = RingCfg::make(p, precision, nonresidue);
    Experiment ex{spec, cfg};

    if (workers < 1) workers = 1;
    std::vector<Histogram> partial(workers);
    auto work = [&](int w) {
        Histogram& h = partial[w];
        h.cutoff = cutoff;
        for (uint64_t i = w; i < samples; i += uint64_t(workers)) {
            Rng rng(seed, i);
            SNResult r = ex.draw(rng);
            ++h.total;
            if (!r.reliable) {
                ++h.discarded;
                continue;
            }
            if (!r.sn.empty() && r.sn[0] > cutoff)
                ++h.tail_bin;
            else
                ++h.counts[r.sn];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    Histogram out;
    out.cutoff = cutoff;
    for (const Histogram& h : partial) {
        out.total += h.total;
        out.discarded += h.discarded;
        out.tail_bin += h.tail_bin;
        for (const auto& [s, c] : h.counts) out.counts[s] += c;
    }
    return out;
}

std::map<std::vector<Signature>, uint64_t> run_joint_experiment(
    const LawSpec& spec, uint64_t samples, uint64_t seed, int workers, int precision,
    std::optional<long long> nonresidue) {
    long long p = prime_from_t(spec.t);
    bool her = spec.kase == LawSpec::Case::Her;
    RingCfg cfg = RingCfg::make(p, precision, nonresidue);
    Symmetry sym = her ? Symmetry::Hermitian : Symmetry::Alternating;

    auto draw_chain = [&](Rng& rng) -> std::optional<std::vector<Signature>> {
        std::vector<Signature> chain;
        if (spec.family == LawSpec::Family::JointCorners) {
            int top = her ? spec.n : 2 * spec.n;
            LocalMatrix a = sample_haar_symmetric(sym, top, cfg, rng);
            for (int size = her ? 1 : 2; size <= top; ++size) {
                SNResult r = sn_elim(corner(a, size));
                if (!r.reliable) return std::nullopt;
                chain.push_back(r.sn);
            }
            return chain;
        }
        if (spec.family == LawSpec::Family::JointProduct) {
            int size = spec.n;
            LocalMatrix a = sample_haar_symmetric(sym, her ? size : 2 * size, cfg, rng);
            SNResult r = sn_elim(a);
            if (!r.reliable) return std::nullopt;
            chain.push_back(r.sn);
            for (int step = 0; step < spec.k; ++step) {
                LocalMatrix b = sample_haar_symmetric(Symmetry::None, a.n, cfg, rng);
                a = sandwich(a, b);
                r = sn_elim(a);
                if (!r.reliable) return std::nullopt;
                chain.push_back(r.sn);
            }
            return chain;
        }
        throw std::invalid_argument("run_joint_experiment: family must be a joint one");
    };

    if (workers < 1) workers = 1;
    std::vector<std::map<std::vector<Signature>, uint64_t>> partial(workers);
    auto work = [&](int w) {
        for (uint64_t i = w; i < samples; i += uint64_t(workers)) {
            Rng rng(seed, i);
            auto chain = draw_chain(rng);
            if (chain) ++partial[w][*chain];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::map<std::vector<Signature>, uint64_t> out;
    for (const auto& h : partial)
        for (const auto& [k, v] : h) out[k] += v;
    return out;
}

namespace {

/* Regularized upper incomplete gamma Q(a, x), series/continued-fraction. */
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q");
    if (x == 0) return 1.0;
    auto gln = std::lgamma(a);
    if (x < a + 1.0) {
        // lower series
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - gln);
        return 1.0 - p;
    }
    // continued fraction
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double chi_square_pvalue(double chi2, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof >= 1");
    return gamma_q(dof / 2.0, chi2 / 2.0);
}

ComparisonReport compare(const Histogram& h, const ExactDistribution& ref,
                         double p_threshold, double discard_cap) {
    if (h.cutoff != ref.cutoff)
        throw std::invalid_argument("compare: cutoff mismatch");
    ComparisonReport rep;
    uint64_t kept = h.total - h.discarded;
    if (kept == 0) throw std::invalid_argument("compare: no kept samples");
    rep.discard_fraction = double(h.discarded) / double(h.total);

    double n = double(kept);
    std::vector<std::pair<double, double>> cells;  // (expected, observed)
    double tail_exp = ref.tail_mass.to_double() * n;
    double tail_obs = double(h.tail_bin);
    for (const auto& [lam, p] : ref.atoms) {
        double expv = p.to_double() * n;
        auto it = h.counts.find(lam);
        double obs = it == h.counts.end() ? 0.0 : double(it->second);
        if (expv >= 5.0)
            cells.push_back({expv, obs});
        else {
            tail_exp += expv;
            tail_obs += obs;
        }
    }
    // observed atoms the reference does not know become tail mass as well
    for (const auto& [lam, c] : h.counts)
        if (!ref.atoms.count(lam)) tail_obs += double(c);
    if (tail_exp > 0 || tail_obs > 0) {
        if (tail_exp >= 5.0 || cells.empty())
            cells.push_back({tail_exp, tail_obs});
        else if (!cells.empty()) {
            cells.back().first += tail_exp;
            cells.back().second += tail_obs;
        }
    }
    if (cells.size() < 2) throw std::invalid_argument("compare: degenerate cell layout");

    double chi2 = 0, tv = 0;
    for (const auto& [expv, obs] : cells) {
        if (expv <= 0) {
            if (obs > 0) chi2 += 1e18;  // impossible cell observed
            continue;
        }
        chi2 += (obs - expv) * (obs - expv) / expv;
        tv += std::fabs(obs - expv) / n;
    }
    rep.tv_distance = tv / 2.0;
    rep.chi_square = chi2;
    rep.dof = static_cast<int>(cells.size()) - 1;
    rep.p_value = chi_square_pvalue(chi2, rep.dof);
    rep.pass = rep.p_value > p_threshold && rep.discard_fraction < discard_cap;
    return rep;
}

Histogram multinomial_sample(const ExactDistribution& ref, uint64_t samples,
                             uint64_t seed) {
    Histogram h;
    h.cutoff = ref.cutoff;
    // cumulative thresholds scaled to 2^63 for cheap uniform comparison
    std::vector<std::pair<double, const Signature*>> cumul;
    double acc = 0;
    for (const auto& [lam, p] : ref.atoms) {
        acc += p.to_double();
        cumul.push_back({acc, &lam});
    }
    for (uint64_t i = 0; i < samples; ++i) {
        Rng rng(seed, i);
        double u = double(rng.next() >> 11) * 0x1.0p-53;
        ++h.total;
        bool placed = false;
        for (const auto& [threshold, lam] : cumul) {
            if (u < threshold) {
                ++h.counts[*lam];
                placed = true;
                break;
            }
        }
        if (!placed) ++h.tail_bin;
    }
    return h;
}

namespace {

/* F_q and F_{q^2} arithmetic for the residue-field enumerations. */
struct Fq2 {
    long long q;     // odd prime
    long long d;     // non-residue mod q
    using E = std::pair<long long, long long>;
    E add(E x, E y) const { return {(x.first + y.first) % q, (x.second + y.second) % q}; }
    E sub(E x, E y) const {
        return {(x.first - y.first % q + q) % q, (x.second - y.second % q + q) % q};
    }
    E mul(E x, E y) const {
        long long a = (x.first * y.first + x.second * y.second % q * d) % q;
        long long b = (x.first * y.second + x.second * y.first) % q;
        return {a, b};
    }
    E conj(E x) const { return {x.first, (q - x.second) % q}; }
    bool zero(E x) const { return x.first == 0 && x.second == 0; }
    E inv(E x) const {
        long long nrm = ((x.first * x.first - x.second * x.second % q * d) % q + q) % q;
        long long ninv = inv_mod(nrm);
        E cj = conj(x);
        return {cj.first * ninv % q, cj.second * ninv % q};
    }
    long long inv_mod(long long a) const {
        long long r0 = q, r1 = a % q, s0 = 0, s1 = 1;
        while (r1) {
            long long k = r0 / r1;
            std::swap(r0 -= k * r1, r1);
            std::swap(s0 -= k * s1, s1);
        }
        return ((s0 % q) + q) % q;
    }
    int rank(std::vector<std::vector<E>> m) const {
        int n = static_cast<int>(m.size());
        int r = 0;
        for (int col = 0; col < n && r < n; ++col) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (!zero(m[i][col])) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m[r], m[piv]);
            E ip = inv(m[r][col]);
            for (int i = r + 1; i < n; ++i) {
                if (zero(m[i][col])) continue;
                E f = mul(m[i][col], ip);
                for (int j = col; j < n; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j]));
            }
            ++r;
        }
        return r;
    }
};

long long smallest_nonresidue(long long q) {
    auto pw = [&](long long b, long long e) {
        long long acc = 1 % q;
        b %= q;
        while (e) {
            if (e & 1) acc = acc * b % q;
            b = b * b % q;
            e >>= 1;
        }
        return acc;
    };
    for (long long d = 2; d < q; ++d)
        if (pw(d, (q - 1) / 2) == q - 1) return d;
    throw std::logic_error("no nonresidue");
}

template <typename Body>
void enumerate_tuples(long long base, int count, std::vector<long long>& cur, Body&& body) {
    if (count == 0) {
        body(cur);
        return;
    }
    for (long long v = 0; v < base; ++v) {
        cur.push_back(v);
        enumerate_tuples(base, count - 1, cur, body);
        cur.pop_back();
    }
}

}  // namespace

std::map<int, uint64_t> brute_corank_distribution(MatCase kase, int size, long long q) {
    std::map<int, uint64_t> out;
    if (kase == MatCase::Alt) {
        int free_entries = size * (size - 1) / 2;
        double space = std::pow(double(q), free_entries);
        if (space > 1e7) throw std::invalid_argument("brute force: space too large");
        Fq2 f{q, 1};  // second component unused
        std::vector<long long> cur;
        enumerate_tuples(q, free_entries, cur, [&](const std::vector<long long>& vals) {
            std::vector<std::vector<Fq2::E>> m(size, std::vector<Fq2::E>(size, {0, 0}));
            int idx = 0;
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    m[i][j] = {vals[idx], 0};
                    m[j][i] = {(q - vals[idx]) % q, 0};
                    ++idx;
                }
            ++out[size - f.rank(m)];
        });
        return out;
    }
    // hermitian over F_{q^2}: above-diagonal entries are pairs, diagonal in F_q
    int off = size * (size - 1) / 2;
    double space = std::pow(double(q), size + 2 * off);
    if (space > 1e7) throw std::invalid_argument("brute force: space too large");
    Fq2 f{q, smallest_nonresidue(q)};
    std::vector<long long> cur;
    enumerate_tuples(q, size + 2 * off, cur, [&](const std::vector<long long>& vals) {
        std::vector<std::vector<Fq2::E>> m(size, std::vector<Fq2::E>(size, {0, 0}));
        int idx = 0;
        for (int i = 0; i < size; ++i) m[i][i] = {vals[idx++], 0};
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                Fq2::E x{vals[idx], vals[idx + 1]};
                idx += 2;
                m[i][j] = x;
                m[j][i] = f.conj(x);
            }
        ++out[size - f.rank(m)];
    });
    return out;
}

Rat brute_invertible_fraction(MatCase kase, int size, long long q) {
    auto dist = brute_corank_distribution(kase, size, q);
    uint64_t total = 0, inv = 0;
    for (const auto& [corank, count] : dist) {
        total += count;
        if (corank == 0) inv += count;
    }
    return Rat(exactnum::BigInt(static_cast<long long>(inv)),
               exactnum::BigInt(static_cast<long long>(total)));
}

namespace {

/* Smith-form partial sums of an integer matrix: lam_n + ... + lam_{n-k+1}
 * equals the minimal p-valuation over k x k minors. */
Signature integer_smith(const std::vector<std::vector<long long>>& m, long long p) {
    int n = static_cast<int>(m.size());
    auto valuation = [&](long long x) {
        if (x == 0) return 1000;
        int v = 0;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    std::vector<long long> partial;
    for (int k = 1; k <= n; ++k) {
        int best = 1000;
        std::vector<int> rows(k), cols(k);
        auto iter_subsets = [&](std::vector<int>& idx, auto&& body) {
            for (int i = 0; i < k; ++i) idx[i] = i;
            for (;;) {
                body();
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        };
        iter_subsets(rows, [&]() {
            iter_subsets(cols, [&]() {
                // integer determinant by fraction-free elimination is overkill
                // at these sizes; expand recursively
                std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
                // Laplace by first row
                auto det = [&](auto&& self, std::vector<std::vector<long long>>& a) -> long long {
                    int s = static_cast<int>(a.size());
                    if (s == 1) return a[0][0];
                    long long acc = 0;
                    for (int j = 0; j < s; ++j) {
                        if (a[0][j] == 0) continue;
                        std::vector<std::vector<long long>> minor(
                            s - 1, std::vector<long long>(s - 1));
                        for (int i = 1; i < s; ++i) {
                            int cc = 0;
                            for (int c2 = 0; c2 < s; ++c2) {
                                if (c2 == j) continue;
                                minor[i - 1][cc++] = a[i][c2];
                            }
                        }
                        long long term = a[0][j] * self(self, minor);
                        acc += (j % 2 == 0) ? term : -term;
                    }
                    return acc;
                };
                best = std::min(best, valuation(det(det, sub)));
            });
        });
        partial.push_back(best);
    }
    std::vector<long long> parts;
    long long prev = 0;
    for (long long s : partial) {
        parts.push_back(s - prev);
        prev = s;
    }
    std::reverse(parts.begin(), parts.end());
    return Signature(std::move(parts));
}

}  // namespace

uint64_t brute_coset_count(const Signature& mu, int n, long long p) {
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("brute_coset_count: length mismatch");
    if (!mu.all_nonnegative())
        throw std::invalid_argument("brute_coset_count: nonnegative mu required");
    long long total_val = mu.sum();
    uint64_t count = 0;
    double space_guard = 0;
    // lower-triangular Hermite representatives: diagonal p^{a_i}, row entries
    // left of the diagonal reduced mod p^{a_i}
    std::vector<long long> a(n, 0);
    auto rec_diag = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            if (remaining != 0) return;
            // entry (i,j), j < i, ranges over [0, p^{a_i})
            std::vector<long long> caps;
            double cells = 1;
            for (int r = 0; r < n; ++r)
                for (int c2 = 0; c2 < r; ++c2) {
                    long long cap = 1;
                    for (int e = 0; e < a[r]; ++e) cap *= p;
                    caps.push_back(cap);
                    cells *= double(cap);
                }
            space_guard += cells;
            if (space_guard > 1e7)
                throw std::invalid_argument("brute_coset_count: space too large");
            std::vector<long long> entry(caps.size(), 0);
            auto rec_fill = [&](auto&& fill, size_t idx) -> void {
                if (idx == caps.size()) {
                    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
                    size_t e2 = 0;
                    for (int r = 0; r < n; ++r) {
                        long long diag = 1;
                        for (int e = 0; e < a[r]; ++e) diag *= p;
                        m[r][r] = diag;
                        for (int c2 = 0; c2 < r; ++c2) m[r][c2] = entry[e2++];
                    }
                    if (integer_smith(m, p) == mu) ++count;
                    return;
                }
                for (long long v = 0; v < caps[idx]; ++v) {
                    entry[idx] = v;
                    fill(fill, idx + 1);
                }
            };
            rec_fill(rec_fill, 0);
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            a[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec_diag(rec_diag, 0, total_val);
    return count;
}

}  // namespace padichl::veristat
