#pragma once

#include "padichl/laws.hpp"
#include "padichl/matrices.hpp"

namespace padichl::veristat {

using exactnum::Rat;
using lawbook::ExactDistribution;
using lawbook::LawSpec;
using lawbook::MatCase;
using sigcore::Signature;

struct Histogram {
    std::map<Signature, uint64_t> counts;
    uint64_t discarded = 0;
    uint64_t total = 0;
    uint64_t tail_bin = 0;  // reliable outcomes beyond the cutoff
    long long cutoff = 0;

    bool operator==(const Histogram&) const = default;
};

/* Runs the matrix experiment matching the law: haar samples the symmetric
 * matrix directly; product builds an invariant A and B = U1 pi_mu U2;
 * corner takes the top-left corner of an invariant matrix;
 * corner_invertible conditions a Haar matrix on invertibility.  The sample
 * with index i draws from the rng stream (seed, i), so the histogram is
 * independent of the worker count.  Requires spec.t = 1/p and K >= cutoff+4. */
Histogram run_experiment(const LawSpec& spec, uint64_t samples, uint64_t seed,
                         int workers, int precision, long long cutoff,
                         std::optional<long long> nonresidue = {});

/* Joint chains: corners records the SN of every top-left corner of one
 * sample (sizes 2..2n alt, 1..n her, smallest first); product records the
 * SN chain of A, B1*A B1, ... with i.i.d. Haar B's. */
std::map<std::vector<Signature>, uint64_t> run_joint_experiment(
    const LawSpec& spec, uint64_t samples, uint64_t seed, int workers, int precision,
    std::optional<long long> nonresidue = {});

struct ComparisonReport {
    double tv_distance = 0;
    double chi_square = 0;
    int dof = 0;
    double p_value = 0;
    double discard_fraction = 0;
    bool pass = false;
};

/* Pearson chi-square against the exact law; cells with expected count < 5
 * are merged into the tail cell. */
ComparisonReport compare(const Histogram& h, const ExactDistribution& ref,
                         double p_threshold = 1e-3, double discard_cap = 1e-2);

/* Direct multinomial draws from an exact distribution (calibration runs). */
Histogram multinomial_sample(const ExactDistribution& ref, uint64_t samples,
                             uint64_t seed);

/* Upper-tail chi-square p-value. */
double chi_square_pvalue(double chi2, int dof);

/* Exhaustive enumeration over the residue field. */
Rat brute_invertible_fraction(MatCase kase, int size, long long q);
/* Number of left cosets K pi_mu K / K, counted over Hermite-form
 * representatives with Smith form mu. */
uint64_t brute_coset_count(const Signature& mu, int n, long long p);
/* corank -> count over all symmetric-class matrices mod p. */
std::map<int, uint64_t> brute_corank_distribution(MatCase kase, int size, long long q);

}  // namespace padichl::veristat
