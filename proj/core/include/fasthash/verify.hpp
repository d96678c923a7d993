#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fasthash/seed.hpp"

// Property-verification harness.
//
// Exhaustive mode enumerates *every* seed of a scheme at parameters small
// enough that seed-space x key-space stays below eval_budget, so results are
// exact counts, reproducible bit-for-bit.  Statistical mode drives the
// production-width schemes with random seeds and adversarially structured
// key pairs and compares empirical rates against the analytic bounds plus
// three binomial standard errors.
//
// The analytic bounds used everywhere (and quoted in the README):
//
//   universal multiply-shift      collision prob <= 2/2^l
//   universal multiply-mod-prime  collision prob <= 1/m  (a != 0)
//   strongly universal schemes    every pairwise event prob = 1/m^2
//   polynomial over a field       <= d collision points per string pair
//   composed polynomial hash      collision prob <= 2/m for length <= p/m
//   Chebyshev for sampling        Pr[|X - mu| >= q sigma] <= 1/q^2

namespace fasthash::verify {

// Hard cap on exhaustive work: seed-space x key-space (and the pair-scan
// seed-space x pair-count) must stay below this; anything bigger is refused
// rather than silently subsampled.
inline constexpr std::uint64_t eval_budget = 1'000'000'000;

enum class Scheme {
    ms_universal,
    ms_strong,
    mmp_universal,
    mmp_strong,
    vms,
    pms,
    prefix_pms,
    naive_vector,
};

const char* scheme_name(Scheme s);

// Parameter set for one enumeration or statistical run.  Which fields
// matter depends on the scheme: w/out_bits always; wbar for the strong
// shift schemes; dim for vector schemes (for prefix_pms it is the largest
// even length); prime and m for multiply-mod-prime surrogates.
struct SchemeSpec {
    Scheme scheme = Scheme::ms_universal;
    int w = 0;
    int out_bits = 0;
    int wbar = 0;
    int dim = 0;
    std::uint64_t prime = 0;
    std::uint64_t m = 0;
    // prefix_pms only: compare only key pairs of different lengths
    bool cross_length_only = false;
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t cost)
        : std::runtime_error("exhaustive enumeration refused: estimated " +
                             std::to_string(cost) + " evaluations exceeds budget " +
                             std::to_string(eval_budget)),
          estimated_cost(cost) {}
    std::uint64_t estimated_cost;
};

using Key = std::vector<std::uint64_t>;

struct CollisionReport {
    std::uint64_t seed_count = 0;
    std::uint64_t worst_collisions = 0;
    Key worst_x, worst_y;

    double probability() const {
        return static_cast<double>(worst_collisions) / static_cast<double>(seed_count);
    }
};

// Max over all key pairs of Pr_seed[h(x) = h(y)], exact.  For naive_vector
// the canonical adversarial pair (all zeros vs. all top bits) is evaluated
// first; if it collides for every seed the maximum is already 1 and the
// full pair scan is skipped, which keeps the check exact yet affordable at
// w = 8.  Everything else must fit the budget or BudgetExceeded is thrown.
CollisionReport exhaustive_collision_probability(const SchemeSpec& spec,
                                                 int workers = 0);

// Pr_seed[h(x) = h(y)] for one specific key pair, over the full seed space.
CollisionReport pair_collision_probability(const SchemeSpec& spec, const Key& x,
                                           const Key& y, int workers = 0);

// Zero-collision check for multiply-shift keys that differ only in the top
// out_bits bits (the shift cannot mix those differences away).
CollisionReport exhaustive_top_bit_pairs(const SchemeSpec& spec, int workers = 0);

struct PairwiseReport {
    std::uint64_t seed_count = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t min_event_count = 0;
    std::uint64_t max_event_count = 0;
    double expected_probability = 0;  // 1/m^2
    double max_abs_deviation = 0;     // max |count/seeds - 1/m^2|
};

// Full pairwise-event census for schemes claiming strong universality:
// counts every (x != y, q, r) event over every seed.  Deviation 0 means
// exactly strongly universal.
PairwiseReport exhaustive_pairwise_distribution(const SchemeSpec& spec,
                                                int workers = 0);

// ------------------------------------------------------------ statistical ---

enum class PairFamily { identical, high_bit, pow2_delta, consecutive, random_pair };

const char* family_name(PairFamily f);

struct StatConfig {
    SchemeSpec spec;  // ms_universal / ms_strong / mmp_strong (prime = 0 means 2^89-1)
    PairFamily family = PairFamily::high_bit;
    std::uint64_t trials = 1u << 22;
};

struct StatReport {
    std::uint64_t trials = 0;
    std::uint64_t collisions = 0;
    double rate = 0;
    double bound = 0;      // analytic collision bound
    double threshold = 0;  // bound + 3 binomial standard errors
    bool pass = false;
};

// Collision rate over fresh random seeds and family-structured key pairs.
// Requires trials >= 10^4.
StatReport statistical_collision_test(const StatConfig& cfg, SeedSource& src);

// ------------------------------------------------------------- chebyshev ---

struct ChebyshevConfig {
    std::uint64_t universe = 1'000'000;  // keys 0 .. universe-1
    int key_bits = 35;
    int out_bits = 30;
    std::uint64_t threshold = 0;  // t; sampling probability is t/2^out_bits
    double q = 10.0;
    std::uint64_t trials = 200;
};

struct ChebyshevReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;  // trials with |X - mu| >= q sigma
    double failure_fraction = 0;
    double bound = 0;    // 1/q^2
    double allowed = 0;  // slack-adjusted acceptance line (4x bound)
    bool pass = false;
};

// Fraction of seeds for which the sample count deviates from its mean by at
// least q standard deviations.  Requires trials >= 100 and threshold > 0
// (t = 0 can never deviate and is refused as degenerate).
ChebyshevReport chebyshev_trial(const ChebyshevConfig& cfg, SeedSource& src);

// ------------------------------------------------- arithmetic self-checks ---

struct IdentityReport {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool pass = false;
};

// Known-answer test for the 2^89-1 reduction: builds k*p + r with plain
// shift/borrow arithmetic (independently of the production multiply path)
// and demands reduce(k*p + r) == r, plus commutativity/distributivity spot
// identities.  faulty_reduce deliberately breaks the reduction by one to
// prove the harness would catch such a bug.
IdentityReport mersenne_identity_check(std::uint64_t cases, bool faulty_reduce,
                                       SeedSource& src);

struct RootBoundReport {
    std::uint64_t pairs = 0;
    std::uint64_t worst_roots = 0;    // most collision points seen for one pair
    std::uint64_t worst_allowed = 0;  // that pair's degree bound
    bool pass = false;
};

// For random distinct coefficient strings over Z_p (first char nonzero,
// length <= max_len), counts evaluation points where the two polynomials
// agree, exhaustively over all p points; must be <= degree <= max_len - 1.
RootBoundReport poly_root_bound_check(std::uint64_t p, std::uint64_t pair_count,
                                      std::size_t max_len, SeedSource& src);

struct ComposedReport {
    std::uint64_t pairs = 0;
    std::uint64_t seed_triples = 0;     // p^3
    std::uint64_t worst_collisions = 0; // over all (a,b,c) for the worst pair
    double bound = 0;                   // 2/m
    bool pass = false;
};

// Exact collision count of ((a*P_c(x) + b) mod p) mod m over *all* (a,b,c)
// seed triples for random string pairs of length <= p/m.
ComposedReport composed_collision_check(std::uint64_t p, std::uint64_t m,
                                        std::uint64_t pair_count, std::size_t max_len,
                                        SeedSource& src);

// Exact collision count over all (a,b,c) in [p]^3 for one fixed pair of
// coefficient strings (values in [p]); the building block of the check
// above, exported so it can be cross-validated against a brute-force
// triple loop.
std::uint64_t composed_pair_collisions(std::uint64_t p, std::uint64_t m,
                                       const std::vector<std::uint64_t>& x,
                                       const std::vector<std::uint64_t>& y);

// ------------------------------------------------------------ bound table ---

inline double bound_ms_universal(int out_bits) { return std::ldexp(2.0, -out_bits); }
inline double bound_universal(double m) { return 1.0 / m; }
inline double bound_strong_pairwise(double m) { return 1.0 / (m * m); }
inline double bound_poly_roots(double d, double p) { return d / p; }
inline double bound_composed(double m) { return 2.0 / m; }
inline double bound_chebyshev(double q) { return 1.0 / (q * q); }

// ----------------------------------------------------------------- suites ---

struct CheckRecord {
    std::string check;   // what was measured
    std::string scheme;
    std::string params;  // comma-separated key:value pairs, no spaces
    double analytic_bound = 0;
    double measured = 0;
    bool pass = false;
};

// scheme=... params=... analytic_bound=... measured=... pass=...
std::string format_record(const CheckRecord& r);

// Deterministic: enumerations plus fixed-seed arithmetic checks.
std::vector<CheckRecord> run_exhaustive_suite(bool faulty_reduce = false,
                                              int workers = 0);

// Randomized checks at production widths; seeds come from src.
std::vector<CheckRecord> run_statistical_suite(SeedSource& src);

}  // namespace fasthash::verify
