#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fasthash/int_hash.hpp"
#include "fasthash/seed.hpp"

// Threshold sampling coordinated across sets.
//
// A sampler is a strongly universal hash h into [m] plus a threshold t; key
// x is sampled iff h(x) < t, so each key is kept with probability exactly
// t/m.  Because membership depends only on (h, t, x), samples of different
// sets taken with the *same* sampler compose exactly:
//
//     sample(B union C) == sample(B) union sample(C), etc.
//
// |S| * m / t is an unbiased estimator of the originating set's size, and
// Chebyshev's inequality bounds its error: deviations of q standard errors
// happen with probability at most 1/q^2.

namespace fasthash {

struct Sampler {
    AffineSeed seed;          // strong multiply-shift over w-bit keys
    std::uint64_t threshold = 0;  // t in [0, 2^out_bits]

    std::uint64_t range() const { return std::uint64_t{1} << seed.out_bits; }
    bool sampled(std::uint64_t key) const { return ms_strong(seed, key) < threshold; }

    friend bool operator==(const Sampler&, const Sampler&) = default;
};

// Draws a sampler with an out_bits-bit range for w-bit keys.
Sampler draw_sampler(SeedSource& src, int w, int out_bits, std::uint64_t threshold);

// Sample of one set: the kept keys (sorted, deduplicated) plus the sampler
// they were taken with, so coordination can be enforced when combining.
struct Sample {
    Sampler sampler;
    std::vector<std::uint64_t> keys;
};

Sample sample_set(const Sampler& s, std::span<const std::uint64_t> keys);

// |S| * m / t.  Throws std::invalid_argument when t = 0 (nothing can be
// sampled, so the set size cannot be estimated).
double estimate_size(const Sample& s);

enum class SetOp { set_union, set_intersection, set_difference, set_symmetric_difference };

// Combines per-set samples into the sample of the combined set.  Both
// arguments must carry the identical sampler; otherwise membership of the
// result would be meaningless and std::invalid_argument is thrown.
Sample combine(SetOp op, const Sample& a, const Sample& b);

}  // namespace fasthash
