#pragma once

#include <cstdint>
#include <stdexcept>

#include "fasthash/mersenne.hpp"
#include "fasthash/seed.hpp"

// Hash functions for fixed-width integer keys.
//
// Two families, each in a universal and a strongly universal flavor:
//
//   multiply-shift       h(x) = (a*x mod 2^w) >> (w - l), a odd
//                        collision probability <= 2/2^l for x != y
//
//   multiply-shift, strong
//                        h(x) = ((a*x + b) mod 2^wbar) >> (wbar - l)
//                        with wbar >= w + l - 1; every pair of keys lands on
//                        every pair of buckets with probability exactly 1/2^2l
//
//   multiply-mod-prime   h(x) = ((a*x + b) mod p) mod m over p = 2^89 - 1
//                        universal needs a != 0 (probability < 1/m);
//                        the strong flavor allows a = 0 and is exactly
//                        pairwise uniform when m = p.
//
// Seeds are drawn from a SeedSource so runs are reproducible; parameter
// violations throw std::invalid_argument.

namespace fasthash {

inline constexpr uint128_t mask_bits_u128(int bits) {
    return bits >= 128 ? ~uint128_t{0} : (uint128_t{1} << bits) - 1;
}

inline constexpr std::uint64_t mask_bits_u64(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// ---------------------------------------------------------------- seeds ---

// Odd multiplier for plain multiply-shift over w-bit keys.
struct OddSeed {
    std::uint64_t a = 1;  // odd, < 2^w
    int w = 64;

    friend bool operator==(const OddSeed&, const OddSeed&) = default;
};

// (a, b) pair for strong multiply-shift: keys have w bits, output l bits,
// arithmetic runs modulo 2^wbar with wbar >= w + l - 1.
struct AffineSeed {
    std::uint64_t a = 0;  // < 2^wbar
    std::uint64_t b = 0;  // < 2^wbar
    int w = 0;
    int out_bits = 0;
    int wbar = 64;

    friend bool operator==(const AffineSeed&, const AffineSeed&) = default;
};

// (a, b) pair modulo the Mersenne prime.
struct PrimeAffineSeed {
    M89 a;
    M89 b;
};

// ------------------------------------------------------------ validation ---

inline void check_out_bits(int out_bits, int w) {
    if (out_bits < 1 || out_bits > w)
        throw std::invalid_argument("output bits must satisfy 1 <= l <= w");
}

inline void check_key_width(std::uint64_t x, int w) {
    if (w < 1 || w > 64) throw std::invalid_argument("key width must satisfy 1 <= w <= 64");
    if (w < 64 && (x >> w) != 0)
        throw std::invalid_argument("key exceeds declared width");
}

inline void check_affine_seed(const AffineSeed& s) {
    if (s.wbar < 1 || s.wbar > 64)
        throw std::invalid_argument("seed width must satisfy 1 <= wbar <= 64");
    check_out_bits(s.out_bits, s.wbar);
    if (s.wbar < s.w + s.out_bits - 1)
        throw std::invalid_argument("seed width too small: need wbar >= w + l - 1");
    if ((s.a | s.b) & ~mask_bits_u64(s.wbar))
        throw std::invalid_argument("seed words exceed wbar bits");
}

// ---------------------------------------------------------------- hashing ---

// Universal multiply-shift: top l bits of a*x mod 2^w.
inline std::uint64_t ms_universal(const OddSeed& s, std::uint64_t x, int out_bits) {
    check_out_bits(out_bits, s.w);
    check_key_width(x, s.w);
    std::uint64_t prod = (s.a * x) & mask_bits_u64(s.w);
    return prod >> (s.w - out_bits);
}

// Strongly universal multiply-shift: top l bits of (a*x + b) mod 2^wbar.
inline std::uint64_t ms_strong(const AffineSeed& s, std::uint64_t x) {
    check_key_width(x, s.w);
    std::uint64_t v = (s.a * x + s.b) & mask_bits_u64(s.wbar);
    return v >> (s.wbar - s.out_bits);
}

// ((a*x + b) mod p) mod m over the full 89-bit field.  Keys must be < p.
// Pass require_nonzero_a = true for the universal flavor (checked at draw
// time; asserted here).
inline std::uint64_t mmp_hash(const PrimeAffineSeed& s, uint128_t x, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("range m must be positive");
    if (x >= M89::p) throw std::invalid_argument("key must be < 2^89 - 1");
    M89 v = horner_step(M89::from_reduced(x), s.a, s.b);  // (a*x + b) mod p
    return static_cast<std::uint64_t>(v.value() % m);
}

// Small-prime surrogate of the same construction, used where seed spaces are
// enumerated exhaustively.  p must be prime (not checked); a, b, x < p.
inline std::uint64_t mmp_small(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                               std::uint64_t x, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("range m must be positive");
    if (a >= p || b >= p || x >= p)
        throw std::invalid_argument("seed or key not reduced mod p");
    return ((a * x + b) % p) % m;
}

// ---------------------------------------------------------------- drawing ---

inline OddSeed draw_odd_seed(SeedSource& src, int w = 64) {
    if (w < 1 || w > 64) throw std::invalid_argument("key width must satisfy 1 <= w <= 64");
    OddSeed s;
    s.w = w;
    s.a = (src.next_u64() & mask_bits_u64(w)) | 1u;
    return s;
}

inline AffineSeed draw_affine_seed(SeedSource& src, int w, int out_bits, int wbar = 64) {
    if (w < 1 || w > 64) throw std::invalid_argument("key width must satisfy 1 <= w <= 64");
    if (wbar < 1 || wbar > 64)
        throw std::invalid_argument("seed width must satisfy 1 <= wbar <= 64");
    AffineSeed s;
    s.w = w;
    s.out_bits = out_bits;
    s.wbar = wbar;
    s.a = src.next_u64() & mask_bits_u64(wbar);
    s.b = src.next_u64() & mask_bits_u64(wbar);
    check_affine_seed(s);
    return s;
}

// Uniform residue < p by rejection on the top 89 bits of two words.
inline M89 draw_m89(SeedSource& src) {
    for (;;) {
        uint128_t v = (uint128_t{src.next_u64()} << 64) | src.next_u64();
        v &= mask_bits_u128(M89::bits);
        if (v < M89::p) return M89::from_reduced(v);
    }
}

inline PrimeAffineSeed draw_prime_affine_seed(SeedSource& src, bool require_nonzero_a) {
    PrimeAffineSeed s;
    do {
        s.a = draw_m89(src);
    } while (require_nonzero_a && s.a == M89(0));
    s.b = draw_m89(src);
    return s;
}

}  // namespace fasthash
