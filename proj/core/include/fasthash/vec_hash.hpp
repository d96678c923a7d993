#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fasthash/int_hash.hpp"
#include "fasthash/seed.hpp"

// Hash functions for fixed- and variable-length vectors of w-bit coordinates.
//
//   vms_hash         h(x) = ((sum_i a_i x_i + b) mod 2^wbar) >> (wbar - l)
//                    strongly universal on vectors of exactly d coordinates
//
//   pms_hash         same guarantee with half the multiplications:
//                    coordinates are consumed in pairs via
//                    (a_{2i} + x_{2i+1}) * (a_{2i+1} + x_{2i})
//
//   prefix_pms_hash  pair-multiply-shift with the additive term replaced by
//                    a length-indexed seed word a_d, which extends strong
//                    universality across vectors of *different* even lengths
//
//   naive_vector_hash  sum of per-coordinate odd-multiplier products, top l
//                    bits.  Deliberately broken: (0,...,0) and
//                    (2^{w-1},...,2^{w-1}) collide with probability 1.
//                    Kept as a negative control for the verification suite.
//
// All coordinate arithmetic is modulo 2^wbar with wbar >= w + l - 1.

namespace fasthash {

// Seed words a_0..a_D plus additive term b.  max_dim (= D) bounds the
// number of coordinates a single call may consume and must be even.
struct VectorSeeds {
    std::vector<std::uint64_t> a;  // D + 1 words, each < 2^wbar
    std::uint64_t b = 0;
    int w = 0;
    int out_bits = 0;
    int wbar = 64;

    int max_dim() const { return static_cast<int>(a.size()) - 1; }
};

struct NaiveVectorSeeds {
    std::vector<std::uint64_t> a;  // odd multipliers, one per coordinate
    std::uint64_t b = 0;
    int w = 0;
    int out_bits = 0;
};

namespace detail {

inline void check_vector_seeds(const VectorSeeds& s, std::size_t dim, bool need_even) {
    if (s.wbar < 1 || s.wbar > 64)
        throw std::invalid_argument("seed width must satisfy 1 <= wbar <= 64");
    check_out_bits(s.out_bits, s.wbar);
    if (s.wbar < s.w + s.out_bits - 1)
        throw std::invalid_argument("seed width too small: need wbar >= w + l - 1");
    if (need_even && dim % 2 != 0)
        throw std::invalid_argument("coordinate count must be even");
    if (dim > static_cast<std::size_t>(s.max_dim()))
        throw std::invalid_argument("vector longer than seeded dimension");
}

inline void check_coords(std::span<const std::uint64_t> x, int w) {
    for (std::uint64_t c : x) check_key_width(c, w);
}

}  // namespace detail

// Strongly universal vector multiply-shift over exactly x.size() = d
// coordinates (d even, d <= D).
inline std::uint64_t vms_hash(const VectorSeeds& s, std::span<const std::uint64_t> x) {
    detail::check_vector_seeds(s, x.size(), /*need_even=*/true);
    detail::check_coords(x, s.w);
    std::uint64_t acc = s.b;
    for (std::size_t i = 0; i < x.size(); ++i) acc += s.a[i] * x[i];
    acc &= mask_bits_u64(s.wbar);
    return acc >> (s.wbar - s.out_bits);
}

// Pair-multiply-shift: one multiplication per coordinate pair.
inline std::uint64_t pms_hash(const VectorSeeds& s, std::span<const std::uint64_t> x) {
    detail::check_vector_seeds(s, x.size(), /*need_even=*/true);
    detail::check_coords(x, s.w);
    std::uint64_t acc = s.b;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
        acc += (s.a[i] + x[i + 1]) * (s.a[i + 1] + x[i]);
    acc &= mask_bits_u64(s.wbar);
    return acc >> (s.wbar - s.out_bits);
}

// Variable-length variant: the additive term is the seed word indexed by the
// vector's length, so vectors of different even lengths stay independent.
inline std::uint64_t prefix_pms_hash(const VectorSeeds& s, std::span<const std::uint64_t> x) {
    detail::check_vector_seeds(s, x.size(), /*need_even=*/true);
    detail::check_coords(x, s.w);
    std::uint64_t acc = s.a[x.size()];
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
        acc += (s.a[i] + x[i + 1]) * (s.a[i + 1] + x[i]);
    acc &= mask_bits_u64(s.wbar);
    return acc >> (s.wbar - s.out_bits);
}

// Negative control: per-coordinate odd multipliers, arithmetic mod 2^w.
inline std::uint64_t naive_vector_hash(const NaiveVectorSeeds& s,
                                       std::span<const std::uint64_t> x) {
    check_out_bits(s.out_bits, s.w);
    if (x.size() != s.a.size())
        throw std::invalid_argument("vector length does not match seeded dimension");
    detail::check_coords(x, s.w);
    std::uint64_t acc = s.b;
    for (std::size_t i = 0; i < x.size(); ++i) acc += s.a[i] * x[i];
    acc &= mask_bits_u64(s.w);
    return acc >> (s.w - s.out_bits);
}

// Draws seed words for vectors of up to max_dim coordinates (max_dim even).
inline VectorSeeds draw_vector_seeds(SeedSource& src, int w, int out_bits, int wbar,
                                     int max_dim) {
    if (max_dim < 2 || max_dim % 2 != 0)
        throw std::invalid_argument("seeded dimension must be even and >= 2");
    VectorSeeds s;
    s.w = w;
    s.out_bits = out_bits;
    s.wbar = wbar;
    s.a.resize(static_cast<std::size_t>(max_dim) + 1);
    detail::check_vector_seeds(s, 0, false);
    if (w < 1) throw std::invalid_argument("key width must satisfy 1 <= w <= 64");
    for (auto& word : s.a) word = src.next_u64() & mask_bits_u64(wbar);
    s.b = src.next_u64() & mask_bits_u64(wbar);
    return s;
}

inline NaiveVectorSeeds draw_naive_seeds(SeedSource& src, int w, int out_bits, int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    NaiveVectorSeeds s;
    s.w = w;
    s.out_bits = out_bits;
    check_out_bits(out_bits, w);
    s.a.resize(static_cast<std::size_t>(dim));
    for (auto& word : s.a) word = (src.next_u64() & mask_bits_u64(w)) | 1u;
    s.b = src.next_u64() & mask_bits_u64(w);
    return s;
}

}  // namespace fasthash
