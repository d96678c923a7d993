#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fasthash/mersenne.hpp"
#include "fasthash/seed.hpp"
#include "fasthash/vec_hash.hpp"

// String hashing, organized as a short-string fast path and a long-string
// polynomial path plus the dispatcher that picks between them.
//
//   pack_string    nil-free strings of <= 256 bytes packed little-endian
//                  into 64-bit words (injective: the final word is padded
//                  with zero bytes, which is why nil bytes are excluded)
//
//   bounded_hash   packed words split into 32-bit halves and fed to
//                  prefix_pms_hash; strongly universal across all nil-free
//                  strings up to the bound
//
//   poly_hash      Horner evaluation of sum_i x_{d-i} a^i over M89;
//                  two distinct strings collide for at most d evaluation
//                  points (d = max length), i.e. probability d/p over a
//
//   poly_hash_composed  ((a * poly(c, x) + b) mod p) mod m; collision
//                  probability <= 2/m for strings of length <= p/m
//
//   chunked_hash   arbitrary bytes (nil allowed): 256-byte chunks are each
//                  reduced to one 64-bit value by two independent 32-bit
//                  bounded hashes, and the reduced sequence goes through the
//                  composed polynomial
//
//   hash_string    dispatch: nil-free strings of <= 256 bytes take the
//                  bounded path, everything else the chunked path
//
// Errors throw std::invalid_argument (nil bytes, empty polynomial input) or
// std::length_error (over-long input to the bounded path).

namespace fasthash {

inline constexpr std::size_t bounded_max_bytes = 256;
inline constexpr std::size_t chunk_bytes = 256;

struct PackedString {
    std::vector<std::uint64_t> words;
    std::size_t byte_len = 0;

    // number of 32-bit coordinates the bounded hash consumes
    std::size_t coord_count() const { return words.size() * 2; }
};

PackedString pack_string(std::string_view s);

// Strongly universal hash of a packed string.  Seeds must cover 64
// coordinates of 32 bits each (w = 32, wbar = 64, max_dim = 64); output has
// seeds.out_bits <= 33 bits.
std::uint64_t bounded_hash(const VectorSeeds& seeds, const PackedString& s);

// Horner evaluation over M89: h = x_0; h = a*h + x_i.  chars must be
// nonempty; each 64-bit char embeds directly as a residue.
M89 poly_hash(M89 a, std::span<const std::uint64_t> chars);

struct PolySeeds {
    M89 a;          // outer multiplier
    M89 b;          // outer additive term
    M89 c;          // polynomial evaluation point
    std::uint64_t m = 1;  // final range [m]; 0 denotes 2^64
};

std::uint64_t poly_hash_composed(const PolySeeds& seeds, std::span<const std::uint64_t> chars);

struct ChunkedSeeds {
    VectorSeeds r1;  // 32-bit reducer, high half of the chunk value
    VectorSeeds r2;  // 32-bit reducer, low half
    PolySeeds poly;
};

std::uint64_t chunked_hash(const ChunkedSeeds& seeds, std::string_view bytes);

struct StringHashSeeds {
    VectorSeeds bounded;
    ChunkedSeeds chunked;
    int out_bits = 0;
};

// Hash into [2^out_bits], out_bits <= 32.
std::uint64_t hash_string(const StringHashSeeds& seeds, std::string_view bytes);

PolySeeds draw_poly_seeds(SeedSource& src, std::uint64_t m);
ChunkedSeeds draw_chunked_seeds(SeedSource& src, std::uint64_t m);
StringHashSeeds draw_string_hash_seeds(SeedSource& src, int out_bits);

}  // namespace fasthash
