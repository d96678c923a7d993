#include "fasthash/string_hash.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

#include "fasthash/int_hash.hpp"

namespace fasthash {

PackedString pack_string(std::string_view s) {
    if (s.size() > bounded_max_bytes)
        throw std::length_error("bounded hash limited to 256 bytes");
    if (s.find('\0') != std::string_view::npos)
        throw std::invalid_argument("bounded hash rejects nil bytes");
    PackedString p;
    p.byte_len = s.size();
    p.words.resize((s.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        p.words[i / 8] |= std::uint64_t{static_cast<unsigned char>(s[i])} << (8 * (i % 8));
    return p;
}

namespace {

// Split packed 64-bit words into interleaved 32-bit coordinates
// (low half first) and apply the length-indexed pair hash.
std::uint64_t prefix_pms_on_words(const VectorSeeds& seeds,
                                  std::span<const std::uint64_t> words) {
    std::array<std::uint64_t, 2 * (bounded_max_bytes / 8)> coords;
    std::size_t n = 0;
    for (std::uint64_t w : words) {
        coords[n++] = w & 0xffffffffu;
        coords[n++] = w >> 32;
    }
    return prefix_pms_hash(seeds, std::span<const std::uint64_t>(coords.data(), n));
}

}  // namespace

std::uint64_t bounded_hash(const VectorSeeds& seeds, const PackedString& s) {
    if (seeds.w != 32 || seeds.wbar != 64)
        throw std::invalid_argument("bounded hash needs 32-bit coordinates over 64-bit words");
    return prefix_pms_on_words(seeds, s.words);
}

M89 poly_hash(M89 a, std::span<const std::uint64_t> chars) {
    if (chars.empty()) throw std::invalid_argument("polynomial hash of empty sequence");
    M89 h{chars[0]};
    for (std::size_t i = 1; i < chars.size(); ++i) h = horner_step(h, a, M89{chars[i]});
    return h;
}

std::uint64_t poly_hash_composed(const PolySeeds& seeds,
                                 std::span<const std::uint64_t> chars) {
    M89 inner = poly_hash(seeds.c, chars);
    M89 outer = horner_step(inner, seeds.a, seeds.b);  // (a*inner + b) mod p
    if (seeds.m == 0) return static_cast<std::uint64_t>(outer.value());  // mod 2^64
    return static_cast<std::uint64_t>(outer.value() % seeds.m);
}

std::uint64_t chunked_hash(const ChunkedSeeds& seeds, std::string_view bytes) {
    // Empty input still contributes one (empty) chunk so that the reduced
    // sequence is never empty.
    std::size_t chunk_count = bytes.empty() ? 1 : (bytes.size() + chunk_bytes - 1) / chunk_bytes;
    std::vector<std::uint64_t> reduced(chunk_count);
    for (std::size_t c = 0; c < chunk_count; ++c) {
        std::string_view chunk = bytes.substr(c * chunk_bytes,
                                              std::min(chunk_bytes, bytes.size() - c * chunk_bytes));
        // Pack without the nil/length checks: chunks are at most 256 bytes by
        // construction and nil bytes are fine here.
        std::array<std::uint64_t, 2 * (chunk_bytes / 8)> coords{};
        std::size_t words = (chunk.size() + 7) / 8;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            std::uint64_t byte = static_cast<unsigned char>(chunk[i]);
            coords[2 * (i / 8) + (i % 8) / 4] |= byte << (8 * (i % 4));
        }
        std::span<const std::uint64_t> cs(coords.data(), 2 * words);
        std::uint64_t hi = prefix_pms_hash(seeds.r1, cs);
        std::uint64_t lo = prefix_pms_hash(seeds.r2, cs);
        reduced[c] = (hi << 32) | lo;
    }
    return poly_hash_composed(seeds.poly, reduced);
}

std::uint64_t hash_string(const StringHashSeeds& seeds, std::string_view bytes) {
    if (bytes.size() <= bounded_max_bytes &&
        bytes.find('\0') == std::string_view::npos)
        return bounded_hash(seeds.bounded, pack_string(bytes));
    std::uint64_t m = std::uint64_t{1} << seeds.out_bits;  // out_bits <= 32
    return chunked_hash(seeds.chunked, bytes) & (m - 1);
}

PolySeeds draw_poly_seeds(SeedSource& src, std::uint64_t m) {
    PolySeeds s;
    s.a = draw_m89(src);
    s.b = draw_m89(src);
    s.c = draw_m89(src);
    s.m = m;
    return s;
}

ChunkedSeeds draw_chunked_seeds(SeedSource& src, std::uint64_t m) {
    ChunkedSeeds s;
    s.r1 = draw_vector_seeds(src, /*w=*/32, /*out_bits=*/32, /*wbar=*/64,
                             /*max_dim=*/2 * (chunk_bytes / 8));
    s.r2 = draw_vector_seeds(src, 32, 32, 64, 2 * (chunk_bytes / 8));
    s.poly = draw_poly_seeds(src, m);
    return s;
}

StringHashSeeds draw_string_hash_seeds(SeedSource& src, int out_bits) {
    if (out_bits < 1 || out_bits > 32)
        throw std::invalid_argument("string hash output must be 1..32 bits");
    StringHashSeeds s;
    s.out_bits = out_bits;
    s.bounded = draw_vector_seeds(src, 32, out_bits, 64, 2 * (bounded_max_bytes / 8));
    s.chunked = draw_chunked_seeds(src, std::uint64_t{1} << out_bits);
    return s;
}

}  // namespace fasthash
