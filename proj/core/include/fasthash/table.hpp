#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fasthash/seed.hpp"
#include "fasthash/string_hash.hpp"
#include "fasthash/vec_hash.hpp"

// Chaining hash table over string keys with a power-of-two bucket count.
//
// Two modes:
//   full_key   buckets hold the keys themselves; lookups compare bytes, so
//              answers are exact.
//   signature  buckets hold only a 64-bit-or-less signature of each key;
//              lookups compare signatures, so distinct keys can alias with
//              probability ~ 1/2^sig_bits per comparison.  Choosing
//              sig_bits so that 2^sig_bits >= n^3 keeps the chance of any
//              alias among n keys below 1/n.
//
// When auto_grow is on (default) the table doubles its bucket count as soon
// as the stored-key count reaches half the buckets, drawing fresh bucket
// hash seeds each time, so chains stay O(1) expected.

namespace fasthash {

class ChainTable {
public:
    enum class Mode { full_key, signature };

    struct Config {
        std::size_t initial_buckets = 256;  // power of two
        Mode mode = Mode::full_key;
        int sig_bits = 64;                  // signature width, 1..64
        bool auto_grow = true;
    };

    // Draws all hash seeds from src; src is not retained.
    ChainTable(const Config& cfg, SeedSource& src);

    // Returns true if the key was new.
    bool insert(std::string_view key);
    bool contains(std::string_view key) const;

    std::size_t size() const { return count_; }
    std::size_t bucket_count() const { return buckets_; }
    int bucket_bits() const { return bucket_bits_; }
    Mode mode() const { return cfg_.mode; }

    // Chain the key would be searched in, and its current length.
    std::size_t bucket_index(std::string_view key) const;
    std::size_t chain_length(std::string_view key) const;

    // Key comparisons performed by inserts and lookups so far.
    std::uint64_t probe_count() const { return probes_; }

    // Signature of a key under the current seeds (signature mode only).
    std::uint64_t signature(std::string_view key) const;

    // Bucket contents for inspection (full-key mode only).
    const std::vector<std::vector<std::string>>& chains() const;

private:
    void maybe_grow(SeedSource& src);
    void redraw_bucket_seeds(SeedSource& src, int bits);
    std::size_t bucket_of_signature(std::uint64_t sig) const;

    Config cfg_;
    std::size_t buckets_ = 0;
    int bucket_bits_ = 0;
    std::size_t count_ = 0;
    mutable std::uint64_t probes_ = 0;

    // full_key mode
    StringHashSeeds key_seeds_;
    std::vector<std::vector<std::string>> key_chains_;

    // signature mode
    ChunkedSeeds sig_seeds_;
    VectorSeeds sig_bucket_seeds_;
    std::vector<std::vector<std::uint64_t>> sig_chains_;

    // Growth redraws seeds, which requires a generator; we keep an
    // independent stream forked from the constructor's source so the caller
    // does not need to stay alive.
    SeedSource grow_src_;
};

// Number of distinct strings in `keys`, counted with a ChainTable in the
// given mode.  In signature mode this is a (w.h.p. exact) estimate.
std::size_t distinct_count(std::span<const std::string_view> keys,
                           SeedSource& src, ChainTable::Mode mode,
                           int sig_bits = 64);

}  // namespace fasthash
