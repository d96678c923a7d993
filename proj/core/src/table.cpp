#include "fasthash/table.hpp"

#include <bit>
#include <stdexcept>

namespace fasthash {

namespace {

int log2_exact(std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("bucket count must be a power of two");
    return std::countr_zero(n);
}

}  // namespace

ChainTable::ChainTable(const Config& cfg, SeedSource& src) : cfg_(cfg) {
    bucket_bits_ = log2_exact(cfg.initial_buckets);
    if (bucket_bits_ < 1 || bucket_bits_ > 32)
        throw std::invalid_argument("bucket count must be 2..2^32");
    if (cfg.sig_bits < 1 || cfg.sig_bits > 64)
        throw std::invalid_argument("signature width must be 1..64 bits");
    buckets_ = cfg.initial_buckets;
    grow_src_ = SeedSource::fixed(src.next_u64());
    if (cfg.mode == Mode::full_key) {
        key_seeds_ = draw_string_hash_seeds(src, bucket_bits_);
        key_chains_.resize(buckets_);
    } else {
        sig_seeds_ = draw_chunked_seeds(
            src, cfg.sig_bits == 64 ? 0 : (std::uint64_t{1} << cfg.sig_bits));
        redraw_bucket_seeds(src, bucket_bits_);
        sig_chains_.resize(buckets_);
    }
}

std::uint64_t ChainTable::signature(std::string_view key) const {
    if (cfg_.mode != Mode::signature)
        throw std::logic_error("signatures exist only in signature mode");
    return chunked_hash(sig_seeds_, key);
}

const std::vector<std::vector<std::string>>& ChainTable::chains() const {
    if (cfg_.mode != Mode::full_key)
        throw std::logic_error("chains are inspectable only in full-key mode");
    return key_chains_;
}

std::size_t ChainTable::bucket_of_signature(std::uint64_t sig) const {
    const std::uint64_t halves[2] = {sig & 0xffffffffu, sig >> 32};
    return pms_hash(sig_bucket_seeds_, halves);
}

std::size_t ChainTable::bucket_index(std::string_view key) const {
    if (cfg_.mode == Mode::full_key) return hash_string(key_seeds_, key);
    return bucket_of_signature(chunked_hash(sig_seeds_, key));
}

bool ChainTable::insert(std::string_view key) {
    if (cfg_.mode == Mode::full_key) {
        auto& chain = key_chains_[hash_string(key_seeds_, key)];
        for (const auto& k : chain) {
            ++probes_;
            if (k == key) return false;
        }
        chain.emplace_back(key);
    } else {
        std::uint64_t sig = chunked_hash(sig_seeds_, key);
        auto& chain = sig_chains_[bucket_of_signature(sig)];
        for (std::uint64_t s : chain) {
            ++probes_;
            if (s == sig) return false;
        }
        chain.push_back(sig);
    }
    ++count_;
    maybe_grow(grow_src_);
    return true;
}

bool ChainTable::contains(std::string_view key) const {
    if (cfg_.mode == Mode::full_key) {
        const auto& chain = key_chains_[hash_string(key_seeds_, key)];
        for (const auto& k : chain) {
            ++probes_;
            if (k == key) return true;
        }
        return false;
    }
    std::uint64_t sig = chunked_hash(sig_seeds_, key);
    const auto& chain = sig_chains_[bucket_of_signature(sig)];
    for (std::uint64_t s : chain) {
        ++probes_;
        if (s == sig) return true;
    }
    return false;
}

std::size_t ChainTable::chain_length(std::string_view key) const {
    if (cfg_.mode == Mode::full_key)
        return key_chains_[hash_string(key_seeds_, key)].size();
    return sig_chains_[bucket_index(key)].size();
}

void ChainTable::redraw_bucket_seeds(SeedSource& src, int bits) {
    sig_bucket_seeds_ = draw_vector_seeds(src, /*w=*/32, /*out_bits=*/bits,
                                          /*wbar=*/64, /*max_dim=*/2);
}

void ChainTable::maybe_grow(SeedSource& src) {
    if (!cfg_.auto_grow || count_ * 2 < buckets_) return;
    // Double the table and rehash everything under fresh seeds.
    int bits = bucket_bits_ + 1;
    if (bits > 32) return;  // table saturated; chains keep growing
    if (cfg_.mode == Mode::full_key) {
        StringHashSeeds seeds = draw_string_hash_seeds(src, bits);
        std::vector<std::vector<std::string>> chains(buckets_ * 2);
        for (auto& chain : key_chains_)
            for (auto& k : chain) chains[hash_string(seeds, k)].push_back(std::move(k));
        key_seeds_ = std::move(seeds);
        key_chains_ = std::move(chains);
    } else {
        redraw_bucket_seeds(src, bits);
        std::vector<std::vector<std::uint64_t>> chains(buckets_ * 2);
        for (auto& chain : sig_chains_)
            for (std::uint64_t s : chain) chains[bucket_of_signature(s)].push_back(s);
        sig_chains_ = std::move(chains);
    }
    bucket_bits_ = bits;
    buckets_ *= 2;
}

std::size_t distinct_count(std::span<const std::string_view> keys,
                           SeedSource& src, ChainTable::Mode mode, int sig_bits) {
    ChainTable::Config cfg;
    cfg.mode = mode;
    cfg.sig_bits = sig_bits;
    ChainTable t(cfg, src);
    for (std::string_view k : keys) t.insert(k);
    return t.size();
}

}  // namespace fasthash
