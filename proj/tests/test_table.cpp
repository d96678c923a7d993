#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fasthash/seed.hpp"
#include "fasthash/table.hpp"

namespace fh = fasthash;

namespace {

std::vector<std::string> random_tokens(fh::SeedSource& src, std::size_t n,
                                       std::size_t vocab) {
    // vocab distinct words, sampled with repetition
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back("tok" + std::to_string(src.next_u64() % vocab));
    return out;
}

std::vector<std::string> distinct_keys(fh::SeedSource& src, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(fh::to_hex(src.next_u64()) + "-" + std::to_string(i));
    return out;
}

}  // namespace

TEST_CASE("insert counts distinct keys exactly in full-key mode") {
    fh::SeedSource src = fh::SeedSource::fixed(61);
    std::vector<std::string> tokens = random_tokens(src, 20000, 1500);
    std::set<std::string> truth(tokens.begin(), tokens.end());

    fh::ChainTable::Config cfg;
    fh::ChainTable t(cfg, src);
    std::size_t new_keys = 0;
    for (const auto& k : tokens) new_keys += t.insert(k);
    CHECK(t.size() == truth.size());
    CHECK(new_keys == truth.size());
    for (const auto& k : truth) CHECK(t.contains(k));
    CHECK_FALSE(t.contains("never-inserted"));
}

TEST_CASE("growth preserves contents and keeps chains short") {
    fh::SeedSource src = fh::SeedSource::fixed(62);
    std::vector<std::string> keys = distinct_keys(src, 10000);

    fh::ChainTable::Config cfg;
    cfg.initial_buckets = 2;
    fh::ChainTable t(cfg, src);
    for (const auto& k : keys) t.insert(k);

    CHECK(t.size() == keys.size());
    // doubling at count*2 >= buckets means load stays below 1/2
    CHECK(t.bucket_count() >= 2 * keys.size());
    for (const auto& k : keys) CHECK(t.contains(k));
}

TEST_CASE("iterating all chains yields each inserted key exactly once") {
    fh::SeedSource src = fh::SeedSource::fixed(63);
    std::vector<std::string> keys = distinct_keys(src, 5000);

    fh::ChainTable::Config cfg;
    fh::ChainTable t(cfg, src);
    for (const auto& k : keys) {
        t.insert(k);
        t.insert(k);  // duplicates must not appear twice in chains
    }

    std::vector<std::string> seen;
    for (std::size_t b = 0; b < t.chains().size(); ++b) {
        for (const auto& k : t.chains()[b]) {
            seen.push_back(k);
            // bucket index always equals the current hash of the key
            CHECK(t.bucket_index(k) == b);
        }
    }
    std::sort(seen.begin(), seen.end());
    std::vector<std::string> want = keys;
    std::sort(want.begin(), want.end());
    CHECK(seen == want);
}

TEST_CASE("signature mode agrees with full-key mode on distinct counts") {
    fh::SeedSource src = fh::SeedSource::fixed(64);
    std::vector<std::string> tokens = random_tokens(src, 30000, 4000);
    std::vector<std::string_view> views(tokens.begin(), tokens.end());

    std::size_t full = fh::distinct_count(views, src, fh::ChainTable::Mode::full_key, 64);
    std::size_t sig = fh::distinct_count(views, src, fh::ChainTable::Mode::signature, 64);
    std::set<std::string> truth(tokens.begin(), tokens.end());
    CHECK(full == truth.size());
    // 64-bit signatures on 4000 keys: alias probability < 4000^2 / 2^64 < 1e-12
    CHECK(sig == truth.size());
}

TEST_CASE("narrow signatures alias at roughly the predicted rate") {
    fh::SeedSource src = fh::SeedSource::fixed(65);
    std::vector<std::string> keys = distinct_keys(src, 256);

    fh::ChainTable::Config cfg;
    cfg.mode = fh::ChainTable::Mode::signature;
    cfg.sig_bits = 24;
    fh::ChainTable t(cfg, src);
    for (const auto& k : keys) t.insert(k);
    CHECK(t.size() == keys.size());  // no alias among the inserted keys themselves

    // Absent keys false-positive when their signature aliases a stored one:
    // expectation 256/2^24 per lookup, about 1.5 in 1e5 lookups.
    std::size_t false_positives = 0;
    for (int i = 0; i < 100000; ++i)
        false_positives += t.contains("absent-" + std::to_string(i));
    CHECK(false_positives <= 15);
}

TEST_CASE("fixed-size table has mean absent-chain length near the load factor") {
    fh::SeedSource src = fh::SeedSource::fixed(66);
    const std::size_t n = 1 << 12;

    fh::ChainTable::Config cfg;
    cfg.initial_buckets = n;
    cfg.auto_grow = false;
    fh::ChainTable t(cfg, src);
    for (const auto& k : distinct_keys(src, n)) t.insert(k);
    CHECK(t.bucket_count() == n);  // no growth happened

    double total = 0;
    const int probes = 10000;
    for (int i = 0; i < probes; ++i)
        total += static_cast<double>(t.chain_length("probe-" + std::to_string(i)));
    double mean = total / probes;
    // load factor 1; chain length variance ~1, so 3 standard errors is 0.03
    CHECK(mean == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("probe counter moves with work done") {
    fh::SeedSource src = fh::SeedSource::fixed(67);
    fh::ChainTable::Config cfg;
    cfg.initial_buckets = 2;
    cfg.auto_grow = false;  // force long chains
    fh::ChainTable t(cfg, src);
    for (int i = 0; i < 100; ++i) t.insert("k" + std::to_string(i));
    std::uint64_t before = t.probe_count();
    for (int i = 0; i < 100; ++i) CHECK(t.contains("k" + std::to_string(i)));
    CHECK(t.probe_count() > before);
}

TEST_CASE("configuration errors throw") {
    fh::SeedSource src = fh::SeedSource::fixed(68);
    fh::ChainTable::Config cfg;

    cfg.initial_buckets = 100;  // not a power of two
    CHECK_THROWS_AS(fh::ChainTable(cfg, src), std::invalid_argument);
    cfg.initial_buckets = 1;
    CHECK_THROWS_AS(fh::ChainTable(cfg, src), std::invalid_argument);
    cfg.initial_buckets = 0;
    CHECK_THROWS_AS(fh::ChainTable(cfg, src), std::invalid_argument);

    cfg.initial_buckets = 256;
    cfg.sig_bits = 0;
    CHECK_THROWS_AS(fh::ChainTable(cfg, src), std::invalid_argument);
    cfg.sig_bits = 65;
    CHECK_THROWS_AS(fh::ChainTable(cfg, src), std::invalid_argument);

    cfg.sig_bits = 64;
    fh::ChainTable full(cfg, src);
    CHECK_THROWS_AS(full.signature("x"), std::logic_error);

    cfg.mode = fh::ChainTable::Mode::signature;
    fh::ChainTable sig(cfg, src);
    CHECK_THROWS_AS(sig.chains(), std::logic_error);
}

TEST_CASE("signature lookup answers by signature equality") {
    fh::SeedSource src = fh::SeedSource::fixed(69);
    fh::ChainTable::Config cfg;
    cfg.mode = fh::ChainTable::Mode::signature;
    fh::ChainTable t(cfg, src);
    t.insert("hello world");
    CHECK(t.contains("hello world"));
    CHECK(t.signature("hello world") == t.signature("hello world"));
    CHECK_FALSE(t.insert("hello world"));  // same signature, counted once
    CHECK(t.size() == 1);
}

TEST_CASE("distinct keys hash into binary and keep working across growth") {
    // keys containing nil bytes and long keys exercise the chunked path
    fh::SeedSource src = fh::SeedSource::fixed(70);
    fh::ChainTable::Config cfg;
    cfg.initial_buckets = 4;
    for (auto mode : {fh::ChainTable::Mode::full_key, fh::ChainTable::Mode::signature}) {
        cfg.mode = mode;
        fh::ChainTable t(cfg, src);
        std::vector<std::string> keys;
        for (int i = 0; i < 500; ++i) {
            std::string k(1 + (i % 700), static_cast<char>(i % 256));
            k += std::to_string(i);
            keys.push_back(k);
            t.insert(k);
        }
        CHECK(t.size() == keys.size());
        for (const auto& k : keys) CHECK(t.contains(k));
    }
}
