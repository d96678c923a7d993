// Throughput microbenchmarks for the hashing schemes, from single-word
// integer hashing up to streaming string hashes.  Byte counters let the
// string benchmarks report MB/s; integer benchmarks report items/s.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fasthash/int_hash.hpp"
#include "fasthash/mersenne.hpp"
#include "fasthash/seed.hpp"
#include "fasthash/string_hash.hpp"
#include "fasthash/vec_hash.hpp"

namespace fh = fasthash;

namespace {

// Deterministic pseudo-random buffer, nil bytes included.
std::string make_buffer(std::size_t bytes) {
    fh::SeedSource src = fh::SeedSource::fixed(0xb0f);
    std::string buf;
    buf.reserve(bytes);
    while (buf.size() < bytes) {
        std::uint64_t w = src.next_u64();
        for (int i = 0; i < 8 && buf.size() < bytes; ++i)
            buf.push_back(static_cast<char>((w >> (8 * i)) & 0xff));
    }
    return buf;
}

std::vector<std::uint64_t> make_words(std::size_t n) {
    fh::SeedSource src = fh::SeedSource::fixed(0xb0f);
    std::vector<std::uint64_t> v(n);
    for (auto& w : v) w = src.next_u64();
    return v;
}

void bm_ms_universal(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(1);
    fh::OddSeed seed = fh::draw_odd_seed(src, 64);
    std::vector<std::uint64_t> keys = make_words(4096);
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint64_t k : keys) acc += fh::ms_universal(seed, k, 32);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * keys.size());
}
BENCHMARK(bm_ms_universal);

void bm_ms_strong(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(2);
    fh::AffineSeed seed = fh::draw_affine_seed(src, 32, 32, 64);
    std::vector<std::uint64_t> keys = make_words(4096);
    for (auto& k : keys) k &= 0xffffffffu;
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint64_t k : keys) acc += fh::ms_strong(seed, k);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * keys.size());
}
BENCHMARK(bm_ms_strong);

void bm_mmp(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(3);
    fh::PrimeAffineSeed seed = fh::draw_prime_affine_seed(src, true);
    std::vector<std::uint64_t> keys = make_words(4096);
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint64_t k : keys) acc += fh::mmp_hash(seed, k, std::uint64_t{1} << 32);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * keys.size());
}
BENCHMARK(bm_mmp);

void bm_pms_pairs(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(4);
    fh::VectorSeeds seeds = fh::draw_vector_seeds(src, 32, 32, 64, 64);
    std::vector<std::uint64_t> coords = make_words(64);
    for (auto& c : coords) c &= 0xffffffffu;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fh::pms_hash(seeds, coords));
    }
    state.SetBytesProcessed(state.iterations() * coords.size() * 4);
}
BENCHMARK(bm_pms_pairs);

void bm_bounded256(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(5);
    fh::StringHashSeeds seeds = fh::draw_string_hash_seeds(src, 32);
    std::string buf = make_buffer(256);
    for (char& c : buf)
        if (c == '\0') c = 'x';  // bounded path rejects nil bytes
    for (auto _ : state) {
        benchmark::DoNotOptimize(fh::bounded_hash(seeds.bounded, fh::pack_string(buf)));
    }
    state.SetBytesProcessed(state.iterations() * buf.size());
}
BENCHMARK(bm_bounded256);

void bm_poly(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(6);
    fh::PolySeeds seeds = fh::draw_poly_seeds(src, 0);
    std::size_t bytes = static_cast<std::size_t>(state.range(0));
    std::vector<std::uint64_t> words = make_words(bytes / 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fh::poly_hash_composed(seeds, words));
    }
    state.SetBytesProcessed(state.iterations() * bytes);
}
BENCHMARK(bm_poly)->Arg(1 << 10)->Arg(1 << 16);

void bm_chunked(benchmark::State& state) {
    fh::SeedSource src = fh::SeedSource::fixed(7);
    fh::ChunkedSeeds seeds = fh::draw_chunked_seeds(src, 0);
    std::string buf = make_buffer(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fh::chunked_hash(seeds, buf));
    }
    state.SetBytesProcessed(state.iterations() * buf.size());
}
BENCHMARK(bm_chunked)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
