#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "fasthash/int_hash.hpp"
#include "fasthash/seed.hpp"
#include "oracle.hpp"

namespace fh = fasthash;
using oracle::big;
using oracle::bigint;

TEST_CASE("universal multiply-shift frozen value") {
    // h(x) = top 20 bits of a*x mod 2^64, computed once by hand.
    fh::OddSeed s{0x9E3779B97F4A7C15ull, 64};
    CHECK(fh::ms_universal(s, 42, 20) == 0xf519f);
}

TEST_CASE("universal multiply-shift matches the oracle formula") {
    fh::SeedSource src = fh::SeedSource::fixed(21);
    for (int w : {8, 32, 57, 64}) {
        for (int i = 0; i < 2500; ++i) {
            fh::OddSeed s = fh::draw_odd_seed(src, w);
            REQUIRE((s.a & 1) == 1);
            REQUIRE((w == 64 || (s.a >> w) == 0));
            int l = 1 + static_cast<int>(src.next_u64() % w);
            std::uint64_t x = src.next_u64() & fh::mask_bits_u64(w);
            bigint prod = (bigint(s.a) * x) % (bigint(1) << w);
            CHECK(fh::ms_universal(s, x, l) == oracle::low64(prod >> (w - l)));
        }
    }
}

TEST_CASE("strong multiply-shift matches the oracle formula") {
    fh::SeedSource src = fh::SeedSource::fixed(22);
    for (int i = 0; i < 10000; ++i) {
        fh::AffineSeed s = fh::draw_affine_seed(src, 32, 16, 64);
        std::uint64_t x = src.next_u64() & 0xffffffffull;
        bigint v = (bigint(s.a) * x + s.b) % (bigint(1) << 64);
        CHECK(fh::ms_strong(s, x) == oracle::low64(v >> 48));
    }
    // Narrow wbar exercises the masking path.
    for (int i = 0; i < 10000; ++i) {
        fh::AffineSeed s = fh::draw_affine_seed(src, 4, 3, 6);
        std::uint64_t x = src.next_u64() & 0xf;
        bigint v = (bigint(s.a) * x + s.b) % (bigint(1) << 6);
        CHECK(fh::ms_strong(s, x) == oracle::low64(v >> 3));
    }
}

TEST_CASE("multiply-mod-prime matches the oracle formula") {
    const bigint P = oracle::mersenne_prime();
    fh::SeedSource src = fh::SeedSource::fixed(23);
    for (int i = 0; i < 20000; ++i) {
        fh::PrimeAffineSeed s = fh::draw_prime_affine_seed(src, true);
        REQUIRE(s.a != fh::M89(0));
        fh::uint128_t x = (fh::uint128_t{src.next_u64() & ((1u << 25) - 1)} << 64) |
                          src.next_u64();
        if (x >= fh::M89::p) continue;
        std::uint64_t m = src.next_u64() | 1;  // any positive range
        bigint want = ((big(s.a.value()) * big(x) + big(s.b.value())) % P) % m;
        CHECK(fh::mmp_hash(s, x, m) == oracle::low64(want));
    }
}

TEST_CASE("small-prime surrogate agrees with the wide implementation") {
    // Same ((a*x + b) mod p) mod m on values small enough for both paths.
    fh::SeedSource src = fh::SeedSource::fixed(24);
    const std::uint64_t p = 251;
    for (int i = 0; i < 5000; ++i) {
        std::uint64_t a = src.next_u64() % p;
        std::uint64_t b = src.next_u64() % p;
        std::uint64_t x = src.next_u64() % p;
        std::uint64_t m = 1 + src.next_u64() % p;
        CHECK(fh::mmp_small(p, a, b, x, m) == ((a * x + b) % p) % m);
    }
}

TEST_CASE("parameter violations throw") {
    fh::OddSeed odd{1, 8};
    CHECK_THROWS_AS(fh::ms_universal(odd, 0, 0), std::invalid_argument);   // l < 1
    CHECK_THROWS_AS(fh::ms_universal(odd, 0, 9), std::invalid_argument);   // l > w
    CHECK_THROWS_AS(fh::ms_universal(odd, 256, 3), std::invalid_argument); // x too wide

    fh::AffineSeed aff{0, 0, 4, 3, 5};  // wbar < w + l - 1 = 6
    CHECK_THROWS_AS(fh::check_affine_seed(aff), std::invalid_argument);
    aff.wbar = 6;
    CHECK_NOTHROW(fh::check_affine_seed(aff));
    aff.a = 1u << 6;  // exceeds wbar bits
    CHECK_THROWS_AS(fh::check_affine_seed(aff), std::invalid_argument);

    fh::SeedSource src = fh::SeedSource::fixed(25);
    CHECK_THROWS_AS(fh::draw_affine_seed(src, 4, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(fh::draw_odd_seed(src, 0), std::invalid_argument);
    CHECK_THROWS_AS(fh::draw_odd_seed(src, 65), std::invalid_argument);

    fh::PrimeAffineSeed ps = fh::draw_prime_affine_seed(src, false);
    CHECK_THROWS_AS(fh::mmp_hash(ps, 0, 0), std::invalid_argument);         // m = 0
    CHECK_THROWS_AS(fh::mmp_hash(ps, fh::M89::p, 3), std::invalid_argument);  // x >= p
    CHECK_THROWS_AS(fh::mmp_small(17, 17, 0, 0, 3), std::invalid_argument);  // a >= p
}

TEST_CASE("hash values stay inside the declared range") {
    fh::SeedSource src = fh::SeedSource::fixed(26);
    for (int i = 0; i < 1000; ++i) {
        fh::OddSeed s = fh::draw_odd_seed(src, 16);
        CHECK(fh::ms_universal(s, src.next_u64() & 0xffff, 5) < 32);
        fh::AffineSeed a = fh::draw_affine_seed(src, 16, 5, 32);
        CHECK(fh::ms_strong(a, src.next_u64() & 0xffff) < 32);
        fh::PrimeAffineSeed ps = fh::draw_prime_affine_seed(src, true);
        CHECK(fh::mmp_hash(ps, src.next_u64(), 97) < 97);
    }
}

TEST_CASE("residue drawing is uniform-range and reproducible") {
    fh::SeedSource a = fh::SeedSource::fixed(27);
    fh::SeedSource b = fh::SeedSource::fixed(27);
    for (int i = 0; i < 1000; ++i) {
        fh::M89 r = fh::draw_m89(a);
        CHECK(r.value() < fh::M89::p);
        CHECK(r == fh::draw_m89(b));
    }
}
