#pragma once

#include <cassert>
#include <cstdint>

namespace fasthash {

using uint128_t = unsigned __int128;

namespace detail {
// Exact count of field multiplications performed on this thread.  The bench
// command reports it so polynomial and chunked string hashing can be compared
// by work done rather than wall time.
inline thread_local std::uint64_t m89_mults = 0;
}  // namespace detail

// Residue arithmetic modulo the Mersenne prime p = 2^89 - 1.
//
// Values are always kept fully reduced (< p), so equality is plain bitwise
// comparison.  Because p = 2^89 - 1 we have 2^89 = 1 (mod p), which turns
// "mod p" into shift-mask-add folding: for any x,
//
//     x  =  (x mod 2^89) + floor(x / 2^89)   (mod p).
//
// One fold takes a 178-bit product down below 2^90, a second fold brings it
// below 2^89 + 1, and one conditional subtract makes it canonical.
class M89 {
public:
    static constexpr int bits = 89;
    static constexpr uint128_t p = (uint128_t{1} << bits) - 1;

    // Unevaluated 192-bit integer hi*2^128 + lo; wide enough for the 178-bit
    // product of two residues plus a small addend.
    struct Wide {
        uint128_t lo = 0;
        std::uint64_t hi = 0;
    };

    constexpr M89() = default;
    constexpr explicit M89(std::uint64_t v) : v_(v) {}

    // Wraps a value already known to be < p.
    static constexpr M89 from_reduced(uint128_t v) {
        assert(v < p);
        M89 r;
        r.v_ = v;
        return r;
    }

    constexpr uint128_t value() const { return v_; }
    constexpr std::uint64_t low64() const { return static_cast<std::uint64_t>(v_); }
    constexpr std::uint64_t high64() const { return static_cast<std::uint64_t>(v_ >> 64); }

    // x mod p for any x < 2^178 (two folds + conditional subtract).
    static constexpr M89 reduce(Wide x) {
        uint128_t high = (x.lo >> bits) | (uint128_t{x.hi} << (128 - bits));
        uint128_t s = (x.lo & p) + high;       // < 2^90
        s = (s & p) + (s >> bits);             // <= 2^89
        if (s >= p) s -= p;
        M89 r;
        r.v_ = s;
        return r;
    }

    static constexpr M89 reduce(uint128_t x) {
        uint128_t s = (x & p) + (x >> bits);   // < 2^89 + 2^39
        s = (s & p) + (s >> bits);
        if (s >= p) s -= p;
        M89 r;
        r.v_ = s;
        return r;
    }

    // Exact product of two residues (each < 2^89, so the product fits in
    // 178 bits) assembled from 64-bit limb partial products.
    static constexpr Wide full_product(uint128_t a, uint128_t b) {
        const std::uint64_t a_lo = static_cast<std::uint64_t>(a);
        const std::uint64_t a_hi = static_cast<std::uint64_t>(a >> 64);  // < 2^25
        const std::uint64_t b_lo = static_cast<std::uint64_t>(b);
        const std::uint64_t b_hi = static_cast<std::uint64_t>(b >> 64);

        const uint128_t lo_lo = uint128_t{a_lo} * b_lo;
        const uint128_t mid = uint128_t{a_lo} * b_hi + uint128_t{a_hi} * b_lo;  // < 2^91
        const uint128_t hi_hi = uint128_t{a_hi} * b_hi;                         // < 2^50

        Wide r;
        r.lo = lo_lo + (mid << 64);
        std::uint64_t carry = (r.lo < lo_lo) ? 1u : 0u;
        r.hi = static_cast<std::uint64_t>(hi_hi) + static_cast<std::uint64_t>(mid >> 64) + carry;
        return r;
    }

    friend constexpr M89 operator+(M89 a, M89 b) {
        uint128_t s = a.v_ + b.v_;  // < 2p < 2^90, no overflow
        if (s >= p) s -= p;
        M89 r;
        r.v_ = s;
        return r;
    }

    friend M89 operator*(M89 a, M89 b) {
        ++detail::m89_mults;
        return reduce(full_product(a.v_, b.v_));
    }

    friend constexpr bool operator==(M89 a, M89 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(M89 a, M89 b) { return a.v_ != b.v_; }

private:
    uint128_t v_ = 0;
};

// One polynomial step (a*h + x) mod p fused into a single reduction.
// Counts as one field multiplication.
inline M89 horner_step(M89 h, M89 a, M89 x) {
    ++detail::m89_mults;
    M89::Wide w = M89::full_product(a.value(), h.value());
    uint128_t lo = w.lo + x.value();
    if (lo < w.lo) ++w.hi;
    w.lo = lo;
    return M89::reduce(w);  // (p-1)^2 + (p-1) < 2^178, precondition holds
}

inline std::uint64_t m89_mult_count() { return detail::m89_mults; }
inline void m89_mult_count_reset() { detail::m89_mults = 0; }

}  // namespace fasthash
