#include "fasthash/sampling.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace fasthash {

Sampler draw_sampler(SeedSource& src, int w, int out_bits, std::uint64_t threshold) {
    if (out_bits < 1 || out_bits > 63)
        throw std::invalid_argument("sampler range must be 1..63 bits");
    Sampler s;
    // Full-width seed words keep the scheme strongly universal for any
    // w <= wbar - out_bits + 1.
    s.seed = draw_affine_seed(src, w, out_bits, /*wbar=*/64);
    if (threshold > s.range())
        throw std::invalid_argument("threshold exceeds hash range");
    s.threshold = threshold;
    return s;
}

Sample sample_set(const Sampler& s, std::span<const std::uint64_t> keys) {
    Sample out;
    out.sampler = s;
    for (std::uint64_t k : keys)
        if (s.sampled(k)) out.keys.push_back(k);
    std::sort(out.keys.begin(), out.keys.end());
    out.keys.erase(std::unique(out.keys.begin(), out.keys.end()), out.keys.end());
    return out;
}

double estimate_size(const Sample& s) {
    if (s.sampler.threshold == 0)
        throw std::invalid_argument("cannot estimate size with threshold 0");
    return static_cast<double>(s.keys.size()) *
           static_cast<double>(s.sampler.range()) /
           static_cast<double>(s.sampler.threshold);
}

Sample combine(SetOp op, const Sample& a, const Sample& b) {
    if (!(a.sampler == b.sampler))
        throw std::invalid_argument("samples were not taken with the same sampler");
    Sample out;
    out.sampler = a.sampler;
    out.keys.reserve(a.keys.size() + b.keys.size());
    switch (op) {
        case SetOp::set_union:
            std::set_union(a.keys.begin(), a.keys.end(), b.keys.begin(), b.keys.end(),
                           std::back_inserter(out.keys));
            break;
        case SetOp::set_intersection:
            std::set_intersection(a.keys.begin(), a.keys.end(), b.keys.begin(),
                                  b.keys.end(), std::back_inserter(out.keys));
            break;
        case SetOp::set_difference:
            std::set_difference(a.keys.begin(), a.keys.end(), b.keys.begin(),
                                b.keys.end(), std::back_inserter(out.keys));
            break;
        case SetOp::set_symmetric_difference:
            std::set_symmetric_difference(a.keys.begin(), a.keys.end(), b.keys.begin(),
                                          b.keys.end(), std::back_inserter(out.keys));
            break;
    }
    return out;
}

}  // namespace fasthash
