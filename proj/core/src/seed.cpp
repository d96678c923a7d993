#include "fasthash/seed.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

namespace fasthash {

namespace {

// SplitMix64: the standard finalizer-based stream generator.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

SeedSource SeedSource::fixed(std::uint64_t seed) {
    SeedSource s;
    s.state_ = seed;
    return s;
}

SeedSource SeedSource::system_entropy() {
    std::random_device rd;
    std::uint64_t seed = (std::uint64_t{rd()} << 32) ^ rd();
    return fixed(seed);
}

SeedSource SeedSource::replay(std::vector<std::uint64_t> words) {
    SeedSource s;
    s.replay_ = true;
    s.words_ = std::move(words);
    return s;
}

std::uint64_t SeedSource::next_u64() {
    std::uint64_t w;
    if (replay_) {
        if (pos_ >= words_.size())
            throw std::runtime_error("seed replay exhausted after " +
                                     std::to_string(words_.size()) + " words");
        w = words_[pos_++];
    } else {
        w = splitmix64(state_);
    }
    if (logging_) log_.push_back(w);
    return w;
}

std::string to_hex(std::uint64_t v, int digits) {
    static const char* alphabet = "0123456789abcdef";
    std::string s(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = alphabet[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::uint64_t parse_hex_u64(std::string_view text) {
    if (text.empty() || text.size() > 16)
        throw std::runtime_error("bad hex word: '" + std::string(text) + "'");
    std::uint64_t v = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw std::runtime_error("bad hex word: '" + std::string(text) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

void write_seed_words(std::ostream& out, const std::vector<std::uint64_t>& words) {
    for (std::uint64_t w : words) out << to_hex(w) << '\n';
}

std::vector<std::uint64_t> read_seed_words(std::istream& in) {
    std::vector<std::uint64_t> words;
    std::string line;
    while (std::getline(in, line)) {
        // trim ASCII whitespace
        std::size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r\n");
        words.push_back(parse_hex_u64(std::string_view(line).substr(b, e - b + 1)));
    }
    return words;
}

}  // namespace fasthash
