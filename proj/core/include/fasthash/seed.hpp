#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fasthash {

// Stream of 64-bit seed words.
//
// Three modes:
//   fixed(s)        deterministic SplitMix stream from a 64-bit seed,
//   system_entropy  seeded once from std::random_device,
//   replay(words)   hands back a recorded list verbatim (throws
//                   std::runtime_error when exhausted).
//
// Every draw can be logged, and a log written out as hex can be fed back in
// replay mode to reproduce a run exactly.
class SeedSource {
public:
    SeedSource() = default;  // same as fixed(0)

    static SeedSource fixed(std::uint64_t seed);
    static SeedSource system_entropy();
    static SeedSource replay(std::vector<std::uint64_t> words);

    std::uint64_t next_u64();

    void set_logging(bool on) { logging_ = on; }
    const std::vector<std::uint64_t>& log() const { return log_; }

private:
    bool replay_ = false;
    std::uint64_t state_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t pos_ = 0;
    bool logging_ = false;
    std::vector<std::uint64_t> log_;
};

// Hex serialization shared by seed logs and hash output: lowercase digits,
// most significant first, fixed width.
std::string to_hex(std::uint64_t v, int digits = 16);
std::uint64_t parse_hex_u64(std::string_view text);

// One 16-digit word per line.  Blank lines are ignored on read; anything
// else malformed throws std::runtime_error.
void write_seed_words(std::ostream& out, const std::vector<std::uint64_t>& words);
std::vector<std::uint64_t> read_seed_words(std::istream& in);

}  // namespace fasthash
