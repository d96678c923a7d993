// fasthash command-line tool: word counting, file signatures, scheme
// verification, microbenchmarks, and a coordinated-sampling simulator.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input error,
// 3 enumeration budget refusal.

#include <chrono>
#include <cinttypes>
#include <clocale>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fasthash/int_hash.hpp"
#include "fasthash/mersenne.hpp"
#include "fasthash/sampling.hpp"
#include "fasthash/seed.hpp"
#include "fasthash/string_hash.hpp"
#include "fasthash/table.hpp"
#include "fasthash/verify.hpp"

namespace fh = fasthash;

namespace {

// ------------------------------------------------------------- seed flags ---

struct SeedOpts {
    std::optional<std::uint64_t> seed;
    std::string seed_file;
    std::string print_seeds;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Fixed 64-bit seed for reproducible runs");
        cmd->add_option("--seed-file", seed_file,
                        "Replay seed words from a file (one hex word per line)");
        cmd->add_option("--print-seeds", print_seeds,
                        "Write every drawn seed word to this file in hex");
    }

    fh::SeedSource make() const {
        fh::SeedSource src;
        if (!seed_file.empty()) {
            std::ifstream in(seed_file);
            if (!in) throw std::runtime_error("cannot open seed file: " + seed_file);
            src = fh::SeedSource::replay(fh::read_seed_words(in));
        } else if (seed) {
            src = fh::SeedSource::fixed(*seed);
        } else {
            src = fh::SeedSource::system_entropy();
        }
        src.set_logging(!print_seeds.empty());
        return src;
    }

    void finish(const fh::SeedSource& src) const {
        if (print_seeds.empty()) return;
        std::ofstream out(print_seeds);
        if (!out) throw std::runtime_error("cannot write seed file: " + print_seeds);
        fh::write_seed_words(out, src.log());
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

bool is_token_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// -------------------------------------------------------------- wordcount ---

int cmd_wordcount(const std::string& path, bool fold_case, bool stats,
                  const std::string& mode, const SeedOpts& seeds) {
    std::string text = read_file(path);
    if (text.find('\0') != std::string::npos)
        throw std::invalid_argument("input contains a nil byte; refusing to tokenize");

    fh::SeedSource src = seeds.make();
    fh::ChainTable::Config cfg;
    if (mode == "full") {
        cfg.mode = fh::ChainTable::Mode::full_key;
    } else if (mode == "sig") {
        cfg.mode = fh::ChainTable::Mode::signature;
    } else {
        throw std::invalid_argument("unknown table mode: " + mode);
    }
    fh::ChainTable table(cfg, src);

    std::uint64_t tokens = 0;
    std::uint64_t hash_sum = 0;
    std::size_t i = 0;
    std::string word;
    while (i < text.size()) {
        while (i < text.size() && is_token_space(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t begin = i;
        while (i < text.size() && !is_token_space(static_cast<unsigned char>(text[i]))) ++i;
        if (i == begin) break;
        word.assign(text, begin, i - begin);
        if (fold_case)
            for (char& c : word)
                if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        ++tokens;
        hash_sum += table.bucket_index(word);
        table.insert(word);
    }

    std::cout << table.size() << "\n";
    if (stats) {
        std::cout << "tokens=" << tokens << "\n"
                  << "distinct=" << table.size() << "\n"
                  << "buckets=" << table.bucket_count() << "\n"
                  << "load=" << fmt("%.6f", static_cast<double>(table.size()) /
                                                 static_cast<double>(table.bucket_count()))
                  << "\n"
                  << "probes=" << table.probe_count() << "\n"
                  << "hash_sum=" << fh::to_hex(hash_sum) << "\n";
    }
    seeds.finish(src);
    return 0;
}

// -------------------------------------------------------------- signature ---

int cmd_signature(const std::string& path, int bits, const SeedOpts& seeds) {
    if (bits != 32 && bits != 64) throw std::invalid_argument("--bits must be 32 or 64");
    std::string data = read_file(path);
    fh::SeedSource src = seeds.make();
    // m = 2^bits; 0 denotes 2^64 in the composed polynomial range.
    std::uint64_t m = bits == 64 ? 0 : (std::uint64_t{1} << bits);
    fh::ChunkedSeeds cs = fh::draw_chunked_seeds(src, m);
    std::uint64_t sig = fh::chunked_hash(cs, data);
    std::cout << fh::to_hex(sig, bits / 4) << "\n";
    seeds.finish(src);
    return 0;
}

// ----------------------------------------------------------------- verify ---

fh::verify::Scheme parse_scheme(const std::string& name) {
    using fh::verify::Scheme;
    for (Scheme s : {Scheme::ms_universal, Scheme::ms_strong, Scheme::mmp_universal,
                     Scheme::mmp_strong, Scheme::vms, Scheme::pms, Scheme::prefix_pms,
                     Scheme::naive_vector})
        if (name == fh::verify::scheme_name(s)) return s;
    throw std::invalid_argument("unknown scheme: " + name);
}

// One ad-hoc enumeration instead of the full suite: collision probability
// for the universal/naive schemes, full pairwise census for the strong ones.
// Oversized parameter choices are refused by the evaluation budget (exit 3).
int cmd_verify_single(const fh::verify::SchemeSpec& spec, int workers) {
    namespace fv = fh::verify;
    fv::CheckRecord rec;
    rec.scheme = fv::scheme_name(spec.scheme);
    {
        std::ostringstream params;
        params << "w:" << spec.w << ",l:" << spec.out_bits;
        if (spec.wbar) params << ",wbar:" << spec.wbar;
        if (spec.dim) params << ",d:" << spec.dim;
        if (spec.prime) params << ",p:" << spec.prime << ",m:" << spec.m;
        rec.params = params.str();
    }
    switch (spec.scheme) {
        case fv::Scheme::ms_universal:
        case fv::Scheme::mmp_universal:
        case fv::Scheme::naive_vector: {
            fv::CollisionReport rep = fv::exhaustive_collision_probability(spec, workers);
            rec.check = "max_collision_probability";
            rec.analytic_bound =
                spec.scheme == fv::Scheme::mmp_universal
                    ? fv::bound_universal(static_cast<double>(spec.m))
                    : fv::bound_ms_universal(spec.out_bits);
            rec.measured = rep.probability();
            // the naive scheme is the negative control: it must *violate*
            // the universal bound to demonstrate the defect
            rec.pass = spec.scheme == fv::Scheme::naive_vector
                           ? rec.measured > rec.analytic_bound
                           : rec.measured <= rec.analytic_bound;
            break;
        }
        default: {
            fv::PairwiseReport rep = fv::exhaustive_pairwise_distribution(spec, workers);
            rec.check = "max_pairwise_deviation";
            rec.analytic_bound = 0;
            rec.measured = rep.max_abs_deviation;
            rec.pass = rep.max_abs_deviation == 0;
            break;
        }
    }
    std::cout << fh::verify::format_record(rec) << "\n";
    std::cout << "result=" << (rec.pass ? "pass" : "fail")
              << " checks=1 failures=" << (rec.pass ? 0 : 1) << "\n";
    return rec.pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& fault, int workers,
               const SeedOpts& seeds) {
    bool faulty_reduce = false;
    if (fault == "reduce-off-by-one") {
        faulty_reduce = true;
    } else if (!fault.empty()) {
        throw std::invalid_argument("unknown fault: " + fault);
    }

    std::vector<fh::verify::CheckRecord> records;
    if (suite == "exhaustive" || suite == "all") {
        auto r = fh::verify::run_exhaustive_suite(faulty_reduce, workers);
        records.insert(records.end(), r.begin(), r.end());
    }
    if (suite == "statistical" || suite == "all") {
        fh::SeedSource src = seeds.make();
        auto r = fh::verify::run_statistical_suite(src);
        records.insert(records.end(), r.begin(), r.end());
        seeds.finish(src);
    }
    if (suite != "exhaustive" && suite != "statistical" && suite != "all")
        throw std::invalid_argument("unknown suite: " + suite);

    std::size_t failures = 0;
    for (const auto& r : records) {
        std::cout << fh::verify::format_record(r) << "\n";
        failures += !r.pass;
    }
    std::cout << "result=" << (failures == 0 ? "pass" : "fail")
              << " checks=" << records.size() << " failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ bench ---

struct BenchRow {
    std::string scheme;
    std::uint64_t bytes = 0;
    std::uint64_t hashes = 0;
    std::uint64_t hash_sum = 0;
    std::uint64_t m89_mults = 0;
    double seconds = 0;
};

void print_bench_row(const BenchRow& r) {
    std::cout << "scheme=" << r.scheme << " bytes=" << r.bytes << " hashes=" << r.hashes
              << " hash_sum=" << fh::to_hex(r.hash_sum) << " m89_mults=" << r.m89_mults
              << "\n";
    double ns = r.hashes ? r.seconds * 1e9 / static_cast<double>(r.hashes) : 0.0;
    double mbps = r.seconds > 0 ? static_cast<double>(r.bytes) / (1e6 * r.seconds) : 0.0;
    std::cerr << "scheme=" << r.scheme << fmt(" ns_per_hash=%.1f", ns)
              << fmt(" mb_per_s=%.1f", mbps) << "\n";
}

template <class F>
BenchRow run_bench(const std::string& name, std::uint64_t bytes, F&& body) {
    BenchRow row;
    row.scheme = name;
    row.bytes = bytes;
    fh::m89_mult_count_reset();
    auto t0 = std::chrono::steady_clock::now();
    body(row);
    auto t1 = std::chrono::steady_clock::now();
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    row.m89_mults = fh::m89_mult_count();
    return row;
}

int cmd_bench(const std::string& scheme, std::uint64_t size, const SeedOpts& seeds) {
    static const std::vector<std::string> known = {"ms_universal", "ms_strong", "mmp",
                                                   "bounded",      "poly",      "chunked"};
    std::vector<std::string> todo;
    if (scheme == "all") {
        todo = known;
    } else if (std::find(known.begin(), known.end(), scheme) != known.end()) {
        todo = {scheme};
    } else {
        throw std::invalid_argument("unknown scheme: " + scheme);
    }

    fh::SeedSource src = seeds.make();
    std::string buf(size, '\0');
    for (std::size_t i = 0; i < size; i += 8) {
        std::uint64_t w = src.next_u64();
        for (std::size_t j = 0; j < 8 && i + j < size; ++j)
            buf[i + j] = static_cast<char>((w >> (8 * j)) & 0xff);
    }
    const std::uint64_t words = size / 8;
    auto word_at = [&buf](std::uint64_t i) {
        std::uint64_t w = 0;
        for (int j = 7; j >= 0; --j)
            w = (w << 8) | static_cast<unsigned char>(buf[i * 8 + static_cast<std::uint64_t>(j)]);
        return w;
    };

    std::vector<BenchRow> rows;
    for (const std::string& s : todo) {
        if (s == "ms_universal") {
            fh::OddSeed seed = fh::draw_odd_seed(src, 64);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                for (std::uint64_t i = 0; i < words; ++i)
                    r.hash_sum += fh::ms_universal(seed, word_at(i), 32);
                r.hashes = words;
            }));
        } else if (s == "ms_strong") {
            fh::AffineSeed seed = fh::draw_affine_seed(src, 32, 32, 64);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                for (std::uint64_t i = 0; i < words; ++i) {
                    std::uint64_t w = word_at(i);
                    r.hash_sum += fh::ms_strong(seed, w & 0xffffffffu);
                    r.hash_sum += fh::ms_strong(seed, w >> 32);
                }
                r.hashes = 2 * words;
            }));
        } else if (s == "mmp") {
            fh::PrimeAffineSeed seed = fh::draw_prime_affine_seed(src, false);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                for (std::uint64_t i = 0; i < words; ++i)
                    r.hash_sum += fh::mmp_hash(seed, word_at(i), std::uint64_t{1} << 32);
                r.hashes = words;
            }));
        } else if (s == "bounded") {
            fh::VectorSeeds seed = fh::draw_vector_seeds(src, 32, 32, 64, 64);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                const std::uint64_t blocks = size / 256;
                fh::PackedString packed;
                packed.byte_len = 256;
                packed.words.resize(32);
                for (std::uint64_t b = 0; b < blocks; ++b) {
                    for (std::uint64_t j = 0; j < 32; ++j)
                        packed.words[j] = word_at(b * 32 + j);
                    r.hash_sum += fh::bounded_hash(seed, packed);
                }
                r.hashes = blocks;
            }));
        } else if (s == "poly") {
            fh::PolySeeds seed = fh::draw_poly_seeds(src, 0);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                if (words == 0) return;
                std::vector<std::uint64_t> chars(words);
                for (std::uint64_t i = 0; i < words; ++i) chars[i] = word_at(i);
                fh::m89_mult_count_reset();  // exclude setup
                r.hash_sum += fh::poly_hash_composed(seed, chars);
                r.hashes = 1;
            }));
        } else if (s == "chunked") {
            fh::ChunkedSeeds seed = fh::draw_chunked_seeds(src, 0);
            rows.push_back(run_bench(s, size, [&](BenchRow& r) {
                r.hash_sum += fh::chunked_hash(seed, buf);
                r.hashes = 1;
            }));
        }
    }
    for (const auto& r : rows) print_bench_row(r);
    seeds.finish(src);
    return 0;
}

// ------------------------------------------------------------- sample-sim ---

std::vector<std::uint64_t> iota_keys(std::uint64_t begin, std::uint64_t count) {
    std::vector<std::uint64_t> v(count);
    std::iota(v.begin(), v.end(), begin);
    return v;
}

double parse_prob(const std::string& s) {
    auto slash = s.find('/');
    double p;
    if (slash != std::string::npos) {
        double num = std::stod(s.substr(0, slash));
        double den = std::stod(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("bad probability: " + s);
        p = num / den;
    } else {
        p = std::stod(s);
    }
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("probability must be in (0, 1]");
    return p;
}

int cmd_sample_sim(const std::string& sets, const std::string& prob,
                   std::uint64_t trials, const SeedOpts& seeds) {
    std::uint64_t nb = 0, nc = 0, nshared = 0;
    if (std::sscanf(sets.c_str(), "%" SCNu64 ",%" SCNu64 ",%" SCNu64, &nb, &nc, &nshared) != 3)
        throw std::invalid_argument("--sets expects NB,NC,NSHARED");
    if (nshared > nb || nshared > nc)
        throw std::invalid_argument("shared part cannot exceed either set");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    const int out_bits = 30;
    const double m = std::ldexp(1.0, out_bits);
    double p = parse_prob(prob);
    std::uint64_t t = static_cast<std::uint64_t>(std::llround(p * m));
    if (t == 0 || t > (std::uint64_t{1} << out_bits))
        throw std::invalid_argument("probability out of range for m = 2^30");

    // B = [0, nb); C = [nb - nshared, nb - nshared + nc): overlap is exactly
    // nshared keys, union and symmetric difference are contiguous ranges.
    std::uint64_t c_begin = nb - nshared;
    std::vector<std::uint64_t> B = iota_keys(0, nb);
    std::vector<std::uint64_t> C = iota_keys(c_begin, nc);
    std::vector<std::uint64_t> U = iota_keys(0, c_begin + nc);
    std::vector<std::uint64_t> I = iota_keys(c_begin, nshared);
    std::vector<std::uint64_t> D = iota_keys(0, c_begin);
    {
        std::vector<std::uint64_t> tail = iota_keys(nb, c_begin + nc - nb);
        D.insert(D.end(), tail.begin(), tail.end());
    }

    struct Quantity {
        const char* name;
        fh::SetOp op;
        const std::vector<std::uint64_t>* truth;
        double sum = 0;
        std::uint64_t cheb_failures = 0;
    };
    std::vector<Quantity> qs = {
        {"union", fh::SetOp::set_union, &U},
        {"intersection", fh::SetOp::set_intersection, &I},
        {"symmetric_difference", fh::SetOp::set_symmetric_difference, &D},
    };
    double sum_b = 0, sum_c = 0;
    std::uint64_t cheb_b = 0, cheb_c = 0;
    const double q = 10.0;

    auto sd_est = [&](double n) {
        // strongly universal sampling: pairwise independence makes the
        // sample count Binomial-like, Var(est) = n (1-p) m / t
        return std::sqrt(n * (1.0 - static_cast<double>(t) / m) * m / static_cast<double>(t));
    };

    fh::SeedSource src = seeds.make();
    bool coordination_exact = true;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        fh::Sampler sampler = fh::draw_sampler(src, 35, out_bits, t);
        fh::Sample sb = fh::sample_set(sampler, B);
        fh::Sample sc = fh::sample_set(sampler, C);
        double eb = fh::estimate_size(sb), ec = fh::estimate_size(sc);
        sum_b += eb;
        sum_c += ec;
        cheb_b += std::abs(eb - static_cast<double>(nb)) >= q * sd_est(static_cast<double>(nb));
        cheb_c += std::abs(ec - static_cast<double>(nc)) >= q * sd_est(static_cast<double>(nc));
        for (auto& quan : qs) {
            fh::Sample combined = fh::combine(quan.op, sb, sc);
            fh::Sample direct = fh::sample_set(sampler, *quan.truth);
            if (combined.keys != direct.keys) coordination_exact = false;
            double est = fh::estimate_size(combined);
            quan.sum += est;
            double truth = static_cast<double>(quan.truth->size());
            quan.cheb_failures += std::abs(est - truth) >= q * sd_est(truth);
        }
    }

    std::cout << "sets B=" << nb << " C=" << nc << " shared=" << nshared << "\n"
              << "sampler m=" << (std::uint64_t{1} << out_bits) << " t=" << t
              << fmt(" p=%.9g", static_cast<double>(t) / m) << " trials=" << trials << "\n";
    auto report = [&](const char* name, double truth, double sum, std::uint64_t cheb) {
        double mean = sum / static_cast<double>(trials);
        double se_mean = sd_est(truth) / std::sqrt(static_cast<double>(trials));
        bool within = truth == 0 ? mean == 0 : std::abs(mean - truth) <= 3 * se_mean;
        std::cout << "quantity=" << name << fmt(" true=%.0f", truth)
                  << fmt(" mean=%.4f", mean) << fmt(" se_mean=%.4f", se_mean)
                  << " within_3se=" << (within ? "true" : "false")
                  << " cheb_failures=" << cheb
                  << fmt(" cheb_fraction=%.6f",
                         static_cast<double>(cheb) / static_cast<double>(trials))
                  << fmt(" cheb_allowed=%.6f", 4.0 / (q * q)) << "\n";
    };
    report("B", static_cast<double>(nb), sum_b, cheb_b);
    report("C", static_cast<double>(nc), sum_c, cheb_c);
    for (auto& quan : qs)
        report(quan.name, static_cast<double>(quan.truth->size()), quan.sum,
               quan.cheb_failures);
    std::cout << "coordination=" << (coordination_exact ? "exact" : "VIOLATED") << "\n";
    seeds.finish(src);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"fasthash: universal and strongly universal hashing toolkit"};
    app.require_subcommand(1);

    // wordcount
    auto* wc = app.add_subcommand("wordcount", "Count distinct whitespace-separated words");
    std::string wc_file;
    bool wc_fold = false, wc_stats = false;
    std::string wc_mode = "sig";
    SeedOpts wc_seeds;
    wc->add_option("file", wc_file, "Input text file")->required();
    wc->add_flag("--fold-case", wc_fold, "Lowercase ASCII letters before hashing");
    wc->add_flag("--stats", wc_stats, "Print table statistics after the count");
    wc->add_option("--mode", wc_mode, "Table storage: sig (default) or full");
    wc_seeds.attach(wc);

    // signature
    auto* sg = app.add_subcommand("signature", "Print a chunked polynomial file signature");
    std::string sg_file;
    int sg_bits = 64;
    SeedOpts sg_seeds;
    sg->add_option("file", sg_file, "Input file (binary allowed)")->required();
    sg->add_option("--bits", sg_bits, "Signature width: 32 or 64 (default)");
    sg_seeds.attach(sg);

    // verify
    auto* vf = app.add_subcommand("verify", "Run the property-verification suites");
    std::string vf_suite = "all";
    std::string vf_fault;
    int vf_workers = 0;
    SeedOpts vf_seeds;
    vf->add_option("--suite", vf_suite, "exhaustive, statistical, or all (default)");
    vf->add_option("--inject-fault", vf_fault,
                   "Self-test aid: 'reduce-off-by-one' breaks the field reduction "
                   "to prove the suite catches it");
    vf->add_option("--workers", vf_workers, "Enumeration shards (default: all cores)");
    std::string vf_scheme;
    fh::verify::SchemeSpec vf_spec;
    vf->add_option("--scheme", vf_scheme,
                   "Run one exhaustive enumeration instead of the suites: "
                   "ms_universal, ms_strong, mmp_universal, mmp_strong, vms, "
                   "pms, prefix_pms, or naive_vector");
    vf->add_option("--w", vf_spec.w, "Key bits for the single enumeration");
    vf->add_option("--l", vf_spec.out_bits, "Output bits");
    vf->add_option("--wbar", vf_spec.wbar, "Seed word bits (strong shift schemes)");
    vf->add_option("--dim", vf_spec.dim, "Coordinates (vector schemes)");
    vf->add_option("--prime", vf_spec.prime, "Surrogate prime (mmp schemes)");
    vf->add_option("--m", vf_spec.m, "Output range (mmp schemes)");
    vf_seeds.attach(vf);

    // bench
    auto* bn = app.add_subcommand("bench", "Measure hashing throughput (informational)");
    std::string bn_scheme = "all";
    std::uint64_t bn_size = 1 << 20;
    SeedOpts bn_seeds;
    bn->add_option("--scheme", bn_scheme,
                   "all, ms_universal, ms_strong, mmp, bounded, poly, chunked");
    bn->add_option("--size", bn_size, "Input size in bytes (default 1 MiB)");
    bn_seeds.attach(bn);

    // sample-sim
    auto* ss = app.add_subcommand("sample-sim", "Coordinated threshold-sampling simulator");
    std::string ss_sets = "100000,100000,50000";
    std::string ss_p = "1/16";
    std::uint64_t ss_trials = 200;
    SeedOpts ss_seeds;
    ss->add_option("--sets", ss_sets, "Set sizes as NB,NC,NSHARED");
    ss->add_option("--p", ss_p, "Sampling probability (fraction like 1/16 or decimal)");
    ss->add_option("--trials", ss_trials, "Number of independent seeds");
    ss_seeds.attach(ss);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (wc->parsed()) return cmd_wordcount(wc_file, wc_fold, wc_stats, wc_mode, wc_seeds);
        if (sg->parsed()) return cmd_signature(sg_file, sg_bits, sg_seeds);
        if (vf->parsed()) {
            if (!vf_scheme.empty()) {
                vf_spec.scheme = parse_scheme(vf_scheme);
                return cmd_verify_single(vf_spec, vf_workers);
            }
            return cmd_verify(vf_suite, vf_fault, vf_workers, vf_seeds);
        }
        if (bn->parsed()) return cmd_bench(bn_scheme, bn_size, bn_seeds);
        if (ss->parsed()) return cmd_sample_sim(ss_sets, ss_p, ss_trials, ss_seeds);
    } catch (const fasthash::verify::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
