#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "resonance/io.hpp"
#include "resonance/oracle.hpp"
#include "resonance/resonance_search.hpp"
#include "resonance/stats.hpp"

namespace {

using namespace resonance;
namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResource = 4;

class FileSink : public SolutionSink {
  public:
    explicit FileSink(std::ostream* os) : os_(os) {}
    void on_quad(const ResonanceQuad& r) override { write(to_jsonl(r)); }
    void on_triad(const ResonanceTriad& r) override { write(to_jsonl(r)); }
    void on_case2(const Case2Pairing& r) override { write(to_jsonl(r)); }

  private:
    void write(const std::string& line) {
        if (os_) (*os_) << line << '\n';
    }
    std::ostream* os_;
};

class CollectSink : public SolutionSink {
  public:
    std::vector<ResonanceQuad> quads;
    std::vector<ResonanceTriad> triads;
    void on_quad(const ResonanceQuad& r) override { quads.push_back(r); }
    void on_triad(const ResonanceTriad& r) override { triads.push_back(r); }
};

// Output files are written to a temporary sibling and renamed on success so
// an aborted run never leaves a partial file behind.
class AtomicFile {
  public:
    explicit AtomicFile(const std::string& path)
        : path_(path), tmp_(path + ".tmp"), os_(tmp_, std::ios::binary) {
        if (!os_) throw std::runtime_error("cannot open " + tmp_);
    }
    std::ostream& stream() { return os_; }
    void commit() {
        os_.close();
        fs::rename(tmp_, path_);
        committed_ = true;
    }
    ~AtomicFile() {
        if (!committed_) {
            os_.close();
            std::error_code ec;
            fs::remove(tmp_, ec);
        }
    }

  private:
    std::string path_;
    std::string tmp_;
    std::ofstream os_;
    bool committed_ = false;
};

int run_verify_file(const std::string& input, std::optional<i64> domain) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot open " << input << "\n";
        return kExitConfig;
    }
    VerifyReport rep = verify_solutions_stream(in, domain);
    std::cout << "records " << rep.records << ", failures " << rep.failures
              << "\n";
    for (const auto& msg : rep.messages) std::cerr << "  " << msg << "\n";
    return rep.failures == 0 ? 0 : kExitVerification;
}

int run_solver(RunConfig cfg, const std::string& solutions_path,
               const std::string& stats_path, const std::string& cache_path,
               bool verify_oracle) {
    std::vector<i64> cached;
    bool have_cache = false;
    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        if (in) {
            if (auto c = read_classes_cache(in, cfg.kind, cfg.domain)) {
                cached = std::move(*c);
                have_cache = true;
            }
        }
    }

    std::optional<AtomicFile> sol_file;
    if (!solutions_path.empty()) sol_file.emplace(solutions_path);

    FileSink file_sink(sol_file ? &sol_file->stream() : nullptr);
    CollectSink collect;
    SolutionSink* sink = &file_sink;

    struct TeeSink : SolutionSink {
        SolutionSink *a, *b;
        void on_quad(const ResonanceQuad& r) override {
            a->on_quad(r);
            b->on_quad(r);
        }
        void on_triad(const ResonanceTriad& r) override {
            a->on_triad(r);
            b->on_triad(r);
        }
        void on_case2(const Case2Pairing& r) override {
            a->on_case2(r);
            b->on_case2(r);
        }
    } tee;
    if (verify_oracle) {
        tee.a = &file_sink;
        tee.b = &collect;
        sink = &tee;
    }

    RunStats st = run(cfg, *sink, have_cache ? &cached : nullptr);

    if (!cache_path.empty() && !have_cache) {
        // The sieve is deterministic in (kind, D); persist it for reuse.
        SpfTable spf(cfg.norm_bound);
        auto classes = sieve_classes(cfg, spf);
        AtomicFile out(cache_path);
        write_classes_cache(out.stream(), cfg.kind, cfg.domain, classes);
        out.commit();
    }

    if (!stats_path.empty()) {
        AtomicFile out(stats_path);
        emit_stats_csv(st, out.stream());
        out.commit();
    }
    if (sol_file) sol_file->commit();

    std::cout << wave_kind_name(cfg.kind) << " D=" << cfg.domain << ": "
              << st.class_count << " classes, " << st.checked_classes
              << " searched, " << st.solutions_total << " solutions ("
              << st.solutions_asymmetric << " asymmetric), "
              << st.total_ms << " ms\n";
    emit_convention_report(st, std::cout);

    if (verify_oracle) {
        OracleOptions opts;
        opts.include_zero_sum = cfg.include_zero_sum;
        bool ok;
        if (cfg.kind == WaveKind::gravity4) {
            auto expect = brute_force_gravity(cfg.domain, opts);
            ok = expect == collect.quads;
            if (!ok)
                std::cerr << "oracle mismatch: pipeline " << collect.quads.size()
                          << " solutions, oracle " << expect.size() << "\n";
        } else {
            auto expect = brute_force_planetary(cfg.domain, opts);
            ok = expect == collect.triads;
            if (!ok)
                std::cerr << "oracle mismatch: pipeline " << collect.triads.size()
                          << " solutions, oracle " << expect.size() << "\n";
        }
        if (!ok) return kExitVerification;
        std::cout << "oracle agreement confirmed\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact resonant wave-tuple enumerator"};
    app.require_subcommand(0, 1);

    std::string wave, solutions_path, stats_path, cache_path;
    std::string quotient = "none";
    i64 domain = 0;
    int threads = 0;
    bool verify_oracle = false, emit_case2 = false, include_zero_sum = false;
    bool cache_weights = false;

    app.add_option("--wave", wave, "wave type: gravity4 | planetary3");
    app.add_option("--domain", domain, "domain half-width D");
    app.add_option("--solutions", solutions_path, "write solutions (JSONL)");
    app.add_option("--stats", stats_path, "write run statistics (CSV)");
    app.add_option("--quotient", quotient, "none | sign-orbits");
    app.add_option("--classes-cache", cache_path, "class-list cache file");
    app.add_option("--threads", threads,
                   "worker threads (RESONANCE_THREADS as fallback)");
    app.add_flag("--verify-oracle", verify_oracle,
                 "cross-check against the brute-force oracle (small domains)");
    app.add_flag("--emit-case2", emit_case2,
                 "also emit cross-class trivial pairings (tiny domains only)");
    app.add_flag("--include-zero-sum", include_zero_sum,
                 "count standing quartets with zero side momentum");
    app.add_flag("--cache-weights", cache_weights,
                 "memoize weight quads per multiplicity");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a solution file");
    std::string verify_input;
    i64 verify_domain = 0;
    verify_cmd->add_option("--input", verify_input, "solutions JSONL file")
        ->required();
    verify_cmd->add_option("--domain", verify_domain,
                           "also enforce coordinate bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitConfig;
    }

    try {
        if (verify_cmd->parsed()) {
            std::optional<i64> dom;
            if (verify_domain > 0) dom = verify_domain;
            return run_verify_file(verify_input, dom);
        }

        auto kind = parse_wave_kind(wave);
        if (!kind) {
            std::cerr << "error: --wave must be gravity4 or planetary3\n";
            return kExitConfig;
        }
        auto qmode = parse_quotient_mode(quotient);
        if (!qmode) {
            std::cerr << "error: --quotient must be none or sign-orbits\n";
            return kExitConfig;
        }
        if (threads == 0) {
            if (const char* env = std::getenv("RESONANCE_THREADS"))
                threads = std::atoi(env);
        }
        if (threads < 0) {
            std::cerr << "error: --threads must be positive\n";
            return kExitConfig;
        }

        RunConfig cfg = RunConfig::make(*kind, domain);
        cfg.quotient = *qmode;
        cfg.threads = threads == 0 ? 1 : threads;
        cfg.emit_case2 = emit_case2;
        cfg.include_zero_sum = include_zero_sum;
        cfg.cache_weight_quads = cache_weights;

        if (emit_case2 && (cfg.kind != WaveKind::gravity4 ||
                           cfg.domain > kCase2DomainCap)) {
            std::cerr << "error: --emit-case2 applies to gravity4 with domain <= "
                      << kCase2DomainCap << "\n";
            return kExitConfig;
        }
        if (verify_oracle) {
            i64 cap = cfg.kind == WaveKind::gravity4 ? kGravityOracleCeiling
                                                     : kPlanetaryOracleCeiling;
            if (cfg.domain > cap) {
                std::cerr << "error: --verify-oracle is limited to domain <= "
                          << cap << " for this wave type\n";
                return kExitConfig;
            }
        }
        return run_solver(cfg, solutions_path, stats_path, cache_path,
                          verify_oracle);
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
}
