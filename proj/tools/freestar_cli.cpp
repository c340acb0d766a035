// Command-line front end: confluence checking, growth and homology reports,
// rule dumps, and the umbrella verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "freestar/cache.hpp"
#include "freestar/growth.hpp"
#include "freestar/homology.hpp"
#include "freestar/reports.hpp"
#include "freestar/resolution.hpp"
#include "freestar/rewrite.hpp"
#include "freestar/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitInternalError = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

freestar::RewritingSystem make_system(const std::string& name, unsigned rank, unsigned bound) {
    if (name == "r1") return freestar::RewritingSystem::r1();
    if (name == "r1-bounded") return freestar::RewritingSystem::r1_bounded(bound);
    if (name == "rstar") return freestar::RewritingSystem::rstar(rank);
    throw std::invalid_argument("unknown system: " + name);
}

struct ConfluenceConfig {
    std::string system = "r1";
    unsigned rank = 1;
    unsigned bound = 1;
    std::size_t maxlen = 18;
    std::size_t equiv_len = 8;
    std::string dump_rules_path;
};

int cmd_confluence(const ConfluenceConfig& cfg) {
    const auto sys = make_system(cfg.system, cfg.rank, cfg.bound);
    const auto pairs = freestar::critical_pairs(sys, cfg.maxlen);
    std::size_t unresolved = 0;
    for (const auto& cp : pairs) {
        if (cp.resolved) continue;
        ++unresolved;
        std::cout << "UNRESOLVED " << cp.overlap.text() << " -> " << cp.branch_left.text()
                  << " | " << cp.branch_right.text() << "\n";
    }
    std::cout << "confluence " << sys.name() << ": " << pairs.size() << " pairs checked, "
              << unresolved << " unresolved (maxlen " << cfg.maxlen << ")\n";

    if (!cfg.dump_rules_path.empty())
        write_file(cfg.dump_rules_path, freestar::rules_dump(sys.rules_upto(cfg.maxlen)));

    bool equivalence_ok = true;
    if ((cfg.system == "r1" || cfg.system == "rstar") && sys.rank() == 1) {
        const auto report = freestar::verify_schema_equivalence(cfg.equiv_len);
        equivalence_ok = report.passed();
        std::cout << "schema equivalence up to length " << cfg.equiv_len << ": "
                  << report.words_checked << " words, "
                  << (equivalence_ok ? "pass" : "FAIL") << "\n";
        for (const auto& w : report.normal_form_mismatches)
            std::cout << "  normal-form mismatch at " << w.text() << "\n";
        for (const auto& w : report.irreducible_not_fixed)
            std::cout << "  irreducible not fixed: " << w.text() << "\n";
    }
    return (unresolved == 0 && equivalence_ok) ? kExitOk : kExitVerificationFailure;
}

struct RulesConfig {
    std::string system = "r1";
    unsigned rank = 1;
    unsigned bound = 1;
    std::size_t maxlen = 12;
    std::string out_path;
};

int cmd_rules(const RulesConfig& cfg) {
    const auto sys = make_system(cfg.system, cfg.rank, cfg.bound);
    const std::string dump = freestar::rules_dump(sys.rules_upto(cfg.maxlen));
    if (cfg.out_path.empty()) std::cout << dump;
    else write_file(cfg.out_path, dump);
    return kExitOk;
}

struct GrowthConfig {
    unsigned rank = 1;
    unsigned nmax = 22;
    std::string mode = "dp";  // dp | enum | both
    std::string format = "csv";
    std::string out_path;
    std::string plot_path;
    std::string cache_dir;
};

int cmd_growth(const GrowthConfig& cfg) {
    if (cfg.rank != 1 && cfg.rank != 2)
        throw std::invalid_argument("growth: rank must be 1 or 2");
    if (cfg.rank == 2 && cfg.nmax > freestar::enumeration_guard(2))
        throw std::invalid_argument("growth: rank-2 nmax exceeds the enumeration guard (14)");
    if (cfg.rank == 1 && cfg.nmax > 40)
        throw std::invalid_argument("growth: rank-1 nmax exceeds the report guard (40)");
    if (cfg.mode != "dp" && cfg.mode != "enum" && cfg.mode != "both")
        throw std::invalid_argument("growth: mode must be dp, enum, or both");

    const freestar::ResultCache cache(cfg.cache_dir);
    const std::string key = "growth|rank=" + std::to_string(cfg.rank) +
                            "|nmax=" + std::to_string(cfg.nmax) + "|mode=" + cfg.mode +
                            "|format=" + cfg.format;

    std::string report_text, plot_text;
    bool cached = false;
    if (auto hit = cache.load(key)) {
        const auto sep = hit->find('\0');
        if (sep != std::string::npos) {
            report_text = hit->substr(0, sep);
            plot_text = hit->substr(sep + 1);
            cached = true;
        }
    }

    if (!cached) {
        if (cfg.rank == 1) {
            // Cross-validate the two counting routes before reporting.
            if (cfg.mode != "dp") {
                const auto star = freestar::AvoidFamily::star(1);
                const unsigned limit = std::min<unsigned>(
                    cfg.nmax, static_cast<unsigned>(freestar::enumeration_guard(1)));
                freestar::DistinctPartTable table(cfg.nmax);
                for (unsigned n = 0; n <= limit; ++n) {
                    const auto dp = freestar::sphere_count_dp(n, table);
                    const auto brute = freestar::sphere_count_enumerate(star, n);
                    if (cfg.mode == "both" && dp != brute) {
                        std::cerr << "dp/enumeration mismatch at n=" << n << ": " << dp << " vs "
                                  << brute << "\n";
                        return kExitVerificationFailure;
                    }
                }
            }
            const auto report = freestar::sandwich_report(cfg.nmax);
            report_text = (cfg.format == "json") ? freestar::sandwich_json(report)
                                                 : freestar::sandwich_csv(report);
            plot_text = freestar::growth_plot(
                freestar::growth_table(cfg.nmax, freestar::CountConvention::Exact));
        } else {
            const auto report = freestar::growth_estimate_r2(cfg.nmax);
            report_text = (cfg.format == "json") ? freestar::rank_two_json(report)
                                                 : freestar::rank_two_csv(report);
            freestar::GrowthTable table;
            table.convention = freestar::CountConvention::Exact;
            for (const auto& row : report.rows) table.counts.push_back(row.sphere);
            plot_text = freestar::growth_plot(table);
        }
        cache.store(key, report_text + '\0' + plot_text);
    }

    if (cfg.out_path.empty()) std::cout << report_text;
    else write_file(cfg.out_path, report_text);
    if (!cfg.plot_path.empty()) write_file(cfg.plot_path, plot_text);
    return kExitOk;
}

struct HomologyConfig {
    unsigned truncation = 4;
    unsigned dim = 4;
    bool check_lemmas = false;
    std::string out_path;
    std::string matrix_dump_prefix;
    std::string cache_dir;
};

int cmd_homology(const HomologyConfig& cfg) {
    if (cfg.truncation < 1 || cfg.truncation > 8)
        throw std::invalid_argument("homology: truncation must be in 1..8");

    const freestar::ResultCache cache(cfg.cache_dir);
    const std::string key = "homology|N=" + std::to_string(cfg.truncation) +
                            "|D=" + std::to_string(cfg.dim) +
                            "|lemmas=" + (cfg.check_lemmas ? "1" : "0");

    std::string text;
    bool matching_passed = true;
    if (auto hit = cache.load(key); hit && cfg.matrix_dump_prefix.empty()) {
        text = *hit;
    } else {
        const auto report =
            freestar::homology_report(cfg.truncation, cfg.dim, cfg.check_lemmas);
        matching_passed = report.matching.passed();
        text = freestar::homology_json(report);
        cache.store(key, text);

        if (!cfg.matrix_dump_prefix.empty()) {
            freestar::Resolution res(freestar::RewritingSystem::r1(),
                                     freestar::Truncation{cfg.truncation, cfg.dim});
            const auto complex = freestar::tensor_trivial(res, cfg.dim);
            for (unsigned n = 1; n <= cfg.dim; ++n) {
                std::ostringstream os;
                complex.boundary(n).dump_triplets(os);
                write_file(cfg.matrix_dump_prefix + ".d" + std::to_string(n) + ".txt", os.str());
            }
        }
    }

    if (cfg.out_path.empty()) std::cout << text;
    else write_file(cfg.out_path, text);
    if (!matching_passed) {
        std::cerr << "matching verification failed; see the report\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

struct VerifyConfig {
    bool fast = false;
    std::string json_path;
};

int cmd_verify(const VerifyConfig& cfg) {
    const auto results = freestar::run_acceptance_checks({cfg.fast});
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "  ["
                  << r.detail << "]\n";
    }
    if (!cfg.json_path.empty())
        write_file(cfg.json_path, freestar::checks_summary_json(results));
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freestar: rewriting, growth and homology computations for free regular "
                 "star-monoids"};
    app.require_subcommand(1);

    ConfluenceConfig ccfg;
    auto* confluence = app.add_subcommand("confluence", "critical pairs and schema equivalence");
    confluence->add_option("--system", ccfg.system, "r1 | r1-bounded | rstar")
        ->check(CLI::IsMember({"r1", "r1-bounded", "rstar"}));
    confluence->add_option("--rank", ccfg.rank, "alphabet rank for rstar");
    confluence->add_option("--bound", ccfg.bound, "index bound for r1-bounded");
    confluence->add_option("--maxlen", ccfg.maxlen, "max overlap word length");
    confluence->add_option("--equiv-len", ccfg.equiv_len, "schema equivalence word length");
    confluence->add_option("--dump-rules", ccfg.dump_rules_path, "write the rule dump here");

    RulesConfig rcfg;
    auto* rules = app.add_subcommand("rules", "dump materialized rules, one 'lhs -> rhs' per line");
    rules->add_option("--system", rcfg.system, "r1 | r1-bounded | rstar")
        ->check(CLI::IsMember({"r1", "r1-bounded", "rstar"}));
    rules->add_option("--rank", rcfg.rank, "alphabet rank for rstar");
    rules->add_option("--bound", rcfg.bound, "index bound for r1-bounded");
    rules->add_option("--maxlen", rcfg.maxlen, "max lhs length");
    rules->add_option("--out", rcfg.out_path, "output path (stdout if omitted)");

    GrowthConfig gcfg;
    auto* growth = app.add_subcommand("growth", "sphere counts and the sandwich / rank-2 reports");
    growth->add_option("--rank", gcfg.rank, "1 or 2");
    growth->add_option("--nmax", gcfg.nmax, "max length");
    growth->add_option("--mode", gcfg.mode, "dp | enum | both")
        ->check(CLI::IsMember({"dp", "enum", "both"}));
    growth->add_option("--format", gcfg.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    growth->add_option("--out", gcfg.out_path, "report path (stdout if omitted)");
    growth->add_option("--plot", gcfg.plot_path, "plot file path (n, log2 count)");
    growth->add_option("--cache-dir", gcfg.cache_dir, "result cache directory");

    HomologyConfig hcfg;
    auto* homology = app.add_subcommand("homology", "truncated homology and the Morse complex");
    homology->add_option("--truncation", hcfg.truncation, "index bound N (1..8)");
    homology->add_option("--dim", hcfg.dim, "dimension bound (4..6)");
    homology->add_flag("--check-lemmas", hcfg.check_lemmas,
                       "check closed-form boundaries against the recursion");
    homology->add_option("--out", hcfg.out_path, "report path (stdout if omitted)");
    homology->add_option("--matrix-dump", hcfg.matrix_dump_prefix,
                         "write boundary matrices as <prefix>.dN.txt triplet files");
    homology->add_option("--cache-dir", hcfg.cache_dir, "result cache directory");

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify", "run every acceptance check");
    verify->add_flag("--fast", vcfg.fast, "skip the large enumerations");
    verify->add_option("--json", vcfg.json_path, "write a machine-readable summary here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        if (confluence->parsed()) return cmd_confluence(ccfg);
        if (rules->parsed()) return cmd_rules(rcfg);
        if (growth->parsed()) return cmd_growth(gcfg);
        if (homology->parsed()) return cmd_homology(hcfg);
        if (verify->parsed()) return cmd_verify(vcfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const freestar::TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    return kExitInvalidConfig;
}
