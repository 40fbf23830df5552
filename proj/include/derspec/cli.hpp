#pragma once

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "derspec/error.hpp"
#include "derspec/exact.hpp"
#include "derspec/partition.hpp"
#include "derspec/spectrum.hpp"
#include "derspec/verify.hpp"

namespace derspec {

// Exit-code contract of the command line: 0 success, 1 verification
// failure, 2 usage or parse problem, 3 character-oracle cap exceeded,
// 4 dominance-order violation.
namespace cli_detail {

inline int exit_code_for(errc code) {
    switch (code) {
        case errc::malformed_text:
        case errc::not_weakly_decreasing:
        case errc::zero_part:
        case errc::empty_partition:
        case errc::size_mismatch:
        case errc::bad_index:
            return 2;
        case errc::too_large:
            return 3;
        case errc::not_comparable:
            return 4;
        default:
            return 1;
    }
}

inline std::string sign_text(const ExactInt& v) { return v == 0 ? "0" : (v < 0 ? "-1" : "+1"); }

// Largest n accepted for direct eigenvalue computation; keeps recursion
// depth and table sizes sane.
inline constexpr long long kMaxN = 10000;

inline void require_small_enough(long long n) {
    if (n > kMaxN)
        throw error(errc::bad_index,
                    "partitions of more than " + std::to_string(kMaxN) + " are not supported");
}

inline int do_eig(const std::string& text, const std::string& method, long long oracle_cap,
                  std::ostream& out) {
    const Partition p = Partition::parse(text);
    require_small_enough(p.sum());

    ExactInt eta;
    std::string method_line;
    if (method == "auto") {
        eta = eta_new(p);
        const ExactInt b = eta_renteln(p);
        const ExactInt c = eta_schur_sum(p);
        if (eta != b || eta != c)
            throw error(errc::internal_error, "formula routes disagree at " +
                                                  format(p, PartitionStyle::exponent));
        method_line = "routes: new, renteln, schur agree";
    } else if (method == "new") {
        eta = eta_new(p);
        method_line = "method: new";
    } else if (method == "renteln") {
        eta = eta_renteln(p);
        method_line = "method: renteln";
    } else if (method == "schur") {
        eta = eta_schur_sum(p);
        method_line = "method: schur";
    } else { // character
        eta = eta_character(p, oracle_cap);
        method_line = "method: character";
    }

    const ExactInt d = dim(p);
    const ExactInt multiplicity = d * d;
    out << "partition: " << format(p, PartitionStyle::exponent) << "\n"
        << "n: " << p.sum() << "\n"
        << "eta: " << eta.str() << "\n"
        << "sign: " << sign_text(eta) << "\n"
        << "multiplicity: " << multiplicity.str() << "\n"
        << method_line << "\n";
    return 0;
}

inline nlohmann::ordered_json table_json(long long n, const std::vector<SpectrumEntry>& entries,
                                         const std::optional<long long>& min_first_part) {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["coverage"] = min_first_part ? "first-part-at-least " + std::to_string(*min_first_part)
                                     : std::string("full");
    doc["entries"] = nlohmann::ordered_json::array();
    for (const SpectrumEntry& e : entries) {
        nlohmann::ordered_json row;
        row["partition"] = e.partition.parts();
        row["eta"] = e.eta.str();
        row["sign"] = e.sign;
        row["multiplicity"] = e.multiplicity.str();
        doc["entries"].push_back(std::move(row));
    }
    return doc;
}

inline int do_table(long long n, const std::optional<long long>& min_first_part,
                    const std::string& fmt, unsigned jobs, std::ostream& out) {
    require_small_enough(n);
    const std::vector<SpectrumEntry> entries = spectrum_table(n, min_first_part, jobs);

    if (fmt == "csv") {
        out << "n,partition,eta,sign,multiplicity\n";
        for (const SpectrumEntry& e : entries)
            out << n << ",\"" << format(e.partition, PartitionStyle::exponent) << "\"," << e.eta.str()
                << ',' << e.sign << ',' << e.multiplicity.str() << "\n";
        return 0;
    }
    if (fmt == "json") {
        out << table_json(n, entries, min_first_part).dump() << "\n";
        return 0;
    }

    std::size_t pw = 9, ew = 3;
    for (const SpectrumEntry& e : entries) {
        pw = std::max(pw, format(e.partition, PartitionStyle::exponent).size());
        ew = std::max(ew, e.eta.str().size());
    }
    out << std::left << std::setw(static_cast<int>(pw)) << "partition" << "  " << std::right
        << std::setw(static_cast<int>(ew)) << "eta" << "  " << std::setw(4) << "sign" << "  "
        << "multiplicity" << "\n";
    for (const SpectrumEntry& e : entries)
        out << std::left << std::setw(static_cast<int>(pw))
            << format(e.partition, PartitionStyle::exponent) << "  " << std::right
            << std::setw(static_cast<int>(ew)) << e.eta.str() << "  " << std::setw(4)
            << (e.sign > 0 ? "+1" : (e.sign < 0 ? "-1" : "0")) << "  " << e.multiplicity.str()
            << "\n";
    return 0;
}

inline void print_report(const SuiteReport& rep, double seconds, std::ostream& out) {
    std::ostringstream time_text;
    time_text << std::fixed << std::setprecision(2) << seconds;
    out << "suite " << rep.name << ": cases=" << rep.cases << " failures=" << rep.failures.size()
        << " time=" << time_text.str() << "s\n";
    const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i)
        out << "  FAIL " << rep.failures[i].input << ": expected " << rep.failures[i].expected
            << ", got " << rep.failures[i].actual << "\n";
    if (rep.failures.size() > shown)
        out << "  ... and " << rep.failures.size() - shown << " more failures\n";
    for (const std::string& note : rep.notes) out << "  note: " << note << "\n";
}

inline int do_verify(const std::string& suite, const std::optional<int>& max_n,
                     const std::optional<int>& oracle_cap, std::ostream& out) {
    struct Job {
        std::string name;
        int default_max;
    };
    const std::vector<Job> jobs = {{"tables", 15},    {"cross", 14},     {"asp", 14},
                                   {"dominance", 13}, {"bounds", 13},    {"identities", 20}};
    const int cap = oracle_cap.value_or(10);

    bool any_failures = false;
    for (const Job& job : jobs) {
        if (suite != "all" && suite != job.name) continue;
        // A suite named explicitly gets exactly the requested depth (its own
        // precondition rejects a bad one); under "all" the request only
        // shallows the defaults.
        int depth = job.default_max;
        if (max_n) depth = suite == "all" ? std::min(depth, *max_n) : *max_n;

        const auto started = std::chrono::steady_clock::now();
        SuiteReport rep;
        if (job.name == "tables") rep = verify_tables(depth);
        else if (job.name == "cross") rep = verify_cross(depth, cap);
        else if (job.name == "asp") rep = verify_asp(depth);
        else if (job.name == "dominance") rep = verify_dominance(depth);
        else if (job.name == "bounds") rep = verify_bounds(depth);
        else rep = verify_identities(depth);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        print_report(rep, seconds, out);
        if (!rep.passed()) any_failures = true;
    }
    return any_failures ? 1 : 0;
}

inline int do_chain(const std::string& from_text, const std::string& to_text, std::ostream& out) {
    const Partition from = Partition::parse(from_text);
    const Partition to = Partition::parse(to_text);
    require_small_enough(std::max(from.sum(), to.sum()));
    const std::vector<Partition> chain = dominance_chain(from, to);

    const bool show_eta = from.first() == to.first();
    out << "chain: " << format(from, PartitionStyle::exponent) << " -> "
        << format(to, PartitionStyle::exponent) << " (" << chain.size() - 1
        << (chain.size() == 2 ? " move)" : " moves)") << "\n";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out << "  step " << i << ": " << format(chain[i], PartitionStyle::exponent);
        if (i > 0) {
            const Partition& prev = chain[i - 1];
            const Partition& cur = chain[i];
            const std::size_t len = std::max(prev.length(), cur.length());
            std::size_t m1 = 0, m2 = 0;
            for (std::size_t k = 0; k < len; ++k) {
                if (cur.part_or_zero(k) == prev.part_or_zero(k) + 1) m1 = k + 1;
                if (cur.part_or_zero(k) + 1 == prev.part_or_zero(k)) m2 = k + 1;
            }
            out << "  (box moved row " << m2 << " -> row " << m1 << ")";
        }
        if (show_eta) out << "  |eta| = " << abs_eta(chain[i]).str();
        out << "\n";
    }
    return 0;
}

} // namespace cli_detail

// Runs the command line against the given argument list (without the
// program name) and streams; returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectrum of the derangement graph"};
    app.name("derspec");
    app.require_subcommand(1);

    std::string eig_text, eig_method = "auto";
    long long eig_cap = 12;
    CLI::App* eig = app.add_subcommand("eig", "Eigenvalue of one partition");
    eig->add_option("partition", eig_text, "Partition text, e.g. \"4,2,1^2\"")->required();
    eig->add_option("--method", eig_method, "Evaluation route")
        ->check(CLI::IsMember({"auto", "new", "renteln", "schur", "character"}));
    eig->add_option("--oracle-cap", eig_cap, "Size cap for the character route")
        ->check(CLI::Range(0LL, 1000LL));

    long long table_n = 0;
    long long table_minfp = 0;
    std::string table_fmt = "text";
    unsigned table_jobs = 1;
    CLI::App* table = app.add_subcommand("table", "Full spectrum for one n");
    table->add_option("n", table_n, "Number being partitioned")->required()
        ->check(CLI::Range(1LL, cli_detail::kMaxN));
    CLI::Option* minfp_opt =
        table->add_option("--min-first-part", table_minfp, "Keep only rows with first part at least this")
            ->check(CLI::Range(1LL, cli_detail::kMaxN));
    table->add_option("--format", table_fmt, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--jobs", table_jobs, "Worker threads (never changes output bytes)")
        ->check(CLI::Range(1u, 256u));

    std::string verify_suite = "all";
    int verify_max_n = 0;
    int verify_cap = 0;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", verify_suite, "Which suite to run")
        ->check(CLI::IsMember({"all", "tables", "asp", "dominance", "bounds", "cross", "identities"}));
    CLI::Option* maxn_opt = verify->add_option("--max-n", verify_max_n, "Depth of the sweep");
    CLI::Option* cap_opt =
        verify->add_option("--oracle-cap", verify_cap, "Character-oracle depth of the cross suite")
            ->check(CLI::Range(0, 1000));

    std::string chain_from, chain_to;
    CLI::App* chain = app.add_subcommand("chain", "Covering-move chain between two partitions");
    chain->add_option("from", chain_from, "Starting partition")->required();
    chain->add_option("to", chain_to, "Dominating target partition")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("derspec");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eig->parsed())
            return cli_detail::do_eig(eig_text, eig_method, eig_cap, out);
        if (table->parsed())
            return cli_detail::do_table(table_n,
                                        minfp_opt->count() ? std::optional<long long>(table_minfp)
                                                           : std::nullopt,
                                        table_fmt, table_jobs, out);
        if (verify->parsed())
            return cli_detail::do_verify(verify_suite,
                                         maxn_opt->count() ? std::optional<int>(verify_max_n)
                                                           : std::nullopt,
                                         cap_opt->count() ? std::optional<int>(verify_cap)
                                                          : std::nullopt,
                                         out);
        if (chain->parsed()) return cli_detail::do_chain(chain_from, chain_to, out);
        err << "error: no command given\n";
        return 2;
    } catch (const error& ex) {
        err << "error: " << ex.what() << "\n";
        return cli_detail::exit_code_for(ex.code());
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

} // namespace derspec
