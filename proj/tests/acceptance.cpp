// Acceptance gate: one line per criterion, [PASS] or [FAIL]; exits 1 if
// anything fails.  Runs the full verification battery at contract depth.

#include <chrono>
#include <iostream>
#include <string>

#include <derspec/partition.hpp>
#include <derspec/spectrum.hpp>
#include <derspec/verify.hpp>

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << label;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

void dump_failures(const derspec::SuiteReport& rep) {
    std::size_t shown = 0;
    for (const auto& f : rep.failures) {
        if (++shown > 5) {
            std::cerr << "  ... " << rep.failures.size() - 5 << " more" << std::endl;
            break;
        }
        std::cerr << "  " << rep.name << ": " << f.input << ": expected " << f.expected
                  << ", got " << f.actual << std::endl;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string cases_and_time(const derspec::SuiteReport& rep, double secs) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld cases, %.2fs", rep.cases, secs);
    return buf;
}

} // namespace

int main() {
    using namespace derspec;

    {
        Timer t;
        const SuiteReport rep = verify_tables(15);
        const double secs = t.seconds();
        const bool rows = ReferenceTable::instance().entries().size() == 416;
        const bool ok = rep.passed() && rows && secs < 5.0;
        report(1, "golden eigenvalue tables reproduced exactly (416 rows, n <= 15, under 5s)", ok,
               cases_and_time(rep, secs));
        if (!rep.passed()) dump_failures(rep);
        if (!rows) std::cerr << "  reference table does not have 416 rows" << std::endl;
    }
    {
        Timer t;
        const SuiteReport rep = verify_cross(14, 10);
        const double secs = t.seconds();
        const bool ok = rep.passed() && secs < 60.0;
        report(2, "all evaluation routes agree (n <= 14; character oracle n <= 10, under 60s)", ok,
               cases_and_time(rep, secs));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_asp(14);
        report(3, "alternating sign with no zero eigenvalues (2 <= n <= 14)", rep.passed(),
               cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_dominance(13);
        report(4, "dominance monotonicity of |eta| at equal first parts (n <= 13)", rep.passed(),
               cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_bounds(13);
        const bool anchors = abs_eta(Partition::parse("4,1^4")) == 17 &&
                             abs_eta(Partition::parse("4,4")) == 53;
        report(5, "hook and block partitions bound |eta| for every first part (n <= 13)",
               rep.passed() && anchors, cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
        if (!anchors) std::cerr << "  anchor values 17/53 at n=8 not reproduced" << std::endl;
    }
    {
        Timer t;
        const SuiteReport rep = verify_closed_forms(20);
        report(6, "closed forms: single row, hook, column, spectrum minimum (n <= 20)",
               rep.passed(), cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_trace(12);
        report(7, "spectral moments match the graph (n <= 12)", rep.passed(),
               cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_shifted();
        const double secs = t.seconds();
        const bool ok = rep.passed() && secs < 60.0;
        report(8, "shifted-function battery: stability, routes, vanishing, dimensions, growth (under 60s)",
               ok, cases_and_time(rep, secs));
        if (!rep.passed()) dump_failures(rep);
    }
    {
        Timer t;
        const SuiteReport rep = verify_expansion(10);
        report(9, "split-row expansion reproduces |eta| (n <= 10)", rep.passed(),
               cases_and_time(rep, t.seconds()));
        if (!rep.passed()) dump_failures(rep);
    }

    std::cout << (failures == 0 ? "acceptance: all 9 criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
