#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derspec/error.hpp"
#include "derspec/exact.hpp"
#include "derspec/partition.hpp"
#include "derspec/reference_data.hpp"
#include "derspec/shifted.hpp"
#include "derspec/spectrum.hpp"

namespace derspec {

// One transcribed reference row: eta for the given partition of n.
struct ReferenceEntry {
    int n;
    Partition partition;
    ExactInt eta;
};

constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Pinned digest of the embedded reference file; guards against silent
// transcription drift.
inline constexpr std::uint64_t kReferenceChecksum = 0xbae4f6d9f4354975ULL;

inline std::uint64_t reference_checksum() noexcept { return fnv1a64(detail::kReferenceTsv); }

// The embedded reference eigenvalue table.  Rows are `n TAB partition TAB
// eta`, '#' starts a comment.  Full coverage for n = 2..10 and n = 15;
// n = 11 is restricted to first part >= 5 and n = 12, 13 to first part
// >= 6; n = 14 has no rows.
class ReferenceTable {
  public:
    static const ReferenceTable& instance() {
        static const ReferenceTable table = parse_embedded();
        return table;
    }

    const std::vector<ReferenceEntry>& entries() const noexcept { return entries_; }

    std::vector<int> covered_n() const {
        std::vector<int> out;
        for (const auto& [n, idx] : by_n_) {
            (void)idx;
            out.push_back(n);
        }
        return out;
    }

    std::vector<const ReferenceEntry*> entries_for(int n) const {
        std::vector<const ReferenceEntry*> out;
        if (auto it = by_n_.find(n); it != by_n_.end())
            for (std::size_t i : it->second) out.push_back(&entries_[i]);
        return out;
    }

    // Minimum first part of the rows recorded for n, or nothing when the
    // table for n is complete.
    static std::optional<long long> restriction(int n) {
        if (n == 11) return 5;
        if (n == 12 || n == 13) return 6;
        return std::nullopt;
    }

    static std::string coverage_note(int n) {
        if (auto k = restriction(n)) return "first-part-at-least " + std::to_string(*k);
        return "full";
    }

    // Row counts the embedded file must have, per n.
    static const std::map<int, std::size_t>& expected_counts() {
        static const std::map<int, std::size_t> counts = {
            {2, 2},   {3, 3},   {4, 5},   {5, 7},   {6, 11},  {7, 15},  {8, 22},
            {9, 30},  {10, 42}, {11, 29}, {12, 30}, {13, 44}, {15, 176}};
        return counts;
    }

  private:
    static ReferenceTable parse_embedded() {
        ReferenceTable table;
        const std::string_view text = detail::kReferenceTsv;
        std::size_t pos = 0;
        long long line_no = 0;
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            const std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (line.empty() || line.front() == '#') continue;

            const std::size_t t1 = line.find('\t');
            const std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
            if (t1 == std::string_view::npos || t2 == std::string_view::npos ||
                line.find('\t', t2 + 1) != std::string_view::npos)
                throw error(errc::internal_error,
                            "reference line " + std::to_string(line_no) + " does not have 3 fields");
            try {
                ReferenceEntry entry{std::stoi(std::string(line.substr(0, t1))),
                                     Partition::parse(line.substr(t1 + 1, t2 - t1 - 1)),
                                     ExactInt(std::string(line.substr(t2 + 1)))};
                table.by_n_[entry.n].push_back(table.entries_.size());
                table.entries_.push_back(std::move(entry));
            } catch (const error&) {
                throw error(errc::internal_error,
                            "reference line " + std::to_string(line_no) + " is malformed");
            } catch (const std::exception&) {
                throw error(errc::internal_error,
                            "reference line " + std::to_string(line_no) + " is malformed");
            }
        }
        return table;
    }

    std::vector<ReferenceEntry> entries_;
    std::map<int, std::vector<std::size_t>> by_n_;
};

// Outcome of one verification suite: how many cases ran and which failed.
struct SuiteReport {
    std::string name;
    long long cases = 0;
    struct Failure {
        std::string input;
        std::string expected;
        std::string actual;
    };
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }

    void check(bool ok, std::string input, std::string expected, std::string actual) {
        ++cases;
        if (!ok) failures.push_back(Failure{std::move(input), std::move(expected), std::move(actual)});
    }

    void absorb(const SuiteReport& sub) {
        cases += sub.cases;
        for (const Failure& f : sub.failures)
            failures.push_back(Failure{sub.name + ": " + f.input, f.expected, f.actual});
        for (const std::string& note : sub.notes) notes.push_back(sub.name + ": " + note);
    }
};

namespace detail {

inline std::string describe(const Partition& p) { return format(p, PartitionStyle::exponent); }

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(digits[(v >> shift) & 0xF]);
    return out;
}

inline bool contains(const Partition& inner, const Partition& outer) {
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts()[i] > outer.part_or_zero(i)) return false;
    return true;
}

} // namespace detail

// Every reference row with n <= max_n must be reproduced exactly by the
// recurrence, and the embedded file itself must be intact: pinned
// checksum, expected row counts, and rows listed in decreasing
// lexicographic order matching the enumeration for the covered range.
inline SuiteReport verify_tables(int max_n = 15) {
    if (max_n < 2 || max_n > 15)
        throw error(errc::bad_index, "tables suite needs 2 <= max-n <= 15");
    SuiteReport rep{"tables"};
    const ReferenceTable& table = ReferenceTable::instance();

    rep.check(reference_checksum() == kReferenceChecksum, "reference data checksum",
              detail::hex64(kReferenceChecksum), detail::hex64(reference_checksum()));

    for (const auto& [n, want] : ReferenceTable::expected_counts()) {
        if (n > max_n) continue;
        const auto rows = table.entries_for(n);
        rep.check(rows.size() == want, "reference row count for n=" + std::to_string(n),
                  std::to_string(want), std::to_string(rows.size()));

        const std::vector<Partition> expect = enumerate(n, ReferenceTable::restriction(n));
        bool aligned = rows.size() == expect.size();
        for (std::size_t i = 0; aligned && i < rows.size(); ++i)
            aligned = rows[i]->partition == expect[i];
        rep.check(aligned, "reference row order for n=" + std::to_string(n),
                  "decreasing lexicographic enumeration", aligned ? "same" : "differs");
    }

    for (const ReferenceEntry& entry : table.entries()) {
        if (entry.n > max_n) continue;
        const ExactInt actual = eta_new(entry.partition);
        rep.check(actual == entry.eta,
                  "eta for n=" + std::to_string(entry.n) + " partition " + detail::describe(entry.partition),
                  entry.eta.str(), actual.str());
    }

    if (max_n >= 14) rep.notes.push_back("n=14 has no reference rows; the cross suite covers it");
    return rep;
}

// Alternating sign property: every eigenvalue for 2 <= n <= max_n is
// nonzero with sign (-1)^{cells below the first row}; additionally, for
// partitions with at least two rows, the two terms of the defining
// recurrence never oppose each other.  (With a single row the terms can
// differ in sign: removing the last row changes the first part, so the
// sign rule applies to the two terms with different exponents.)
inline SuiteReport verify_asp(int max_n = 14) {
    if (max_n < 2) throw error(errc::bad_index, "sign suite needs max-n >= 2");
    SuiteReport rep{"asp"};
    for (long long n = 2; n <= max_n; ++n) {
        for (const Partition& p : enumerate(n)) {
            const ExactInt eta = eta_new(p);
            const int want = asp_sign(p);
            rep.check(eta != 0 && detail::sign_of(eta) == want,
                      "sign of eta at " + detail::describe(p),
                      (want > 0 ? std::string("+1") : std::string("-1")) + ", nonzero",
                      eta == 0 ? "0" : (detail::sign_of(eta) > 0 ? "+1" : "-1"));

            if (p.length() < 2) continue;
            const long long r = static_cast<long long>(p.length());
            const ExactInt t1 =
                (r % 2 == 0 ? -1 : 1) * ExactInt(p.last()) * eta_new(remove_first_column(p));
            const ExactInt t2 = (p.last() % 2 == 0 ? 1 : -1) * eta_new(remove_last_row(p));
            if (t1 != 0 && t2 != 0)
                rep.check(detail::sign_of(t1) == detail::sign_of(t2),
                          "recurrence terms at " + detail::describe(p), "equal signs",
                          std::to_string(detail::sign_of(t1)) + " vs " +
                              std::to_string(detail::sign_of(t2)));
        }
    }
    return rep;
}

namespace detail {

// The one family where dominance only moves |eta| weakly: a first part of 3
// followed by parts of at most 2.  Every such partition of n has |eta| equal
// to n - 1, so comparisons inside the family are exact ties.
inline bool flat_three_family(const Partition& p) {
    if (p.empty() || p.first() != 3) return false;
    const auto& v = p.parts();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > 2) return false;
    return true;
}

}  // namespace detail

// Dominance monotonicity: among partitions of n sharing their first part,
// |eta| grows weakly along the dominance order, and strictly except between
// members of the flat three family (first part 3, later parts at most 2),
// where every member has |eta| = n - 1 exactly.
inline SuiteReport verify_dominance(int max_n = 13) {
    if (max_n < 2) throw error(errc::bad_index, "dominance suite needs max-n >= 2");
    SuiteReport rep{"dominance"};
    for (long long n = 2; n <= max_n; ++n) {
        const std::vector<Partition> all = enumerate(n);
        for (const Partition& a : all) {
            for (const Partition& b : all) {
                if (a == b || a.first() != b.first()) continue;
                if (!dominates(b, a)) continue;
                const ExactInt va = abs(eta_new(a));
                const ExactInt vb = abs(eta_new(b));
                const std::string where = detail::describe(a) + " dominated by " +
                                          detail::describe(b) +
                                          " (n=" + std::to_string(n) + ")";
                if (detail::flat_three_family(a) && detail::flat_three_family(b)) {
                    rep.check(va == vb && va == ExactInt(n - 1), where,
                              "|eta| = " + ExactInt(n - 1).str() + " on both sides",
                              va.str() + " vs " + vb.str());
                } else {
                    rep.check(va < vb, where, "|eta| strictly increases",
                              va.str() + " vs " + vb.str());
                }
            }
        }
    }
    return rep;
}

// For every partition, |eta| is at least that of the hook with the same
// first part and at most that of the lexicographically largest partition
// with the same first part.
inline SuiteReport verify_bounds(int max_n = 13) {
    if (max_n < 2) throw error(errc::bad_index, "bounds suite needs max-n >= 2");
    SuiteReport rep{"bounds"};
    for (long long n = 2; n <= max_n; ++n) {
        for (const Partition& p : enumerate(n)) {
            const long long first = p.first();
            std::vector<long long> hook{first};
            hook.insert(hook.end(), static_cast<std::size_t>(n - first), 1);
            std::vector<long long> star(static_cast<std::size_t>(n / first), first);
            if (n % first != 0) star.push_back(n % first);

            const ExactInt low = abs(eta_new(Partition(std::move(hook))));
            const ExactInt high = abs(eta_new(Partition(std::move(star))));
            const ExactInt mid = abs(eta_new(p));
            rep.check(low <= mid && mid <= high,
                      "|eta| bounds at " + detail::describe(p) + " (n=" + std::to_string(n) + ")",
                      low.str() + " <= |eta| <= " + high.str(), mid.str());
        }
    }
    return rep;
}

// The three formula routes agree everywhere up to max_n, and the character
// route agrees with them up to oracle_cap.
inline SuiteReport verify_cross(int max_n = 14, int oracle_cap = 10) {
    if (max_n < 0) throw error(errc::bad_index, "cross suite needs max-n >= 0");
    SuiteReport rep{"cross"};
    for (long long n = 0; n <= max_n; ++n) {
        for (const Partition& p : enumerate(n)) {
            const ExactInt a = eta_new(p);
            const ExactInt b = eta_renteln(p);
            const ExactInt c = eta_schur_sum(p);
            rep.check(a == b && a == c, "formula routes at " + detail::describe(p),
                      "all equal", a.str() + ", " + b.str() + ", " + c.str());
            if (n <= oracle_cap) {
                const ExactInt d = eta_character(p, oracle_cap);
                rep.check(a == d, "character route at " + detail::describe(p), a.str(), d.str());
            }
        }
    }
    return rep;
}

// Closed forms: eta of the single row is the derangement number, eta of
// the hook (n-1,1) is -D_n/(n-1) and is the global spectrum minimum, and
// eta of the single column is (-1)^{n-1}(n-1).
inline SuiteReport verify_closed_forms(int max_n = 20) {
    if (max_n < 2) throw error(errc::bad_index, "closed-forms suite needs max-n >= 2");
    SuiteReport rep{"closed-forms"};
    for (long long n = 1; n <= max_n; ++n) {
        const ExactInt expect = derangement_number(n);
        const ExactInt actual = eta_new(Partition({n}));
        rep.check(actual == expect, "single row of n=" + std::to_string(n), expect.str(), actual.str());
    }
    for (long long n = 2; n <= max_n; ++n) {
        ExactInt q, r;
        boost::multiprecision::divide_qr(derangement_number(n), ExactInt(n - 1), q, r);
        const ExactInt actual = n == 2 ? eta_new(Partition({1, 1})) : eta_new(Partition({n - 1, 1}));
        rep.check(r == 0 && actual == -q, "hook (n-1,1) at n=" + std::to_string(n),
                  "-D_n/(n-1) exactly", actual.str());

        const ExactInt column = eta_new(Partition(std::vector<long long>(n, 1)));
        const ExactInt col_expect = (n % 2 == 0) ? ExactInt(-(n - 1)) : ExactInt(n - 1);
        rep.check(column == col_expect, "single column of n=" + std::to_string(n),
                  col_expect.str(), column.str());
    }
    for (long long n = 2; n <= std::min<long long>(max_n, 13); ++n) {
        ExactInt q, r;
        boost::multiprecision::divide_qr(derangement_number(n), ExactInt(n - 1), q, r);
        ExactInt smallest = eta_new(Partition({n}));
        for (const SpectrumEntry& e : spectrum_table(n))
            if (e.eta < smallest) smallest = e.eta;
        rep.check(r == 0 && smallest == -q, "spectrum minimum at n=" + std::to_string(n),
                  ExactInt(-q).str(), smallest.str());
    }
    return rep;
}

// The spectral moments match the graph: n! eigenvalues, zero trace, and
// n! D_n for the sum of squares (the graph is D_n-regular).
inline SuiteReport verify_trace(int max_n = 12) {
    if (max_n < 1) throw error(errc::bad_index, "trace suite needs max-n >= 1");
    SuiteReport rep{"trace"};
    for (long long n = 1; n <= max_n; ++n) {
        const auto [m0, m1, m2] = trace_moments(n);
        const ExactInt fact = factorial(n);
        rep.check(m0 == fact, "moment 0 at n=" + std::to_string(n), fact.str(), m0.str());
        rep.check(m1 == 0, "moment 1 at n=" + std::to_string(n), "0", m1.str());
        const ExactInt want = fact * derangement_number(n);
        rep.check(m2 == want, "moment 2 at n=" + std::to_string(n), want.str(), m2.str());
    }
    return rep;
}

// The split-row expansion reproduces |eta| for every legal split row, and
// |eta| computed by its own recurrence matches the signed value.
inline SuiteReport verify_expansion(int max_n = 10) {
    if (max_n < 2) throw error(errc::bad_index, "expansion suite needs max-n >= 2");
    SuiteReport rep{"expansion"};
    for (long long n = 2; n <= max_n; ++n) {
        for (const Partition& p : enumerate(n)) {
            const ExactInt direct = abs_eta(p);
            const ExactInt signed_abs = abs(eta_new(p));
            rep.check(direct == signed_abs, "|eta| at " + detail::describe(p), signed_abs.str(),
                      direct.str());
            for (long long m = 2; m <= static_cast<long long>(p.length()); ++m) {
                const ExactInt expanded = abs_eta_expanded(p, m);
                rep.check(expanded == direct,
                          "split at row " + std::to_string(m) + " of " + detail::describe(p),
                          direct.str(), expanded.str());
            }
        }
    }
    return rep;
}

// The shifted-function battery: closed forms, agreement of all evaluation
// routes, stability under appended zeros, the vanishing theorem, the
// dimension formula against the brute-force tableau count, and the strict
// growth inequalities used by the monotonicity results.
inline SuiteReport verify_shifted() {
    SuiteReport rep{"shifted"};

    // One-variable closed form: h*_k(x) = x(x-1)...(x-k+1) for 0 <= k <= x.
    for (long long x = 0; x <= 12; ++x)
        for (long long k = 0; k <= x; ++k) {
            const ExactInt expect = falling(ExactInt(x), k);
            const ExactInt actual = h_star(k, Point{x});
            rep.check(actual == expect, "one-variable h*_" + std::to_string(k) + "(" + std::to_string(x) + ")",
                      expect.str(), actual.str());
        }

    // Route equality on partition points: direct sum, recurrence, and the
    // one-row determinant all agree.
    for (long long n = 0; n <= 10; ++n) {
        for (const Partition& p : enumerate(n)) {
            const Point pt(p.parts().begin(), p.parts().end());
            for (long long k = 0; k <= 10; ++k) {
                const ExactInt direct = h_star(k, pt);
                const ExactInt viarec = h_star_rec(k, pt);
                const ExactRat viadet = s_star(k == 0 ? Partition{} : Partition({k}), pt);
                rep.check(viarec == direct && viadet == ExactRat(direct),
                          "h*_" + std::to_string(k) + " at " + detail::describe(p), direct.str(),
                          viarec.str() + ", " + viadet.str());
            }
        }
    }

    // The banded double sum agrees with the direct evaluation for all
    // integer ends, heights and multiplicities swept here.
    for (long long x = 0; x <= 6; ++x)
        for (long long mid = 0; mid <= 5; ++mid)
            for (long long y = 0; y <= 5; ++y)
                for (long long l = 1; l <= 4; ++l) {
                    Point pt{x};
                    pt.insert(pt.end(), static_cast<std::size_t>(l), mid);
                    pt.push_back(y);
                    for (long long k = 0; k <= 8; ++k) {
                        const ExactInt expect = h_star(k, pt);
                        const ExactInt actual = h_star_banded(k, x, mid, l, y);
                        rep.check(actual == expect,
                                  "banded h*_" + std::to_string(k) + " at (" + std::to_string(x) + "," +
                                      std::to_string(mid) + "^" + std::to_string(l) + "," +
                                      std::to_string(y) + ")",
                                  expect.str(), actual.str());
                    }
                }

    // Stability: appending a zero argument never changes the value.
    std::mt19937 gen(12345);
    std::uniform_int_distribution<long long> entry(0, 10);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::vector<Partition> mus;
    for (long long n = 0; n <= 4; ++n)
        for (const Partition& mu : enumerate(n)) mus.push_back(mu);
    for (int iter = 0; iter < 150; ++iter) {
        Point pt(len(gen));
        for (long long& x : pt) x = entry(gen);
        std::sort(pt.begin(), pt.end(), std::greater<long long>());
        Point padded = pt;
        padded.push_back(0);
        for (long long k = 0; k <= 8; ++k)
            rep.check(h_star(k, pt) == h_star(k, padded),
                      "h* stability, iteration " + std::to_string(iter) + ", k=" + std::to_string(k),
                      h_star(k, pt).str(), h_star(k, padded).str());
        const Partition& mu = mus[static_cast<std::size_t>(iter) % mus.size()];
        rep.check(s_star(mu, pt) == s_star(mu, padded),
                  "s* stability, iteration " + std::to_string(iter) + ", mu=" + detail::describe(mu),
                  s_star(mu, pt).str(), s_star(mu, padded).str());
    }

    // Vanishing: s*_mu(lambda) = 0 unless mu fits inside lambda, and
    // s*_mu(mu) is the hook product of mu.
    std::vector<Partition> small_mus;
    for (long long n = 0; n <= 6; ++n)
        for (const Partition& mu : enumerate(n)) small_mus.push_back(mu);
    for (const Partition& mu : small_mus) {
        const Point self(mu.parts().begin(), mu.parts().end());
        rep.check(s_star(mu, self) == ExactRat(hook_product(mu)),
                  "s*_mu(mu) for mu=" + detail::describe(mu), hook_product(mu).str(),
                  s_star(mu, self).str());
        for (long long n = 0; n <= 8; ++n)
            for (const Partition& lam : enumerate(n)) {
                if (detail::contains(mu, lam)) continue;
                const Point pt(lam.parts().begin(), lam.parts().end());
                const ExactRat v = s_star(mu, pt);
                rep.check(v == 0, "vanishing of s*_" + detail::describe(mu) + " at " + detail::describe(lam),
                          "0", v.str());
            }
    }

    // Dimension formula specialized to one row: the share of standard
    // tableaux of shape lambda/(k) among those of lambda equals
    // h*_k(lambda) / (n down k); when (k) does not fit, h*_k vanishes.
    for (long long n = 0; n <= 8; ++n) {
        for (const Partition& lam : enumerate(n)) {
            const Point pt(lam.parts().begin(), lam.parts().end());
            for (long long k = 0; k <= n; ++k) {
                if (k > lam.first()) {
                    rep.check(h_star(k, pt) == 0,
                              "h*_" + std::to_string(k) + " beyond first part of " + detail::describe(lam),
                              "0", h_star(k, pt).str());
                    continue;
                }
                const Partition inner = k == 0 ? Partition{} : Partition({k});
                const ExactInt skew = skew_syt_count(SkewShape(lam, inner));
                const ExactInt lhs = skew * falling(ExactInt(n), k);
                const ExactInt rhs = h_star(k, pt) * dim(lam);
                rep.check(lhs == rhs,
                          "dimension ratio at " + detail::describe(lam) + ", k=" + std::to_string(k),
                          rhs.str(), lhs.str());
            }
            rep.check(skew_syt_count(SkewShape(lam, Partition{})) == dim(lam),
                      "tableau count at " + detail::describe(lam), dim(lam).str(),
                      skew_syt_count(SkewShape(lam, Partition{})).str());
        }
    }

    // Strict growth when the top of a two-row point gets longer at the
    // bottom's expense: h*_k(a, b) < h*_k(a+1, b-1) for 1 <= b <= a,
    // 2 <= k <= a.
    for (long long a = 1; a <= 12; ++a)
        for (long long b = 1; b <= a; ++b)
            for (long long k = 2; k <= a; ++k) {
                const ExactInt lo = h_star(k, Point{a, b});
                const ExactInt hi = h_star(k, Point{a + 1, b - 1});
                rep.check(lo < hi,
                          "two-row growth at (" + std::to_string(a) + "," + std::to_string(b) +
                              "), k=" + std::to_string(k),
                          lo.str() + " < " + hi.str(), lo < hi ? "holds" : "fails");
            }

    // Same strict growth across a band of equal rows:
    // h*_k(a, a^l, a) < h*_k(a+1, a^l, a-1) for 1 <= l <= 4, 2 <= k <= a.
    for (long long l = 1; l <= 4; ++l)
        for (long long a = 2; a <= 10; ++a)
            for (long long k = 2; k <= a; ++k) {
                Point flat(static_cast<std::size_t>(l) + 2, a);
                Point tilted{a + 1};
                tilted.insert(tilted.end(), static_cast<std::size_t>(l), a);
                tilted.push_back(a - 1);
                const ExactInt lo = h_star(k, flat);
                const ExactInt hi = h_star(k, tilted);
                rep.check(lo < hi,
                          "banded growth at a=" + std::to_string(a) + ", l=" + std::to_string(l) +
                              ", k=" + std::to_string(k),
                          lo.str() + " < " + hi.str(), lo < hi ? "holds" : "fails");
            }

    return rep;
}

// Umbrella suite: closed forms, trace moments, the split-row expansion,
// and the shifted-function battery, merged into one report.
inline SuiteReport verify_identities(int max_n = 20) {
    if (max_n < 2) throw error(errc::bad_index, "identities suite needs max-n >= 2");
    SuiteReport rep{"identities"};
    rep.absorb(verify_closed_forms(max_n));
    rep.absorb(verify_trace(std::min(max_n, 12)));
    rep.absorb(verify_expansion(std::min(max_n, 10)));
    rep.absorb(verify_shifted());
    return rep;
}

} // namespace derspec
