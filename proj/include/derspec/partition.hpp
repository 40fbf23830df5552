#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derspec/error.hpp"
#include "derspec/exact.hpp"

namespace derspec {

// An integer partition: a weakly decreasing list of positive parts.  The
// empty list is the unique partition of 0.  Instances are immutable and
// always canonical (no zero or trailing-zero parts are ever stored).
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw error(errc::zero_part, "part " + std::to_string(i + 1) + " is not a positive integer");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw error(errc::not_weakly_decreasing,
                            "part " + std::to_string(i + 1) + " exceeds part " + std::to_string(i));
        }
        for (long long p : parts_) sum_ += p;
    }

    const std::vector<long long>& parts() const noexcept { return parts_; }
    // |lambda|: the number being partitioned.
    long long sum() const noexcept { return sum_; }
    // r: the number of parts (rows of the diagram).
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    // First (largest) part; 0 for the empty partition.
    long long first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    // Last (smallest) part; 0 for the empty partition.
    long long last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    // Part at 0-based index i, reading 0 beyond the last row.
    long long part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) noexcept { return !(a == b); }

    static Partition parse(std::string_view text);

  private:
    std::vector<long long> parts_;
    long long sum_ = 0;
};

enum class PartitionStyle { plain, exponent };

// Hook data of a nonempty partition: the size h of the principal hook, the
// first-column length c, and the last-row length l.
struct HookData {
    long long h; // first row + first column - 1
    long long c; // number of parts
    long long l; // smallest part
};

namespace detail {

// Spaces and tabs are skipped anywhere in partition text, including inside
// numbers, so "1 2" reads as the single part 12.
inline std::string strip_blanks(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (ch != ' ' && ch != '\t') out.push_back(ch);
    return out;
}

} // namespace detail

// Grammar: partition := "(" ")" | [ "(" ] item ("," item)* [ ")" ]
//          item      := INT | INT "^" INT        (INT is base-10, >= 1)
// The parentheses are each optional; "()" denotes the empty partition.
inline Partition Partition::parse(std::string_view text) {
    const std::string s = detail::strip_blanks(text);
    std::size_t i = 0;

    auto read_int = [&](const char* what) -> long long {
        if (i >= s.size() || s[i] < '0' || s[i] > '9')
            throw error(errc::malformed_text, std::string("expected a number for the ") + what +
                                                  " at position " + std::to_string(i + 1));
        long long value = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            value = value * 10 + (s[i] - '0');
            if (value > 1000000000000LL)
                throw error(errc::malformed_text, std::string(what) + " is too large");
            ++i;
        }
        return value;
    };

    bool opened = false;
    if (i < s.size() && s[i] == '(') {
        opened = true;
        ++i;
        if (i < s.size() && s[i] == ')') {
            ++i;
            if (i != s.size())
                throw error(errc::malformed_text, "trailing characters after \"()\"");
            return Partition{};
        }
    }

    std::vector<long long> parts;
    constexpr std::size_t kMaxParts = 100000;
    for (;;) {
        long long base = read_int("part");
        if (base == 0) throw error(errc::zero_part, "part 0 is not allowed");
        long long reps = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            reps = read_int("exponent");
            if (reps == 0) throw error(errc::malformed_text, "exponent must be at least 1");
        }
        if (parts.size() + static_cast<std::size_t>(reps) > kMaxParts)
            throw error(errc::malformed_text, "too many parts");
        parts.insert(parts.end(), static_cast<std::size_t>(reps), base);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        break;
    }

    if (i < s.size() && s[i] == ')') ++i;
    (void)opened; // a lone "(" or ")" on either side is accepted
    if (i != s.size())
        throw error(errc::malformed_text, "unexpected character at position " + std::to_string(i + 1));

    return Partition(std::move(parts)); // validates weak decrease
}

inline std::string format(const Partition& p, PartitionStyle style) {
    if (p.empty()) return "()";
    std::string out;
    if (style == PartitionStyle::plain) {
        for (std::size_t i = 0; i < p.length(); ++i) {
            if (i) out += ',';
            out += std::to_string(p.parts()[i]);
        }
        return out;
    }
    std::size_t i = 0;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p.parts()[j] == p.parts()[i]) ++j;
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline HookData hook_data(const Partition& p) {
    if (p.empty()) throw error(errc::empty_partition, "hook data of the empty partition");
    return HookData{p.first() + static_cast<long long>(p.length()) - 1,
                    static_cast<long long>(p.length()), p.last()};
}

namespace detail {

inline Partition drop_zeros(std::vector<long long> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

} // namespace detail

// Remove the principal hook (first row and first column): rows 2..r each
// lose their first box.
inline Partition remove_hook(const Partition& p) {
    if (p.empty()) throw error(errc::empty_partition, "remove_hook of the empty partition");
    std::vector<long long> rest(p.parts().begin() + 1, p.parts().end());
    for (long long& x : rest) --x;
    return detail::drop_zeros(std::move(rest));
}

// Remove the first column: every row loses one box.
inline Partition remove_first_column(const Partition& p) {
    if (p.empty()) throw error(errc::empty_partition, "remove_first_column of the empty partition");
    std::vector<long long> rest(p.parts());
    for (long long& x : rest) --x;
    return detail::drop_zeros(std::move(rest));
}

// Remove the last row.
inline Partition remove_last_row(const Partition& p) {
    if (p.empty()) throw error(errc::empty_partition, "remove_last_row of the empty partition");
    return Partition(std::vector<long long>(p.parts().begin(), p.parts().end() - 1));
}

namespace detail {

inline void require_equal_sizes(const Partition& a, const Partition& b, const char* op) {
    if (a.sum() != b.sum())
        throw error(errc::size_mismatch, std::string(op) + " needs partitions of the same number");
}

} // namespace detail

// True iff b is dominated by a: every prefix sum of b is at most the
// corresponding prefix sum of a.  Parts beyond the last row read as 0.
inline bool dominates(const Partition& a, const Partition& b) {
    detail::require_equal_sizes(a, b, "dominance comparison");
    const std::size_t len = std::max(a.length(), b.length());
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        pa += a.part_or_zero(i);
        pb += b.part_or_zero(i);
        if (pb > pa) return false;
    }
    return true;
}

inline bool lex_less(const Partition& a, const Partition& b) {
    detail::require_equal_sizes(a, b, "lexicographic comparison");
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.part_or_zero(i) != b.part_or_zero(i)) return a.part_or_zero(i) < b.part_or_zero(i);
    }
    return false;
}

// True iff b is obtained from a by one covering move of the dominance
// order: a single box slides from a lower row m2 up to a higher row m1.
inline bool covers_one_move(const Partition& a, const Partition& b) {
    detail::require_equal_sizes(a, b, "covering-move comparison");
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<std::size_t> diffs;
    for (std::size_t i = 0; i < len; ++i)
        if (a.part_or_zero(i) != b.part_or_zero(i)) diffs.push_back(i);
    if (diffs.size() != 2) return false;
    const std::size_t i = diffs[0], j = diffs[1];
    return b.part_or_zero(i) == a.part_or_zero(i) + 1 && b.part_or_zero(j) == a.part_or_zero(j) - 1;
}

// Builds a chain from "from" up to "to" in which every step is a single
// covering move.  Greedy: at each step take the first row where the prefix
// sums still fall short of the target's, raise it by one box taken from the
// first later row where the prefix sums agree again.  Both rows are
// guaranteed to give a valid partition, and the total prefix deficit drops
// by at least one per step, so the loop terminates at the target.
inline std::vector<Partition> dominance_chain(const Partition& from, const Partition& to) {
    detail::require_equal_sizes(from, to, "dominance chain");
    if (!dominates(to, from))
        throw error(errc::not_comparable, "target does not dominate the source");

    const std::size_t len = std::max(from.length(), to.length());
    std::vector<long long> cur(len, 0), target(len, 0);
    for (std::size_t i = 0; i < from.length(); ++i) cur[i] = from.parts()[i];
    for (std::size_t i = 0; i < to.length(); ++i) target[i] = to.parts()[i];

    std::vector<Partition> chain{from};
    long long guard = from.sum() * static_cast<long long>(len) + 1;
    while (cur != target) {
        if (--guard < 0) throw error(errc::internal_error, "dominance chain failed to converge");
        long long pc = 0, pt = 0;
        std::size_t i = len; // first row where cur's prefix falls short
        for (std::size_t k = 0; k < len; ++k) {
            pc += cur[k];
            pt += target[k];
            if (i == len && pc < pt) {
                i = k;
            } else if (i < len && pc == pt) {
                cur[i] += 1;
                cur[k] -= 1;
                break;
            }
        }
        chain.push_back(detail::drop_zeros(std::vector<long long>(cur.begin(), cur.end())));
    }
    return chain;
}

// All partitions of n in decreasing lexicographic order, optionally only
// those whose first part is at least min_first_part.
inline std::vector<Partition> enumerate(long long n, std::optional<long long> min_first_part = std::nullopt) {
    if (n < 0) throw error(errc::bad_index, "cannot enumerate partitions of a negative number");
    std::vector<Partition> out;
    if (n == 0) {
        if (!min_first_part || *min_first_part <= 0) out.emplace_back();
        return out;
    }
    std::vector<long long> stack;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(stack));
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    const long long lo = min_first_part ? std::max<long long>(*min_first_part, 1) : 1;
    for (long long first = n; first >= lo; --first) {
        stack.push_back(first);
        rec(rec, n - first, first);
        stack.pop_back();
    }
    return out;
}

// Product of the hook lengths over all boxes of the diagram; 1 for the
// empty partition.
inline ExactInt hook_product(const Partition& p) {
    ExactInt h = 1;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (long long j = 0; j < parts[i]; ++j) {
            long long arm = parts[i] - j - 1;
            long long leg = 0;
            for (std::size_t k = i + 1; k < parts.size(); ++k)
                if (parts[k] > j) ++leg;
            h *= arm + leg + 1;
        }
    }
    return h;
}

// Number of standard Young tableaux of shape p, via n! over the hook
// product; dim of the empty partition is 1.
inline ExactInt dim(const Partition& p) {
    ExactInt q, r;
    boost::multiprecision::divide_qr(factorial(p.sum()), hook_product(p), q, r);
    if (r != 0) throw error(errc::internal_error, "hook-length division not exact");
    return q;
}

} // namespace derspec
