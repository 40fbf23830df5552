#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "derspec/error.hpp"
#include "derspec/exact.hpp"
#include "derspec/partition.hpp"
#include "derspec/shifted.hpp"

namespace derspec {

// A conjugacy class of the symmetric group: cycle lengths plus class size.
struct CycleType {
    Partition shape;
    ExactInt class_size;
};

// One spectral line of the derangement graph: the indexing partition, the
// eigenvalue, its sign, and its multiplicity dim(lambda)^2.
struct SpectrumEntry {
    Partition partition;
    ExactInt eta;
    int sign;
    ExactInt multiplicity;
};

// Number of derangements of n symbols: D_0 = 1, D_1 = 0,
// D_n = (n-1)(D_{n-1} + D_{n-2}).
inline ExactInt derangement_number(long long n) {
    if (n < 0) throw error(errc::bad_index, "derangement number of a negative n");
    ExactInt prev = 1, cur = 0; // D_0, D_1
    if (n == 0) return prev;
    for (long long i = 2; i <= n; ++i) {
        ExactInt next = (i - 1) * (cur + prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

inline int sign_of(const ExactInt& x) noexcept { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// Shared memo table for one eigenvalue route.  Lookup and insert each take
// the lock; the recursive computation itself runs unlocked, so concurrent
// callers may both compute a value — they insert equal results, which is
// harmless.  Each route keeps its own table so that cross-checking the
// routes compares genuinely independent computations.
class EtaCache {
  public:
    std::optional<ExactInt> find(const std::vector<long long>& key) {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = map_.find(key); it != map_.end()) return it->second;
        return std::nullopt;
    }
    void store(const std::vector<long long>& key, const ExactInt& value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, value);
    }

  private:
    std::mutex mu_;
    std::map<std::vector<long long>, ExactInt> map_;
};

} // namespace detail

// Conjugacy-class size of the class with the given cycle type in the
// symmetric group on n symbols.
inline ExactInt conjugacy_class_size(const Partition& cycle_type) {
    const long long n = cycle_type.sum();
    ExactInt denom = 1;
    const auto& parts = cycle_type.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        long long mult = 0;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
            ++mult;
        }
        for (long long t = 0; t < mult; ++t) denom *= parts[i];
        denom *= factorial(mult);
        i = j;
    }
    ExactInt q, r;
    boost::multiprecision::divide_qr(factorial(n), denom, q, r);
    if (r != 0) throw error(errc::internal_error, "class-size division not exact");
    return q;
}

// The conjugacy classes of fixed-point-free permutations: cycle types of n
// with no part equal to 1, with their class sizes.  For n = 0 the single
// empty class (the identity of the trivial group) is returned.
inline std::vector<CycleType> derangement_classes(long long n) {
    std::vector<CycleType> out;
    for (const Partition& p : enumerate(n))
        if (p.empty() || p.last() >= 2) out.push_back(CycleType{p, conjugacy_class_size(p)});
    return out;
}

// Eigenvalue of the derangement graph via the two-term recurrence
//   eta_lambda = (-1)^{r-1} lambda_r eta_{column removed}
//              + (-1)^{lambda_r}     eta_{last row removed}
// with eta of the empty partition equal to 1.
inline ExactInt eta_new(const Partition& lam) {
    if (lam.empty()) return 1;
    static detail::EtaCache cache;
    if (auto hit = cache.find(lam.parts())) return *hit;
    const long long r = static_cast<long long>(lam.length());
    const long long last = lam.last();
    ExactInt value = (r % 2 == 0 ? -1 : 1) * ExactInt(last) * eta_new(remove_first_column(lam)) +
                     (last % 2 == 0 ? 1 : -1) * eta_new(remove_last_row(lam));
    cache.store(lam.parts(), value);
    return value;
}

// The same eigenvalue via the hook recurrence
//   eta_lambda = (-1)^h eta_{hook removed}
//              + (-1)^{h+lambda_1} h eta_{column removed},  h = lambda_1 + r - 1.
inline ExactInt eta_renteln(const Partition& lam) {
    if (lam.empty()) return 1;
    static detail::EtaCache cache;
    if (auto hit = cache.find(lam.parts())) return *hit;
    const long long h = lam.first() + static_cast<long long>(lam.length()) - 1;
    ExactInt value = (h % 2 == 0 ? 1 : -1) * eta_renteln(remove_hook(lam)) +
                     ((h + lam.first()) % 2 == 0 ? 1 : -1) * ExactInt(h) *
                         eta_renteln(remove_first_column(lam));
    cache.store(lam.parts(), value);
    return value;
}

// The same eigenvalue as the alternating sum over the complete shifted
// symmetric functions: eta_lambda = sum_{k=0}^{n} (-1)^{n-k} h*_k(lambda).
inline ExactInt eta_schur_sum(const Partition& lam) {
    const long long n = lam.sum();
    const Point pt(lam.parts().begin(), lam.parts().end());
    ExactInt total = 0;
    for (long long k = 0; k <= n; ++k) {
        const ExactInt term = h_star_rec(k, pt);
        total += ((n - k) % 2 == 0) ? term : -term;
    }
    return total;
}

namespace detail {

// Irreducible symmetric-group character chi_shape at the class with the
// given cycle lengths (weakly decreasing), by recursive border-strip
// removal.  Strips are located through the first-column hook lengths
// ("beta numbers") b_i = shape_i + r - 1 - i: removing a strip of length t
// replaces some b_i by b_i - t, legal exactly when the new value is
// non-negative and not already taken, with sign (-1)^{number of beta
// values passed over}.
inline ExactInt mn_character(const std::vector<long long>& shape, const std::vector<long long>& cycles) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    static std::mutex mu;
    static std::map<std::pair<std::vector<long long>, std::vector<long long>>, ExactInt> memo;
    const auto key = std::make_pair(shape, cycles);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    const long long t = cycles.front();
    const std::vector<long long> rest(cycles.begin() + 1, cycles.end());
    const std::size_t r = shape.size();
    std::vector<long long> beta(r);
    for (std::size_t i = 0; i < r; ++i) beta[i] = shape[i] + static_cast<long long>(r - 1 - i);

    ExactInt total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const long long nb = beta[i] - t;
        if (nb < 0) continue;
        bool taken = false;
        long long height = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (beta[j] == nb) taken = true;
            if (beta[j] > nb && beta[j] < beta[i]) ++height;
        }
        if (taken) continue;
        std::vector<long long> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<long long>());
        std::vector<long long> nshape(r);
        for (std::size_t k = 0; k < r; ++k) nshape[k] = nbeta[k] - static_cast<long long>(r - 1 - k);
        while (!nshape.empty() && nshape.back() == 0) nshape.pop_back();
        const ExactInt sub = mn_character(nshape, rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, total);
    return total;
}

} // namespace detail

// Independent route: the eigenvalue as the normalized character sum over
// the fixed-point-free conjugacy classes,
//   eta_lambda = (1/dim lambda) sum_rho |class rho| chi_lambda(rho).
// The division is exact; a remainder would mean a character bug.  Guarded
// by a size cap because the character recursion outgrows the recurrences.
inline ExactInt eta_character(const Partition& lam, long long oracle_cap = 12) {
    const long long n = lam.sum();
    if (n > oracle_cap)
        throw error(errc::too_large, "partition of " + std::to_string(n) +
                                         " exceeds the character-oracle cap " + std::to_string(oracle_cap));
    ExactInt total = 0;
    for (const CycleType& cls : derangement_classes(n))
        total += cls.class_size * detail::mn_character(lam.parts(), cls.shape.parts());
    ExactInt q, r;
    boost::multiprecision::divide_qr(total, dim(lam), q, r);
    if (r != 0) throw error(errc::internal_error, "character sum not divisible by the dimension");
    return q;
}

// |eta_lambda| computed by its own positive recurrence
//   f(lambda) = lambda_r f(column removed) + f(last row removed).
// The recurrence is sign-safe only with at least two rows (removing the
// last row must keep the first part); rows of length <= 1 are the base
// case, where |eta| is the derangement number of the single part.
inline ExactInt abs_eta(const Partition& lam) {
    if (lam.length() <= 1) return derangement_number(lam.sum());
    static detail::EtaCache cache;
    if (auto hit = cache.find(lam.parts())) return *hit;
    ExactInt value = ExactInt(lam.last()) * abs_eta(remove_first_column(lam)) + abs_eta(remove_last_row(lam));
    cache.store(lam.parts(), value);
    return value;
}

// |eta_lambda| through the expansion that splits the diagram at row m
// (1-based, 2 <= m <= r):
//   f(lambda) = sum_{k=0}^{lambda_m} h*_k(lambda_m..lambda_r)
//               f(lambda_1 - k, ..., lambda_{m-1} - k).
inline ExactInt abs_eta_expanded(const Partition& lam, long long m) {
    const long long r = static_cast<long long>(lam.length());
    if (m < 2 || m > r)
        throw error(errc::bad_index, "split row must satisfy 2 <= m <= " + std::to_string(r));
    const auto& parts = lam.parts();
    const Point tail(parts.begin() + (m - 1), parts.end());
    ExactInt total = 0;
    for (long long k = 0; k <= parts[m - 1]; ++k) {
        std::vector<long long> head(parts.begin(), parts.begin() + (m - 1));
        for (long long& x : head) x -= k;
        while (!head.empty() && head.back() == 0) head.pop_back();
        total += h_star_rec(k, tail) * abs_eta(Partition(std::move(head)));
    }
    return total;
}

// Sign predicted by the alternating sign property: (-1)^{number of cells
// below the first row}.  The property is asserted only for |lambda| > 1.
inline int asp_sign(const Partition& lam) {
    if (lam.sum() <= 1)
        throw error(errc::too_small, "sign is only asserted for partitions of at least 2");
    return (lam.sum() - lam.first()) % 2 == 0 ? 1 : -1;
}

// Full spectrum for partitions of n (optionally restricted by first part),
// in decreasing lexicographic order.  jobs > 1 evaluates eigenvalues on
// several threads; the output order never depends on it.
inline std::vector<SpectrumEntry> spectrum_table(long long n,
                                                 std::optional<long long> min_first_part = std::nullopt,
                                                 unsigned jobs = 1) {
    if (n < 1) throw error(errc::bad_index, "spectrum table needs n >= 1");
    const std::vector<Partition> parts = enumerate(n, min_first_part);
    std::vector<ExactInt> etas(parts.size());

    if (jobs > 1 && parts.size() > 1) {
        const unsigned workers = static_cast<unsigned>(
            std::min<std::size_t>(jobs, parts.size()));
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < parts.size(); i += workers) etas[i] = eta_new(parts[i]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) etas[i] = eta_new(parts[i]);
    }

    std::vector<SpectrumEntry> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const ExactInt d = dim(parts[i]);
        out.push_back(SpectrumEntry{parts[i], etas[i], detail::sign_of(etas[i]), d * d});
    }
    return out;
}

// The first three spectral moments (sum of dim^2, of dim^2 eta, of
// dim^2 eta^2) over all partitions of n.  They must equal n!, 0 and
// n! D_n: the eigenvalue count, the trace of the adjacency matrix, and
// twice its edge count.
inline std::array<ExactInt, 3> trace_moments(long long n) {
    if (n < 1) throw error(errc::bad_index, "trace moments need n >= 1");
    ExactInt m0 = 0, m1 = 0, m2 = 0;
    for (const Partition& p : enumerate(n)) {
        const ExactInt d = dim(p);
        const ExactInt d2 = d * d;
        const ExactInt eta = eta_new(p);
        m0 += d2;
        m1 += d2 * eta;
        m2 += d2 * eta * eta;
    }
    return {m0, m1, m2};
}

} // namespace derspec
