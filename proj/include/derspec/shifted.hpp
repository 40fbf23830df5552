#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "derspec/error.hpp"
#include "derspec/exact.hpp"
#include "derspec/partition.hpp"

namespace derspec {

// Evaluation point for the shifted symmetric functions.  In practice the
// entries are a partition's parts, but intermediate recurrence steps shift
// entries below zero, so any integers are accepted.
using Point = std::vector<long long>;

// A skew diagram outer/inner with inner contained in outer.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_shape, Partition inner_shape)
        : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
        for (std::size_t i = 0; i < inner.length(); ++i)
            if (inner.parts()[i] > outer.part_or_zero(i))
                throw error(errc::inner_not_contained, "inner shape sticks out of the outer shape");
    }
};

// h*_k(x_1..x_m): the sum over weakly increasing index tuples
// i_1 <= ... <= i_k of (x_{i_1}-k+1)(x_{i_2}-k+2)...(x_{i_k}), with
// h*_0 = 1.  Evaluated by a table over (tuple position t, first usable
// index i): S[t][i] sums the tuples whose t-th index is at least i, so
// S[t][i] = (x_i-k+t)*S[t+1][i] + S[t][i+1].
inline ExactInt h_star(long long k, const Point& pt) {
    if (k < 0) throw error(errc::bad_index, "h* with negative degree");
    if (k == 0) return 1;
    const std::size_t m = pt.size();
    if (m == 0) return 0;
    std::vector<std::vector<ExactInt>> S(static_cast<std::size_t>(k) + 2,
                                         std::vector<ExactInt>(m + 1));
    for (std::size_t i = 0; i <= m; ++i) S[static_cast<std::size_t>(k) + 1][i] = 1;
    for (long long t = k; t >= 1; --t) {
        auto& row = S[static_cast<std::size_t>(t)];
        const auto& next = S[static_cast<std::size_t>(t) + 1];
        row[m] = 0;
        for (std::size_t i = m; i-- > 0;)
            row[i] = (ExactInt(pt[i]) - k + t) * next[i] + row[i + 1];
    }
    return S[1][0];
}

// Same function through the one-variable-at-a-time recurrence
//   h*_k(x_1..x_n) = x_n h*_{k-1}(x_1-1..x_n-1) + h*_k(x_1..x_{n-1})
// with h*_0 = 1 and h*_k() = 0 for k >= 1.  The state is (degree,
// prefix length, uniform downshift applied to the prefix); memoized per
// call, so concurrent invocations never share state.
inline ExactInt h_star_rec(long long k, const Point& pt) {
    if (k < 0) throw error(errc::bad_index, "h* with negative degree");
    std::map<std::tuple<long long, std::size_t, long long>, ExactInt> memo;
    auto rec = [&](auto&& self, long long kk, std::size_t j, long long d) -> ExactInt {
        if (kk == 0) return 1;
        if (j == 0) return 0;
        const auto key = std::make_tuple(kk, j, d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const long long mult = pt[j - 1] - d;
        ExactInt value = self(self, kk, j - 1, d);
        if (mult != 0) value += mult * self(self, kk - 1, j, d + 1);
        memo.emplace(key, value);
        return value;
    };
    return rec(rec, k, pt.size(), 0);
}

namespace detail {

// Fraction-free determinant (Bareiss).  Every division is exact.
inline ExactInt det_bareiss(std::vector<std::vector<ExactInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    ExactInt sign = 1, prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r)
            for (std::size_t cc = c + 1; cc < n; ++cc)
                m[r][cc] = (m[r][cc] * m[c][c] - m[r][c] * m[c][cc]) / prev;
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace detail

// Shifted Schur polynomial s*_mu as the ratio of two falling-factorial
// determinants in the shifted arguments x_i + n - i.  The point is padded
// with zeros up to n = max(rows of mu, entries of pt); by stability the
// padding never changes the value.  For partition arguments the ratio is
// an integer, but it is returned as an exact rational.
inline ExactRat s_star(const Partition& mu, const Point& pt) {
    const std::size_t n = std::max(mu.length(), pt.size());
    if (n == 0) return ExactRat(1);
    std::vector<std::vector<ExactInt>> num(n, std::vector<ExactInt>(n));
    std::vector<std::vector<ExactInt>> den(n, std::vector<ExactInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const ExactInt a = ExactInt(i < pt.size() ? pt[i] : 0) + static_cast<long long>(n - i) - 1;
        for (std::size_t j = 0; j < n; ++j) {
            const long long down = static_cast<long long>(n - j) - 1;
            num[i][j] = falling(a, mu.part_or_zero(j) + down);
            den[i][j] = falling(a, down);
        }
    }
    ExactInt den_det = detail::det_bareiss(std::move(den));
    if (den_det == 0)
        throw error(errc::denominator_zero, "denominator determinant vanished (repeated shifted arguments)");
    ExactInt num_det = detail::det_bareiss(std::move(num));
    if (den_det < 0) {
        den_det = -den_det;
        num_det = -num_det;
    }
    return ExactRat(num_det, den_det);
}

// Exact number of standard fillings of the skew shape, counted as chains
// of single-box additions from the inner shape to the outer shape.  A
// brute-force oracle, capped by the number of cells.
inline ExactInt skew_syt_count(const SkewShape& shape, long long cell_cap = 12) {
    const long long cells = shape.outer.sum() - shape.inner.sum();
    if (cells > cell_cap)
        throw error(errc::shape_too_large, "skew shape has " + std::to_string(cells) +
                                               " cells; the cap is " + std::to_string(cell_cap));
    const auto& outer = shape.outer.parts();
    const std::size_t rows = outer.size();
    std::vector<long long> cur(rows, 0);
    for (std::size_t i = 0; i < shape.inner.length(); ++i) cur[i] = shape.inner.parts()[i];

    std::map<std::vector<long long>, ExactInt> memo;
    auto rec = [&](auto&& self, std::vector<long long>& state) -> ExactInt {
        if (std::equal(state.begin(), state.end(), outer.begin())) return 1;
        if (auto it = memo.find(state); it != memo.end()) return it->second;
        ExactInt total = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            const bool room = state[i] < outer[i];
            const bool keeps_shape = i == 0 || state[i] < state[i - 1];
            if (room && keeps_shape) {
                state[i] += 1;
                total += self(self, state);
                state[i] -= 1;
            }
        }
        memo.emplace(state, total);
        return total;
    };
    return rec(rec, cur);
}

// h*_k evaluated on the banded point (x, lam repeated l times, y) through
// the closed double sum
//   sum_{j=0}^{k} sum_{r=0}^{k-j} C(r+l-1, l-1) (x-j-r down k-j-r)
//                                 (lam-j down r) (y down j),
// which agrees with h_star on the same point for all integers x, lam, y.
inline ExactInt h_star_banded(long long k, long long x, long long lam, long long l, long long y) {
    if (k < 0) throw error(errc::bad_index, "h* with negative degree");
    if (l < 1) throw error(errc::bad_index, "band multiplicity must be at least 1");
    ExactInt total = 0;
    for (long long j = 0; j <= k; ++j) {
        const ExactInt yj = falling(ExactInt(y), j);
        if (yj == 0) continue;
        for (long long r = 0; r + j <= k; ++r) {
            total += binomial(r + l - 1, l - 1) * falling(ExactInt(x) - j - r, k - j - r) *
                     falling(ExactInt(lam) - j, r) * yj;
        }
    }
    return total;
}

} // namespace derspec
