// Deliberately naive reference implementations used to cross-check the
// library. Dense, slow, and written without sharing code with src/.

#ifndef LOOPHOM_TEST_ORACLES_HPP
#define LOOPHOM_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Dense = std::vector<std::vector<mpz_class>>;

// Bezout coefficients for (a, b), a != 0. When a | b this is the plain
// elimination s = 1, x = 0; mpz_gcdext may otherwise return s = 0 there,
// which swaps rows instead of clearing and can cycle.
inline void bezout(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& x)
{
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        g = a;
        s = 1;
        x = 0;
        return;
    }
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Smith diagonal by 2x2 Bezout transforms on rows and columns.
inline std::vector<mpz_class> smith_diagonal(Dense a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // any nonzero entry in the trailing block goes to (t, t)
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    std::swap(a[t], a[i]);
                    for (auto& r : a)
                        std::swap(r[t], r[j]);
                    found = true;
                }
        if (!found)
            break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class g, s, x;
                bezout(a[t][t], a[i][t], g, s, x);
                mpz_class p = a[t][t] / g, q = a[i][t] / g;
                for (std::size_t j = t; j < cols; ++j) {
                    mpz_class top = s * a[t][j] + x * a[i][j];
                    mpz_class bot = -q * a[t][j] + p * a[i][j];
                    a[t][j] = top;
                    a[i][j] = bot;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class g, s, x;
                bezout(a[t][t], a[t][j], g, s, x);
                mpz_class p = a[t][t] / g, q = a[t][j] / g;
                for (std::size_t i = t; i < rows; ++i) {
                    mpz_class left = s * a[i][t] + x * a[i][j];
                    mpz_class right = -q * a[i][t] + p * a[i][j];
                    a[i][t] = left;
                    a[i][j] = right;
                }
                dirty = true;
            }
            for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                if (a[i][t] != 0)
                    dirty = true;
            if (dirty)
                continue;
            // enforce d_t | every remaining entry
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < rows && !bad; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (!bad)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[*bad][j];
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

// Row echelon form over Z with positive pivots, built by Bezout row steps.
struct Echelon
{
    std::vector<std::pair<std::size_t, std::vector<mpz_class>>> rows;  // (pivot column, row)

    explicit Echelon(Dense a)
    {
        const std::size_t cols = a.empty() ? 0 : a[0].size();
        std::size_t top = 0;
        for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
            std::size_t lead = a.size();
            for (std::size_t i = top; i < a.size(); ++i)
                if (a[i][c] != 0) {
                    lead = i;
                    break;
                }
            if (lead == a.size())
                continue;
            std::swap(a[top], a[lead]);
            for (std::size_t i = top + 1; i < a.size(); ++i) {
                if (a[i][c] == 0)
                    continue;
                mpz_class g, s, x;
                bezout(a[top][c], a[i][c], g, s, x);
                mpz_class p = a[top][c] / g, q = a[i][c] / g;
                for (std::size_t j = c; j < cols; ++j) {
                    mpz_class r1 = s * a[top][j] + x * a[i][j];
                    mpz_class r2 = -q * a[top][j] + p * a[i][j];
                    a[top][j] = r1;
                    a[i][j] = r2;
                }
            }
            if (a[top][c] < 0)
                for (auto& v : a[top])
                    v = -v;
            rows.emplace_back(c, a[top]);
            ++top;
        }
    }

    bool contains(std::vector<mpz_class> v) const
    {
        for (const auto& [c, r] : rows) {
            if (!mpz_divisible_p(v[c].get_mpz_t(), r[c].get_mpz_t()))
                return false;
            mpz_class k = v[c] / r[c];
            for (std::size_t j = c; j < v.size(); ++j)
                v[j] -= k * r[j];
        }
        return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
    }

    // least b in [1, bound] with b*v in the span, else nullopt
    std::optional<long> order_up_to(const std::vector<mpz_class>& v, long bound) const
    {
        for (long b = 1; b <= bound; ++b) {
            std::vector<mpz_class> w(v);
            for (auto& x : w)
                x *= b;
            if (contains(w))
                return b;
        }
        return std::nullopt;
    }
};

inline int rank_mod(Dense a, std::uint64_t p)
{
    const mpz_class P(static_cast<unsigned long>(p));
    for (auto& r : a)
        for (auto& x : r)
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    int rank = 0;
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
        std::size_t lead = a.size();
        for (std::size_t i = top; i < a.size(); ++i)
            if (a[i][c] != 0) {
                lead = i;
                break;
            }
        if (lead == a.size())
            continue;
        std::swap(a[top], a[lead]);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), a[top][c].get_mpz_t(), P.get_mpz_t());
        for (std::size_t i = top + 1; i < a.size(); ++i) {
            if (a[i][c] == 0)
                continue;
            mpz_class k = a[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= k * a[top][j];
                mpz_mod(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), P.get_mpz_t());
            }
        }
        ++top;
        ++rank;
    }
    return rank;
}

inline bool prime_by_trial(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// 1, -1 or 0 by listing the squares mod p
inline int legendre_by_squares(std::int64_t a, std::uint64_t p)
{
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0)
        r += static_cast<std::int64_t>(p);
    if (r == 0)
        return 0;
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * x % p == static_cast<std::uint64_t>(r))
            return 1;
    return -1;
}

inline std::uint64_t order_by_iteration(std::uint64_t g, std::uint64_t p)
{
    std::uint64_t x = g % p, k = 1;
    while (x != 1) {
        x = x * (g % p) % p;
        ++k;
    }
    return k;
}

// least m in [2, max_m] with q | a_m, stepping the recurrence one term at a
// time with every value reduced mod q (no cycle detection)
inline std::optional<int> am_zero_mod(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                      const mpz_class& d, mpz_class am, mpz_class bm, std::uint64_t q,
                                      int max_m)
{
    const mpz_class Q(static_cast<unsigned long>(q));
    auto reduce = [&](mpz_class& x) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), Q.get_mpz_t()); };
    reduce(am);
    reduce(bm);
    for (int m = 2; m <= max_m; ++m) {
        if (am == 0)
            return m;
        mpz_class next_a = a + b * am + c * bm;
        mpz_class next_b = d * am;
        reduce(next_a);
        reduce(next_b);
        am = next_a;
        bm = next_b;
    }
    return std::nullopt;
}

}  // namespace oracle

#endif
