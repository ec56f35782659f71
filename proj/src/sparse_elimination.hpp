// Sparse Gaussian elimination shared by the integer (unit pivot) and
// prime-field reductions. Internal header.

#ifndef LOOPHOM_SPARSE_ELIMINATION_HPP
#define LOOPHOM_SPARSE_ELIMINATION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace loophom::detail {

template <class Scalar>
using Row = std::vector<std::pair<int, Scalar>>;

template <class Scalar>
struct EliminationResult
{
    struct Pivot
    {
        int col;
        Row<Scalar> row;  // as it stood when chosen; zero on earlier pivot columns
    };
    std::vector<Pivot> pivots;
    std::vector<Row<Scalar>> remainder;  // nonzero rows left, zero on pivot columns
};

// Ring policy:
//   bool   pivotable(const Scalar&)
//   Scalar multiplier(const Scalar& x, const Scalar& pivot)   // x + f*pivot == 0
//   Scalar fma(const Scalar& a, const Scalar& f, const Scalar& b)   // a + f*b
//   bool   is_zero(const Scalar&)
template <class Scalar, class Ring>
EliminationResult<Scalar> eliminate(int cols, std::vector<Row<Scalar>> rows, const Ring& ring)
{
    const int n = static_cast<int>(rows.size());
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> col_count(static_cast<std::size_t>(cols), 0);
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
    for (int r = 0; r < n; ++r) {
        for (const auto& [c, x] : rows[r]) {
            ++col_count[c];
            col_rows[c].push_back(r);
        }
    }

    EliminationResult<Scalar> out;
    Row<Scalar> scratch;
    while (true) {
        int pr = -1, pc = -1;
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int r = 0; r < n && best > 0; ++r) {
            if (!alive[r])
                continue;
            if (rows[r].empty()) {
                alive[r] = 0;
                continue;
            }
            const auto len = static_cast<std::int64_t>(rows[r].size()) - 1;
            for (const auto& [c, x] : rows[r]) {
                if (!ring.pivotable(x))
                    continue;
                std::int64_t cost = len * (col_count[c] - 1);
                if (cost < best) {
                    best = cost;
                    pr = r;
                    pc = c;
                    if (cost == 0)
                        break;
                }
            }
        }
        if (pr < 0)
            break;

        const Row<Scalar>& prow = rows[pr];
        auto pit = std::lower_bound(prow.begin(), prow.end(), pc,
                                    [](const auto& e, int c) { return e.first < c; });
        const Scalar pivot = pit->second;
        alive[pr] = 0;
        for (const auto& [c, x] : prow)
            --col_count[c];

        std::vector<int> targets;
        targets.swap(col_rows[pc]);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int r : targets) {
            if (!alive[r])
                continue;
            Row<Scalar>& row = rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != pc)
                continue;
            const Scalar f = ring.multiplier(it->second, pivot);

            // row <- row + f * prow, merged by column
            scratch.clear();
            scratch.reserve(row.size() + prow.size());
            auto a = row.begin();
            auto b = prow.begin();
            while (a != row.end() || b != prow.end()) {
                if (b == prow.end() || (a != row.end() && a->first < b->first)) {
                    scratch.push_back(std::move(*a));
                    ++a;
                } else if (a == row.end() || b->first < a->first) {
                    Scalar v = ring.fma(Scalar(0), f, b->second);
                    ++col_count[b->first];
                    col_rows[b->first].push_back(r);
                    scratch.emplace_back(b->first, std::move(v));
                    ++b;
                } else {
                    Scalar v = ring.fma(a->second, f, b->second);
                    if (ring.is_zero(v))
                        --col_count[a->first];
                    else
                        scratch.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row.swap(scratch);
        }
        out.pivots.push_back({pc, std::move(rows[pr])});
    }

    for (int r = 0; r < n; ++r)
        if (alive[r] && !rows[r].empty())
            out.remainder.push_back(std::move(rows[r]));
    return out;
}

}  // namespace loophom::detail

#endif
