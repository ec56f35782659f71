#include "loophom/smith.hpp"

#include <stdexcept>

#include "sparse_elimination.hpp"

namespace loophom {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct UnitPivotRing
{
    bool pivotable(const mpz_class& x) const { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }
    // pivot is +-1, so its inverse is itself
    mpz_class multiplier(const mpz_class& x, const mpz_class& pivot) const { return -x * pivot; }
    mpz_class fma(const mpz_class& a, const mpz_class& f, const mpz_class& b) const
    {
        mpz_class r = a;
        mpz_addmul(r.get_mpz_t(), f.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    bool is_zero(const mpz_class& x) const { return sgn(x) == 0; }
};

struct PrimeFieldRing
{
    std::uint64_t p;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t inv(std::uint64_t a) const
    {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool pivotable(std::uint64_t x) const { return x != 0; }
    std::uint64_t multiplier(std::uint64_t x, std::uint64_t pivot) const
    {
        return (p - mul(x, inv(pivot))) % p;
    }
    std::uint64_t fma(std::uint64_t a, std::uint64_t f, std::uint64_t b) const
    {
        return (a + mul(f, b)) % p;
    }
    bool is_zero(std::uint64_t x) const { return x == 0; }
};

// Index (i, j) >= (t, t) of a nonzero entry of least absolute value, or
// {-1, -1} when the block is zero.
std::pair<int, int> min_abs_entry(const IntMatrix& a, int t)
{
    std::pair<int, int> best{-1, -1};
    for (int i = t; i < a.rows(); ++i) {
        for (int j = t; j < a.cols(); ++j) {
            const mpz_class& x = a(i, j);
            if (sgn(x) == 0)
                continue;
            if (best.first < 0 || cmpabs(x, a(best.first, best.second)) < 0) {
                best = {i, j};
                if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0)
                    return best;
            }
        }
    }
    return best;
}

// Nearest-integer quotient keeps remainders at most half the pivot.
// Floor division leaves r with the sign of d; one more step of d flips it.
mpz_class round_div(const mpz_class& x, const mpz_class& d)
{
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    mpz_class twice = 2 * r;
    if (cmpabs(twice, d) > 0)
        q += 1;
    return q;
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& dense)
{
    SparseIntMatrix m;
    m.cols = dense.empty() ? 0 : static_cast<int>(dense.front().size());
    for (const auto& r : dense) {
        if (static_cast<int>(r.size()) != m.cols)
            throw std::invalid_argument("ragged dense matrix");
        IntRow row;
        for (int j = 0; j < m.cols; ++j)
            if (r[j] != 0)
                row.emplace_back(j, mpz_class(r[j]));
        m.rows.push_back(std::move(row));
    }
    return m;
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int k = 0; k < cols_; ++k)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(int i, int j)
{
    if (i == j)
        return;
    for (int k = 0; k < rows_; ++k)
        std::swap((*this)(k, i), (*this)(k, j));
}

std::vector<mpz_class> SmithForm::nontrivial() const
{
    std::vector<mpz_class> out;
    for (const auto& d : factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

std::vector<mpz_class> dense_smith(IntMatrix& a, IntMatrix* v)
{
    if (v && (v->rows() != a.cols() || v->cols() != a.cols()))
        throw std::invalid_argument("dense_smith: transform has wrong shape");

    auto col_axpy = [&](int dst, const mpz_class& f, int src) {
        // col_dst -= f * col_src
        for (int i = 0; i < a.rows(); ++i)
            if (sgn(a(i, src)))
                mpz_submul(a(i, dst).get_mpz_t(), f.get_mpz_t(), a(i, src).get_mpz_t());
        if (v)
            for (int i = 0; i < v->rows(); ++i)
                if (sgn((*v)(i, src)))
                    mpz_submul((*v)(i, dst).get_mpz_t(), f.get_mpz_t(), (*v)(i, src).get_mpz_t());
    };
    auto row_axpy = [&](int dst, const mpz_class& f, int src, int from) {
        // row_dst -= f * row_src (columns >= from)
        for (int j = from; j < a.cols(); ++j)
            if (sgn(a(src, j)))
                mpz_submul(a(dst, j).get_mpz_t(), f.get_mpz_t(), a(src, j).get_mpz_t());
    };

    std::vector<mpz_class> diag;
    const int limit = std::min(a.rows(), a.cols());
    for (int t = 0; t < limit; ++t) {
        auto [pi, pj] = min_abs_entry(a, t);
        if (pi < 0)
            break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (v)
            v->swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (sgn(a(i, t)) == 0)
                    continue;
                row_axpy(i, round_div(a(i, t), a(t, t)), t, t);
                if (sgn(a(i, t)))
                    clean = false;
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (sgn(a(t, j)) == 0)
                    continue;
                col_axpy(j, round_div(a(t, j), a(t, t)), t);
                if (sgn(a(t, j)))
                    clean = false;
            }
            if (!clean) {
                // move the smallest leftover in row t or column t to the corner
                int bi = t, bj = t;
                for (int i = t + 1; i < a.rows(); ++i)
                    if (sgn(a(i, t)) && cmpabs(a(i, t), a(bi, bj)) < 0)
                        bi = i, bj = t;
                for (int j = t + 1; j < a.cols(); ++j)
                    if (sgn(a(t, j)) && cmpabs(a(t, j), a(bi, bj)) < 0)
                        bi = t, bj = j;
                a.swap_rows(t, bi);
                a.swap_cols(t, bj);
                if (v)
                    v->swap_cols(t, bj);
                continue;
            }

            // divisibility: d_t must divide the whole remaining block
            int bad = -1;
            for (int i = t + 1; i < a.rows() && bad < 0; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (sgn(a(i, j)) && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            row_axpy(t, mpz_class(-1), bad, t);
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

RowLattice::RowLattice(const SparseIntMatrix& m) : cols_(m.cols)
{
    auto elim = detail::eliminate<mpz_class>(m.cols, m.rows, UnitPivotRing{});

    for (auto& p : elim.pivots) {
        auto it = std::lower_bound(p.row.begin(), p.row.end(), p.col,
                                   [](const auto& e, int c) { return e.first < c; });
        pivots_.push_back({p.col, sgn(it->second), std::move(p.row)});
    }

    residual_slot_.assign(static_cast<std::size_t>(cols_), -1);
    for (const auto& row : elim.remainder)
        for (const auto& [c, x] : row)
            if (residual_slot_[c] < 0) {
                residual_slot_[c] = 0;
                residual_cols_.push_back(c);
            }
    std::sort(residual_cols_.begin(), residual_cols_.end());
    for (std::size_t k = 0; k < residual_cols_.size(); ++k)
        residual_slot_[residual_cols_[k]] = static_cast<int>(k);

    residual_rows_ = static_cast<int>(elim.remainder.size());
    const int rc = static_cast<int>(residual_cols_.size());
    IntMatrix dense(residual_rows_, rc);
    for (int i = 0; i < residual_rows_; ++i)
        for (auto& [c, x] : elim.remainder[i])
            dense(i, residual_slot_[c]) = std::move(x);
    transform_ = IntMatrix::identity(rc);
    residual_factors_ = dense_smith(dense, &transform_);

    smith_.factors.assign(pivots_.size(), mpz_class(1));
    smith_.factors.insert(smith_.factors.end(), residual_factors_.begin(), residual_factors_.end());
    smith_.rank = static_cast<int>(smith_.factors.size());
}

ElementOrder RowLattice::order(const IntRow& v) const
{
    std::vector<mpz_class> x(static_cast<std::size_t>(cols_));
    for (const auto& [c, val] : v) {
        if (c < 0 || c >= cols_)
            throw std::out_of_range("RowLattice::order: column out of range");
        x[c] = val;
    }
    for (const auto& p : pivots_) {
        if (sgn(x[p.col]) == 0)
            continue;
        mpz_class f = x[p.col] * p.sign;
        for (const auto& [c, val] : p.row)
            mpz_submul(x[c].get_mpz_t(), f.get_mpz_t(), val.get_mpz_t());
    }

    const int rc = static_cast<int>(residual_cols_.size());
    std::vector<mpz_class> y(static_cast<std::size_t>(rc));
    for (int c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0)
            continue;
        if (residual_slot_[c] < 0)
            return std::nullopt;  // free coordinate
        y[residual_slot_[c]] = x[c];
    }

    // Smith coordinates: y * V
    mpz_class result = 1;
    for (int j = 0; j < rc; ++j) {
        mpz_class cj = 0;
        for (int i = 0; i < rc; ++i)
            if (sgn(y[i]) && sgn(transform_(i, j)))
                mpz_addmul(cj.get_mpz_t(), y[i].get_mpz_t(), transform_(i, j).get_mpz_t());
        if (sgn(cj) == 0)
            continue;
        if (j >= static_cast<int>(residual_factors_.size()))
            return std::nullopt;
        const mpz_class& d = residual_factors_[j];
        mpz_class gcd_dc = gcd(d, cj);
        mpz_class part = d / gcd_dc;
        result = lcm(result, part);
    }
    return result;
}

bool RowLattice::contains(const IntRow& v) const
{
    auto o = order(v);
    return o && *o == 1;
}

SmithForm smith_normal_form(const SparseIntMatrix& m)
{
    return RowLattice(m).smith();
}

int rank_mod_p(const SparseIntMatrix& m, std::uint64_t p)
{
    if (p < 2 || p >= (std::uint64_t(1) << 61))
        throw std::invalid_argument("rank_mod_p: modulus must be a prime below 2^61");
    std::vector<detail::Row<std::uint64_t>> rows;
    rows.reserve(m.rows.size());
    for (const auto& r : m.rows) {
        detail::Row<std::uint64_t> row;
        for (const auto& [c, x] : r) {
            std::uint64_t v = mpz_fdiv_ui(x.get_mpz_t(), p);
            if (v)
                row.emplace_back(c, v);
        }
        rows.push_back(std::move(row));
    }
    auto elim = detail::eliminate<std::uint64_t>(m.cols, std::move(rows), PrimeFieldRing{p});
    return static_cast<int>(elim.pivots.size());
}

}  // namespace loophom
