// Integer row lattices of sparse matrices: Smith normal form, membership and
// element orders in Z^n / L, and ranks over prime fields.
//
// The reduction runs in two phases. A sparse phase repeatedly pivots on
// entries equal to +-1 (Markowitz-style choice to limit fill-in) and splits
// each such pivot off as an invariant factor 1. What remains has no unit
// entries and is handed to a dense Smith reduction that tracks its column
// transform, so any vector can be expressed in Smith coordinates.

#ifndef LOOPHOM_SMITH_HPP
#define LOOPHOM_SMITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace loophom {

/// Sparse integer row: (column, value) pairs sorted by column, no zeros.
using IntRow = std::vector<std::pair<int, mpz_class>>;

struct SparseIntMatrix
{
    int cols = 0;
    std::vector<IntRow> rows;

    static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& dense);
};

/// Dense row-major integer matrix.
class IntMatrix
{
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const mpz_class& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithForm
{
    /// d_1 | d_2 | ... | d_rank, all positive.
    std::vector<mpz_class> factors;
    int rank = 0;

    /// Invariant factors greater than one.
    std::vector<mpz_class> nontrivial() const;
};

/// Diagonalize `a` in place by unimodular row and column operations.
/// Column operations are mirrored into `v` when given (v must be a.cols()
/// square), so that U * a_in * V = a_out. Returns the positive diagonal.
std::vector<mpz_class> dense_smith(IntMatrix& a, IntMatrix* v);

/// Order of an element of Z^n / L; nullopt stands for infinite order.
using ElementOrder = std::optional<mpz_class>;

class RowLattice
{
  public:
    explicit RowLattice(const SparseIntMatrix& m);

    int cols() const { return cols_; }
    const SmithForm& smith() const { return smith_; }

    /// Least b >= 1 with b*v in the lattice, or nullopt if none exists.
    ElementOrder order(const IntRow& v) const;
    bool contains(const IntRow& v) const;

    /// Pivots taken by the sparse phase and size of the dense remainder.
    std::size_t unit_pivots() const { return pivots_.size(); }
    std::pair<int, int> residual_shape() const { return {residual_rows_, int(residual_cols_.size())}; }

  private:
    struct Pivot
    {
        int col;
        int sign;
        IntRow row;
    };

    int cols_ = 0;
    std::vector<Pivot> pivots_;
    int residual_rows_ = 0;
    std::vector<int> residual_cols_;
    std::vector<int> residual_slot_;  // column -> index into residual_cols_, or -1
    IntMatrix transform_;             // column transform of the dense block
    std::vector<mpz_class> residual_factors_;
    SmithForm smith_;
};

SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Rank over F_p for a prime p < 2^61.
int rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

}  // namespace loophom

#endif
