// Degreewise structure of a quotient T(V)/I by a homogeneous two-sided ideal,
// as finitely generated abelian groups.

#ifndef LOOPHOM_GRADEDZ_HPP
#define LOOPHOM_GRADEDZ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "loophom/freealg.hpp"
#include "loophom/presentation.hpp"
#include "loophom/smith.hpp"

namespace loophom {

struct RowDescriptor
{
    Word left;
    int relation;  // index into RelationSet::relations
    Word right;
};

/// Rows span the degree-n part of the ideal: each row expands
/// left * relation * right in the degree-n word basis.
struct DegreeMatrix
{
    int degree = 0;
    Alphabet alphabet;
    std::vector<RowDescriptor> descriptors;
    SparseIntMatrix matrix;

    std::int64_t columns() const { return matrix.cols; }
};

DegreeMatrix ideal_spanning_matrix(const RelationSet& rels, int n);

/// Sparse row of a homogeneous element in the degree-n basis.
IntRow to_row(const Element& e, int n, Alphabet alphabet);

struct GradedPiece
{
    int degree = 0;
    std::int64_t free_rank = 0;
    std::vector<mpz_class> divisors;  // invariant factors > 1, each dividing the next

    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

GradedPiece graded_piece(const RelationSet& rels, int n);

/// One degree of the quotient with its lattice reduction kept, for repeated
/// order and membership queries.
class QuotientDegree
{
  public:
    QuotientDegree(const RelationSet& rels, int n);

    int degree() const { return degree_; }
    const GradedPiece& piece() const { return piece_; }
    const RowLattice& lattice() const { return *lattice_; }

    /// Throws std::invalid_argument unless e is homogeneous of this degree.
    ElementOrder order(const Element& e) const;
    bool contains(const Element& e) const;

  private:
    int degree_;
    Alphabet alphabet_;
    std::shared_ptr<const RowLattice> lattice_;
    GradedPiece piece_;
};

/// Least b >= 1 with b*e in the degree-n part of the ideal; nullopt = infinite.
ElementOrder element_order(const Element& e, const RelationSet& rels, int n);

struct TorsionReport
{
    AlgebraKind algebra = AlgebraKind::E;
    Params params;
    SignConvention convention = SignConvention::graded;
    std::vector<GradedPiece> degrees;
    std::vector<mpz_class> computed_primes;
    std::vector<mpz_class> predicted_primes;
    bool agree = false;
    std::vector<std::string> warnings;
};

/// Pieces for degrees 0..N. Predicted primes are those dividing some
/// nonzero a_m with 2 <= m <= N-1.
TorsionReport torsion_primes_up_to(const RelationSet& rels, int max_degree,
                                   const std::vector<CoeffEntry>& seq);

/// Distinct prime factors, ascending. Throws std::runtime_error if a
/// cofactor is too large to split by trial division.
std::vector<mpz_class> prime_factors(mpz_class n);

/// Prime-power decomposition of a list of invariant factors, ascending.
std::vector<mpz_class> elementary_divisors(const std::vector<mpz_class>& invariant_factors);

}  // namespace loophom

#endif
