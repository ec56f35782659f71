// Action of x1, x2 on F by derivations, its compatibility with the ideal J,
// and the degreewise comparison of A_X with Z<x1,x2> (x) E.

#ifndef LOOPHOM_ACTION_HPP
#define LOOPHOM_ACTION_HPP

#include <array>
#include <string>
#include <vector>

#include "loophom/freealg.hpp"
#include "loophom/presentation.hpp"
#include "loophom/series.hpp"

namespace loophom {

enum class Acting { x1, x2 };

std::string_view acting_name(Acting x);

/// Images of u1..w under x1 and x2 (all of degree 2 or zero).
struct DerivationSpec
{
    std::array<Element, 6> x1_images;
    std::array<Element, 6> x2_images;
    SignConvention convention = SignConvention::graded;

    /// x1*u1 = [u1,v] + a[u2,v], x1*u2 = b[u2,v] + d[u3,v], x1*u3 = c[u2,v],
    /// x2*u2 = [u4,v]; every other image is zero.
    static DerivationSpec from_params(const Params& p, SignConvention conv);

    const Element& image(Acting x, Gen g) const;
    Element& image(Acting x, Gen g);
};

/// Leibniz extension: graded x*(fg) = (x*f)g + (-1)^{|f|} f(x*g),
/// ungraded x*(fg) = (x*f)g + f(x*g). Throws on inhomogeneous input or on
/// words outside F.
Element act(Acting x, const Element& f, const DerivationSpec& spec);

struct PreservationEntry
{
    Acting x;
    std::string relation;
    int degree;  // degree of x*s
    bool member;
};

struct PreservationReport
{
    SignConvention convention;
    std::vector<PreservationEntry> entries;

    bool passed() const;
};

/// For each s of degree <= max_degree - 1 and each x_i, tests whether x_i*s
/// lies in the degree |s|+1 part of J over Z. `rels` must span up to max_degree.
PreservationReport check_preserves_ideal(const DerivationSpec& spec, const RelationSet& rels,
                                         int max_degree);

struct SemiTensorRow
{
    int degree;
    long ax_dim;
    long predicted_dim;  // sum_{i+j=n} 2^i dim E_j
    bool agree() const { return ax_dim == predicted_dim; }
};

struct SemiTensorReport
{
    Field field;
    SignConvention convention;
    std::vector<SemiTensorRow> rows;
    bool passed() const;
};

/// dim A_{X,n} against sum_{i+j=n} 2^i dim E_j for n <= N (N <= 4).
SemiTensorReport semi_tensor_dimension_check(const Params& p, const Field& field, int max_degree,
                                             SignConvention conv);

struct DivisorRow
{
    int degree;
    std::vector<mpz_class> ax_elementary;
    std::vector<mpz_class> predicted_elementary;
    bool agree() const { return ax_elementary == predicted_elementary; }
};

struct DivisorReport
{
    SignConvention convention;
    std::vector<DivisorRow> rows;
    bool passed() const;
};

/// Prime-power elementary divisors of A_{X,n} against those of
/// (+)_{i+j=n} 2^i copies of E_j.
DivisorReport semi_tensor_divisor_check(const Params& p, int max_degree, SignConvention conv);

}  // namespace loophom

#endif
