// Parameterized relation families: the (a_m, b_m) recurrence, the iterated
// brackets sigma/rho/tau over F = Z<u1,u2,u3,u4,v,w>, the relation set S
// presenting E = F/J, and the thirteen quadratic relations presenting A_X.

#ifndef LOOPHOM_PRESENTATION_HPP
#define LOOPHOM_PRESENTATION_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "loophom/freealg.hpp"

namespace loophom {

struct Params
{
    mpz_class a, b, c, d, a2, b2;

    /// a=0, b=4, c=-3, d=1, a2=11, b2=5; a_m = 2 + 3^m.
    static Params theorem1();
    /// Comma separated "a,b,c,d,a2,b2".
    static Params parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const Params&, const Params&) = default;
};

struct CoeffEntry
{
    int m;
    mpz_class a;
    mpz_class b;
    friend bool operator==(const CoeffEntry&, const CoeffEntry&) = default;
};

/// Entries for m = 2..max_m, seeded by (a2, b2) and advanced by
/// (a_m, b_m) = (a + b*a_{m-1} + c*b_{m-1}, d*a_{m-1}).
std::vector<CoeffEntry> coeff_sequence(const Params& p, int max_m);

/// sigma_{i,1} = u_i, sigma_{i,m+1} = [sigma_{i,m}, v].
Element sigma(int i, int m, SignConvention conv);
/// rho_{i,m} = [sigma_{i,m-1}, w], m >= 2.
Element rho(int i, int m, SignConvention conv);
/// tau_m = rho_{1,m} + a_m rho_{2,m} + b_m rho_{3,m}, m >= 2.
Element tau(int m, const Params& p, SignConvention conv);

enum class AlgebraKind { E, AX };

std::string_view algebra_name(AlgebraKind k);
AlgebraKind algebra_from_name(std::string_view name);

struct Relation
{
    Element element;
    int degree;
    std::string tag;  // "tau_m", "a_m*rho_4_{m+1}" or "AX_k"
};

struct RelationSet
{
    AlgebraKind kind = AlgebraKind::E;
    Alphabet alphabet;
    Params params;
    SignConvention convention = SignConvention::graded;
    int max_degree = 0;
    std::vector<Relation> relations;
    std::vector<std::string> warnings;

    /// Header line followed by one relation per line.
    std::string to_text() const;
    /// Inverse of to_text; throws std::invalid_argument on malformed input.
    static RelationSet from_text(const std::string& text);
};

/// All tau_m (2 <= m <= max_degree) and a_m*rho_{4,m+1} (3 <= m+1 <= max_degree).
/// Relations with a_m = 0 are dropped and a warning is recorded.
RelationSet relation_set_E(const Params& p, int max_degree, SignConvention conv);

/// The thirteen degree-2 relations over eight generators, in display order.
RelationSet relation_set_AX(const Params& p, SignConvention conv);

RelationSet relation_set(AlgebraKind kind, const Params& p, int max_degree,
                         SignConvention conv);

}  // namespace loophom

#endif
