#include "loophom/gradedz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace loophom {

namespace {

std::int64_t ipow(std::int64_t base, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

bool row_less(const IntRow& a, const IntRow& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].first != b[k].first)
            return a[k].first < b[k].first;
        if (int s = cmp(a[k].second, b[k].second))
            return s < 0;
    }
    return false;
}

}  // namespace

IntRow to_row(const Element& e, int n, Alphabet alphabet)
{
    if (!e.is_homogeneous_of(n))
        throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n));
    if (alphabet_span(e) > alphabet.size)
        throw std::invalid_argument("element uses generators outside the algebra");
    IntRow row;
    row.reserve(e.size());
    // length-lex order within one degree matches column order
    for (const auto& [w, c] : e.terms())
        row.emplace_back(static_cast<int>(word_index(w, alphabet.size)), c);
    return row;
}

DegreeMatrix ideal_spanning_matrix(const RelationSet& rels, int n)
{
    if (n < 0)
        throw std::invalid_argument("negative degree");
    if (rels.kind == AlgebraKind::E && n > rels.max_degree)
        throw std::invalid_argument("relation set truncated at degree " +
                                    std::to_string(rels.max_degree) + ", cannot span degree " +
                                    std::to_string(n));
    const int g = rels.alphabet.size;
    DegreeMatrix dm;
    dm.degree = n;
    dm.alphabet = rels.alphabet;
    dm.matrix.cols = static_cast<int>(ipow(g, n));

    std::vector<std::pair<IntRow, RowDescriptor>> rows;
    for (std::size_t ri = 0; ri < rels.relations.size(); ++ri) {
        const Relation& rel = rels.relations[ri];
        const int k = rel.degree;
        if (k > n || rel.element.is_zero())
            continue;
        const IntRow base = to_row(rel.element, k, rels.alphabet);
        for (int i = 0; i + k <= n; ++i) {
            const int j = n - k - i;
            const std::int64_t right_count = ipow(g, j);
            const std::int64_t left_count = ipow(g, i);
            const std::int64_t left_stride = ipow(g, k + j);
            for (std::int64_t l = 0; l < left_count; ++l) {
                for (std::int64_t r = 0; r < right_count; ++r) {
                    IntRow row;
                    row.reserve(base.size());
                    for (const auto& [t, c] : base)
                        row.emplace_back(static_cast<int>(l * left_stride + t * right_count + r), c);
                    rows.push_back({std::move(row),
                                    {word_at(l, i, g), static_cast<int>(ri), word_at(r, j, g)}});
                }
            }
        }
    }

    // drop repeated rows, keeping the first descriptor
    std::vector<std::size_t> order(rows.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return row_less(rows[a].first, rows[b].first);
    });
    std::vector<char> keep(rows.size(), 1);
    for (std::size_t k = 1; k < order.size(); ++k)
        if (!row_less(rows[order[k - 1]].first, rows[order[k]].first))
            keep[order[k]] = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!keep[k])
            continue;
        dm.matrix.rows.push_back(std::move(rows[k].first));
        dm.descriptors.push_back(std::move(rows[k].second));
    }
    return dm;
}

QuotientDegree::QuotientDegree(const RelationSet& rels, int n)
    : degree_(n), alphabet_(rels.alphabet)
{
    DegreeMatrix dm = ideal_spanning_matrix(rels, n);
    lattice_ = std::make_shared<const RowLattice>(dm.matrix);
    const auto& snf = lattice_->smith();
    piece_.degree = n;
    piece_.free_rank = dm.columns() - snf.rank;
    piece_.divisors = snf.nontrivial();
}

ElementOrder QuotientDegree::order(const Element& e) const
{
    if (!e.is_homogeneous_of(degree_))
        throw std::invalid_argument("element_order: element is not of degree " +
                                    std::to_string(degree_));
    return lattice_->order(to_row(e, degree_, alphabet_));
}

bool QuotientDegree::contains(const Element& e) const
{
    auto o = order(e);
    return o && *o == 1;
}

GradedPiece graded_piece(const RelationSet& rels, int n)
{
    return QuotientDegree(rels, n).piece();
}

ElementOrder element_order(const Element& e, const RelationSet& rels, int n)
{
    if (!e.is_homogeneous_of(n))
        throw std::invalid_argument("element_order: element is not of degree " + std::to_string(n));
    return QuotientDegree(rels, n).order(e);
}

std::vector<mpz_class> prime_factors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> out;
    if (n < 2)
        return out;
    for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            do
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        }
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0)
            break;
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw std::runtime_error("prime_factors: cofactor " + n.get_str() +
                                     " has no factor below 10^6");
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> elementary_divisors(const std::vector<mpz_class>& invariant_factors)
{
    std::vector<mpz_class> out;
    for (const auto& d : invariant_factors) {
        mpz_class rest = abs(d);
        for (const auto& p : prime_factors(rest)) {
            mpz_class pk = 1;
            while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
                rest /= p;
                pk *= p;
            }
            out.push_back(pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsionReport torsion_primes_up_to(const RelationSet& rels, int max_degree,
                                   const std::vector<CoeffEntry>& seq)
{
    if (max_degree < 2)
        throw std::invalid_argument("torsion_primes_up_to needs N >= 2");
    TorsionReport rep;
    rep.algebra = rels.kind;
    rep.params = rels.params;
    rep.convention = rels.convention;
    rep.warnings = rels.warnings;

    std::set<mpz_class> computed, predicted;
    for (int n = 0; n <= max_degree; ++n) {
        rep.degrees.push_back(graded_piece(rels, n));
        for (const auto& d : rep.degrees.back().divisors)
            for (const auto& p : prime_factors(d))
                computed.insert(p);
    }
    for (const auto& e : seq) {
        if (e.m < 2 || e.m > max_degree - 1)
            continue;
        if (e.a == 0) {
            rep.warnings.push_back("a_" + std::to_string(e.m) +
                                   " = 0: torsion prediction excludes this index");
            continue;
        }
        for (const auto& p : prime_factors(e.a))
            predicted.insert(p);
    }
    rep.computed_primes.assign(computed.begin(), computed.end());
    rep.predicted_primes.assign(predicted.begin(), predicted.end());
    rep.agree = rep.computed_primes == rep.predicted_primes;
    return rep;
}

}  // namespace loophom
