#include "loophom/action.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "loophom/gradedz.hpp"

namespace loophom {

std::string_view acting_name(Acting x)
{
    return x == Acting::x1 ? "x1" : "x2";
}

DerivationSpec DerivationSpec::from_params(const Params& p, SignConvention conv)
{
    auto br = [conv](Gen a, Gen b) { return bracket(Element(a), Element(b), conv); };
    using enum Gen;
    DerivationSpec s;
    s.convention = conv;
    s.image(Acting::x1, u1) = br(u1, v) + p.a * br(u2, v);
    s.image(Acting::x1, u2) = p.b * br(u2, v) + p.d * br(u3, v);
    s.image(Acting::x1, u3) = p.c * br(u2, v);
    s.image(Acting::x2, u2) = br(u4, v);
    return s;
}

const Element& DerivationSpec::image(Acting x, Gen g) const
{
    const auto& table = x == Acting::x1 ? x1_images : x2_images;
    return table.at(static_cast<std::size_t>(g));
}

Element& DerivationSpec::image(Acting x, Gen g)
{
    auto& table = x == Acting::x1 ? x1_images : x2_images;
    return table.at(static_cast<std::size_t>(g));
}

Element act(Acting x, const Element& f, const DerivationSpec& spec)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument("act: inhomogeneous element");
    if (alphabet_span(f) > Alphabet::F().size)
        throw std::invalid_argument("act: element lies outside F");
    const bool graded = spec.convention == SignConvention::graded;

    Element out;
    for (const auto& [w, c] : f.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            const Element& img = spec.image(x, w[k]);
            if (img.is_zero())
                continue;
            // prefix has degree k, so the graded sign is (-1)^k
            mpz_class coeff = (graded && k % 2 == 1) ? mpz_class(-c) : c;
            Word prefix(w.begin(), w.begin() + static_cast<long>(k));
            Word suffix(w.begin() + static_cast<long>(k) + 1, w.end());
            out += coeff * (Element(prefix) * img * Element(suffix));
        }
    }
    return out;
}

bool PreservationReport::passed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.member; });
}

PreservationReport check_preserves_ideal(const DerivationSpec& spec, const RelationSet& rels,
                                         int max_degree)
{
    if (max_degree < 2)
        throw std::invalid_argument("check_preserves_ideal needs max_degree >= 2");
    PreservationReport rep;
    rep.convention = spec.convention;

    std::map<int, QuotientDegree> pieces;
    for (const auto& rel : rels.relations) {
        if (rel.degree > max_degree - 1)
            continue;
        const int n = rel.degree + 1;
        auto it = pieces.find(n);
        if (it == pieces.end())
            it = pieces.emplace(n, QuotientDegree(rels, n)).first;
        for (Acting x : {Acting::x1, Acting::x2}) {
            Element image = act(x, rel.element, spec);
            rep.entries.push_back({x, rel.tag, n, it->second.contains(image)});
        }
    }
    return rep;
}

bool SemiTensorReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree(); });
}

SemiTensorReport semi_tensor_dimension_check(const Params& p, const Field& field, int max_degree,
                                             SignConvention conv)
{
    if (max_degree < 0 || max_degree > 4)
        throw std::invalid_argument("semi_tensor_dimension_check supports degrees 0..4");
    const int e_degree = std::max(max_degree, 2);
    PowerSeries ax = dimension_series(relation_set_AX(p, conv), field, max_degree);
    PowerSeries e = dimension_series(relation_set_E(p, e_degree, conv), field, max_degree);

    SemiTensorReport rep{field, conv, {}};
    for (int n = 0; n <= max_degree; ++n) {
        mpz_class predicted = 0;
        for (int i = 0; i <= n; ++i)
            predicted += (mpz_class(1) << i) * e[n - i].get_num();
        rep.rows.push_back({n, ax[n].get_num().get_si(), predicted.get_si()});
    }
    return rep;
}

bool DivisorReport::passed() const
{
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.agree(); });
}

DivisorReport semi_tensor_divisor_check(const Params& p, int max_degree, SignConvention conv)
{
    if (max_degree < 0 || max_degree > 4)
        throw std::invalid_argument("semi_tensor_divisor_check supports degrees 0..4");
    const RelationSet ax = relation_set_AX(p, conv);
    const RelationSet e = relation_set_E(p, std::max(max_degree, 2), conv);

    std::vector<std::vector<mpz_class>> e_elem;
    for (int j = 0; j <= max_degree; ++j)
        e_elem.push_back(elementary_divisors(graded_piece(e, j).divisors));

    DivisorReport rep{conv, {}};
    for (int n = 0; n <= max_degree; ++n) {
        DivisorRow row;
        row.degree = n;
        row.ax_elementary = elementary_divisors(graded_piece(ax, n).divisors);
        for (int i = 0; i <= n; ++i)
            for (long copy = 0; copy < (1L << i); ++copy)
                row.predicted_elementary.insert(row.predicted_elementary.end(),
                                                e_elem[n - i].begin(), e_elem[n - i].end());
        std::sort(row.predicted_elementary.begin(), row.predicted_elementary.end());
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace loophom
