#include "loophom/series.hpp"

#include <stdexcept>

#include "loophom/gradedz.hpp"
#include "loophom/numtheory.hpp"

namespace loophom {

Field Field::parse(const std::string& text)
{
    if (text == "Q")
        return rationals();
    std::size_t used = 0;
    std::uint64_t p = 0;
    try {
        p = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-')
        throw std::invalid_argument("field must be Q or a prime, got '" + text + "'");
    if (p >= (std::uint64_t(1) << 61))
        throw std::invalid_argument("field characteristic must be below 2^61");
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + text + " is not prime");
    return modp(p);
}

std::string Field::name() const
{
    return prime ? "F" + std::to_string(*prime) : "Q";
}

PowerSeries::PowerSeries(std::vector<mpq_class> coeffs, int order)
    : coeffs_(static_cast<std::size_t>(order) + 1)
{
    for (std::size_t n = 0; n < coeffs.size() && n < coeffs_.size(); ++n)
        coeffs_[n] = coeffs[n];
}

PowerSeries PowerSeries::truncated(int order) const
{
    return PowerSeries(coeffs_, order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n)
        out[n] = a[n] + b[n];
    return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n)
        out[n] = a[n] - b[n];
    return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n)
        for (int k = 0; k <= n; ++k)
            out[n] += a[k] * b[n - k];
    return out;
}

bool PowerSeries::integral() const
{
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            return false;
    return true;
}

std::string PowerSeries::to_string() const
{
    std::string out;
    for (int n = 0; n <= order(); ++n) {
        const mpq_class& c = coeffs_[static_cast<std::size_t>(n)];
        if (sgn(c) == 0)
            continue;
        mpq_class mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        bool show = n == 0 || mag != 1;
        if (show)
            out += mag.get_str();
        if (n > 0) {
            out += show ? " t" : "t";
            if (n > 1)
                out += "^" + std::to_string(n);
        }
    }
    if (out.empty())
        out = "0";
    return out + " + O(t^" + std::to_string(order() + 1) + ")";
}

PowerSeries series_from_ints(const std::vector<long>& coeffs, int order)
{
    PowerSeries s(order);
    for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= order; ++n)
        s[static_cast<int>(n)] = coeffs[n];
    return s;
}

PowerSeries invert_series(const PowerSeries& s, int order)
{
    if (s[0] != 1)
        throw std::invalid_argument("invert_series: constant term must be 1");
    if (order > s.order())
        throw std::invalid_argument("invert_series: order exceeds the input's truncation");
    PowerSeries inv(order);
    inv[0] = 1;
    for (int n = 1; n <= order; ++n) {
        mpq_class acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += s[k] * inv[n - k];
        inv[n] = -acc;
    }
    return inv;
}

PowerSeries dimension_series(const RelationSet& rels, const Field& field, int order)
{
    if (order < 0)
        throw std::invalid_argument("dimension_series: negative order");
    PowerSeries out(order);
    for (int n = 0; n <= order; ++n) {
        DegreeMatrix dm = ideal_spanning_matrix(rels, n);
        long rank = field.prime ? rank_mod_p(dm.matrix, *field.prime)
                                : RowLattice(dm.matrix).smith().rank;
        out[n] = mpq_class(mpz_class(static_cast<long>(dm.columns()) - rank));
    }
    return out;
}

PowerSeries roos_inverse(const PowerSeries& hilbert, long g2, long r4, int order)
{
    if (order < 0)
        order = hilbert.order();
    PowerSeries one_plus_t = series_from_ints({1, 1}, order);
    PowerSeries correction = series_from_ints({0, -1, g2, -r4}, order);
    PowerSeries rhs = one_plus_t * invert_series(hilbert, order) + correction;
    if (rhs[0] != 1)
        throw std::invalid_argument("roos_poincare: right-hand side has constant term != 1");
    return rhs;
}

PowerSeries roos_poincare(const PowerSeries& hilbert, long g2, long r4, int order)
{
    PowerSeries rhs = roos_inverse(hilbert, g2, r4, order);
    return invert_series(rhs, rhs.order());
}

}  // namespace loophom
