// Truncated power series with exact rational coefficients, Hilbert series of
// quotient algebras over prime fields or Q, and the Roos transform from the
// Hilbert series A(t) to the loop-space Poincare series P(t):
//
//   P(t)^{-1} = (1 + t) A(t)^{-1} - t + g2 t^2 - r4 t^3

#ifndef LOOPHOM_SERIES_HPP
#define LOOPHOM_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "loophom/presentation.hpp"

namespace loophom {

/// Coefficient field: a prime p < 2^61, or Q when `prime` is empty.
struct Field
{
    std::optional<std::uint64_t> prime;

    static Field rationals() { return {}; }
    static Field modp(std::uint64_t p) { return {p}; }
    /// "Q" or a prime number; throws std::invalid_argument otherwise.
    static Field parse(const std::string& text);
    std::string name() const;
};

/// Coefficients c_0..c_N; everything beyond N is unknown, not zero.
class PowerSeries
{
  public:
    explicit PowerSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    PowerSeries(std::vector<mpq_class> coeffs, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    mpq_class& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    bool integral() const;

    /// "1 + 8 t + 64 t^2 - 13 t^3"
    std::string to_string() const;

  private:
    std::vector<mpq_class> coeffs_;
};

PowerSeries series_from_ints(const std::vector<long>& coeffs, int order);

/// Requires constant term 1; throws std::invalid_argument otherwise.
PowerSeries invert_series(const PowerSeries& s, int order);

/// Coefficient n is g^n - rank of the degree-n ideal matrix over `field`.
PowerSeries dimension_series(const RelationSet& rels, const Field& field, int order);

/// Inverse of (1 + t) A^{-1} - t + g2 t^2 - r4 t^3, truncated at `order`.
PowerSeries roos_poincare(const PowerSeries& hilbert, long g2 = 8, long r4 = 13, int order = -1);

/// The series whose inverse roos_poincare returns.
PowerSeries roos_inverse(const PowerSeries& hilbert, long g2 = 8, long r4 = 13, int order = -1);

}  // namespace loophom

#endif
