// Elementary number theory behind the torsion-prime classification:
// Legendre symbols, multiplicative orders, solvability of 2 + 3^m = 0 mod p,
// zeros of the (a_m, b_m) recurrence modulo a prime, and residue-class
// censuses of primes.

#ifndef LOOPHOM_NUMTHEORY_HPP
#define LOOPHOM_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loophom/presentation.hpp"

namespace loophom {

/// Largest input accepted by the desk-scale routines below.
inline constexpr std::uint64_t kPrimalityBound = 330'000'000'000'000ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes below `bound`, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> factor_distinct(std::uint64_t n);

/// Euler's criterion mapped to {-1, 0, 1}. Throws std::invalid_argument
/// unless p is an odd prime below kPrimalityBound.
int legendre(std::int64_t a, std::uint64_t p);

/// Multiplicative order of g mod p; g must be a unit.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p);

/// Throws std::invalid_argument when gcd(g, p) != 1.
bool is_primitive_root(std::int64_t g, std::uint64_t p);

enum class Verdict { torsion, non_torsion };
enum class Mechanism { residue_rule, power_witness, divisor_witness, exhausted_cycle };

std::string_view verdict_name(Verdict v);
std::string_view mechanism_name(Mechanism m);

struct PrimeClassification
{
    std::uint64_t p = 0;
    Verdict verdict = Verdict::non_torsion;
    Mechanism mechanism = Mechanism::exhausted_cycle;
    std::optional<std::uint64_t> witness;  // least m >= 2
    int mod24 = 0, mod12 = 0, mod8 = 0;
    int legendre3 = 0, legendre_minus2 = 0;
    /// What the quadratic-residue argument asserts for this class, if anything.
    std::optional<Verdict> expected;

    bool contradicts_expectation() const { return expected && *expected != verdict; }
};

/// Residue classes mod 24 where the quadratic-residue argument claims a
/// verdict: 5, 7, 17, 19 -> torsion; 13, 23 -> non-torsion.
std::optional<Verdict> residue_expectation(int mod24);

/// For a = 0, b = 4, c = -3, d = 1, a2 = 11, b2 = 5 (a_m = 2 + 3^m).
/// Classes 13 and 23 mod 24 are settled by the residue rule; all others by
/// searching m in [2, 1 + ord_p(3)]. Rejects 2, 3 and non-primes.
PrimeClassification classify_prime_theorem1(std::uint64_t p);

struct AmZeroSearch
{
    std::optional<std::uint64_t> witness;  // least m >= 2 with q | a_m
    std::uint64_t steps = 0;               // states examined
};

/// Iterates (a_m, b_m) mod q from m = 2 with Brent cycle detection, capped
/// at q^2 states (the size of the state space).
AmZeroSearch divides_some_am(const Params& params, std::uint64_t q);

/// Classification for arbitrary params via divides_some_am.
PrimeClassification classify_prime_general(const Params& params, std::uint64_t q);

/// Params(a = prod(primes), 1, 0, 0, 1, 0): a_m = 1 + a(m-2).
/// Throws std::invalid_argument on a non-prime or repeated member.
Params theorem2_params(const std::vector<std::uint64_t>& excluded);

struct CensusRow
{
    int residue = 0;  // class mod 24
    std::uint64_t count = 0;
    std::uint64_t torsion = 0;
    std::uint64_t non_torsion = 0;
    std::optional<Verdict> expected;
    std::vector<std::uint64_t> discrepancies;  // primes whose verdict contradicts `expected`

    bool mixed() const { return torsion > 0 && non_torsion > 0; }
};

enum class CensusMode { theorem1, general };

/// Primes below `bound` grouped by residue mod 24 (classes with no primes are
/// omitted). Theorem-1 mode skips 2 and 3. Throws for bound < 25.
std::vector<CensusRow> census(std::uint64_t bound, CensusMode mode, const Params& params = Params::theorem1());

}  // namespace loophom

#endif
