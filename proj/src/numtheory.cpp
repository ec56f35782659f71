#include "loophom/numtheory.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace loophom {

namespace {

void require_desk_prime(std::uint64_t p, const char* who)
{
    if (p >= kPrimalityBound)
        throw std::invalid_argument(std::string(who) + ": input above 3.3e14 is out of range");
    if (!is_prime(p))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t reduce(std::int64_t a, std::uint64_t p)
{
    if (a >= 0)
        return static_cast<std::uint64_t>(a) % p;
    std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % p;  // avoids overflow at INT64_MIN
    return (p - 1 - r) % p;
}

std::uint64_t reduce(const mpz_class& a, std::uint64_t p)
{
    return mpz_fdiv_ui(a.get_mpz_t(), p);
}

void fill_residues(PrimeClassification& pc)
{
    pc.mod24 = static_cast<int>(pc.p % 24);
    pc.mod12 = static_cast<int>(pc.p % 12);
    pc.mod8 = static_cast<int>(pc.p % 8);
    if (pc.p > 2) {
        pc.legendre3 = legendre(3, pc.p);
        pc.legendre_minus2 = legendre(-2, pc.p);
    }
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these twelve bases are a deterministic witness set below 3.3e24
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    if (bound < 3)
        return out;
    std::vector<bool> composite(bound, false);
    for (std::uint64_t i = 2; i < bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < bound; j += i)
            composite[j] = true;
    }
    return out;
}

std::vector<std::uint64_t> factor_distinct(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

int legendre(std::int64_t a, std::uint64_t p)
{
    if (p == 2)
        throw std::invalid_argument("legendre: p must be odd");
    require_desk_prime(p, "legendre");
    std::uint64_t r = reduce(a, p);
    if (r == 0)
        return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t p)
{
    g %= p;
    if (g == 0)
        throw std::invalid_argument("multiplicative_order: not a unit");
    std::uint64_t n = p - 1;
    for (std::uint64_t l : factor_distinct(p - 1))
        while (n % l == 0 && powmod(g, n / l, p) == 1)
            n /= l;
    return n;
}

bool is_primitive_root(std::int64_t g, std::uint64_t p)
{
    require_desk_prime(p, "is_primitive_root");
    std::uint64_t r = reduce(g, p);
    if (r == 0)
        throw std::invalid_argument("is_primitive_root: gcd(g, p) != 1");
    for (std::uint64_t l : factor_distinct(p - 1))
        if (powmod(r, (p - 1) / l, p) == 1)
            return false;
    return true;
}

std::string_view verdict_name(Verdict v)
{
    return v == Verdict::torsion ? "torsion" : "non-torsion";
}

std::string_view mechanism_name(Mechanism m)
{
    switch (m) {
    case Mechanism::residue_rule:
        return "residue-rule";
    case Mechanism::power_witness:
        return "power-witness";
    case Mechanism::divisor_witness:
        return "divisor-witness";
    case Mechanism::exhausted_cycle:
        return "exhausted-cycle";
    }
    return "?";
}

std::optional<Verdict> residue_expectation(int mod24)
{
    switch (mod24) {
    case 5:
    case 7:
    case 17:
    case 19:
        return Verdict::torsion;
    case 13:
    case 23:
        return Verdict::non_torsion;
    default:
        return std::nullopt;
    }
}

PrimeClassification classify_prime_theorem1(std::uint64_t p)
{
    require_desk_prime(p, "classify_prime_theorem1");
    if (p == 2 || p == 3)
        throw std::invalid_argument("classify_prime_theorem1: p must differ from 2 and 3");

    PrimeClassification pc;
    pc.p = p;
    fill_residues(pc);
    pc.expected = residue_expectation(pc.mod24);

    // 3 is a square and -2 is not, so -2 lies outside the subgroup <3>
    if (pc.mod24 == 13 || pc.mod24 == 23) {
        pc.verdict = Verdict::non_torsion;
        pc.mechanism = Mechanism::residue_rule;
        return pc;
    }

    const std::uint64_t ord = multiplicative_order(3, p);
    const std::uint64_t target = p - 2;
    std::uint64_t x = 9 % p;
    for (std::uint64_t m = 2; m <= ord + 1; ++m) {
        if (x == target) {
            pc.verdict = Verdict::torsion;
            pc.mechanism = Mechanism::power_witness;
            pc.witness = m;
            return pc;
        }
        x = mulmod(x, 3, p);
    }
    pc.verdict = Verdict::non_torsion;
    pc.mechanism = Mechanism::exhausted_cycle;
    return pc;
}

AmZeroSearch divides_some_am(const Params& params, std::uint64_t q)
{
    require_desk_prime(q, "divides_some_am");
    const std::uint64_t a = reduce(params.a, q), b = reduce(params.b, q), c = reduce(params.c, q),
                        d = reduce(params.d, q);
    using State = std::pair<std::uint64_t, std::uint64_t>;
    auto step = [&](const State& s) -> State {
        return {(a + mulmod(b, s.first, q) + mulmod(c, s.second, q)) % q, mulmod(d, s.first, q)};
    };
    const unsigned __int128 cap = static_cast<unsigned __int128>(q) * q;

    AmZeroSearch out;
    std::uint64_t m = 2;
    State cur{reduce(params.a2, q), reduce(params.b2, q)};
    out.steps = 1;
    if (cur.first == 0) {
        out.witness = m;
        return out;
    }
    // Brent: compare against a saved state refreshed at powers of two
    State saved = cur;
    std::uint64_t power = 1, lam = 0;
    while (out.steps < cap) {
        cur = step(cur);
        ++m;
        ++out.steps;
        ++lam;
        if (cur.first == 0) {
            out.witness = m;
            return out;
        }
        if (cur == saved)
            return out;  // orbit closed without a zero
        if (lam == power) {
            saved = cur;
            power *= 2;
            lam = 0;
        }
    }
    return out;
}

PrimeClassification classify_prime_general(const Params& params, std::uint64_t q)
{
    PrimeClassification pc;
    pc.p = q;
    auto search = divides_some_am(params, q);
    fill_residues(pc);
    if (search.witness) {
        pc.verdict = Verdict::torsion;
        pc.mechanism = Mechanism::divisor_witness;
        pc.witness = search.witness;
    } else {
        pc.verdict = Verdict::non_torsion;
        pc.mechanism = Mechanism::exhausted_cycle;
    }
    return pc;
}

Params theorem2_params(const std::vector<std::uint64_t>& excluded)
{
    std::set<std::uint64_t> seen;
    mpz_class a = 1;
    for (std::uint64_t p : excluded) {
        require_desk_prime(p, "theorem2_params");
        if (!seen.insert(p).second)
            throw std::invalid_argument("theorem2_params: repeated prime " + std::to_string(p));
        a *= static_cast<unsigned long>(p);
    }
    return {a, 1, 0, 0, 1, 0};
}

std::vector<CensusRow> census(std::uint64_t bound, CensusMode mode, const Params& params)
{
    if (bound < 25)
        throw std::invalid_argument("census: bound must be at least 25");
    if (bound > kPrimalityBound)
        throw std::invalid_argument("census: bound out of range");
    std::map<int, CensusRow> rows;
    for (std::uint64_t p : primes_below(bound)) {
        PrimeClassification pc;
        if (mode == CensusMode::theorem1) {
            if (p == 2 || p == 3)
                continue;
            pc = classify_prime_theorem1(p);
        } else {
            pc = classify_prime_general(params, p);
        }
        CensusRow& row = rows[pc.mod24];
        row.residue = pc.mod24;
        row.expected = pc.expected;
        ++row.count;
        ++(pc.verdict == Verdict::torsion ? row.torsion : row.non_torsion);
        if (pc.contradicts_expectation())
            row.discrepancies.push_back(p);
    }
    std::vector<CensusRow> out;
    for (auto& [r, row] : rows)
        out.push_back(std::move(row));
    return out;
}

}  // namespace loophom
