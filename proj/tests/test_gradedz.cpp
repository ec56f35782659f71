#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loophom/gradedz.hpp"
#include "oracle/oracles.hpp"

using namespace loophom;
using enum Gen;

namespace {

oracle::Dense dense_of(const SparseIntMatrix& m)
{
    oracle::Dense d(m.rows.size(), std::vector<mpz_class>(static_cast<std::size_t>(m.cols)));
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (const auto& [c, x] : m.rows[i])
            d[i][static_cast<std::size_t>(c)] = x;
    return d;
}

std::vector<mpz_class> dense_row(const IntRow& r, int cols)
{
    std::vector<mpz_class> v(static_cast<std::size_t>(cols));
    for (const auto& [c, x] : r)
        v[static_cast<std::size_t>(c)] = x;
    return v;
}

std::vector<mpz_class> nontrivial(const std::vector<mpz_class>& diag)
{
    std::vector<mpz_class> out;
    for (const auto& d : diag)
        if (d > 1)
            out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> repeat(long n, long value)
{
    return std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(value));
}

SparseIntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int spread)
{
    std::uniform_int_distribution<int> entry(-spread, spread), zero(0, 2);
    std::vector<std::vector<long>> d(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols)));
    for (auto& r : d)
        for (auto& x : r)
            x = zero(rng) ? 0 : entry(rng);
    return SparseIntMatrix::from_dense(d);
}

const auto G = SignConvention::graded;

}  // namespace

TEST_CASE("smith form of small fixed matrices")
{
    auto m = SparseIntMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithForm s = smith_normal_form(m);
    CHECK(s.rank == 3);
    CHECK(s.factors == std::vector<mpz_class>{2, 6, 12});
    CHECK(s.nontrivial() == std::vector<mpz_class>{2, 6, 12});

    auto z = SparseIntMatrix::from_dense({{0, 0}, {0, 0}});
    CHECK(smith_normal_form(z).rank == 0);

    auto u = SparseIntMatrix::from_dense({{1, 1}, {1, -1}});
    CHECK(smith_normal_form(u).factors == std::vector<mpz_class>{1, 2});
}

TEST_CASE("smith form agrees with the Bezout oracle on random matrices")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + trial % 7, cols = 1 + (trial / 7) % 6;
        auto m = random_matrix(rng, rows, cols, 1 + trial % 9);
        SmithForm s = smith_normal_form(m);
        auto diag = oracle::smith_diagonal(dense_of(m));
        CHECK(s.rank == static_cast<int>(diag.size()));
        CHECK(s.nontrivial() == nontrivial(diag));
        for (std::uint64_t p : {2u, 3u, 5u, 7u})
            CHECK(rank_mod_p(m, p) == oracle::rank_mod(dense_of(m), p));
    }
}

TEST_CASE("lattice orders agree with echelon search on random matrices")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const int rows = 1 + trial % 4, cols = 2 + trial % 3;
        auto m = random_matrix(rng, rows, cols, 6);
        RowLattice lat(m);
        oracle::Echelon ech(dense_of(m));
        mpz_class bound = 1;
        for (const auto& f : lat.smith().factors)
            bound *= f;
        for (int probe = 0; probe < 5; ++probe) {
            IntRow r;
            for (int c = 0; c < cols; ++c)
                if (int x = entry(rng))
                    r.emplace_back(c, x);
            auto got = lat.order(r);
            auto want = ech.order_up_to(dense_row(r, cols), bound.get_si());
            CHECK(got.has_value() == want.has_value());
            if (got && want)
                CHECK(*got == *want);
            CHECK(lat.contains(r) == ech.contains(dense_row(r, cols)));
        }
    }
}

TEST_CASE("rank mod p rejects bad moduli")
{
    auto m = SparseIntMatrix::from_dense({{1}});
    CHECK_THROWS_AS(rank_mod_p(m, 1), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(m, 1ULL << 61), std::invalid_argument);
    CHECK(rank_mod_p(m, 2305843009213693951ULL) == 1);  // 2^61 - 1
}

TEST_CASE("ideal spanning matrix shape")
{
    RelationSet e = relation_set_E(Params::theorem1(), 5, G);
    CHECK(ideal_spanning_matrix(e, 2).matrix.rows.size() == 1);
    CHECK(ideal_spanning_matrix(e, 3).matrix.rows.size() == 14);
    CHECK(ideal_spanning_matrix(e, 4).matrix.rows.size() == 134);
    CHECK(ideal_spanning_matrix(e, 3).columns() == 216);
    CHECK_THROWS_AS(ideal_spanning_matrix(e, 6), std::invalid_argument);

    RelationSet ax = relation_set_AX(Params::theorem1(), G);
    CHECK(ideal_spanning_matrix(ax, 2).matrix.rows.size() == 13);
    CHECK(ideal_spanning_matrix(ax, 3).matrix.rows.size() == 208);

    // row descriptor reproduces the row
    auto dm = ideal_spanning_matrix(e, 4);
    for (std::size_t k = 0; k < dm.descriptors.size(); k += 17) {
        const auto& d = dm.descriptors[k];
        Element rebuilt = Element(d.left) * e.relations[static_cast<std::size_t>(d.relation)].element * Element(d.right);
        CHECK(to_row(rebuilt, 4, Alphabet::F()) == dm.matrix.rows[k]);
    }
}

TEST_CASE("graded pieces of E agree with the oracle through degree 3")
{
    RelationSet e = relation_set_E(Params::theorem1(), 5, G);
    for (int n = 0; n <= 3; ++n) {
        auto dm = ideal_spanning_matrix(e, n);
        auto diag = oracle::smith_diagonal(dense_of(dm.matrix));
        GradedPiece piece = graded_piece(e, n);
        CHECK(piece.free_rank == dm.columns() - static_cast<std::int64_t>(diag.size()));
        CHECK(piece.divisors == nontrivial(diag));
    }
}

TEST_CASE("graded pieces of A_X agree with the oracle through degree 3")
{
    for (auto conv : {SignConvention::graded, SignConvention::ungraded}) {
        RelationSet ax = relation_set_AX(Params::theorem1(), conv);
        for (int n = 0; n <= 3; ++n) {
            auto dm = ideal_spanning_matrix(ax, n);
            auto diag = oracle::smith_diagonal(dense_of(dm.matrix));
            GradedPiece piece = graded_piece(ax, n);
            CHECK(piece.free_rank == dm.columns() - static_cast<std::int64_t>(diag.size()));
            CHECK(piece.divisors == nontrivial(diag));
        }
    }
}

TEST_CASE("frozen E pieces for the default parameters")
{
    RelationSet e = relation_set_E(Params::theorem1(), 5, G);
    const std::vector<std::int64_t> ranks = {1, 6, 35, 202, 1163, 6692};
    for (int n = 0; n <= 5; ++n)
        CHECK(graded_piece(e, n).free_rank == ranks[static_cast<std::size_t>(n)]);
    CHECK(graded_piece(e, 3).divisors == std::vector<mpz_class>{11});
    auto d4 = repeat(11, 11);
    d4.push_back(319);
    CHECK(graded_piece(e, 4).divisors == d4);
    auto d5 = repeat(94, 11);
    auto tail = repeat(11, 319);
    d5.insert(d5.end(), tail.begin(), tail.end());
    d5.push_back(26477);
    CHECK(graded_piece(e, 5).divisors == d5);
}

TEST_CASE("frozen A_X pieces")
{
    RelationSet ax = relation_set_AX(Params::theorem1(), G);
    const std::vector<std::int64_t> ranks = {1, 8, 51, 304, 1771};
    for (int n = 0; n <= 4; ++n)
        CHECK(graded_piece(ax, n).free_rank == ranks[static_cast<std::size_t>(n)]);
    auto d4 = repeat(13, 11);
    d4.push_back(319);
    CHECK(graded_piece(ax, 4).divisors == d4);
}

TEST_CASE("element orders of rho_4_m")
{
    RelationSet e = relation_set_E(Params::theorem1(), 5, G);
    CHECK(element_order(rho(4, 3, G), e, 3) == mpz_class(11));
    CHECK(element_order(rho(4, 4, G), e, 4) == mpz_class(29));
    CHECK(element_order(rho(4, 5, G), e, 5) == mpz_class(83));
    CHECK_FALSE(element_order(Element::parse("1*u1.u1.u1"), e, 3).has_value());
    CHECK(element_order(tau(3, Params::theorem1(), G), e, 3) == mpz_class(1));
    CHECK_THROWS_AS(element_order(Element::parse("1*u1.u1"), e, 3), std::invalid_argument);
}

TEST_CASE("degree 3 orders agree with naive search")
{
    RelationSet e = relation_set_E(Params::theorem1(), 3, G);
    auto dm = ideal_spanning_matrix(e, 3);
    oracle::Echelon ech(dense_of(dm.matrix));
    QuotientDegree q(e, 3);
    const long a2 = 11;
    std::vector<Element> probes = {rho(4, 3, G), rho(1, 3, G), rho(2, 3, G), 3 * rho(4, 3, G),
                                   rho(4, 3, G) + tau(3, Params::theorem1(), G), Element::parse("1*u4.v.w")};
    for (const auto& p : probes) {
        auto got = q.order(p);
        auto want = ech.order_up_to(dense_row(to_row(p, 3, Alphabet::F()), 216), a2);
        CHECK(got.has_value() == want.has_value());
        if (got && want)
            CHECK(*got == *want);
    }
}

TEST_CASE("torsion report and prime factors")
{
    RelationSet e = relation_set_E(Params::theorem1(), 4, G);
    auto rep = torsion_primes_up_to(e, 4, coeff_sequence(Params::theorem1(), 4));
    CHECK(rep.computed_primes == std::vector<mpz_class>{11, 29});
    CHECK(rep.predicted_primes == std::vector<mpz_class>{11, 29});
    CHECK(rep.agree);

    CHECK(prime_factors(26477) == std::vector<mpz_class>{11, 29, 83});
    CHECK(prime_factors(1).empty());
    CHECK(elementary_divisors({11, 319}) == std::vector<mpz_class>{11, 11, 29});
    CHECK(elementary_divisors({12}) == std::vector<mpz_class>{3, 4});
}
