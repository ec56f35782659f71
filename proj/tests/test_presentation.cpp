#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loophom/presentation.hpp"

using namespace loophom;
using enum Gen;

namespace {

mpz_class pow3(unsigned long m)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, m);
    return r;
}

}  // namespace

TEST_CASE("params parse and print")
{
    Params p = Params::theorem1();
    CHECK(p.to_string() == "0,4,-3,1,11,5");
    CHECK(Params::parse("0,4,-3,1,11,5") == p);
    CHECK(Params::parse(" 30, 1, 0, 0, 1, 0 ").a == 30);
    CHECK_THROWS_AS(Params::parse("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Params::parse("1,2,3,4,5,x"), std::invalid_argument);
}

TEST_CASE("recurrence rows")
{
    auto seq = coeff_sequence(Params::theorem1(), 4);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == CoeffEntry{2, 11, 5});
    CHECK(seq[1] == CoeffEntry{3, 29, 11});
    CHECK(seq[2] == CoeffEntry{4, 83, 29});
    CHECK(coeff_sequence(Params::theorem1(), 2).size() == 1);
    CHECK(coeff_sequence(Params::parse("30,1,0,0,1,0"), 5).back().a == 91);
    CHECK_THROWS_AS(coeff_sequence(Params::theorem1(), 1), std::invalid_argument);
}

TEST_CASE("closed forms hold exactly up to m = 40")
{
    for (const auto& e : coeff_sequence(Params::theorem1(), 40)) {
        CHECK(e.a == 2 + pow3(static_cast<unsigned long>(e.m)));
        CHECK(e.b == 2 + pow3(static_cast<unsigned long>(e.m - 1)));
    }
    Params t2 = Params::parse("30,1,0,0,1,0");
    for (const auto& e : coeff_sequence(t2, 40))
        CHECK(e.a == 1 + 30 * (e.m - 2));
}

TEST_CASE("iterated brackets")
{
    for (auto conv : {SignConvention::graded, SignConvention::ungraded}) {
        CHECK(sigma(2, 1, conv) == Element(u2));
        for (int m = 1; m <= 5; ++m) {
            CHECK(sigma(1, m, conv).degree() == m);
            // the leading word u_i v^{m-1} always has coefficient 1
            Word lead{u3};
            lead.insert(lead.end(), static_cast<std::size_t>(m - 1), v);
            CHECK(sigma(3, m, conv).coeff(lead) == 1);
        }
        CHECK(rho(4, 3, conv) == bracket(sigma(4, 2, conv), Element(w), conv));
    }
    CHECK(sigma(1, 3, SignConvention::graded) == Element::parse("1*u1.v.v + -1*v.v.u1"));
    CHECK(sigma(1, 3, SignConvention::ungraded) ==
          Element::parse("1*u1.v.v + -2*v.u1.v + 1*v.v.u1"));
    CHECK(rho(1, 2, SignConvention::graded) == Element::parse("1*u1.w + 1*w.u1"));
    CHECK(tau(2, Params::theorem1(), SignConvention::graded) ==
          Element::parse("1*u1.w + 11*u2.w + 5*u3.w + 1*w.u1 + 11*w.u2 + 5*w.u3"));
    CHECK_THROWS_AS(rho(1, 1, SignConvention::graded), std::invalid_argument);
    CHECK_THROWS_AS(sigma(5, 1, SignConvention::graded), std::invalid_argument);
}

TEST_CASE("relation set for E")
{
    RelationSet rs = relation_set_E(Params::theorem1(), 5, SignConvention::graded);
    CHECK(rs.alphabet.size == 6);
    std::vector<std::string> tags;
    for (const auto& r : rs.relations) {
        tags.push_back(r.tag);
        CHECK(r.element.is_homogeneous_of(r.degree));
    }
    CHECK(tags == std::vector<std::string>{"tau_2", "tau_3", "tau_4", "tau_5", "a_2*rho_4_3", "a_3*rho_4_4",
                                           "a_4*rho_4_5"});
    CHECK(rs.relations[4].element == 11 * rho(4, 3, SignConvention::graded));
    CHECK(rs.warnings.empty());
}

TEST_CASE("zero a_m drops the relation with a warning")
{
    RelationSet rs = relation_set_E(Params::parse("0,1,0,0,0,1"), 4, SignConvention::graded);
    CHECK(rs.relations.size() == 3);
    CHECK(rs.warnings.size() == 2);
}

TEST_CASE("A_X relations")
{
    RelationSet rs = relation_set_AX(Params::theorem1(), SignConvention::graded);
    REQUIRE(rs.relations.size() == 13);
    CHECK(rs.alphabet.size == 8);
    for (const auto& r : rs.relations)
        CHECK(r.degree == 2);
    CHECK(rs.relations[12].element == tau(2, Params::theorem1(), SignConvention::graded));
    CHECK(rs.relations[3].element == Element::parse("1*u4.x1 + 1*x1.u4"));
    CHECK(rs.relations[0].tag == "AX_1");
}

TEST_CASE("relation text round trip and validation")
{
    for (auto kind : {AlgebraKind::E, AlgebraKind::AX}) {
        RelationSet rs = relation_set(kind, Params::theorem1(), 4, SignConvention::ungraded);
        RelationSet back = RelationSet::from_text(rs.to_text());
        CHECK(back.kind == kind);
        CHECK(back.params == rs.params);
        CHECK(back.convention == SignConvention::ungraded);
        REQUIRE(back.relations.size() == rs.relations.size());
        for (std::size_t k = 0; k < rs.relations.size(); ++k) {
            CHECK(back.relations[k].element == rs.relations[k].element);
            CHECK(back.relations[k].tag == rs.relations[k].tag);
        }
    }
    RelationSet zero = relation_set_E(Params::parse("0,1,0,0,0,1"), 4, SignConvention::graded);
    CHECK(RelationSet::from_text(zero.to_text()).warnings == zero.warnings);

    std::string text = relation_set_E(Params::theorem1(), 3, SignConvention::graded).to_text();
    CHECK_THROWS_AS(RelationSet::from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(RelationSet::from_text(text + "1*u1.w\n"), std::invalid_argument);
    CHECK_THROWS_AS(RelationSet::from_text(text.substr(0, text.find('\n') + 1)), std::invalid_argument);
}
