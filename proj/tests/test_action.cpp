#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loophom/action.hpp"

using namespace loophom;
using enum Gen;

namespace {

const auto G = SignConvention::graded;
const auto U = SignConvention::ungraded;

}  // namespace

TEST_CASE("derivation images")
{
    auto spec = DerivationSpec::from_params(Params::theorem1(), G);
    CHECK(act(Acting::x1, Element(u1), spec) == bracket(Element(u1), Element(v), G));
    CHECK(act(Acting::x1, Element(u2), spec) ==
          4 * bracket(Element(u2), Element(v), G) + bracket(Element(u3), Element(v), G));
    CHECK(act(Acting::x1, Element(u3), spec) == -3 * bracket(Element(u2), Element(v), G));
    CHECK(act(Acting::x2, Element(u2), spec) == bracket(Element(u4), Element(v), G));
    for (Gen g : {u4, v, w})
        CHECK(act(Acting::x1, Element(g), spec).is_zero());
    CHECK(act(Acting::x2, Element(u1), spec).is_zero());
    CHECK(act(Acting::x1, Element::unit(), spec).is_zero());
}

TEST_CASE("Leibniz rule with and without signs")
{
    for (auto conv : {G, U}) {
        auto spec = DerivationSpec::from_params(Params::theorem1(), conv);
        Element f(u2), g = Element::parse("1*u1.w + 2*v.u3");
        Element lhs = act(Acting::x1, f * g, spec);
        // |f| = 1, so the graded rule twists the second term
        const mpz_class sign = conv == G ? -1 : 1;
        CHECK(lhs == act(Acting::x1, f, spec) * g + sign * (f * act(Acting::x1, g, spec)));
    }
    auto spec = DerivationSpec::from_params(Params::theorem1(), G);
    CHECK_THROWS_AS(act(Acting::x1, Element::parse("1*u1 + 1*u1.v"), spec), std::invalid_argument);
    CHECK_THROWS_AS(act(Acting::x1, Element::parse("1*x1.u1"), spec), std::invalid_argument);
}

TEST_CASE("x1 advances tau and x2 lands on the rho_4 relations")
{
    const Params p = Params::theorem1();
    for (auto conv : {G, U}) {
        auto spec = DerivationSpec::from_params(p, conv);
        auto seq = coeff_sequence(p, 6);
        for (int m = 2; m <= 5; ++m) {
            CHECK(act(Acting::x1, tau(m, p, conv), spec) == tau(m + 1, p, conv));
            CHECK(act(Acting::x2, tau(m, p, conv), spec) ==
                  seq[static_cast<std::size_t>(m - 2)].a * rho(4, m + 1, conv));
        }
    }
}

TEST_CASE("the action preserves J for both parameter families")
{
    for (auto p : {Params::theorem1(), Params::parse("30,1,0,0,1,0")}) {
        for (auto conv : {G, U}) {
            RelationSet rels = relation_set_E(p, 5, conv);
            auto rep = check_preserves_ideal(DerivationSpec::from_params(p, conv), rels, 5);
            CHECK(rep.passed());
            CHECK(rep.entries.size() == 2 * 5);  // five relations of degree <= 4, both x_i
        }
    }
}

TEST_CASE("a corrupted x1*u1 breaks preservation")
{
    // with a = 0 the a[u2,v] term vanishes anyway, so use a = 30
    const Params p = Params::parse("30,1,0,0,1,0");
    auto spec = DerivationSpec::from_params(p, G);
    spec.image(Acting::x1, u1) = bracket(Element(u1), Element(v), G);
    auto rep = check_preserves_ideal(spec, relation_set_E(p, 4, G), 4);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("semi-tensor dimensions")
{
    for (auto conv : {G, U}) {
        for (auto f : {Field::rationals(), Field::modp(5), Field::modp(11), Field::modp(13)}) {
            auto rep = semi_tensor_dimension_check(Params::theorem1(), f, 4, conv);
            CHECK(rep.passed());
            CHECK(rep.rows[2].ax_dim == 51);
        }
    }
    auto f11 = semi_tensor_dimension_check(Params::theorem1(), Field::modp(11), 4, G);
    CHECK(f11.rows[3].ax_dim == 305);
    CHECK_THROWS_AS(semi_tensor_dimension_check(Params::theorem1(), Field::rationals(), 5, G),
                    std::invalid_argument);
}

TEST_CASE("semi-tensor elementary divisors")
{
    auto rep = semi_tensor_divisor_check(Params::theorem1(), 4, G);
    CHECK(rep.passed());
    CHECK(rep.rows[3].ax_elementary == std::vector<mpz_class>{11});
    // 11^13 and 319 = 11 * 29
    CHECK(rep.rows[4].ax_elementary.size() == 15);
    CHECK(rep.rows[4].ax_elementary.back() == 29);
    CHECK(semi_tensor_divisor_check(Params::parse("30,1,0,0,1,0"), 4, U).passed());
}
