#include <gtest/gtest.h>

#include "arthur/endoscopy.hpp"
#include "arthur/errors.hpp"
#include "arthur/signs.hpp"
#include "helpers.hpp"

using namespace arthur;
using namespace testing_helpers;

TEST(Element, ParseAndPrint) {
  const SemisimpleElement s = parse_element("chi@S(1)xS(1): +1^1 -1^1; tau@S(1)xS(2): L^1 Linv^1");
  ASSERT_EQ(s.eigen.size(), 2u);
  EXPECT_EQ(to_string(s), "chi@S(1)xS(1): -1^1 +1^1; tau@S(1)xS(2): L^1 Linv^1");
  EXPECT_TRUE(parse_element("").eigen.empty());
  EXPECT_THROW(parse_element("chi@S(1)xS(1): "), ParseError);
  EXPECT_THROW(parse_element("chi@S(1)xS(1): +1^0"), ParseError);
}

TEST(Element, Validation) {
  const Input in = load(kSp2);
  EXPECT_THROW(resolve_element(parse_element("chi@S(1)xS(1): -1^1"), in.part), ValidationError);
  EXPECT_THROW(resolve_element(parse_element("chi@S(1)xS(1): L^2"), in.part), ValidationError);
  EXPECT_THROW(resolve_element(parse_element("zeta@S(1)xS(1): -1^1"), in.part), ValidationError);
  const Input bp = load("Sp(4): one[1,O]@S(1)xS(1) + q[1,S]@S(1)xS(1)^2 + two[1,O]@S(1)xS(1) + three[1,O]@S(1)xS(1)");
  EXPECT_THROW(resolve_element(parse_element("q@S(1)xS(1): +1^1 -1^1"), bp.part), ValidationError);
  EXPECT_NO_THROW(resolve_element(parse_element("q@S(1)xS(1): -1^2"), bp.part));
}

TEST(Datum, Identity) {
  const Input in = load(kSp2);
  const EndoscopicDatum d = endoscopic_datum(in.p, in.g, SemisimpleElement{});
  ASSERT_TRUE(d.plus.has_value());
  EXPECT_EQ(d.plus->group, in.g);
  EXPECT_EQ(d.plus->psi, in.p);
  EXPECT_FALSE(d.minus.has_value());
  EXPECT_TRUE(d.gl_factors.empty());
}

TEST(Datum, Sp2MixedElement) {
  const Input in = load(kSp2);
  const SemisimpleElement s = parse_element("chi@S(1)xS(1): +1^1 -1^1; one@S(1)xS(1): +1^1");
  const EndoscopicDatum d = endoscopic_datum(in.p, in.g, s);
  ASSERT_TRUE(d.plus && d.minus);
  EXPECT_EQ(d.plus->group, GroupForm::so(2, Form::split));
  EXPECT_EQ(d.plus->psi.dim(), 2);
  EXPECT_EQ(d.minus->group, GroupForm::sp(0));
  EXPECT_EQ(d.minus->psi.dim(), 1);
  EXPECT_EQ(image_in_component_group(s, in.part).positional(), "-,+");
}

TEST(Datum, AllMinusSwapsEigenspaces) {
  const Input in = load(kSp2);
  const EndoscopicDatum d =
      endoscopic_datum(in.p, in.g, parse_element("chi@S(1)xS(1): -1^2; one@S(1)xS(1): -1^1"));
  EXPECT_FALSE(d.plus.has_value());
  ASSERT_TRUE(d.minus.has_value());
  EXPECT_EQ(d.minus->group.family(), Family::Sp);
  EXPECT_EQ(d.minus->psi.dim(), 3);
}

TEST(Datum, GeneralEigenvaluePeelsGL) {
  const Input in = load("Sp(4): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)^3");
  const SemisimpleElement s = parse_element("chi@S(1)xS(1): L^1 Linv^1");
  const EndoscopicDatum d = endoscopic_datum(in.p, in.g, s);
  ASSERT_EQ(d.gl_factors.size(), 1u);
  EXPECT_EQ(d.gl_factors[0].second.dim(), 1);
  EXPECT_EQ(d.plus->psi.dim() + 2 * d.gl_factors[0].second.dim(), in.p.dim());
  EXPECT_TRUE(image_in_component_group(s, in.part).is_trivial());
}

TEST(Datum, HintOnWrongFactor) {
  const Input in = load(kSp2);
  SplitHints h;
  h.minus = Form::qs;
  EXPECT_THROW(endoscopic_datum(in.p, in.g, parse_element("chi@S(1)xS(1): +1^1 -1^1"), h), ValidationError);
}

TEST(Mw, ClosedExamples) {
  const Input sp = load(kSp2);
  EXPECT_EQ(mw_character_closed(sp.p, sp.g).positional(), "-,+");
  const Input so = load("SO(3,split): one[1,O]@S(1)xS(2)");
  EXPECT_TRUE(mw_character_closed(so.p, so.g).is_trivial());
  const Input distinct = load("Sp(4): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(3) + c[1,O]@S(1)xS(1)");
  EXPECT_TRUE(mw_character_closed(distinct.p, distinct.g).is_trivial());
  EXPECT_THROW(mw_character_closed(load(kSo3).p, load(kSo3).g), ValidationError);
}

TEST(Mw, XuExamples) {
  const Input sp = load(kSp2);
  const XuResult r = mw_character_xu(sp.p, sp.g);
  EXPECT_EQ(r.eps.positional(), "-,+");
  EXPECT_FALSE(r.caveat);
  const Input one = load("SO(3,split): one[1,O]@S(1)xS(2)");
  EXPECT_TRUE(mw_character_xu(one.p, one.g).eps.is_trivial());
  const XuResult t = mw_character_xu(load(kSo3).p, load(kSo3).g);
  EXPECT_TRUE(t.caveat);
}

TEST(Mw, XuRejectsOrderBreakingProperty) {
  const Input in = load("Sp(4): one[1,O]@S(1)xS(1) + one3[1,O]@S(1)xS(1) + one[1,O]@S(1)xS(3)");
  ASSERT_EQ(in.part.gp.size(), 3u);
  // gp order is canonical: one@S(1)xS(1), one@S(1)xS(3), one3@S(1)xS(1)
  XuOrder bad{{"one", {{1, 0}, {0, 0}}}, {"one3", {{2, 0}}}};
  EXPECT_THROW(mw_character_xu(in.p, in.g, bad), ValidationError);
  XuOrder good{{"one", {{0, 0}, {1, 0}}}, {"one3", {{2, 0}}}};
  EXPECT_EQ(mw_character_xu(in.p, in.g, good).eps, mw_character_closed(in.p, in.g));
}

TEST(Product, IdentityElement) {
  const Input sp = load(kSp2);
  EXPECT_EQ(endoscopic_sign_product(sp.p, sp.g, SemisimpleElement{}), 1);
  const Input inner = load("SO(7,inner): one[1,O]@S(1)xS(2)^3");
  EXPECT_EQ(endoscopic_sign_product(inner.p, inner.g, SemisimpleElement{}), 1);
}

TEST(Product, Sp2MatchesPairing) {
  const Input in = load(kSp2);
  const SemisimpleElement s = parse_element("chi@S(1)xS(1): +1^1 -1^1");
  EXPECT_EQ(endoscopic_sign_product(in.p, in.g, s), -1);
  EXPECT_EQ(pair(mw_character_closed(in.p, in.g), image_in_component_group(s, in.part)), -1);
}

class EndoscopyProperties : public ::testing::TestWithParam<int> {};

TEST_P(EndoscopyProperties, ProductEqualsPairing) {
  for (int i = 0; i < 150; ++i) {
    Rng rng = test_rng("endoscopy", static_cast<std::uint64_t>(GetParam() * 1000 + i));
    const ElementInstance e = random_element(Bounds{}, rng);
    const GpPartition part = validate_for_group(e.psi, e.g);
    const std::string repro = serialize(e.g, e.psi) + " | " + to_string(e.s);
    const SignCharacter x = image_in_component_group(e.s, part);
    EXPECT_EQ(image_in_component_group(e.s_alt, part), x) << repro;
    const int want = pair(mw_character_closed(e.psi, e.g), x);
    EXPECT_EQ(endoscopic_sign_product(e.psi, e.g, e.s), want) << repro;
    EXPECT_EQ(endoscopic_sign_product(e.psi, e.g, e.s_alt), want) << repro;
    const EndoscopicDatum d = endoscopic_datum(e.psi, e.g, e.s);
    int dims = 0;
    if (d.plus) dims += d.plus->psi.dim();
    if (d.minus) dims += d.minus->psi.dim();
    for (const auto& [lam, p] : d.gl_factors) dims += 2 * p.dim();
    EXPECT_EQ(dims, e.psi.dim()) << repro;

    const ComponentGroupInfo info = component_info(part, e.g);
    const SignCharacter mw = mw_character_closed(e.psi, e.g);
    EXPECT_EQ(pair(mw, info.e0), 1) << repro;
    EXPECT_EQ(eval_at_s_psi(mw, info), 1) << repro;
    EXPECT_TRUE(restrict_to_L_packet_domain(mw).has_value()) << repro;
    const auto [fwd, rev] = xu_orders_antitempered(part);
    EXPECT_EQ(mw_character_xu(e.psi, e.g, fwd).eps, mw) << repro;
    EXPECT_EQ(mw_character_xu(e.psi, e.g, rev).eps, mw) << repro;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EndoscopyProperties, ::testing::Values(0, 1, 2));
