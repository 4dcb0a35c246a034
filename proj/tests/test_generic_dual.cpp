#include <gtest/gtest.h>

#include <set>

#include "arthur/errors.hpp"
#include "arthur/generic_dual.hpp"
#include "helpers.hpp"

using namespace arthur;
using namespace testing_helpers;

namespace {

FormalParameter tempered(const std::string& text) { return load(text).p; }

std::string twists(const std::vector<Twist>& ts) {
  std::string out;
  for (const Twist& t : ts) out += (out.empty() ? "" : " ") + to_string(t);
  return out;
}

// expand every rho (x) S_a (x) S_b by hand into characters of the Weil group
std::multiset<std::pair<std::string, Rational>> segments(const FormalParameter& p) {
  std::multiset<std::pair<std::string, Rational>> out;
  for (const Summand& s : p.summands())
    for (int m = 0; m < s.m; ++m)
      for (int k = 0; k < s.b; ++k)
        for (int j = 0; j < s.a; ++j) out.insert({s.rho.label, s.x + Rational(s.b - 1, 2) - k});
  return out;
}

}  // namespace

TEST(GenericDual, So3Example) {
  const GenericDatum d = parse_generic_input("SO(3,split): ; one[1,O]@S(2)xS(1)");
  EXPECT_EQ(to_string(generic_dual_L(d)), "one[1,O]|-1/2@S(1)xS(1) + one[1,O]|1/2@S(1)xS(1)");
  EXPECT_EQ(generic_dual_L(d), arthur_to_L(hat(d.temp_part.phi())));
  EXPECT_TRUE(d.temp_part.eps().is_trivial());
}

TEST(GenericDual, AllAOneIsIdentity) {
  const GenericDatum d = parse_generic_input("Sp(2): ; chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)");
  EXPECT_EQ(generic_dual_L(d), assembled_parameter(d));
}

TEST(GenericDual, GLSteinbergPart) {
  const GenericDatum d = parse_generic_input("Sp(4): tau[1,O]@S(2)xS(1) ; one[1,O]@S(1)xS(1)");
  EXPECT_EQ(d.temp_part.form(), GroupForm::sp(0));
  EXPECT_EQ(assembled_parameter(d).dim(), 5);
  EXPECT_EQ(to_string(generic_dual_L(d)),
            "one[1,O]@S(1)xS(1) + tau[1,O]|-1/2@S(1)xS(1)^2 + tau[1,O]|1/2@S(1)xS(1)^2");
}

TEST(GenericDual, RejectsBadInput) {
  EXPECT_THROW(parse_generic_input("SO(3,split): ; one[1,O]@S(1)xS(2)"), ValidationError);
  EXPECT_THROW(parse_generic_input("Sp(2): tau[1,O]@S(2)xS(1) ; one[1,O]@S(1)xS(1)"), ValidationError);
  EXPECT_THROW(parse_generic_input("SO(3,split) ; one[1,O]@S(2)xS(1)"), ParseError);
}

TEST(Phi0Phi1, Examples) {
  auto [p0, p1] = phi0_phi1_split(tempered("SO(3,split): one[1,O]@S(2)xS(1)"));
  EXPECT_EQ(p0.dim(), 0);
  EXPECT_EQ(to_string(p1), "one[1,O]|1/2@S(1)xS(1)");
  auto [q0, q1] = phi0_phi1_split(tempered("Sp(0): one[1,O]@S(1)xS(1)"));
  EXPECT_EQ(to_string(q0), "one[1,O]@S(1)xS(1)");
  EXPECT_EQ(q1.dim(), 0);
}

TEST(Shape, So3Example) {
  const FormalParameter phi = tempered("SO(3,split): one[1,O]@S(2)xS(1)");
  const StandardModuleShape s = standard_module_shape(phi);
  EXPECT_EQ(twists(s.twists), "one|-1/2");
  EXPECT_EQ(s.anchor.dim(), 0);
  const auto chain = generic_dual_chain(phi);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(to_string(chain[0].peel), "one|-1/2");
  EXPECT_EQ(chain[0].remaining.dim(), 0);
}

TEST(Shape, OddLadder) {
  const FormalParameter phi = tempered("SO(4,split): r[1,O]@S(1)xS(1) + r[1,O]@S(3)xS(1)");
  const StandardModuleShape s = standard_module_shape(phi);
  EXPECT_EQ(twists(s.twists), "r|-1");
  EXPECT_EQ(to_string(s.anchor), "r[1,O]@S(1)xS(1)^2");
  const auto chain = generic_dual_chain(phi);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(to_string(chain[0].peel), "r|-1");
  EXPECT_EQ(to_string(chain[0].remaining), "r[1,O]@S(1)xS(1)^2");
}

TEST(Shape, AllAOneHasNoPeels) {
  const FormalParameter phi = tempered(kSp2);
  EXPECT_TRUE(generic_dual_chain(phi).empty());
  EXPECT_TRUE(standard_module_shape(phi).twists.empty());
}

TEST(Chain, EstablishedFamilies) {
  EXPECT_TRUE(chain_moves_established(GroupForm::sp(4)));
  EXPECT_TRUE(chain_moves_established(GroupForm::so(5, Form::split)));
  EXPECT_FALSE(chain_moves_established(GroupForm::so(5, Form::inner)));
  EXPECT_FALSE(chain_moves_established(GroupForm::so(6, Form::split)));
}

class GenericDualProperties : public ::testing::TestWithParam<int> {};

TEST_P(GenericDualProperties, Identities) {
  for (int i = 0; i < 150; ++i) {
    Rng rng = test_rng("generic_dual", static_cast<std::uint64_t>(GetParam() * 1000 + i));
    const GenericDatum d = random_generic_datum(Bounds{}, rng);
    const FormalParameter out = generic_dual_L(d);
    const FormalParameter in = assembled_parameter(d);
    const std::string repro = to_string(in);
    EXPECT_EQ(out.dim(), in.dim()) << repro;
    for (const Summand& s : out.summands()) EXPECT_TRUE(s.a == 1 && s.b == 1) << repro;
    EXPECT_EQ(out.dual(), out) << repro;

    const FormalParameter& phi = d.temp_part.phi();
    EXPECT_EQ(segments(arthur_to_L(hat(phi))), segments(hat(phi))) << repro;
    auto [p0, p1] = phi0_phi1_split(phi);
    EXPECT_EQ(p0.plus(p1).plus(p1.dual()), arthur_to_L(hat(phi))) << repro;
    const StandardModuleShape shape = standard_module_shape(phi);
    EXPECT_EQ(reassemble(shape), arthur_to_L(hat(phi))) << repro;
    EXPECT_EQ(shape.anchor, p0) << repro;
    std::vector<Twist> peels;
    for (const ChainRecord& c : generic_dual_chain(phi)) peels.push_back(c.peel);
    EXPECT_EQ(twist_multiset(peels), twist_multiset(shape.twists)) << repro;
    for (const Twist& t : shape.twists) EXPECT_LT(t.exponent, 0) << repro;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GenericDualProperties, ::testing::Values(0, 1, 2));
