#include <gtest/gtest.h>

#include <map>

#include "arthur/signs.hpp"
#include "helpers.hpp"

using namespace arthur;
using namespace testing_helpers;

namespace {

// beta of an L-parameter recounted from raw summands: pair up copies of each
// self-dual summand and each summand with its dual.
int beta_by_pairing(const FormalParameter& p, const GroupForm& g) {
  std::map<std::string, int> mult;
  std::map<std::string, Summand> by_key;
  for (const Summand& s : p.summands()) {
    const std::string k = s.rho.label + "|" + to_string(s.x) + "|" + std::to_string(s.a);
    mult[k] += s.m;
    by_key[k] = s;
  }
  int pairs = 0;
  for (auto& [k, m] : mult) {
    const Summand& s = by_key[k];
    const Summand d = s.dual();
    const std::string dk = d.rho.label + "|" + to_string(d.x) + "|" + std::to_string(d.a);
    if (dk == k) {
      pairs += m / 2;
    } else if (k < dk) {
      pairs += std::min(m, mult.count(dk) ? mult[dk] : 0);
    }
  }
  return parity_sign(pairs + g.quasi_split().witt_rank());
}

}  // namespace

TEST(Ledger, Values) {
  const SignLedger l = sign_ledger(GroupForm::so(7, Form::inner));
  EXPECT_EQ(l.r_G, 2);
  EXPECT_EQ(l.r_Gstar, 3);
  EXPECT_EQ(l.kottwitz, -1);
  EXPECT_EQ(witt_rank(GroupForm::sp(2)), 1);
  EXPECT_EQ(kottwitz_sign(GroupForm::so(4, Form::inner)), 1);
}

TEST(Alpha, Examples) {
  const GroupForm sp2 = GroupForm::sp(2);
  EXPECT_EQ(alpha(sp2, {sp2}), 1);
  EXPECT_EQ(alpha(sp2, {GroupForm::sp(0), GroupForm::so(2, Form::split)}), 1);
  EXPECT_EQ(alpha(sp2, {GroupForm::sp(0), GroupForm::so(2, Form::qs)}), -1);
  EXPECT_EQ(alpha(GroupForm::sp(4), {GroupForm::sp(0), GLFactor{2}}), 1);
  EXPECT_EQ(alpha(GroupForm::sp(4), {GroupForm::sp(2), GLFactor{1}}), 1);
  const GroupForm g = GroupForm::so(9, Form::split);
  const GroupForm a = GroupForm::so(5, Form::inner), b = GroupForm::so(5, Form::split);
  EXPECT_EQ(alpha(g, {a, b}) * alpha(g, {b, a}), 1);
}

TEST(BetaL, So3Tempered) {
  const Input in = load(kSo3);
  EXPECT_EQ(beta_L(in.p, in.g), -1);
}

TEST(BetaL, Sp2Tempered) {
  const Input in = load(kSp2);
  EXPECT_EQ(beta_L(in.p, in.g), 1);
  EXPECT_EQ(levi_count(in.part), 1);
}

TEST(BetaL, PhiPsiOfSo3Dual) {
  const Input in = load("SO(3,split): one[1,O]@S(1)xS(2)");
  EXPECT_EQ(beta_L(arthur_to_L(in.p), in.g), 1);
  EXPECT_EQ(beta_phi_psi(in.p, in.g), 1);
  EXPECT_EQ(beta_phi_psi_closed_form(in.p, in.g), 1);
}

TEST(BetaGL, Examples) {
  const Irrep r{"r", 3, SdClass::N};
  EXPECT_EQ(beta_GL(FormalParameter::make(Kind::L, {Summand{r, Rational(1, 3), 1, 1, 1}})), 1);
  const Irrep one{"one", 1, SdClass::O};
  EXPECT_EQ(beta_GL(FormalParameter::make(Kind::L, {Summand{one, Rational(1, 2), 1, 1, 1},
                                                    Summand{one, Rational(-1, 2), 1, 1, 1}})),
            1);
  EXPECT_EQ(beta_GL(FormalParameter::make(Kind::L, {Summand{Irrep{"q", 2, SdClass::S}, Rational(0), 3, 1, 1}})), -1);
}

TEST(BetaPhiPsi, TemperedEqualsBetaL) {
  const Input in = load(kSp2);
  EXPECT_EQ(beta_phi_psi(in.p, in.g), beta_L(in.p, in.g));
}

TEST(BetaClosedForm, SupercuspidalDualShape) {
  // hat of one(S_2 + S_4) on SO(7): f = 2*3/2 = 3, r = 3
  const Input in = load("SO(7,split): one[1,O]@S(1)xS(2) + one[1,O]@S(1)xS(4)");
  EXPECT_EQ(beta_phi_psi_closed_form(in.p, in.g), parity_sign(3) * parity_sign(3));
  EXPECT_EQ(beta_phi_psi(in.p, in.g), 1);
}

TEST(BetaClosedForm, EmptyGoodParity) {
  const Input in = load("SO(3,split): t[1,N]@S(1)xS(1) + t~[1,N]@S(1)xS(1)");
  EXPECT_EQ(beta_phi_psi_closed_form(in.p, in.g), beta_phi_psi(in.p, in.g));
}

TEST(DiscreteOracle, Examples) {
  const Input so3 = load(kSo3);
  EXPECT_EQ(beta_oracle_discrete(so3.p, so3.g), 1);
  const Input t = load("Sp(4): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(1) + c[1,O]@S(3)xS(1)");
  EXPECT_EQ(beta_oracle_discrete(t.p, t.g), beta_phi_psi(hat(t.p), t.g));
  const Input all_one = load("Sp(4): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(1) + c[1,O]@S(1)xS(1)^3");
  EXPECT_THROW(beta_oracle_discrete(all_one.p, all_one.g), std::exception);
}

TEST(DiscreteOracle, AllAOneGivesRank) {
  const Input in = load("Sp(4): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(1) + c[1,O]@S(1)xS(1) + d[1,O]@S(1)xS(1) + e[1,O]@S(1)xS(1)");
  EXPECT_EQ(beta_oracle_discrete(in.p, in.g), parity_sign(2));
  EXPECT_EQ(beta_phi_psi(in.p, in.g), parity_sign(2));
}

class SignProperties : public ::testing::TestWithParam<int> {};

TEST_P(SignProperties, RandomIdentities) {
  for (int i = 0; i < 150; ++i) {
    const std::uint64_t idx = static_cast<std::uint64_t>(GetParam() * 1000 + i);
    Rng rng = test_rng("signs", idx);
    GenOptions opt;
    opt.allow_ngp = true;
    const ArthurInstance at = random_anti_tempered(Bounds{}, rng, opt);
    EXPECT_EQ(beta_phi_psi_closed_form(at.psi, at.g), beta_phi_psi(at.psi, at.g)) << serialize(at.g, at.psi);
    const FormalParameter l = arthur_to_L(at.psi);
    EXPECT_EQ(beta_L(l, at.g), beta_L(l, at.g.quasi_split()));
    EXPECT_EQ(beta_L(l, at.g), beta_by_pairing(l, at.g)) << serialize(at.g, at.psi);

    GenOptions disc;
    disc.discrete = true;
    const ArthurInstance d = random_tempered(Bounds{}, rng, disc);
    EXPECT_EQ(beta_oracle_discrete(d.psi, d.g), beta_phi_psi(hat(d.psi), d.g)) << serialize(d.g, d.psi);

    const SplitInstance s = random_split(Bounds{}, rng);
    EXPECT_EQ(beta_L(s.p, s.g), beta_L(s.p0, s.g0) * beta_GL(s.p1)) << serialize(s.g, s.p);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SignProperties, ::testing::Values(0, 1, 2));
