#include "arthur/signs.hpp"

#include <algorithm>
#include <map>

#include "arthur/errors.hpp"

namespace arthur {

SignLedger sign_ledger(const GroupForm& g) {
  SignLedger l;
  l.r_G = g.witt_rank();
  l.r_Gstar = g.quasi_split().witt_rank();
  l.kottwitz = parity_sign(l.r_G - l.r_Gstar);
  l.context = g;
  return l;
}

int witt_rank(const GroupForm& g) { return g.witt_rank(); }

int kottwitz_sign(const GroupForm& g) { return g.kottwitz(); }

int alpha(const GroupForm& g, const std::vector<EndoscopicFactor>& gprime) {
  int r = g.witt_rank();
  for (const EndoscopicFactor& f : gprime) {
    if (const auto* h = std::get_if<GroupForm>(&f)) r -= h->witt_rank();
    else r -= std::get<GLFactor>(f).k;
  }
  return parity_sign(r);
}

int levi_count(const GpPartition& part) {
  int m = 0;
  for (const Summand& s : part.gp) m += s.m / 2;
  for (const Summand& s : part.bp) m += s.m / 2;
  for (const auto& [s, partner] : part.nsd) m += s.m;
  return m;
}

int beta_L(const FormalParameter& p, const GroupForm& g) {
  if (p.kind() != Kind::L && !p.tempered()) throw ValidationError("beta_L needs an L-parameter");
  const GroupForm qs = g.quasi_split();
  const GpPartition part = validate_for_group(p, qs);
  return parity_sign(levi_count(part) + qs.witt_rank());
}

int beta_GL(const FormalParameter& p) {
  if (p.kind() != Kind::L && !p.tempered()) throw ValidationError("beta_GL needs an L-parameter");
  long long count = 0;
  for (const Summand& s : p.summands()) count += s.m;
  return parity_sign(count + p.dim());
}

int beta_phi_psi(const FormalParameter& psi, const GroupForm& g) {
  return beta_L(arthur_to_L(psi), g);
}

int beta_phi_psi_closed_form(const FormalParameter& psi, const GroupForm& g) {
  if (!psi.anti_tempered()) throw ValidationError("closed form needs an anti-tempered parameter");
  const GroupForm qs = g.quasi_split();
  const GpPartition part = validate_for_group(psi, qs);

  std::vector<Summand> ngp;
  for (Summand s : part.bp) {
    s.m /= 2;
    ngp.push_back(s);
  }
  for (const auto& [s, partner] : part.nsd) ngp.push_back(s);
  const FormalParameter psi_ngp = FormalParameter::make(Kind::arthur, ngp);

  struct Acc {
    int parity = -1;
    long long m_rho = 0;
    long long f = 0;
  };
  std::map<std::string, Acc> by_rho;
  for (const Summand& s : part.gp) {
    Acc& acc = by_rho[s.rho.label];
    if (acc.parity >= 0 && acc.parity != s.b % 2)
      throw std::logic_error("mixed b-parities inside one good-parity rho-block");
    acc.parity = s.b % 2;
    acc.m_rho += s.m;
    acc.f += s.b % 2 ? static_cast<long long>(s.m) * (s.b - 1) / 2 : static_cast<long long>(s.m) * s.b / 2;
  }
  long long f = 0;
  for (const auto& [label, acc] : by_rho) f += acc.f + (acc.parity == 1 ? acc.m_rho / 2 : 0);

  // rank of the quasi-split group carrying the good-parity part; hyperbolic
  // planes removed one per dimension of psi_ngp
  const int r_gp = qs.witt_rank() - psi_ngp.dim();
  return beta_GL(arthur_to_L(psi_ngp)) * parity_sign(f) * parity_sign(r_gp);
}

int beta_oracle_discrete(const FormalParameter& phi, const GroupForm& g) {
  if (!phi.tempered()) throw ValidationError("discrete oracle needs a tempered parameter");
  const GroupForm qs = g.quasi_split();
  const GpPartition part = validate_for_group(phi, qs);
  if (!part.bp.empty() || !part.nsd.empty()) throw ValidationError("discrete oracle needs a discrete parameter");
  std::map<std::string, std::vector<int>> ladders;
  for (const Summand& s : part.gp) {
    if (s.m != 1) throw ValidationError("discrete oracle needs a discrete parameter");
    ladders[s.rho.label].push_back(s.a);
  }
  // Segments of the twisted Levi: for each rho a list of segments with
  // exponents in steps of one, each exponent one GL_{dim rho} block; the
  // theta-image of each segment pairs with it, the middle block is fixed.
  long long paired = 0;
  for (auto& [label, as] : ladders) {
    std::sort(as.begin(), as.end());
    for (std::size_t i = 0; i < as.size(); ++i) {
      const int a = as[i];
      const Rational lo(1 - a, 2);
      Rational hi = a % 2 == 0 ? Rational(-1, 2) : ((i + 1) % 2 ? Rational(-1) : Rational(0));
      long long blocks = 0;
      for (Rational e = lo; e <= hi; e += 1) ++blocks;
      paired += blocks;
    }
  }
  return parity_sign(qs.witt_rank()) * parity_sign(paired);
}

}  // namespace arthur
