#include "arthur/endoscopy.hpp"

#include <algorithm>
#include <set>

#include "arthur/dsl.hpp"
#include "arthur/errors.hpp"
#include "arthur/signs.hpp"

namespace arthur {

Eigenvalue Eigenvalue::inv() const {
  Eigenvalue e = *this;
  if (!is_sign()) e.inverse = !inverse;
  return e;
}

std::string Eigenvalue::to_string() const {
  if (is_sign()) return sign > 0 ? "+1" : "-1";
  return inverse ? lambda + "inv" : lambda;
}

SemisimpleElement parse_element(const std::string& text) {
  Cursor c(text);
  SemisimpleElement s;
  if (c.at_end()) return s;
  do {
    const std::size_t at = c.pos();
    const SummandKey k = parse_summand_key(c);
    c.expect(':');
    EigenMultiset ms;
    while (!c.at_end() && c.peek() != ';') {
      Eigenvalue e;
      const std::size_t tok = c.pos();
      if (c.accept('+')) {
        c.expect('1');
      } else if (c.accept('-')) {
        c.expect('1');
        e.sign = -1;
      } else {
        std::string name = c.ident();
        if (name.size() > 3 && name.compare(name.size() - 3, 3, "inv") == 0) {
          name.resize(name.size() - 3);
          e.inverse = true;
        }
        if (name.back() == '~') throw ParseError("bad eigenvalue label", tok);
        e.lambda = name;
      }
      int mult = 1;
      if (c.accept('^')) {
        const std::size_t mp = c.pos();
        mult = c.integer();
        if (mult <= 0) throw ParseError("nonpositive integer", mp);
      }
      ms[e] += mult;
    }
    if (ms.empty()) throw ParseError("empty eigenvalue list", c.pos());
    if (!s.eigen.emplace(k, ms).second) throw ParseError("summand listed twice", at);
  } while (c.accept(';'));
  if (!c.at_end()) c.fail("unexpected trailing input");
  return s;
}

std::string to_string(const SemisimpleElement& s) {
  std::string out;
  for (const auto& [k, ms] : s.eigen) {
    if (!out.empty()) out += "; ";
    out += to_string(k) + ":";
    for (const auto& [e, m] : ms) out += " " + e.to_string() + "^" + std::to_string(m);
  }
  return out;
}

namespace {

int count(const EigenMultiset& ms, const Eigenvalue& e) {
  auto it = ms.find(e);
  return it == ms.end() ? 0 : it->second;
}

int total(const EigenMultiset& ms) {
  int t = 0;
  for (const auto& [e, m] : ms) t += m;
  return t;
}

EigenMultiset inverted(const EigenMultiset& ms) {
  EigenMultiset out;
  for (const auto& [e, m] : ms) out[e.inv()] += m;
  return out;
}

void check_self_dual_block(const EigenMultiset& ms, const Summand& s, bool symplectic) {
  for (const auto& [e, m] : ms) {
    if (!e.is_sign() && count(ms, e.inv()) != m)
      throw ValidationError("invalid element: unbalanced " + e.lambda + " on " + to_string(s));
  }
  if (symplectic && (count(ms, Eigenvalue{1}) % 2 || count(ms, Eigenvalue{-1}) % 2))
    throw ValidationError("invalid element: odd +-1 multiplicity on symplectic block " + to_string(s));
}

}  // namespace

ElementData resolve_element(const SemisimpleElement& s, const GpPartition& part) {
  ElementData d;
  std::set<SummandKey> used;
  auto lookup = [&](const Summand& t, bool& found) -> EigenMultiset {
    auto it = s.eigen.find(key_of(t));
    found = it != s.eigen.end();
    if (!found) return {};
    used.insert(it->first);
    return it->second;
  };
  auto finish = [](EigenMultiset ms, bool found, const Summand& t) {
    if (!found) ms[Eigenvalue{1}] = t.m;
    if (total(ms) != t.m)
      throw ValidationError("invalid element: multiplicities on " + to_string(t) + " do not sum to " +
                            std::to_string(t.m));
    return ms;
  };
  for (const Summand& t : part.gp) {
    bool found = false;
    EigenMultiset ms = lookup(t, found);
    ms = finish(std::move(ms), found, t);
    check_self_dual_block(ms, t, false);
    d.gp.push_back(std::move(ms));
  }
  for (const Summand& t : part.bp) {
    bool found = false;
    EigenMultiset ms = lookup(t, found);
    ms = finish(std::move(ms), found, t);
    check_self_dual_block(ms, t, true);
    d.bp.push_back(std::move(ms));
  }
  for (const auto& [rep, partner] : part.nsd) {
    bool found_rep = false;
    bool found_partner = false;
    EigenMultiset ms = lookup(rep, found_rep);
    EigenMultiset other = lookup(partner, found_partner);
    if (found_rep && found_partner && inverted(other) != ms)
      throw ValidationError("invalid element: partner eigenvalues are not inverse on " + to_string(rep));
    if (!found_rep && found_partner) {
      ms = inverted(other);
      found_rep = true;
    }
    d.nsd.push_back(finish(std::move(ms), found_rep, rep));
  }
  for (const auto& [k, ms] : s.eigen)
    if (!used.count(k)) throw ValidationError("invalid element: no summand " + to_string(k));
  return d;
}

SignCharacter image_in_component_group(const SemisimpleElement& s, const GpPartition& part) {
  const ElementData d = resolve_element(s, part);
  std::vector<int> v;
  for (const EigenMultiset& ms : d.gp) v.push_back(count(ms, Eigenvalue{-1}) % 2 ? -1 : 1);
  return SignCharacter(gp_keys(part), std::move(v));
}

namespace {

SdClass flipped(SdClass c) {
  if (c == SdClass::CO) return SdClass::CS;
  if (c == SdClass::CS) return SdClass::CO;
  return c;
}

std::optional<FactorData> make_factor(const GroupForm& g, int r, std::optional<Form> hint,
                                      std::vector<Summand> summands, const char* side,
                                      std::vector<std::string>& notes) {
  const bool orthogonal_dual = g.family() == Family::Sp || g.family() == Family::SOeven;
  const bool even_orthogonal = orthogonal_dual && r % 2 == 0 && r > 0;
  if (hint && !even_orthogonal)
    throw ValidationError(std::string("split hint supplied for a non-even-orthogonal ") + side + " factor");
  if (r == 0) return std::nullopt;
  GroupForm h;
  switch (g.family()) {
    case Family::Sp:
    case Family::SOeven:
      if (r % 2) {
        h = GroupForm::sp(r - 1);
        notes.push_back(std::string(side) + ": det twist on " + h.to_string());
      } else {
        Form f = Form::split;
        if (hint) f = *hint;
        else if (r == g.target_dim() && g.family() == Family::SOeven) f = g.quasi_split().form();
        h = GroupForm::so(r, f);
      }
      break;
    case Family::SOodd:
      h = GroupForm::so(r + 1, Form::split);
      break;
    case Family::U:
      h = GroupForm::u(r, Form::split);
      if ((g.dim() - r) % 2) {
        for (Summand& s : summands) s.rho.sd = flipped(s.rho.sd);
        notes.push_back(std::string(side) + ": eta twist on " + h.to_string() + " exchanges CO and CS");
      }
      break;
  }
  FactorData f{h, FormalParameter::make(Kind::arthur, std::move(summands))};
  validate_for_group(f.psi, f.group);
  return f;
}

void push_copies(std::vector<Summand>& out, Summand s, int copies) {
  if (copies <= 0) return;
  s.m = copies;
  out.push_back(std::move(s));
}

}  // namespace

EndoscopicDatum endoscopic_datum(const FormalParameter& psi, const GroupForm& g,
                                 const SemisimpleElement& s, const SplitHints& hints) {
  const GpPartition part = validate_for_group(psi, g);
  const ElementData d = resolve_element(s, part);
  const Eigenvalue plus{1};
  const Eigenvalue minus{-1};

  std::vector<Summand> sp, sm;
  std::set<std::string> lambdas;
  auto collect_lambdas = [&](const EigenMultiset& ms) {
    for (const auto& [e, m] : ms)
      if (!e.is_sign()) lambdas.insert(e.lambda);
  };
  for (std::size_t i = 0; i < part.gp.size(); ++i) {
    push_copies(sp, part.gp[i], count(d.gp[i], plus));
    push_copies(sm, part.gp[i], count(d.gp[i], minus));
    collect_lambdas(d.gp[i]);
  }
  for (std::size_t i = 0; i < part.bp.size(); ++i) {
    push_copies(sp, part.bp[i], count(d.bp[i], plus));
    push_copies(sm, part.bp[i], count(d.bp[i], minus));
    collect_lambdas(d.bp[i]);
  }
  for (std::size_t i = 0; i < part.nsd.size(); ++i) {
    const auto& [rep, partner] = part.nsd[i];
    for (const Summand* t : {&rep, &partner}) {
      push_copies(sp, *t, count(d.nsd[i], plus));
      push_copies(sm, *t, count(d.nsd[i], minus));
    }
    collect_lambdas(d.nsd[i]);
  }

  EndoscopicDatum out;
  for (const std::string& name : lambdas) {
    const Eigenvalue lam{1, name, false};
    std::vector<Summand> parts;
    for (std::size_t i = 0; i < part.gp.size(); ++i) push_copies(parts, part.gp[i], count(d.gp[i], lam));
    for (std::size_t i = 0; i < part.bp.size(); ++i) push_copies(parts, part.bp[i], count(d.bp[i], lam));
    for (std::size_t i = 0; i < part.nsd.size(); ++i) {
      push_copies(parts, part.nsd[i].first, count(d.nsd[i], lam));
      push_copies(parts, part.nsd[i].second, count(d.nsd[i], lam.inv()));
    }
    if (!parts.empty()) out.gl_factors.emplace_back(name, FormalParameter::make(Kind::arthur, std::move(parts)));
  }

  auto dim_of = [](const std::vector<Summand>& v) {
    int t = 0;
    for (const Summand& x : v) t += x.dim();
    return t;
  };
  const int r_plus = dim_of(sp);
  const int r_minus = dim_of(sm);
  out.plus = make_factor(g, r_plus, hints.plus, std::move(sp), "plus", out.twist_note);
  out.minus = make_factor(g, r_minus, hints.minus, std::move(sm), "minus", out.twist_note);

  int gl_dim = 0;
  for (const auto& [name, p] : out.gl_factors) gl_dim += p.dim();
  if (r_plus + r_minus + 2 * gl_dim != psi.dim()) throw std::logic_error("endoscopic dimension bookkeeping");
  return out;
}

SignCharacter mw_character_closed(const FormalParameter& psi, const GroupForm& g) {
  if (!psi.anti_tempered()) throw ValidationError("closed form needs an anti-tempered parameter");
  const GpPartition part = validate_for_group(psi, g);
  std::map<std::string, int> m_rho;
  for (const Summand& s : part.gp) m_rho[s.rho.label] += s.m;
  std::vector<int> v;
  for (const Summand& s : part.gp)
    v.push_back(parity_sign(static_cast<long long>(s.b) * (m_rho[s.rho.label] - 1)));
  return SignCharacter(gp_keys(part), std::move(v));
}

namespace {

struct XuIndex {
  int a;
  int b;
  int zeta;
  int A2() const { return a + b - 2; }            // 2A
  int B2() const { return zeta * (a - b); }       // 2B
};

}  // namespace

std::pair<XuOrder, XuOrder> xu_orders_antitempered(const GpPartition& part) {
  XuOrder fwd, rev;
  std::map<std::string, std::vector<int>> blocks;
  for (std::size_t i = 0; i < part.gp.size(); ++i) blocks[part.gp[i].rho.label].push_back(static_cast<int>(i));
  for (auto& [label, idx] : blocks) {
    std::vector<ExpandedIndex> f;
    for (int i : idx)
      for (int c = 0; c < part.gp[i].m; ++c) f.emplace_back(i, c);
    std::stable_sort(f.begin(), f.end(), [&](const ExpandedIndex& x, const ExpandedIndex& y) {
      return part.gp[x.first].b < part.gp[y.first].b;
    });
    std::vector<ExpandedIndex> r;
    for (std::size_t lo = 0; lo < f.size();) {
      std::size_t hi = lo;
      while (hi < f.size() && part.gp[f[hi].first].b == part.gp[f[lo].first].b) ++hi;
      for (std::size_t k = hi; k > lo; --k) r.push_back(f[k - 1]);
      lo = hi;
    }
    fwd[label] = std::move(f);
    rev[label] = std::move(r);
  }
  return {fwd, rev};
}

XuResult mw_character_xu(const FormalParameter& psi, const GroupForm& g, const std::optional<XuOrder>& order) {
  const GpPartition part = validate_for_group(psi, g);
  if (!part.bp.empty() || !part.nsd.empty()) throw ValidationError("Xu's recipe needs a good-parity parameter");
  XuResult res;
  res.caveat = !psi.anti_tempered();

  std::vector<XuIndex> info;
  for (const Summand& s : part.gp) info.push_back({s.a, s.b, s.a > s.b ? 1 : -1});

  XuOrder ord;
  if (order) {
    ord = *order;
  } else {
    std::map<std::string, std::vector<ExpandedIndex>> blocks;
    for (std::size_t i = 0; i < part.gp.size(); ++i)
      for (int c = 0; c < part.gp[i].m; ++c) blocks[part.gp[i].rho.label].emplace_back(static_cast<int>(i), c);
    for (auto& [label, v] : blocks) {
      std::stable_sort(v.begin(), v.end(), [&](const ExpandedIndex& x, const ExpandedIndex& y) {
        const XuIndex& p = info[x.first];
        const XuIndex& q = info[y.first];
        return std::pair(p.A2(), p.B2()) < std::pair(q.A2(), q.B2());
      });
      ord[label] = std::move(v);
    }
  }

  // every copy appears exactly once, in the block of its own rho
  std::set<ExpandedIndex> seen;
  std::size_t expected = 0;
  for (const Summand& s : part.gp) expected += s.m;
  for (const auto& [label, v] : ord) {
    for (const ExpandedIndex& e : v) {
      if (e.first < 0 || e.first >= static_cast<int>(part.gp.size()) || e.second < 0 ||
          e.second >= part.gp[e.first].m || part.gp[e.first].rho.label != label || !seen.insert(e).second)
        throw ValidationError("order is not a total order on the expanded summands");
    }
  }
  if (seen.size() != expected) throw ValidationError("order is not a total order on the expanded summands");

  std::vector<int> value(part.gp.size(), 0);
  for (const auto& [label, v] : ord) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const XuIndex& p = info[v[i].first];
        const XuIndex& q = info[v[j].first];
        if (p.A2() > q.A2() && p.B2() > q.B2() && p.zeta == q.zeta && i < j)
          throw ValidationError("order violates the admissibility condition");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const XuIndex& p = info[v[i].first];
      int val = 1;
      if (p.a % 2 == 1 && p.b % 2 == 1) {
        int later = 0;
        int earlier = 0;
        for (std::size_t j = 0; j < n; ++j) {
          const XuIndex& q = info[v[j].first];
          const bool odd = q.a % 2 == 1 && q.b % 2 == 1;
          if (j > i && odd && q.zeta == -1) ++later;
          if (j < i && odd) ++earlier;
        }
        val = p.zeta == 1 ? parity_sign(later) : parity_sign(later + earlier);
      }
      int& slot = value[v[i].first];
      if (slot != 0 && slot != val)
        throw ValidationError("copies of " + to_string(part.gp[v[i].first]) + " disagree under this order");
      slot = val;
    }
  }
  res.eps = SignCharacter(gp_keys(part), value);
  return res;
}

namespace {

int endoscopic_sign_with(const FormalParameter& psi, const GroupForm& g, const EndoscopicDatum& d) {
  std::vector<EndoscopicFactor> factors;
  int beta_prime = 1;
  for (const auto* f : {&d.plus, &d.minus}) {
    if (!*f) continue;
    factors.emplace_back((*f)->group);
    beta_prime *= beta_phi_psi((*f)->psi, (*f)->group);
  }
  for (const auto& [name, p] : d.gl_factors) {
    factors.emplace_back(GLFactor{p.dim()});
    beta_prime *= beta_GL(arthur_to_L(p));
  }
  return g.kottwitz() * alpha(g, factors) * beta_phi_psi(psi, g) * beta_prime;
}

std::optional<Form> toggled(const std::optional<FactorData>& f) {
  if (!f || f->group.family() != Family::SOeven) return std::nullopt;
  return f->group.form() == Form::split ? Form::qs : Form::split;
}

}  // namespace

int endoscopic_sign_product(const FormalParameter& psi, const GroupForm& g, const SemisimpleElement& s,
                    const SplitHints& hints) {
  if (!psi.anti_tempered()) throw ValidationError("endoscopic sign product needs an anti-tempered parameter");
  const EndoscopicDatum d = endoscopic_datum(psi, g, s, hints);
  const int value = endoscopic_sign_with(psi, g, d);
  const SplitHints flip{toggled(d.plus), toggled(d.minus)};
  if (flip.plus || flip.minus) {
    SplitHints other = hints;
    if (flip.plus) other.plus = flip.plus;
    if (flip.minus) other.minus = flip.minus;
    if (endoscopic_sign_with(psi, g, endoscopic_datum(psi, g, s, other)) != value)
      throw std::logic_error("endoscopic sign product depends on the even-orthogonal split hints");
  }
  return value;
}

}  // namespace arthur
