#include "arthur/packets.hpp"

#include <algorithm>
#include <map>

#include "arthur/endoscopy.hpp"
#include "arthur/errors.hpp"
#include "arthur/signs.hpp"

namespace arthur {

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::a: return "a";
    case ReductionCase::b1: return "b1";
    case ReductionCase::b2: return "b2";
    case ReductionCase::c: return "c";
  }
  return "?";
}

namespace {

FormalParameter as_tempered_arthur(const FormalParameter& phi) {
  if (!phi.tempered()) throw ValidationError("packet label needs a tempered parameter");
  if (phi.kind() == Kind::arthur) return phi;
  return FormalParameter::make(Kind::arthur, phi.summands());
}

// Carry values of eps onto new keys; keys absent from the source get +1.
SignCharacter carry(const SignCharacter& eps, const std::vector<GpKey>& keys,
                    const std::map<GpKey, GpKey>& rename = {}) {
  std::map<GpKey, int> src;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    GpKey k = eps.keys()[i];
    if (auto it = rename.find(k); it != rename.end()) k = it->second;
    src[k] = eps[i];
  }
  std::vector<int> v;
  for (const GpKey& k : keys) {
    auto it = src.find(k);
    v.push_back(it == src.end() ? 1 : it->second);
  }
  return SignCharacter(keys, std::move(v));
}

}  // namespace

PacketLabel PacketLabel::unchecked(const FormalParameter& phi, const SignCharacter& eps, const GroupForm& form) {
  PacketLabel l;
  l.phi_ = as_tempered_arthur(phi);
  l.form_ = form;
  l.part_ = validate_for_group(l.phi_, form);
  l.info_ = component_info(l.part_, form);
  if (eps.keys() != l.info_.e0.keys()) throw ValidationError("character domain does not match the parameter");
  l.eps_ = coset_representative(eps, l.info_);
  if (pair(l.eps_, l.info_.e0) != form.chi_v())
    throw ValidationError("character " + eps.positional() + " is not admissible for " + form.to_string());
  return l;
}

PacketLabel PacketLabel::make(const FormalParameter& phi, const SignCharacter& eps, const GroupForm& form) {
  PacketLabel l = unchecked(phi, eps, form);
  reduction_chain(l);
  return l;
}

PacketLabel PacketLabel::generic(const FormalParameter& phi, const GroupForm& form) {
  const GpPartition part = validate_for_group(as_tempered_arthur(phi), form);
  return make(phi, SignCharacter::trivial(gp_keys(part)), form);
}

std::string PacketLabel::to_string() const {
  return serialize(form_, phi_) + " | char: " + (eps_.size() ? eps_.positional() : "()");
}

std::optional<ReductionStep> reduction_step_impl(const PacketLabel& l, bool reversed) {
  const GpPartition& part = l.part();
  const GroupForm& g = l.form();
  bool discrete = part.bp.empty() && part.nsd.empty();
  for (const Summand& s : part.gp)
    if (s.m != 1) discrete = false;

  auto next_group = [&](int consumed) {
    try {
      return GroupForm::make(g.family(), g.dim() - 2 * consumed, g.form());
    } catch (const ValidationError&) {
      throw ValidationError("label " + l.to_string() + " does not fit the Witt rank of " + g.to_string());
    }
  };
  auto finish = [&](ReductionStep st, std::vector<Summand> rest, const std::map<GpKey, GpKey>& rename) {
    const FormalParameter phi = FormalParameter::make(Kind::arthur, std::move(rest));
    const GroupForm h = next_group(st.rank_consumed);
    const GpPartition np = validate_for_group(phi, h);
    st.next = PacketLabel::unchecked(phi, carry(l.eps(), gp_keys(np), rename), h);
    return st;
  };

  if (!discrete) {
    std::vector<Summand> phi0, phi1;
    for (const Summand& s : part.gp) {
      if (s.m % 2) {
        Summand t = s;
        t.m = 1;
        phi0.push_back(t);
      }
      if (s.m / 2) {
        Summand t = s;
        t.m = s.m / 2;
        phi1.push_back(t);
      }
    }
    for (Summand s : part.bp) {
      s.m /= 2;
      phi1.push_back(s);
    }
    for (const auto& [s, partner] : part.nsd) phi1.push_back(s);
    ReductionStep st;
    st.case_tag = ReductionCase::a;
    st.gl_part = FormalParameter::make(Kind::arthur, phi1);
    st.gl_sign = beta_GL(arthur_to_L(hat(st.gl_part)));
    st.rank_consumed = st.gl_part.dim();
    return finish(std::move(st), std::move(phi0), {});
  }

  std::vector<std::size_t> scan(part.gp.size());
  for (std::size_t i = 0; i < scan.size(); ++i) scan[i] = i;
  std::stable_sort(scan.begin(), scan.end(), [&](std::size_t x, std::size_t y) {
    const Summand& p = part.gp[x];
    const Summand& q = part.gp[y];
    if (p.rho.label != q.rho.label) return p.rho.label < q.rho.label;
    return p.a > q.a;
  });
  if (reversed) std::reverse(scan.begin(), scan.end());

  auto find = [&](const std::string& label, int a) -> int {
    for (std::size_t i = 0; i < part.gp.size(); ++i)
      if (part.gp[i].rho.label == label && part.gp[i].a == a) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t idx : scan) {
    const Summand& s = part.gp[idx];
    const int e = l.eps()[idx];
    const int d = s.rho.dim;
    std::vector<Summand> rest;
    for (std::size_t i = 0; i < part.gp.size(); ++i)
      if (i != idx) rest.push_back(part.gp[i]);
    ReductionStep st;
    Summand moved = s;
    moved.m = 1;
    st.gl_part = FormalParameter::make(Kind::arthur, {moved});
    if (s.a >= 3) {
      const int j = find(s.rho.label, s.a - 2);
      if (j < 0) {
        st.case_tag = ReductionCase::b1;
        st.gl_sign = parity_sign(1 + d);
        st.rank_consumed = d;
        Summand lowered = s;
        lowered.a -= 2;
        rest.push_back(lowered);
        const std::map<GpKey, GpKey> rename{{GpKey{s.rho.label, s.a, 1}, GpKey{s.rho.label, s.a - 2, 1}}};
        return finish(std::move(st), std::move(rest), rename);
      }
      if (e * l.eps()[j] == 1) {
        st.case_tag = ReductionCase::b2;
        st.gl_sign = parity_sign(static_cast<long long>(s.a - 1) * (d - 1));
        st.rank_consumed = (s.a - 1) * d;
        rest.erase(std::remove_if(rest.begin(), rest.end(),
                                  [&](const Summand& t) { return t.rho.label == s.rho.label && t.a == s.a - 2; }),
                   rest.end());
        return finish(std::move(st), std::move(rest), {});
      }
    } else if (s.a == 2 && e == 1) {
      st.case_tag = ReductionCase::c;
      st.gl_sign = parity_sign(1 + d);
      st.rank_consumed = d;
      return finish(std::move(st), std::move(rest), {});
    }
  }
  return std::nullopt;
}

std::optional<ReductionStep> reduction_step(const PacketLabel& l, ScanOrder order) {
  return reduction_step_impl(l, order == ScanOrder::reversed);
}

bool is_supercuspidal(const PacketLabel& l) {
  const GpPartition& part = l.part();
  if (!part.bp.empty() || !part.nsd.empty()) return false;
  std::map<std::pair<std::string, int>, int> value;
  for (std::size_t i = 0; i < part.gp.size(); ++i) {
    if (part.gp[i].m != 1) return false;
    value[{part.gp[i].rho.label, part.gp[i].a}] = l.eps()[i];
  }
  for (const auto& [key, e] : value) {
    const auto& [label, a] = key;
    if (a == 2 && e != -1) return false;
    if (a >= 3) {
      auto it = value.find({label, a - 2});
      if (it == value.end() || it->second != -e) return false;
    }
  }
  return true;
}

std::vector<ReductionStep> reduction_chain(const PacketLabel& l, ScanOrder order) {
  std::vector<ReductionStep> chain;
  PacketLabel cur = l;
  while (auto st = reduction_step(cur, order)) {
    if (st->rank_consumed <= 0 || st->next.phi().dim() >= cur.phi().dim())
      throw std::logic_error("reduction chain does not shrink");
    cur = st->next;
    chain.push_back(std::move(*st));
  }
  return chain;
}

int beta_rep(const PacketLabel& l, ScanOrder order) {
  const std::vector<ReductionStep> chain = reduction_chain(l, order);
  int sign = 1;
  int consumed = 0;
  for (const ReductionStep& st : chain) {
    sign *= st.gl_sign;
    consumed += st.rank_consumed;
  }
  const int r_final = l.form().witt_rank() - consumed;
  const GroupForm& last = chain.empty() ? l.form() : chain.back().next.form();
  if (r_final < 0 || r_final != last.witt_rank()) throw std::logic_error("rank bookkeeping in reduction chain");
  return sign * parity_sign(r_final);
}

SignCharacter transport_hat(const SignCharacter& eps, const GpPartition& hatted) {
  std::map<GpKey, GpKey> rename;
  for (const GpKey& k : eps.keys()) rename[k] = GpKey{k.label, k.b, k.a};
  return carry(eps, gp_keys(hatted), rename);
}

namespace {

struct HatData {
  FormalParameter psi;
  GpPartition part;
  ComponentGroupInfo info;
  SignCharacter eps;
};

HatData hat_data(const PacketLabel& l) {
  HatData h;
  h.psi = hat(l.phi());
  h.part = validate_for_group(h.psi, l.form());
  h.info = component_info(h.part, l.form());
  h.eps = transport_hat(l.eps(), h.part);
  return h;
}

}  // namespace

int dual_sign_product_qs(const PacketLabel& l) {
  const HatData h = hat_data(l);
  return eval_at_s_psi(h.eps, h.info) * beta_phi_psi(h.psi, l.form()) * beta_rep(l);
}

int dual_sign_identity(const PacketLabel& l) { return l.form().kottwitz() * dual_sign_product_qs(l); }

DualLabel az_dual_label(const PacketLabel& l) {
  const HatData h = hat_data(l);
  DualLabel d;
  d.psi = h.psi;
  d.sign = dual_sign_identity(l);
  if (d.sign != 1) throw std::logic_error("dual sign product is not +1 for " + l.to_string());
  d.mw = mw_character_closed(h.psi, l.form());
  d.eps = coset_representative(h.eps * d.mw, h.info);
  return d;
}

ArthurComparison arthur_comparison(const PacketLabel& l) {
  const HatData h = hat_data(l);
  ArthurComparison c;
  c.original_char = coset_representative(h.eps, h.info);
  c.corrected_char = az_dual_label(l).eps;
  c.eps_at_s_psi = eval_at_s_psi(h.eps, h.info);
  c.beta_phi = beta_L(arthur_to_L(l.phi()), l.form());
  c.beta_phi_psi = beta_phi_psi(h.psi, l.form());
  c.beta_pi = beta_rep(l);
  c.kottwitz = l.form().kottwitz();
  c.original_sign = c.kottwitz * c.eps_at_s_psi * c.beta_phi * c.beta_pi;
  c.corrected_sign = c.kottwitz * c.eps_at_s_psi * c.beta_phi_psi * c.beta_pi;
  c.character_agree = c.original_char == c.corrected_char;
  c.contradiction = !c.character_agree || c.original_sign != 1;
  return c;
}

}  // namespace arthur
