#include "arthur/param.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "arthur/errors.hpp"

namespace arthur {

std::string to_string(SdClass c) {
  switch (c) {
    case SdClass::O: return "O";
    case SdClass::S: return "S";
    case SdClass::CO: return "CO";
    case SdClass::CS: return "CS";
    case SdClass::N: return "N";
  }
  return "?";
}

int sd_sign(SdClass c) {
  switch (c) {
    case SdClass::O:
    case SdClass::CO: return 1;
    case SdClass::S:
    case SdClass::CS: return -1;
    case SdClass::N: return 0;
  }
  return 0;
}

Irrep dual_of(const Irrep& rho) {
  if (rho.self_dual()) return rho;
  Irrep d = rho;
  if (!d.label.empty() && d.label.back() == '~') d.label.pop_back();
  else d.label.push_back('~');
  return d;
}

Summand Summand::dual() const {
  Summand d = *this;
  d.rho = dual_of(rho);
  d.x = -x;
  return d;
}

int Summand::self_dual_sign() const {
  const int s = sd_sign(rho.sd);
  return ((a - 1) + (b - 1)) % 2 ? -s : s;
}

bool SummandKey::operator<(const SummandKey& o) const {
  if (label != o.label) return label < o.label;
  if (x != o.x) return x < o.x;
  return std::tie(a, b) < std::tie(o.a, o.b);
}

SummandKey key_of(const Summand& s) { return {s.rho.label, s.x, s.a, s.b}; }

FormalParameter FormalParameter::make(Kind kind, std::vector<Summand> summands) {
  std::map<std::string, Irrep> irreps;
  std::map<SummandKey, Summand> merged;
  for (const Summand& s : summands) {
    if (s.rho.label.empty()) throw ValidationError("empty irrep label");
    if (s.rho.dim <= 0 || s.a <= 0 || s.b <= 0 || s.m <= 0)
      throw ValidationError("nonpositive integer in summand " + to_string(s));
    if (s.rho.self_dual() && s.rho.label.back() == '~')
      throw ValidationError("label " + s.rho.label + " is reserved for a non-self-dual irrep");
    auto [it, fresh] = irreps.emplace(s.rho.label, s.rho);
    if (!fresh && (it->second.dim != s.rho.dim || it->second.sd != s.rho.sd))
      throw ValidationError("irrep " + s.rho.label + " used with conflicting attributes");
    if (kind == Kind::arthur && abs(s.x) >= Rational(1, 2))
      throw ValidationError("|x| >= 1/2 in Arthur-type summand " + to_string(s));
    if (kind == Kind::L && s.b != 1)
      throw ValidationError("L-parameter summand with b != 1: " + to_string(s));
    auto [mit, mfresh] = merged.emplace(key_of(s), s);
    if (!mfresh) mit->second.m += s.m;
  }
  // a non-self-dual label and its dual must agree on dimension
  for (const auto& [label, rho] : irreps) {
    if (rho.self_dual()) continue;
    auto it = irreps.find(dual_of(rho).label);
    if (it != irreps.end() && (it->second.dim != rho.dim || it->second.sd != rho.sd))
      throw ValidationError("irrep " + label + " and its dual have conflicting attributes");
  }
  FormalParameter p;
  p.kind_ = kind;
  for (auto& [k, s] : merged) p.summands_.push_back(std::move(s));
  return p;
}

int FormalParameter::dim() const {
  int d = 0;
  for (const Summand& s : summands_) d += s.dim();
  return d;
}

bool FormalParameter::tempered() const {
  return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.b == 1; });
}

bool FormalParameter::anti_tempered() const {
  return std::all_of(summands_.begin(), summands_.end(), [](const Summand& s) { return s.a == 1; });
}

FormalParameter FormalParameter::plus(const FormalParameter& other) const {
  if (!empty() && !other.empty() && kind_ != other.kind_)
    throw ValidationError("cannot add parameters of different kinds");
  std::vector<Summand> all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return make(empty() ? other.kind_ : kind_, std::move(all));
}

FormalParameter FormalParameter::dual() const {
  std::vector<Summand> all;
  for (const Summand& s : summands_) all.push_back(s.dual());
  return make(kind_, std::move(all));
}

bool FormalParameter::operator==(const FormalParameter& o) const {
  if (kind_ != o.kind_ || summands_.size() != o.summands_.size()) return false;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const Summand& s = summands_[i];
    const Summand& t = o.summands_[i];
    if (!(key_of(s) == key_of(t)) || s.m != t.m || s.rho.dim != t.rho.dim || s.rho.sd != t.rho.sd)
      return false;
  }
  return true;
}

GpPartition validate_for_group(const FormalParameter& p, const GroupForm& g) {
  const bool unitary = g.unitary();
  const int eps = g.eps_hat();
  GpPartition part;
  std::map<SummandKey, const Summand*> nsd;
  for (const Summand& s : p.summands()) {
    const SdClass c = s.rho.sd;
    if (c != SdClass::N) {
      const bool conj = c == SdClass::CO || c == SdClass::CS;
      if (conj != unitary)
        throw ValidationError("self-duality class " + to_string(c) + " is illegal for " + g.to_string());
    }
    if (p.kind() == Kind::arthur && abs(s.x) >= Rational(1, 2))
      throw ValidationError("|x| >= 1/2 in Arthur-type summand " + to_string(s));
    if (s.x == 0 && s.rho.self_dual()) {
      if (s.self_dual_sign() == eps) {
        part.gp.push_back(s);
      } else {
        if (s.m % 2) throw ValidationError("odd bp multiplicity in " + to_string(s));
        part.bp.push_back(s);
      }
    } else {
      nsd.emplace(key_of(s), &s);
    }
  }
  for (const auto& [k, s] : nsd) {
    const Summand d = s->dual();
    auto it = nsd.find(key_of(d));
    if (it == nsd.end() || it->second->m != s->m)
      throw ValidationError("unpaired nsd summand " + to_string(*s));
    const bool rep = s->x > 0 || (s->x == 0 && s->rho.label < d.rho.label);
    if (rep) part.nsd.emplace_back(*s, *it->second);
  }
  if (p.dim() != g.target_dim())
    throw ValidationError("dimension mismatch: parameter has dimension " + std::to_string(p.dim()) +
                          ", " + g.to_string() + " needs " + std::to_string(g.target_dim()));
  return part;
}

FormalParameter swap_sl2(const FormalParameter& p) {
  std::vector<Summand> out;
  for (Summand s : p.summands()) {
    std::swap(s.a, s.b);
    out.push_back(s);
  }
  return FormalParameter::make(p.kind(), std::move(out));
}

FormalParameter hat(const FormalParameter& p) {
  if (p.kind() != Kind::arthur) throw ValidationError("hat needs an Arthur-type parameter");
  return swap_sl2(p);
}

FormalParameter expand_arthur_sl2(const FormalParameter& p) {
  std::vector<Summand> out;
  for (const Summand& s : p.summands()) {
    for (int k = 0; k < s.b; ++k) {
      Summand t = s;
      t.x = s.x + Rational(s.b - 1, 2) - k;
      t.b = 1;
      out.push_back(t);
    }
  }
  return FormalParameter::make(Kind::L, std::move(out));
}

FormalParameter arthur_to_L(const FormalParameter& p) {
  if (p.kind() != Kind::arthur) throw ValidationError("arthur_to_L needs an Arthur-type parameter");
  return expand_arthur_sl2(p);
}

int relevance_rank(const FormalParameter& p, const GroupForm& g) {
  const GpPartition part = validate_for_group(p, g.quasi_split());
  int s = 0;
  for (const Summand& t : part.gp) s += (t.m / 2) * t.unit_dim();
  for (const Summand& t : part.bp) s += (t.m / 2) * t.unit_dim();
  for (const auto& [t, partner] : part.nsd) s += t.m * t.unit_dim();
  return s;
}

bool is_relevant(const FormalParameter& p, const GroupForm& g) {
  return relevance_rank(p, g) <= g.witt_rank();
}

std::string to_string(const Summand& s) {
  std::string out = s.rho.label + "[" + std::to_string(s.rho.dim) + "," + to_string(s.rho.sd) + "]";
  if (s.x != 0) out += "|" + to_string(s.x);
  out += "@S(" + std::to_string(s.a) + ")xS(" + std::to_string(s.b) + ")";
  if (s.m != 1) out += "^" + std::to_string(s.m);
  return out;
}

std::string to_string(const FormalParameter& p) {
  std::string out;
  for (const Summand& s : p.summands()) {
    if (!out.empty()) out += " + ";
    out += to_string(s);
  }
  return out.empty() ? "0" : out;
}

std::string serialize(const GroupForm& g, const FormalParameter& p) {
  return g.to_string() + ": " + to_string(p);
}

}  // namespace arthur
