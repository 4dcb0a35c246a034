#include "arthur/component_group.hpp"

#include <algorithm>

#include "arthur/dsl.hpp"
#include "arthur/errors.hpp"

namespace arthur {

std::string to_string(const GpKey& k) {
  return k.label + "@S(" + std::to_string(k.a) + ")xS(" + std::to_string(k.b) + ")";
}

std::vector<GpKey> gp_keys(const GpPartition& part) {
  std::vector<GpKey> keys;
  for (const Summand& s : part.gp) keys.push_back({s.rho.label, s.a, s.b});
  return keys;
}

SignCharacter::SignCharacter(std::vector<GpKey> keys, std::vector<int> values)
    : keys_(std::move(keys)), values_(std::move(values)) {
  if (keys_.size() != values_.size()) throw ValidationError("sign character size mismatch");
  for (int v : values_)
    if (v != 1 && v != -1) throw ValidationError("sign character value must be +1 or -1");
}

SignCharacter SignCharacter::trivial(std::vector<GpKey> keys) {
  std::vector<int> ones(keys.size(), 1);
  return SignCharacter(std::move(keys), std::move(ones));
}

int SignCharacter::at(const GpKey& k) const {
  auto it = std::find(keys_.begin(), keys_.end(), k);
  if (it == keys_.end()) throw ValidationError("summand " + to_string(k) + " not in domain");
  return values_[it - keys_.begin()];
}

bool SignCharacter::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v == 1; });
}

SignCharacter SignCharacter::operator*(const SignCharacter& o) const {
  if (keys_ != o.keys_) throw ValidationError("domain mismatch");
  std::vector<int> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return SignCharacter(keys_, std::move(v));
}

std::string SignCharacter::positional() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += values_[i] > 0 ? "+" : "-";
  }
  return out;
}

std::string SignCharacter::named() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += to_string(keys_[i]) + (values_[i] > 0 ? "=+1" : "=-1");
  }
  return out;
}

ComponentGroupInfo component_info(const GpPartition& part, const GroupForm& g) {
  ComponentGroupInfo info;
  const std::vector<GpKey> keys = gp_keys(part);
  info.gp_count = static_cast<int>(keys.size());
  info.order_C = std::uint64_t{1} << info.gp_count;
  info.is_unitary_convention = g.unitary();
  std::vector<int> e0, epsi, eps0;
  for (const Summand& s : part.gp) {
    info.mult.push_back(s.m);
    info.b.push_back(s.b);
    info.det_parities.push_back(s.unit_dim() % 2);
    e0.push_back(s.m % 2 ? -1 : 1);
    epsi.push_back(((s.b - 1) * s.m) % 2 ? -1 : 1);
    eps0.push_back(s.unit_dim() % 2 ? -1 : 1);
  }
  info.e0 = SignCharacter(keys, e0);
  info.e_psi = SignCharacter(keys, epsi);
  info.eps0 = SignCharacter(keys, eps0);
  return info;
}

int pair(const SignCharacter& eps, const SignCharacter& e) {
  if (eps.keys() != e.keys()) throw ValidationError("domain mismatch");
  int out = 1;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] == -1 && e[i] == -1) out = -out;
  return out;
}

int det(const SignCharacter& e, const ComponentGroupInfo& info) {
  int out = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] == -1 && info.det_parities[i]) out = -out;
  return out;
}

int eval_at_s_psi(const SignCharacter& eps, const ComponentGroupInfo& info) {
  if (eps.keys() != info.e_psi.keys()) throw ValidationError("domain mismatch");
  int direct = 1;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] == -1 && (info.mult[i] * (info.b[i] - 1)) % 2) direct = -direct;
  const int paired = pair(eps, info.e_psi);
  if (direct != paired) throw std::logic_error("eval_at_s_psi: routes disagree");
  return direct;
}

namespace {

// +1 sorts before -1
bool lex_less(const SignCharacter& x, const SignCharacter& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

}  // namespace

SignCharacter coset_representative(const SignCharacter& eps, const ComponentGroupInfo& info) {
  if (info.is_unitary_convention || info.eps0.is_trivial()) return eps;
  const SignCharacter other = eps * info.eps0;
  if (pair(info.eps0, info.e0) == -1) return pair(eps, info.e0) == 1 ? eps : other;
  return lex_less(other, eps) ? other : eps;
}

std::vector<SignCharacter> characters_for_form(const ComponentGroupInfo& info, const GroupForm& g) {
  if (info.gp_count > 24) throw ValidationError("too many good-parity summands to enumerate");
  const std::vector<GpKey>& keys = info.e0.keys();
  const int chi = g.chi_v();
  std::vector<SignCharacter> out;
  for (std::uint64_t mask = 0; mask < info.order_C; ++mask) {
    std::vector<int> v(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    SignCharacter eps(keys, std::move(v));
    if (!info.is_unitary_convention && !(coset_representative(eps, info) == eps)) continue;
    if (pair(eps, info.e0) != chi) continue;
    out.push_back(std::move(eps));
  }
  return out;
}

bool is_character_for_form(const SignCharacter& eps, const ComponentGroupInfo& info,
                           const GroupForm& g) {
  if (eps.keys() != info.e0.keys()) return false;
  const SignCharacter rep = coset_representative(eps, info);
  return rep == eps && pair(eps, info.e0) == g.chi_v();
}

std::optional<SignCharacter> restrict_to_L_packet_domain(const SignCharacter& eps) {
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps.keys()[i].a != 1) throw ValidationError("restriction needs an anti-tempered parameter");
    if (eps.keys()[i].b % 2 == 0 && eps[i] != 1) return std::nullopt;
  }
  return eps;
}

SignCharacter parse_character(const std::string& text, const std::vector<GpKey>& keys) {
  Cursor c(text);
  std::vector<int> values(keys.size(), 0);
  if (c.peek() == '+' || c.peek() == '-') {
    std::size_t i = 0;
    do {
      const std::size_t at = c.pos();
      int v = 0;
      if (c.accept('+')) v = 1;
      else if (c.accept('-')) v = -1;
      else c.fail("expected '+' or '-'");
      c.accept('1');
      if (i >= keys.size()) throw ParseError("too many signs", at);
      values[i++] = v;
    } while (c.accept(','));
    if (i != keys.size()) c.fail("expected " + std::to_string(keys.size()) + " signs");
  } else if (!c.at_end()) {
    do {
      const std::size_t at = c.pos();
      const SummandKey k = parse_summand_key(c);
      if (k.x != 0) throw ParseError("good-parity summands have x = 0", at);
      c.expect('=');
      const long long v = c.signed_integer();
      if (v != 1 && v != -1) throw ParseError("sign must be +1 or -1", at);
      auto it = std::find(keys.begin(), keys.end(), GpKey{k.label, k.a, k.b});
      if (it == keys.end()) throw ParseError("not a good-parity summand: " + to_string(k), at);
      values[it - keys.begin()] = static_cast<int>(v);
    } while (c.accept(','));
    for (int& v : values)
      if (v == 0) v = 1;
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  return SignCharacter(keys, std::move(values));
}

}  // namespace arthur
