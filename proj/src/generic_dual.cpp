#include "arthur/generic_dual.hpp"

#include <algorithm>
#include <map>

#include "arthur/dsl.hpp"
#include "arthur/errors.hpp"

namespace arthur {

namespace {

struct Ladder {
  Irrep rho;
  bool odd = false;           // a_i odd
  int top = 0;                // a_rho
  std::vector<int> mult;      // m_{rho,i}, i = 0..top (index 0 unused for even a)
  std::vector<int> partial;   // M_{rho,i}
};

std::map<std::string, Ladder> ladders(const FormalParameter& phi) {
  if (!phi.tempered()) throw ValidationError("generic dual needs a tempered parameter");
  std::map<std::string, Ladder> out;
  for (const Summand& s : phi.summands()) {
    if (s.x != 0 || !s.rho.self_dual()) throw ValidationError("generic dual needs a good-parity parameter");
    auto [it, fresh] = out.try_emplace(s.rho.label);
    Ladder& l = it->second;
    if (fresh) {
      l.rho = s.rho;
      l.odd = s.a % 2;
    } else if (l.odd != (s.a % 2 == 1)) {
      throw ValidationError("mixed a-parities for " + s.rho.label);
    }
    const int i = l.odd ? (s.a - 1) / 2 : s.a / 2;
    if (static_cast<int>(l.mult.size()) <= i) l.mult.resize(i + 1, 0);
    l.mult[i] += s.m;
    l.top = std::max(l.top, i);
  }
  for (auto& [label, l] : out) {
    l.mult.resize(l.top + 1, 0);
    l.partial.assign(l.top + 2, 0);
    for (int i = l.top; i >= 0; --i) l.partial[i] = l.partial[i + 1] + l.mult[i];
  }
  return out;
}

Summand shifted(const Irrep& rho, Rational x, int m) {
  Summand s;
  s.rho = rho;
  s.x = x;
  s.m = m;
  return s;
}

}  // namespace

GenericDatum make_generic_datum(std::vector<FormalParameter> gl_parts, const FormalParameter& temp,
                                const GroupForm& form) {
  int gl_dim = 0;
  for (FormalParameter& p : gl_parts) {
    if (!p.tempered()) throw ValidationError("GL parts must have b = 1");
    if (p.kind() != Kind::L) p = FormalParameter::make(Kind::L, p.summands());
    gl_dim += p.dim();
  }
  GroupForm small;
  try {
    small = GroupForm::make(form.family(), form.dim() - 2 * gl_dim, form.form());
  } catch (const ValidationError&) {
    throw ValidationError("GL parts exceed the rank of " + form.to_string());
  }
  for (const Summand& s : temp.summands())
    if (s.x != 0 || !s.rho.self_dual()) throw ValidationError("tempered part must have good parity");
  GenericDatum d{std::move(gl_parts), PacketLabel::generic(temp, small), form};
  const GpPartition tp = validate_for_group(d.temp_part.phi(), small);
  if (!tp.bp.empty() || !tp.nsd.empty()) throw ValidationError("tempered part must have good parity");
  validate_for_group(assembled_parameter(d), form);
  return d;
}

GenericDatum parse_generic_input(const std::string& text) {
  Cursor c(text);
  const GroupForm g = parse_group(c);
  c.expect(':');
  std::vector<FormalParameter> gl;
  if (c.peek() != ';') {
    do {
      FormalParameter p = parse_param(c);
      gl.push_back(FormalParameter::make(Kind::L, p.summands()));
    } while (c.accept(','));
  }
  c.expect(';');
  FormalParameter temp;
  if (!c.at_end()) temp = parse_param(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return make_generic_datum(std::move(gl), temp, g);
}

FormalParameter assembled_parameter(const GenericDatum& d) {
  FormalParameter out = FormalParameter::make(Kind::L, d.temp_part.phi().summands());
  for (const FormalParameter& t : d.gl_parts) out = out.plus(t).plus(t.dual());
  return out;
}

FormalParameter generic_dual_L(const GenericDatum& d) {
  FormalParameter out = arthur_to_L(hat(d.temp_part.phi()));
  for (const FormalParameter& t : d.gl_parts) {
    // rho|x (x) S_a becomes rho|x (x) S_1 (x) S_a, then a segment of characters
    std::vector<Summand> seg;
    for (const Summand& s : t.summands()) {
      for (int k = 0; k < s.a; ++k) {
        Summand u = s;
        u.x = s.x + Rational(s.a - 1, 2) - k;
        u.a = 1;
        u.b = 1;
        seg.push_back(u);
      }
    }
    const FormalParameter e = FormalParameter::make(Kind::L, std::move(seg));
    out = out.plus(e).plus(e.dual());
  }
  for (const Summand& s : out.summands())
    if (s.a != 1 || s.b != 1) throw std::logic_error("generic dual has a nontrivial Deligne factor");
  return out;
}

std::pair<FormalParameter, FormalParameter> phi0_phi1_split(const FormalParameter& phi_gp) {
  std::vector<Summand> phi0, phi1;
  for (const auto& [label, l] : ladders(phi_gp)) {
    if (l.odd && l.partial[0] > 0) phi0.push_back(shifted(l.rho, 0, l.partial[0]));
    for (int i = 1; i <= l.top; ++i) {
      const Rational x = l.odd ? Rational(i) : Rational(2 * i - 1, 2);
      if (l.partial[i] > 0) phi1.push_back(shifted(l.rho, x, l.partial[i]));
    }
  }
  return {FormalParameter::make(Kind::L, phi0), FormalParameter::make(Kind::L, phi1)};
}

StandardModuleShape standard_module_shape(const FormalParameter& phi_gp) {
  StandardModuleShape shape;
  std::vector<Summand> anchor;
  for (const auto& [label, l] : ladders(phi_gp)) {
    if (l.odd) {
      if (l.partial[0] > 0) anchor.push_back(shifted(l.rho, 0, l.partial[0]));
      for (int i = 0; i < l.top; ++i)
        shape.twists.push_back({l.rho, Rational(-l.top + i), l.partial[l.top - i]});
    } else {
      for (int i = 1; i <= l.top; ++i)
        shape.twists.push_back({l.rho, Rational(-2 * l.top - 1 + 2 * i, 2), l.partial[l.top + 1 - i]});
    }
  }
  shape.twists.erase(std::remove_if(shape.twists.begin(), shape.twists.end(),
                                    [](const Twist& t) { return t.mult == 0; }),
                     shape.twists.end());
  shape.anchor = FormalParameter::make(Kind::L, anchor);
  return shape;
}

std::vector<ChainRecord> generic_dual_chain(const FormalParameter& phi_gp) {
  ladders(phi_gp);
  std::vector<ChainRecord> out;
  std::vector<Summand> cur = phi_gp.summands();
  int guard = phi_gp.dim() + 1;
  while (true) {
    const Summand* best = nullptr;
    for (const Summand& s : cur) {
      if (s.a < 2) continue;
      if (!best || s.a > best->a || (s.a == best->a && s.rho.label < best->rho.label)) best = &s;
    }
    if (!best) break;
    if (--guard < 0) throw std::logic_error("generic dual chain does not terminate");
    const Summand top = *best;
    std::vector<Summand> next;
    for (const Summand& s : cur)
      if (!(s.rho.label == top.rho.label && s.a == top.a)) next.push_back(s);
    if (top.a > 2) {
      Summand lowered = top;
      lowered.a -= 2;
      next.push_back(lowered);
    }
    const FormalParameter rem = FormalParameter::make(Kind::arthur, next);
    out.push_back({{top.rho, Rational(-(top.a - 1), 2), top.m}, rem});
    cur = rem.summands();
  }
  return out;
}

bool chain_moves_established(const GroupForm& g) {
  return g.family() == Family::Sp || (g.family() == Family::SOodd && g.form() == Form::split);
}

std::vector<Twist> twist_multiset(std::vector<Twist> twists) {
  std::map<std::pair<std::string, Rational>, Twist> merged;
  for (const Twist& t : twists) {
    auto [it, fresh] = merged.try_emplace({t.rho.label, t.exponent}, t);
    if (!fresh) it->second.mult += t.mult;
  }
  std::vector<Twist> out;
  for (auto& [k, t] : merged) out.push_back(t);
  return out;
}

FormalParameter reassemble(const StandardModuleShape& shape) {
  std::vector<Summand> all = shape.anchor.summands();
  for (const Twist& t : shape.twists) {
    all.push_back(shifted(t.rho, t.exponent, t.mult));
    all.push_back(shifted(t.rho, -t.exponent, t.mult));
  }
  return FormalParameter::make(Kind::L, std::move(all));
}

std::string to_string(const Twist& t) {
  return t.rho.label + "|" + to_string(t.exponent) + (t.mult != 1 ? "^" + std::to_string(t.mult) : "");
}

}  // namespace arthur
