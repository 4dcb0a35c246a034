#include "arthur/random.hpp"

#include <algorithm>

#include "arthur/errors.hpp"

namespace arthur {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr int kAttempts = 2000;

}  // namespace

void check_bounds(const Bounds& b) {
  if (b.max_dim <= 0 || b.max_gp <= 0 || b.max_rho_dim <= 0 || b.max_a <= 0 || b.max_b <= 0)
    throw ValidationError("all bounds must be positive");
  if (b.max_dim < 2) throw ValidationError("dimension bound admits no instance");
}

Rng::Rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index)
    : eng_(splitmix64(splitmix64(seed ^ salt) + index)) {}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

bool Rng::coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }

std::uint64_t salt_of(const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

Family random_family(Rng& rng) {
  static const std::vector<Family> all{Family::Sp, Family::SOodd, Family::SOeven, Family::U};
  return rng.pick(all);
}

// Target sign of the dual group; for U the parity of the dimension is chosen here.
struct Shape {
  Family family;
  bool unitary;
  int eps_hat;
  int dim_parity;  // required parity of the parameter dimension, -1 for none
};

Shape random_shape(Rng& rng) {
  Shape s{random_family(rng), false, 1, -1};
  switch (s.family) {
    case Family::Sp: s.eps_hat = 1; s.dim_parity = 1; break;
    case Family::SOodd: s.eps_hat = -1; s.dim_parity = 0; break;
    case Family::SOeven: s.eps_hat = 1; s.dim_parity = 0; break;
    case Family::U:
      s.unitary = true;
      s.dim_parity = rng.coin() ? 1 : 0;
      s.eps_hat = s.dim_parity ? 1 : -1;
      break;
  }
  return s;
}

Irrep random_irrep(const Bounds& b, Rng& rng, bool unitary, int sign) {
  Irrep r;
  const int idx = rng.uniform(0, 2);
  if (sign == 0) {
    r.sd = SdClass::N;
    r.dim = rng.uniform(1, b.max_rho_dim);
    r.label = "n" + std::to_string(r.dim) + "_" + std::to_string(idx);
    if (rng.coin()) r = dual_of(r);
    return r;
  }
  if (unitary) {
    r.sd = sign > 0 ? SdClass::CO : SdClass::CS;
    r.dim = rng.uniform(1, b.max_rho_dim);
    r.label = std::string(sign > 0 ? "co" : "cs") + std::to_string(r.dim) + "_" + std::to_string(idx);
  } else if (sign > 0) {
    r.sd = SdClass::O;
    r.dim = rng.uniform(1, b.max_rho_dim);
    r.label = "o" + std::to_string(r.dim) + "_" + std::to_string(idx);
  } else {
    r.sd = SdClass::S;
    const int half = std::max(1, b.max_rho_dim / 2);
    r.dim = 2 * rng.uniform(1, half);
    r.label = "s" + std::to_string(r.dim) + "_" + std::to_string(idx);
  }
  return r;
}

// a random size in [1, max] with prescribed parity, or 0 when impossible
int random_with_parity(Rng& rng, int max, int parity) {
  std::vector<int> ok;
  for (int v = 1; v <= max; ++v)
    if (v % 2 == parity) ok.push_back(v);
  return ok.empty() ? 0 : rng.pick(ok);
}

// Summands rho (x) S_k in one SL2 slot; the other slot is 1.
std::vector<Summand> random_summands(const Bounds& b, Rng& rng, const Shape& sh, bool in_a,
                                     const GenOptions& opt) {
  std::vector<Summand> out;
  const int max_len = in_a ? b.max_a : b.max_b;
  const int k = rng.uniform(1, b.max_gp);
  for (int i = 0; i < k; ++i) {
    const int rsign = rng.coin() ? 1 : -1;
    Summand s;
    s.rho = random_irrep(b, rng, sh.unitary, rsign);
    const int len = random_with_parity(rng, max_len, rsign == sh.eps_hat ? 1 : 0);
    if (len == 0) continue;
    (in_a ? s.a : s.b) = len;
    s.m = opt.discrete ? 1 : rng.uniform(1, 3);
    if (opt.discrete && std::any_of(out.begin(), out.end(), [&](const Summand& t) {
          return t.rho.label == s.rho.label && t.a == s.a && t.b == s.b;
        }))
      continue;
    out.push_back(s);
  }
  if (opt.allow_ngp && !opt.discrete) {
    const int extra = rng.uniform(0, 2);
    for (int i = 0; i < extra; ++i) {
      Summand s;
      const int pick = rng.uniform(0, 2);
      if (pick == 0) {
        // bad parity: even multiplicity
        const int rsign = rng.coin() ? 1 : -1;
        s.rho = random_irrep(b, rng, sh.unitary, rsign);
        const int len = random_with_parity(rng, max_len, rsign == sh.eps_hat ? 0 : 1);
        if (len == 0) continue;
        (in_a ? s.a : s.b) = len;
        s.m = 2 * rng.uniform(1, 2);
        out.push_back(s);
      } else {
        const bool self_dual = pick == 1;
        s.rho = random_irrep(b, rng, sh.unitary, self_dual ? (rng.coin() ? 1 : -1) : 0);
        static const std::vector<Rational> shifts{Rational(1, 4), Rational(1, 3), Rational(-1, 6), Rational(0)};
        s.x = rng.pick(shifts);
        if (self_dual && s.x == 0) s.x = Rational(1, 4);
        (in_a ? s.a : s.b) = rng.uniform(1, std::min(3, max_len));
        s.m = rng.uniform(1, 2);
        out.push_back(s);
        out.push_back(s.dual());
      }
    }
  }
  return out;
}

std::vector<Form> legal_forms(Family f, int dim) {
  std::vector<Form> out;
  for (Form form : {Form::split, Form::qs, Form::inner}) {
    try {
      GroupForm g = GroupForm::make(f, dim, form);
      if (g.form() == form) out.push_back(form);
    } catch (const ValidationError&) {
    }
  }
  return out;
}

// Group of the shape's family carrying a parameter of dimension t.
bool group_for(const Shape& sh, int t, const Bounds& b, Rng& rng, const GenOptions& opt, GroupForm& g) {
  if (t > b.max_dim || t <= 0) return false;
  if (sh.dim_parity >= 0 && t % 2 != sh.dim_parity) return false;
  int dim = t;
  if (sh.family == Family::Sp) dim = t - 1;
  if (sh.family == Family::SOodd) dim = t + 1;
  std::vector<Form> forms = legal_forms(sh.family, dim);
  if (opt.quasi_split_only || !opt.inner_forms)
    forms.erase(std::remove(forms.begin(), forms.end(), Form::inner), forms.end());
  if (forms.empty()) return false;
  g = GroupForm::make(sh.family, dim, rng.pick(forms));
  return true;
}

ArthurInstance random_one_slot(const Bounds& b, Rng& rng, const GenOptions& opt, bool in_a) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Shape sh = random_shape(rng);
    std::vector<Summand> summands = random_summands(b, rng, sh, in_a, opt);
    if (summands.empty()) continue;
    FormalParameter p = FormalParameter::make(Kind::arthur, summands);
    if (opt.discrete && std::any_of(p.summands().begin(), p.summands().end(), [](const Summand& s) { return s.m != 1; }))
      continue;
    GroupForm g;
    if (!group_for(sh, p.dim(), b, rng, opt, g)) continue;
    validate_for_group(p, g);
    return {g, p};
  }
  throw ValidationError("bounds admit no instance");
}

EigenMultiset random_eigen(Rng& rng, int m, int minus_parity, bool symplectic) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    EigenMultiset ms;
    int left = m;
    int pairs = rng.uniform(0, left / 2);
    if (symplectic) {
      // +1 and -1 multiplicities even; lambda pairs fill the rest
      int r_minus = 2 * rng.uniform(0, (left - 2 * pairs) / 2);
      const int r_plus = left - 2 * pairs - r_minus;
      if (r_plus % 2) continue;
      if (r_minus) ms[Eigenvalue{-1}] = r_minus;
      if (r_plus) ms[Eigenvalue{1}] = r_plus;
    } else {
      const int room = left - 2 * pairs;
      std::vector<int> ok;
      for (int r = 0; r <= room; ++r)
        if (r % 2 == minus_parity) ok.push_back(r);
      if (ok.empty()) continue;
      const int r_minus = rng.pick(ok);
      if (r_minus) ms[Eigenvalue{-1}] = r_minus;
      if (room - r_minus) ms[Eigenvalue{1}] = room - r_minus;
    }
    for (int i = 0; i < pairs; ++i) {
      const std::string lam = rng.coin() ? "L" : "M";
      ms[Eigenvalue{1, lam, false}] += 1;
      ms[Eigenvalue{1, lam, true}] += 1;
    }
    return ms;
  }
  EigenMultiset ms;
  ms[Eigenvalue{1}] = m;
  return ms;
}

EigenMultiset random_gl_eigen(Rng& rng, int m) {
  static const std::vector<Eigenvalue> tokens{Eigenvalue{1}, Eigenvalue{-1}, Eigenvalue{1, "L", false},
                                              Eigenvalue{1, "L", true}, Eigenvalue{1, "M", false}};
  EigenMultiset ms;
  for (int i = 0; i < m; ++i) ms[rng.pick(tokens)] += 1;
  return ms;
}

SemisimpleElement random_element_for(const GpPartition& part, const std::vector<int>& parity, Rng& rng) {
  SemisimpleElement s;
  for (std::size_t i = 0; i < part.gp.size(); ++i)
    s.eigen[key_of(part.gp[i])] = random_eigen(rng, part.gp[i].m, parity[i], false);
  for (const Summand& t : part.bp) s.eigen[key_of(t)] = random_eigen(rng, t.m, 0, true);
  for (const auto& [rep, partner] : part.nsd) {
    if (rng.coin()) s.eigen[key_of(rep)] = random_gl_eigen(rng, rep.m);
    else s.eigen[key_of(partner)] = random_gl_eigen(rng, partner.m);
  }
  return s;
}

}  // namespace

ArthurInstance random_anti_tempered(const Bounds& b, Rng& rng, const GenOptions& opt) {
  return random_one_slot(b, rng, opt, false);
}

ArthurInstance random_tempered(const Bounds& b, Rng& rng, const GenOptions& opt) {
  return random_one_slot(b, rng, opt, true);
}

PacketLabel random_tempered_label(const Bounds& b, Rng& rng, const GenOptions& opt) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const ArthurInstance inst = random_tempered(b, rng, opt);
    const GpPartition part = validate_for_group(inst.psi, inst.g);
    const ComponentGroupInfo info = component_info(part, inst.g);
    const std::vector<SignCharacter> chars = characters_for_form(info, inst.g);
    if (chars.empty()) continue;
    try {
      return PacketLabel::make(inst.psi, rng.pick(chars), inst.g);
    } catch (const ValidationError&) {
      // label does not fit the rank of this form
    }
  }
  throw ValidationError("bounds admit no instance");
}

GenericDatum random_generic_datum(const Bounds& b, Rng& rng) {
  GenOptions opt;
  opt.quasi_split_only = true;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Shape sh = random_shape(rng);
    std::vector<Summand> temp;
    if (rng.uniform(0, 4) > 0) temp = random_summands(b, rng, sh, true, opt);
    std::vector<FormalParameter> gl;
    const int parts = rng.uniform(0, 2);
    int gl_dim = 0;
    for (int i = 0; i < parts; ++i) {
      std::vector<Summand> tau;
      const int k = rng.uniform(1, 2);
      for (int j = 0; j < k; ++j) {
        Summand s;
        const int cls = rng.uniform(-1, 1);
        s.rho = random_irrep(b, rng, sh.unitary, cls);
        static const std::vector<Rational> shifts{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                                  Rational(1), Rational(3, 2), Rational(1, 4)};
        s.x = rng.pick(shifts);
        s.a = rng.uniform(1, std::min(3, b.max_a));
        tau.push_back(s);
      }
      FormalParameter t = FormalParameter::make(Kind::L, tau);
      gl_dim += t.dim();
      gl.push_back(t);
    }
    FormalParameter tp = FormalParameter::make(Kind::arthur, temp);
    GroupForm g;
    if (!group_for(sh, tp.dim() + 2 * gl_dim, b, rng, opt, g)) continue;
    try {
      return make_generic_datum(gl, tp, g);
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("bounds admit no instance");
}

ElementInstance random_element(const Bounds& b, Rng& rng, const GenOptions& opt) {
  const ArthurInstance inst = random_anti_tempered(b, rng, opt);
  const GpPartition part = validate_for_group(inst.psi, inst.g);
  std::vector<int> parity;
  for (const Summand& s : part.gp) parity.push_back(rng.uniform(0, 1) && s.m > 0 ? 1 : 0);
  ElementInstance out{inst.g, inst.psi, random_element_for(part, parity, rng), {}};
  out.s_alt = random_element_for(part, parity, rng);
  return out;
}

SplitInstance random_split(const Bounds& b, Rng& rng) {
  GenOptions opt;
  opt.allow_ngp = true;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const ArthurInstance base = random_tempered(b, rng, opt);
    std::vector<Summand> p1;
    const int k = rng.uniform(1, 2);
    for (int j = 0; j < k; ++j) {
      Summand s;
      const int cls = rng.uniform(-1, 1);
      s.rho = random_irrep(b, rng, base.g.unitary(), cls);
      static const std::vector<Rational> shifts{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                                Rational(1), Rational(1, 4)};
      s.x = rng.pick(shifts);
      s.a = rng.uniform(1, std::min(3, b.max_a));
      s.m = rng.uniform(1, 2);
      p1.push_back(s);
    }
    const FormalParameter gl = FormalParameter::make(Kind::L, p1);
    const FormalParameter p0 = FormalParameter::make(Kind::L, base.psi.summands());
    const FormalParameter p = p0.plus(gl).plus(gl.dual());
    GroupForm g;
    try {
      g = GroupForm::make(base.g.family(), base.g.dim() + 2 * gl.dim(), base.g.quasi_split().form());
    } catch (const ValidationError&) {
      continue;
    }
    if (p.dim() > b.max_dim) continue;
    return {g, p, base.g.quasi_split(), p0, gl};
  }
  throw ValidationError("bounds admit no instance");
}

Instance generate_random_instance(const SuiteConfig& cfg, Flavor flavor, std::uint64_t index) {
  check_bounds(cfg.bounds);
  Rng rng(cfg.seed, salt_of("instance") + static_cast<std::uint64_t>(flavor), index);
  switch (flavor) {
    case Flavor::anti_tempered_gp: return random_anti_tempered(cfg.bounds, rng);
    case Flavor::tempered_label: return random_tempered_label(cfg.bounds, rng);
    case Flavor::generic_datum: return random_generic_datum(cfg.bounds, rng);
    case Flavor::element: return random_element(cfg.bounds, rng);
  }
  throw ValidationError("unknown flavor");
}

std::string describe(const Instance& inst) {
  struct V {
    std::string operator()(const ArthurInstance& a) const { return serialize(a.g, a.psi); }
    std::string operator()(const PacketLabel& l) const { return l.to_string(); }
    std::string operator()(const GenericDatum& d) const {
      std::string gl;
      for (const FormalParameter& t : d.gl_parts) gl += (gl.empty() ? "" : " , ") + to_string(t);
      return d.form.to_string() + ": " + gl + " ; " + (d.temp_part.phi().empty() ? "" : to_string(d.temp_part.phi()));
    }
    std::string operator()(const ElementInstance& e) const {
      return serialize(e.g, e.psi) + " | element: " + to_string(e.s);
    }
  };
  return std::visit(V{}, inst);
}

}  // namespace arthur
