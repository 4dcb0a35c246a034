#include "arthur/suite.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arthur/errors.hpp"
#include "arthur/dsl.hpp"
#include "arthur/signs.hpp"

namespace arthur {

namespace {

Rng stream(const SuiteConfig& cfg, const std::string& name, std::uint64_t index) {
  return Rng(cfg.seed, salt_of(name), index);
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::optional<Failure> fail(std::string repro, std::string detail) {
  return Failure{std::move(repro), std::move(detail)};
}

std::string element_repro(const ElementInstance& e) {
  return serialize(e.g, e.psi) + " | element: " + to_string(e.s);
}

// the other legal form for an even orthogonal factor, if any
std::optional<Form> toggled(const std::optional<FactorData>& f) {
  if (!f || f->group.family() != Family::SOeven) return std::nullopt;
  const Form other = f->group.form() == Form::split ? Form::qs : Form::split;
  try {
    GroupForm::make(Family::SOeven, f->group.dim(), other);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  return other;
}

std::optional<Failure> check_endoscopic(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "endoscopic_sign", i);
  const ElementInstance e = random_element(cfg.bounds, rng);
  const GpPartition part = validate_for_group(e.psi, e.g);
  const SignCharacter mw = mw_character_closed(e.psi, e.g);
  const SignCharacter x = image_in_component_group(e.s, part);
  if (!(image_in_component_group(e.s_alt, part) == x))
    return fail(element_repro(e), "generator produced preimages of different images");
  const int rhs = pair(mw, x);
  const int lhs = endoscopic_sign_product(e.psi, e.g, e.s);
  if (lhs != rhs) return fail(element_repro(e), "product " + sign_str(lhs) + " vs pairing " + sign_str(rhs));
  const int alt = endoscopic_sign_product(e.psi, e.g, e.s_alt);
  if (alt != rhs)
    return fail(serialize(e.g, e.psi) + " | element: " + to_string(e.s_alt),
                "second preimage gives " + sign_str(alt) + " vs pairing " + sign_str(rhs));
  const EndoscopicDatum d = endoscopic_datum(e.psi, e.g, e.s);
  SplitHints hints{toggled(d.plus), toggled(d.minus)};
  if (hints.plus || hints.minus) {
    const int h = endoscopic_sign_product(e.psi, e.g, e.s, hints);
    if (h != rhs) return fail(element_repro(e), "toggled split hints give " + sign_str(h));
  }
  return std::nullopt;
}

std::optional<Failure> check_mw_match(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "mw_two_definitions", i);
  const ArthurInstance a = random_anti_tempered(cfg.bounds, rng);
  const GpPartition part = validate_for_group(a.psi, a.g);
  const SignCharacter closed = mw_character_closed(a.psi, a.g);
  const auto [fwd, rev] = xu_orders_antitempered(part);
  for (const XuOrder* o : {&fwd, &rev}) {
    const XuResult r = mw_character_xu(a.psi, a.g, *o);
    if (!(r.eps == closed))
      return fail(serialize(a.g, a.psi), "xu " + r.eps.positional() + " vs closed " + closed.positional());
  }
  return std::nullopt;
}

std::optional<Failure> check_mw_membership(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "mw_two_definitions", i);
  const ArthurInstance a = random_anti_tempered(cfg.bounds, rng);
  const GpPartition part = validate_for_group(a.psi, a.g);
  const ComponentGroupInfo info = component_info(part, a.g);
  const SignCharacter mw = mw_character_closed(a.psi, a.g);
  const std::string repro = serialize(a.g, a.psi);
  if (pair(mw, info.e0) != 1) return fail(repro, "nontrivial at e0: " + mw.positional());
  if (eval_at_s_psi(mw, info) != 1) return fail(repro, "nontrivial at s_psi: " + mw.positional());
  for (std::size_t k = 0; k < mw.size(); ++k)
    if (mw.keys()[k].b % 2 == 0 && mw[k] != 1) return fail(repro, "-1 on even b summand " + to_string(mw.keys()[k]));
  return std::nullopt;
}

GenOptions label_options() {
  GenOptions o;
  o.allow_ngp = true;
  return o;
}

std::optional<Failure> check_dual_sign(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "dual_sign_identity", i);
  const PacketLabel l = random_tempered_label(cfg.bounds, rng, label_options());
  const int v = dual_sign_identity(l);
  if (v != 1) return fail(l.to_string(), "identity gives " + sign_str(v));
  const int b0 = beta_rep(l, ScanOrder::canonical), b1 = beta_rep(l, ScanOrder::reversed);
  if (b0 != b1) return fail(l.to_string(), "beta of the label depends on the scan order");
  return std::nullopt;
}

std::optional<Failure> check_dual_sign_literal(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "dual_sign_identity", i);
  const PacketLabel l = random_tempered_label(cfg.bounds, rng, label_options());
  const int v = dual_sign_product_qs(l);
  if (v != 1) return fail(l.to_string(), "product gives " + sign_str(v) + " on " + l.form().to_string() +
                                        ", e(G) = " + sign_str(l.form().kottwitz()));
  return std::nullopt;
}

std::optional<Failure> check_beta_closed(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "beta_closed_form", i);
  const ArthurInstance a = random_anti_tempered(cfg.bounds, rng, label_options());
  const int lhs = beta_phi_psi_closed_form(a.psi, a.g), rhs = beta_phi_psi(a.psi, a.g);
  if (lhs != rhs) return fail(serialize(a.g, a.psi), "closed form " + sign_str(lhs) + " vs " + sign_str(rhs));
  return std::nullopt;
}

std::optional<Failure> check_beta_discrete(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "beta_discrete_oracle", i);
  GenOptions o;
  o.discrete = true;
  const ArthurInstance a = random_tempered(cfg.bounds, rng, o);
  const int lhs = beta_oracle_discrete(a.psi, a.g), rhs = beta_phi_psi(hat(a.psi), a.g);
  if (lhs != rhs) return fail(serialize(a.g, a.psi), "oracle " + sign_str(lhs) + " vs " + sign_str(rhs));
  return std::nullopt;
}

std::optional<Failure> check_supercuspidal(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "supercuspidal_criterion", i);
  GenOptions o = label_options();
  o.discrete = rng.coin(0.6);
  const PacketLabel l = random_tempered_label(cfg.bounds, rng, o);
  const bool crit = is_supercuspidal(l);
  const bool empty = !reduction_step(l).has_value();
  if (crit != empty)
    return fail(l.to_string(), std::string("criterion says ") + (crit ? "supercuspidal" : "not supercuspidal") +
                                   " but the reduction scan " + (empty ? "is empty" : "finds a step"));
  return std::nullopt;
}

std::optional<Failure> check_multiplicativity(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "beta_multiplicativity", i);
  const SplitInstance s = random_split(cfg.bounds, rng);
  const int lhs = beta_L(s.p, s.g);
  const int rhs = beta_L(s.p0, s.g0) * beta_GL(s.p1);
  if (lhs != rhs)
    return fail(serialize(s.g, s.p), "split off " + to_string(s.p1) + ": " + sign_str(lhs) + " vs " + sign_str(rhs));
  return std::nullopt;
}

std::optional<Failure> check_generic_dual(const SuiteConfig& cfg, std::uint64_t i) {
  Rng rng = stream(cfg, "generic_dual", i);
  const GenericDatum d = random_generic_datum(cfg.bounds, rng);
  const std::string repro = describe(Instance{d});
  FormalParameter out;
  try {
    out = generic_dual_L(d);
  } catch (const std::logic_error& e) {
    return fail(repro, e.what());
  }
  if (out.dim() != assembled_parameter(d).dim()) return fail(repro, "dual changes the dimension");
  for (const Summand& s : out.summands())
    if (s.a != 1 || s.b != 1) return fail(repro, "nontrivial Deligne factor in " + to_string(out));

  GenOptions o;
  o.quasi_split_only = true;
  const ArthurInstance t = random_tempered(cfg.bounds, rng, o);
  const std::string trepro = serialize(t.g, t.psi);
  const FormalParameter target = arthur_to_L(hat(t.psi));
  const auto [phi0, phi1] = phi0_phi1_split(t.psi);
  if (!(phi0.plus(phi1).plus(phi1.dual()) == target)) return fail(trepro, "phi0 + phi1 + dual differs from the dual");
  const StandardModuleShape shape = standard_module_shape(t.psi);
  if (!(reassemble(shape) == target)) return fail(trepro, "standard module does not reassemble to the dual");
  std::vector<Twist> peeled;
  for (const ChainRecord& r : generic_dual_chain(t.psi)) peeled.push_back(r.peel);
  if (!(twist_multiset(peeled) == twist_multiset(shape.twists)))
    return fail(trepro, "chain twists differ from the standard module twists");
  return std::nullopt;
}

void run_one(const Suite& suite, const SuiteConfig& cfg, std::uint64_t i, std::vector<Violation>& out) {
  std::optional<Failure> f;
  try {
    f = suite.check(cfg, i);
  } catch (const std::exception& e) {
    f = Failure{"instance " + std::to_string(i) + " of seed " + std::to_string(cfg.seed),
                std::string("exception: ") + e.what()};
  }
  if (f) out.push_back({suite.name, suite.identity, f->reproducer, f->detail});
}

void finish(SuiteResult& r) {
  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
    return a.reproducer != b.reproducer ? a.reproducer < b.reproducer : a.detail < b.detail;
  });
}

}  // namespace

const std::vector<Suite>& random_suites() {
  static const std::vector<Suite> suites{
      {"endoscopic_sign", "e(G) alpha(G,G') beta(phi_psi) beta(phi_psi') = <eps_MW, image(s)>", check_endoscopic},
      {"mw_two_definitions", "Xu's character = closed-form character, two admissible orders", check_mw_match},
      {"mw_membership", "eps_MW(e0) = eps_MW(s_psi) = +1 and +1 on even b", check_mw_membership},
      {"dual_sign_identity", "e(G) eps(s_psi) beta(phi_psi) beta(pi) = +1", check_dual_sign},
      {"beta_closed_form", "closed form of beta(phi_psi) = definition", check_beta_closed},
      {"beta_discrete_oracle", "segment oracle = beta(phi_psi) of the hatted discrete parameter", check_beta_discrete},
      {"supercuspidal_criterion", "supercuspidal criterion <=> no reduction step", check_supercuspidal},
      {"beta_multiplicativity", "beta(phi) = beta(phi0) beta_GL(phi1)", check_multiplicativity},
      {"generic_dual", "generic dual is an L-parameter; phi0/phi1 and chain agree with the standard module",
       check_generic_dual},
  };
  return suites;
}

const std::vector<Suite>& literal_suites() {
  static const std::vector<Suite> suites{
      {"dual_sign_literal", "eps(s_psi) beta(phi_psi) beta(pi) = +1", check_dual_sign_literal},
  };
  return suites;
}

const Suite& find_suite(const std::string& name) {
  for (const auto* list : {&random_suites(), &literal_suites()})
    for (const Suite& s : *list)
      if (s.name == name) return s;
  throw ValidationError("unknown suite '" + name + "'");
}

SuiteResult run_suite_serial(const Suite& suite, const SuiteConfig& cfg) {
  check_bounds(cfg.bounds);
  SuiteResult r{suite.name, suite.identity, std::max(cfg.count, 0), {}};
  for (int i = 0; i < cfg.count; ++i) run_one(suite, cfg, static_cast<std::uint64_t>(i), r.violations);
  finish(r);
  return r;
}

SuiteResult run_suite_parallel(const Suite& suite, const SuiteConfig& cfg) {
  check_bounds(cfg.bounds);
  SuiteResult r{suite.name, suite.identity, std::max(cfg.count, 0), {}};
#pragma omp parallel
  {
    std::vector<Violation> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int i = 0; i < cfg.count; ++i) run_one(suite, cfg, static_cast<std::uint64_t>(i), local);
#pragma omp critical
    r.violations.insert(r.violations.end(), local.begin(), local.end());
  }
  finish(r);
  return r;
}

SuiteResult run_suite(const Suite& suite, const SuiteConfig& cfg, Execution ex) {
  return ex == Execution::serial ? run_suite_serial(suite, cfg) : run_suite_parallel(suite, cfg);
}

}  // namespace arthur

namespace arthur {

namespace {

std::string sgn(int s) { return s > 0 ? "+1" : "-1"; }
std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<ExampleCheck> replay_examples() {
  std::vector<ExampleCheck> out;
  auto add = [&](const std::string& ex, const std::string& name, const std::string& expected, std::string actual) {
    out.push_back({ex, name, expected, std::move(actual)});
  };

  {
    const std::string ex = "sp2_two_characters";
    const Parsed in = parse("Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)");
    const GpPartition part = validate_for_group(in.param, in.group);
    const ComponentGroupInfo info = component_info(part, in.group);
    const PacketLabel plus = PacketLabel::make(in.param, SignCharacter::trivial(info.e0.keys()), in.group);
    add(ex, "gp_count", "2", std::to_string(info.gp_count));
    add(ex, "characters", "2", std::to_string(characters_for_form(info, in.group).size()));
    add(ex, "beta_phi", "+1", sgn(beta_L(arthur_to_L(in.param), in.group)));
    add(ex, "beta_pi_plus", "+1", sgn(beta_rep(plus)));
    add(ex, "e_psi_trivial", "true", yes_no(info.e_psi.is_trivial()));
    const SignCharacter mw = mw_character_closed(in.param, in.group);
    add(ex, "mw_character", "-,+", mw.positional());
    add(ex, "mw_xu", "-,+", mw_character_xu(in.param, in.group).eps.positional());
    const ArthurComparison c = arthur_comparison(plus);
    add(ex, "compare_contradiction", "true", yes_no(c.contradiction));
    add(ex, "compare_original_char", "+,+", c.original_char.positional());
    add(ex, "dual_char", "-,+", az_dual_label(plus).eps.positional());
    add(ex, "dual_sign", "+1", sgn(dual_sign_identity(plus)));
  }
  {
    const std::string ex = "so3_generic";
    const Parsed in = parse("SO(3,split): one[1,O]@S(2)xS(1)");
    const GpPartition part = validate_for_group(in.param, in.group);
    const ComponentGroupInfo info = component_info(part, in.group);
    const std::vector<SignCharacter> chars = characters_for_form(info, in.group);
    add(ex, "characters", "1", std::to_string(chars.size()));
    const PacketLabel gen = PacketLabel::make(in.param, chars.front(), in.group);
    const FormalParameter psi = hat(in.param);
    add(ex, "psi", "one[1,O]@S(1)xS(2)", to_string(psi));
    add(ex, "beta_phi", "-1", sgn(beta_L(in.param, in.group)));
    add(ex, "beta_phi_psi", "+1", sgn(beta_phi_psi(psi, in.group)));
    add(ex, "beta_phi_psi_closed_form", "+1", sgn(beta_phi_psi_closed_form(psi, in.group)));
    add(ex, "mw_trivial", "true", yes_no(mw_character_closed(psi, in.group).is_trivial()));
    add(ex, "supercuspidal", "false", yes_no(is_supercuspidal(gen)));
    const ArthurComparison c = arthur_comparison(gen);
    add(ex, "compare_contradiction", "true", yes_no(c.contradiction));
    add(ex, "compare_original_sign", "-1", sgn(c.original_sign));
    add(ex, "eps_at_s_psi", "+1", sgn(c.eps_at_s_psi));
    add(ex, "beta_pi", "+1", sgn(c.beta_pi));
    add(ex, "corrected_sign", "+1", sgn(c.corrected_sign));
    const DualLabel d = az_dual_label(gen);
    add(ex, "dual_psi", "one[1,O]@S(1)xS(2)", to_string(d.psi));
    add(ex, "dual_char_trivial", "true", yes_no(d.eps.is_trivial()));
    const GenericDatum gd = parse_generic_input("SO(3,split): ; one[1,O]@S(2)xS(1)");
    add(ex, "generic_dual", "one[1,O]|-1/2@S(1)xS(1) + one[1,O]|1/2@S(1)xS(1)", to_string(generic_dual_L(gd)));
  }
  {
    const std::string ex = "so7_relevance";
    const Parsed in = parse("SO(7,inner): one[1,O]@S(1)xS(2)^3");
    add(ex, "psi_relevant", "true", yes_no(is_relevant(in.param, in.group)));
    add(ex, "phi_psi_relevant", "false", yes_no(is_relevant(arthur_to_L(in.param), in.group)));
  }
  return out;
}

}  // namespace arthur
