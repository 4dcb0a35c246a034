#include "arthur/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "arthur/component_group.hpp"
#include "arthur/dsl.hpp"
#include "arthur/endoscopy.hpp"
#include "arthur/errors.hpp"
#include "arthur/generic_dual.hpp"
#include "arthur/packets.hpp"
#include "arthur/param.hpp"
#include "arthur/signs.hpp"
#include "arthur/suite.hpp"

namespace arthur::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json violations = json::array();
};

json to_json(const Summand& s) {
  return {{"label", s.rho.label}, {"dim", s.rho.dim}, {"sd", to_string(s.rho.sd)}, {"x", to_pq(s.x)},
          {"a", s.a}, {"b", s.b}, {"m", s.m}};
}

json to_json(const FormalParameter& p) {
  json s = json::array();
  for (const Summand& t : p.summands()) s.push_back(to_json(t));
  return {{"kind", p.kind() == Kind::arthur ? "arthur" : "L"}, {"text", to_string(p)}, {"summands", s}};
}

json to_json(const GroupForm& g) {
  return {{"text", g.to_string()}, {"dim", g.dim()}, {"form", to_string(g.form())}, {"witt_rank", g.witt_rank()}};
}

json to_json(const SignCharacter& c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back({{"summand", to_string(c.keys()[i])}, {"sign", c[i]}});
  return out;
}

json summand_list(const std::vector<Summand>& v) {
  json out = json::array();
  for (const Summand& s : v) out.push_back(to_string(s));
  return out;
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

// Text rendering walks the JSON payload.
void render_text(const json& j, std::ostream& out, int indent);

void render_value(const std::string& key, const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    render_text(v, out, indent + 2);
  } else if (v.is_array()) {
    if (v.empty()) {
      out << pad << key << ": (none)\n";
      return;
    }
    bool scalars = std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_structured(); });
    if (scalars) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      out << "\n";
      return;
    }
    out << pad << key << ":\n";
    for (const json& e : v) {
      if (e.is_object() && e.contains("summand") && e.contains("sign") && e.size() == 2) {
        out << pad << "  " << e["summand"].get<std::string>() << " = " << sign_text(e["sign"].get<int>()) << "\n";
      } else if (e.is_object() && std::none_of(e.begin(), e.end(), [](const json& f) { return f.is_structured(); })) {
        out << pad << "  -";
        bool first = true;
        for (const auto& [fk, fv] : e.items()) {
          out << (first ? " " : ", ") << fk << "=" << (fv.is_string() ? fv.get<std::string>() : fv.dump());
          first = false;
        }
        out << "\n";
      } else if (e.is_object()) {
        out << pad << "  -\n";
        render_text(e, out, indent + 4);
      } else {
        out << pad << "  - " << e.dump() << "\n";
      }
    }
  } else if (v.is_string()) {
    out << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    out << pad << key << ": " << v.dump() << "\n";
  }
}

void render_text(const json& j, std::ostream& out, int indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("text") && v.contains("summands")) {
      render_value(k, v["text"], out, indent);
    } else if (v.is_object() && v.contains("text") && v.contains("witt_rank")) {
      render_value(k, v["text"], out, indent);
    } else {
      render_value(k, v, out, indent);
    }
  }
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j = {{"schema", 1}, {"command", r.command}, {"inputs", r.inputs}, {"results", r.results},
              {"violations", r.violations}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  out << "inputs:\n";
  render_text(r.inputs, out, 2);
  out << "results:\n";
  render_text(r.results, out, 2);
  if (r.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations:\n";
    for (const json& v : r.violations) {
      out << "  [" << v["suite"].get<std::string>() << "] " << v["identity"].get<std::string>() << "\n";
      out << "    reproducer: " << v["reproducer"].get<std::string>() << "\n";
      out << "    detail: " << v["detail"].get<std::string>() << "\n";
    }
  }
}

void add_violation(Report& r, const std::string& suite, const std::string& identity, const std::string& repro,
                   const std::string& detail) {
  r.violations.push_back({{"suite", suite}, {"identity", identity}, {"reproducer", repro}, {"detail", detail}});
}

json component_json(const ComponentGroupInfo& info) {
  json dp = json::array();
  for (int d : info.det_parities) dp.push_back(d);
  return {{"gp_count", info.gp_count},
          {"order", info.order_C},
          {"unitary_convention", info.is_unitary_convention},
          {"e0", to_json(info.e0)},
          {"e_psi", to_json(info.e_psi)},
          {"eps0", to_json(info.eps0)},
          {"det_parities", dp}};
}

SignCharacter read_char(const std::string& text, const ComponentGroupInfo& info) {
  if (text.empty() || text == "trivial") return SignCharacter::trivial(info.e0.keys());
  return parse_character(text, info.e0.keys());
}

Parsed parse_checked(const std::string& text, GpPartition& part) {
  Parsed in = parse(text);
  part = validate_for_group(in.param, in.group);
  return in;
}

void cmd_classify(Report& r, const std::string& input) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}};
  r.results["kind"] = in.param.kind() == Kind::arthur ? "arthur" : "L";
  r.results["dim"] = in.param.dim();
  r.results["tempered"] = in.param.tempered();
  r.results["anti_tempered"] = in.param.anti_tempered();
  r.results["good_parity"] = summand_list(part.gp);
  r.results["bad_parity"] = summand_list(part.bp);
  json nsd = json::array();
  for (const auto& [rep, partner] : part.nsd) nsd.push_back(to_string(rep) + " / " + to_string(partner));
  r.results["non_self_dual_pairs"] = nsd;
  if (in.param.kind() == Kind::arthur) {
    const FormalParameter h = hat(in.param);
    const FormalParameter phi_psi = arthur_to_L(in.param);
    r.results["hat"] = to_json(h);
    r.results["phi_psi"] = to_json(phi_psi);
    r.results["relevant"] = is_relevant(in.param, in.group);
    r.results["phi_psi_relevant"] = is_relevant(phi_psi, in.group);
  } else {
    r.results["relevant"] = is_relevant(in.param, in.group);
  }
}

void cmd_component(Report& r, const std::string& input, const std::string& ch) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  const ComponentGroupInfo info = component_info(part, in.group);
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}};
  r.results["component_group"] = component_json(info);
  json chars = json::array();
  if (info.gp_count <= 10) {
    for (const SignCharacter& c : characters_for_form(info, in.group)) chars.push_back(c.positional());
    r.results["characters_for_form"] = chars;
  }
  if (!ch.empty()) {
    const SignCharacter eps = read_char(ch, info);
    r.inputs["char"] = to_json(eps);
    r.results["representative"] = to_json(coset_representative(eps, info));
    r.results["admissible"] = is_character_for_form(eps, info, in.group);
    r.results["eps_at_s_psi"] = eval_at_s_psi(eps, info);
  }
}

void cmd_signs(Report& r, const std::string& input) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}};
  const SignLedger led = sign_ledger(in.group);
  r.results["r_G"] = led.r_G;
  r.results["r_Gstar"] = led.r_Gstar;
  r.results["e_G"] = led.kottwitz;
  FormalParameter psi = in.param;
  std::optional<FormalParameter> phi;
  if (in.param.kind() == Kind::L) {
    phi = in.param;
    r.results["beta_phi"] = beta_L(in.param, in.group);
    return;
  }
  if (in.param.tempered()) {
    phi = in.param;
    psi = hat(in.param);
  } else if (in.param.anti_tempered()) {
    phi = hat(in.param);
  }
  r.results["psi"] = to_json(psi);
  if (phi) {
    r.results["phi"] = to_json(*phi);
    r.results["beta_phi"] = beta_L(arthur_to_L(*phi), in.group);
  }
  r.results["phi_psi"] = to_json(arthur_to_L(psi));
  const int b = beta_phi_psi(psi, in.group);
  r.results["beta_phi_psi"] = b;
  if (psi.anti_tempered()) {
    const int c = beta_phi_psi_closed_form(psi, in.group);
    r.results["beta_phi_psi_closed_form"] = c;
    if (c != b)
      add_violation(r, "signs", "closed form of beta(phi_psi) = definition", serialize(in.group, psi),
                    sign_text(c) + " vs " + sign_text(b));
  }
}

std::optional<Form> parse_form_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "split") return Form::split;
  if (s == "qs") return Form::qs;
  if (s == "inner") return Form::inner;
  throw ValidationError("unknown form '" + s + "'");
}

json factor_json(const std::optional<FactorData>& f) {
  if (!f) return nullptr;
  return {{"group", to_json(f->group)}, {"psi", to_json(f->psi)}};
}

void cmd_endoscopy(Report& r, const std::string& input, const std::string& element, const std::string& plus,
                   const std::string& minus) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  const SemisimpleElement s = parse_element(element);
  const SplitHints hints{parse_form_opt(plus), parse_form_opt(minus)};
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}, {"element", to_string(s)}};
  const EndoscopicDatum d = endoscopic_datum(in.param, in.group, s, hints);
  r.results["plus"] = factor_json(d.plus);
  r.results["minus"] = factor_json(d.minus);
  json gl = json::array();
  for (const auto& [name, p] : d.gl_factors) gl.push_back({{"eigenvalue", name}, {"psi", to_json(p)}});
  r.results["gl_factors"] = gl;
  json notes = json::array();
  for (const std::string& n : d.twist_note) notes.push_back(n);
  r.results["notes"] = notes;
  const SignCharacter x = image_in_component_group(s, part);
  r.results["image"] = to_json(x);
  if (!in.param.anti_tempered()) {
    r.results["product"] = nullptr;
    r.results["note"] = "sign product needs an anti-tempered parameter";
    return;
  }
  const int product = endoscopic_sign_product(in.param, in.group, s, hints);
  const SignCharacter mw = mw_character_closed(in.param, in.group);
  const int pairing = pair(mw, x);
  r.results["product"] = product;
  r.results["mw_character"] = to_json(mw);
  r.results["pairing"] = pairing;
  if (product != pairing)
    add_violation(r, "endoscopy", "e(G) alpha(G,G') beta(phi_psi) beta(phi_psi') = <eps_MW, image(s)>",
                  serialize(in.group, in.param) + " | element: " + to_string(s),
                  sign_text(product) + " vs " + sign_text(pairing));
}

void cmd_mw(Report& r, const std::string& input) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}};
  const XuResult xu = mw_character_xu(in.param, in.group);
  r.results["xu"] = to_json(xu.eps);
  r.results["xu_caveat"] = xu.caveat;
  if (!in.param.anti_tempered()) {
    r.results["closed"] = nullptr;
    return;
  }
  const SignCharacter closed = mw_character_closed(in.param, in.group);
  r.results["closed"] = to_json(closed);
  r.results["positional"] = closed.positional();
  if (!(closed == xu.eps))
    add_violation(r, "mw-character", "Xu's character = closed-form character", serialize(in.group, in.param),
                  xu.eps.positional() + " vs " + closed.positional());
}

PacketLabel read_label(const std::string& input, const std::string& ch, Report& r) {
  GpPartition part;
  const Parsed in = parse_checked(input, part);
  const ComponentGroupInfo info = component_info(part, in.group);
  const SignCharacter eps = read_char(ch, info);
  const PacketLabel l = PacketLabel::make(in.param, eps, in.group);
  r.inputs = {{"group", to_json(in.group)}, {"param", to_json(in.param)}, {"char", to_json(l.eps())},
              {"char_positional", l.eps().positional()}};
  return l;
}

void cmd_dual(Report& r, const std::string& input, const std::string& ch) {
  const PacketLabel l = read_label(input, ch, r);
  const DualLabel d = az_dual_label(l);
  r.results["psi"] = to_json(d.psi);
  r.results["char"] = to_json(d.eps);
  r.results["char_positional"] = d.eps.positional();
  r.results["mw_character"] = to_json(d.mw);
  r.results["sign"] = d.sign;
  r.results["beta_pi"] = beta_rep(l);
  r.results["supercuspidal"] = is_supercuspidal(l);
  json chain = json::array();
  for (const ReductionStep& st : reduction_chain(l))
    chain.push_back({{"case", to_string(st.case_tag)}, {"gl_sign", st.gl_sign}, {"rank", st.rank_consumed},
                     {"gl_part", to_string(st.gl_part)}, {"next", st.next.to_string()}});
  r.results["reduction_chain"] = chain;
}

void cmd_compare(Report& r, const std::string& input, const std::string& ch) {
  const PacketLabel l = read_label(input, ch, r);
  const ArthurComparison c = arthur_comparison(l);
  r.results["original_char"] = to_json(c.original_char);
  r.results["corrected_char"] = to_json(c.corrected_char);
  r.results["eps_at_s_psi"] = c.eps_at_s_psi;
  r.results["beta_phi"] = c.beta_phi;
  r.results["beta_phi_psi"] = c.beta_phi_psi;
  r.results["beta_pi"] = c.beta_pi;
  r.results["kottwitz"] = c.kottwitz;
  r.results["original_sign"] = c.original_sign;
  r.results["corrected_sign"] = c.corrected_sign;
  r.results["character_agree"] = c.character_agree;
  r.results["contradiction"] = c.contradiction;
}

void cmd_generic(Report& r, const std::string& input) {
  const GenericDatum d = parse_generic_input(input);
  json gl = json::array();
  for (const FormalParameter& t : d.gl_parts) gl.push_back(to_json(t));
  r.inputs = {{"group", to_json(d.form)}, {"gl_parts", gl}, {"tempered", to_json(d.temp_part.phi())}};
  r.results["phi"] = to_json(assembled_parameter(d));
  r.results["dual"] = to_json(generic_dual_L(d));
  const StandardModuleShape shape = standard_module_shape(d.temp_part.phi());
  json tw = json::array();
  for (const Twist& t : shape.twists) tw.push_back(to_string(t));
  r.results["standard_module"] = {{"twists", tw}, {"anchor", to_json(shape.anchor)}};
  json chain = json::array();
  for (const ChainRecord& c : generic_dual_chain(d.temp_part.phi()))
    chain.push_back({{"peel", to_string(c.peel)}, {"remaining", to_string(c.remaining)}});
  r.results["chain"] = chain;
  r.results["chain_moves_established"] = chain_moves_established(d.form);
}

void cmd_verify(Report& r, const std::string& which, const SuiteConfig& cfg, const std::string& only, bool serial) {
  r.inputs = {{"suite", which}};
  if (which == "examples") {
    json checks = json::array();
    for (const ExampleCheck& c : replay_examples()) {
      checks.push_back({{"example", c.example}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
      if (!c.ok())
        add_violation(r, c.example, c.name + " = " + c.expected, c.example, "got " + c.actual);
    }
    r.results["checks"] = checks;
    return;
  }
  if (which != "random") throw CLI::ValidationError("--suite", "must be examples or random");
  r.inputs["seed"] = std::to_string(cfg.seed);
  r.inputs["count"] = cfg.count;
  json summary = json::array();
  std::vector<const Suite*> chosen;
  if (only.empty()) {
    for (const Suite& s : random_suites()) chosen.push_back(&s);
  } else {
    chosen.push_back(&find_suite(only));
  }
  for (const Suite* s : chosen) {
    const SuiteResult res = run_suite(*s, cfg, serial ? Execution::serial : Execution::parallel);
    summary.push_back({{"suite", res.name},
                       {"identity", res.identity},
                       {"instances", res.instances},
                       {"violations", static_cast<int>(res.violations.size())}});
    for (const Violation& v : res.violations) add_violation(r, v.suite, v.identity, v.reproducer, v.detail);
  }
  r.results["suites"] = summary;
}

std::uint64_t seed_fallback() {
  if (const char* env = std::getenv("ARTHUR_CALC_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("ARTHUR_CALC_SEED is not an unsigned integer");
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for local Arthur parameters of classical groups", "arthur-calc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  int count = 500;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for random suites (falls back to ARTHUR_CALC_SEED)");
  app.add_option("--count", count, "Instances per random suite")->check(CLI::NonNegativeNumber);

  std::string input, ch, element, plus_form, minus_form, suite_kind = "examples", only;
  bool serial = false;
  auto* classify = app.add_subcommand("classify", "Validate and classify a parameter");
  classify->add_option("input", input, "\"<group>: <param>\"")->required();
  auto* component = app.add_subcommand("component", "Component group and characters");
  component->add_option("input", input)->required();
  component->add_option("--char", ch, "Character, named or positional");
  auto* signs = app.add_subcommand("signs", "r(G), e(G), beta(phi), beta(phi_psi)");
  signs->add_option("input", input)->required();
  auto* endo = app.add_subcommand("endoscopy", "Endoscopic datum of a semisimple element");
  endo->add_option("input", input)->required();
  endo->add_option("--element", element, "Eigenvalue data; empty means the identity");
  endo->add_option("--plus-form", plus_form, "Form hint for the +1 factor")->check(CLI::IsMember({"split", "qs", "inner"}));
  endo->add_option("--minus-form", minus_form, "Form hint for the -1 factor")->check(CLI::IsMember({"split", "qs", "inner"}));
  auto* mw = app.add_subcommand("mw-character", "Correction character by both definitions");
  mw->add_option("input", input)->required();
  auto* dual = app.add_subcommand("dual", "Dual of a tempered packet label");
  dual->add_option("input", input)->required();
  dual->add_option("--char", ch, "Character (default trivial)");
  auto* generic = app.add_subcommand("generic-dual", "L-parameter of the dual of a generic representation");
  generic->add_option("input", input, "\"<group>: <gl parts> ; <tempered part>\"")->required();
  auto* compare = app.add_subcommand("compare-arthur", "Compare the original and corrected dual labels");
  compare->add_option("input", input)->required();
  compare->add_option("--char", ch, "Character (default trivial)");
  auto* verify = app.add_subcommand("verify", "Run the regression corpus or the random suites");
  verify->add_option("--suite", suite_kind, "examples or random")->check(CLI::IsMember({"examples", "random"}));
  verify->add_option("--name", only, "Run a single random suite");
  verify->add_flag("--serial", serial, "Use the serial reference runner");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Report r;
  try {
    SuiteConfig cfg;
    cfg.seed = seed ? *seed : seed_fallback();
    cfg.count = count;
    if (classify->parsed()) r.command = "classify", cmd_classify(r, input);
    else if (component->parsed()) r.command = "component", cmd_component(r, input, ch);
    else if (signs->parsed()) r.command = "signs", cmd_signs(r, input);
    else if (endo->parsed()) r.command = "endoscopy", cmd_endoscopy(r, input, element, plus_form, minus_form);
    else if (mw->parsed()) r.command = "mw-character", cmd_mw(r, input);
    else if (dual->parsed()) r.command = "dual", cmd_dual(r, input, ch);
    else if (generic->parsed()) r.command = "generic-dual", cmd_generic(r, input);
    else if (compare->parsed()) r.command = "compare-arthur", cmd_compare(r, input, ch);
    else if (verify->parsed()) r.command = "verify", cmd_verify(r, suite_kind, cfg, only, serial);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  emit(r, format == "json", out);
  return r.violations.empty() ? 0 : 1;
}

}  // namespace arthur::cli
