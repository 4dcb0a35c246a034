#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "arthur/component_group.hpp"
#include "arthur/endoscopy.hpp"
#include "arthur/generic_dual.hpp"
#include "arthur/group_form.hpp"
#include "arthur/packets.hpp"
#include "arthur/param.hpp"

namespace arthur {

struct Bounds {
  int max_dim = 30;
  int max_gp = 6;
  int max_rho_dim = 3;
  int max_a = 7;
  int max_b = 7;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int count = 500;
  Bounds bounds;
};

void check_bounds(const Bounds& b);

// Independent stream per (seed, salt, index).
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index);

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t salt_of(const std::string& name);

struct ArthurInstance {
  GroupForm g;
  FormalParameter psi;
};

struct ElementInstance {
  GroupForm g;
  FormalParameter psi;
  SemisimpleElement s;
  // a second element with the same image in the component group
  SemisimpleElement s_alt;
};

struct SplitInstance {
  GroupForm g;
  FormalParameter p;
  GroupForm g0;
  FormalParameter p0;
  FormalParameter p1;
};

struct GenOptions {
  bool allow_ngp = false;    // bp and nsd summands
  bool discrete = false;     // gp only, every multiplicity 1
  bool inner_forms = true;
  bool quasi_split_only = false;
};

ArthurInstance random_anti_tempered(const Bounds& b, Rng& rng, const GenOptions& opt = {});
ArthurInstance random_tempered(const Bounds& b, Rng& rng, const GenOptions& opt = {});
PacketLabel random_tempered_label(const Bounds& b, Rng& rng, const GenOptions& opt = {});
GenericDatum random_generic_datum(const Bounds& b, Rng& rng);
ElementInstance random_element(const Bounds& b, Rng& rng, const GenOptions& opt = {});
SplitInstance random_split(const Bounds& b, Rng& rng);

enum class Flavor { anti_tempered_gp, tempered_label, generic_datum, element };

using Instance = std::variant<ArthurInstance, PacketLabel, GenericDatum, ElementInstance>;

Instance generate_random_instance(const SuiteConfig& cfg, Flavor flavor, std::uint64_t index);
std::string describe(const Instance& inst);

}  // namespace arthur
