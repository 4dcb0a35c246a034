#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arthur/group_form.hpp"
#include "arthur/param.hpp"

namespace arthur {

// Identity of a good-parity isotypic summand (x is always 0 there).
struct GpKey {
  std::string label;
  int a = 1;
  int b = 1;

  auto operator<=>(const GpKey&) const = default;
};

std::string to_string(const GpKey& k);
std::vector<GpKey> gp_keys(const GpPartition& part);

// A function from good-parity summands to {+1, -1}. Used both for elements of
// the component group and for its characters.
class SignCharacter {
 public:
  SignCharacter() = default;
  SignCharacter(std::vector<GpKey> keys, std::vector<int> values);
  static SignCharacter trivial(std::vector<GpKey> keys);

  const std::vector<GpKey>& keys() const { return keys_; }
  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return keys_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  int at(const GpKey& k) const;
  bool is_trivial() const;

  SignCharacter operator*(const SignCharacter& o) const;
  bool operator==(const SignCharacter&) const = default;

  // "-,+" in canonical summand order
  std::string positional() const;
  // "chi@S(1)xS(1)=-1,one@S(1)xS(1)=+1"
  std::string named() const;

 private:
  std::vector<GpKey> keys_;
  std::vector<int> values_;
};

struct ComponentGroupInfo {
  int gp_count = 0;
  std::uint64_t order_C = 1;
  bool is_unitary_convention = false;
  SignCharacter e0;
  SignCharacter e_psi;
  // the determinant character, eps0(i) = (-1)^{dim rho_i a_i b_i}
  SignCharacter eps0;
  std::vector<int> det_parities;
  std::vector<int> mult;
  std::vector<int> b;
};

ComponentGroupInfo component_info(const GpPartition& part, const GroupForm& g);

int pair(const SignCharacter& eps, const SignCharacter& e);
int det(const SignCharacter& e, const ComponentGroupInfo& info);
int eval_at_s_psi(const SignCharacter& eps, const ComponentGroupInfo& info);

// Canonical member of the coset {eps, eps * eps0}; identity for unitary groups.
SignCharacter coset_representative(const SignCharacter& eps, const ComponentGroupInfo& info);
std::vector<SignCharacter> characters_for_form(const ComponentGroupInfo& info, const GroupForm& g);
bool is_character_for_form(const SignCharacter& eps, const ComponentGroupInfo& info,
                           const GroupForm& g);

std::optional<SignCharacter> restrict_to_L_packet_domain(const SignCharacter& eps);

// Accepts "chi@S(1)xS(1)=-1,one@S(1)xS(1)=+1" or positional "-,+".
SignCharacter parse_character(const std::string& text, const std::vector<GpKey>& keys);

}  // namespace arthur
