#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arthur/component_group.hpp"
#include "arthur/group_form.hpp"
#include "arthur/param.hpp"

namespace arthur {

// +1, -1, or an abstract label lambda / its formal inverse.
struct Eigenvalue {
  int sign = 1;
  std::string lambda;
  bool inverse = false;

  bool is_sign() const { return lambda.empty(); }
  Eigenvalue inv() const;
  std::string to_string() const;
  auto operator<=>(const Eigenvalue&) const = default;
};

using EigenMultiset = std::map<Eigenvalue, int>;

struct SemisimpleElement {
  std::map<SummandKey, EigenMultiset> eigen;
};

// "chi@S(1)xS(1): +1^1 -1^1; one@S(1)xS(1): +1^1; tau@S(1)xS(2): L^1 Linv^1"
SemisimpleElement parse_element(const std::string& text);
std::string to_string(const SemisimpleElement& s);

// Eigenvalue data aligned with a GpPartition; absent summands act by +1.
struct ElementData {
  std::vector<EigenMultiset> gp;
  std::vector<EigenMultiset> bp;
  std::vector<EigenMultiset> nsd;  // on the representative
};

ElementData resolve_element(const SemisimpleElement& s, const GpPartition& part);

struct FactorData {
  GroupForm group;
  FormalParameter psi;
};

struct SplitHints {
  std::optional<Form> plus;
  std::optional<Form> minus;
};

struct EndoscopicDatum {
  std::optional<FactorData> plus;
  std::optional<FactorData> minus;
  std::vector<std::pair<std::string, FormalParameter>> gl_factors;
  std::vector<std::string> twist_note;
};

EndoscopicDatum endoscopic_datum(const FormalParameter& psi, const GroupForm& g,
                                 const SemisimpleElement& s, const SplitHints& hints = {});

SignCharacter image_in_component_group(const SemisimpleElement& s, const GpPartition& part);

SignCharacter mw_character_closed(const FormalParameter& psi, const GroupForm& g);

// One position in an expanded rho-block: (index into GpPartition::gp, copy).
using ExpandedIndex = std::pair<int, int>;
using XuOrder = std::map<std::string, std::vector<ExpandedIndex>>;

struct XuResult {
  SignCharacter eps;
  // set when psi is not anti-tempered: no closed form anchors the value
  bool caveat = false;
};

XuResult mw_character_xu(const FormalParameter& psi, const GroupForm& g,
                         const std::optional<XuOrder>& order = std::nullopt);
// Two admissible orders for an anti-tempered psi: b non-decreasing, ties kept
// in forward and in reversed position.
std::pair<XuOrder, XuOrder> xu_orders_antitempered(const GpPartition& part);

int endoscopic_sign_product(const FormalParameter& psi, const GroupForm& g, const SemisimpleElement& s,
                    const SplitHints& hints = {});

}  // namespace arthur
