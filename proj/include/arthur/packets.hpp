#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arthur/component_group.hpp"
#include "arthur/group_form.hpp"
#include "arthur/param.hpp"

namespace arthur {

struct ReductionStep;

// A tempered packet member pi(phi, eps) carried as its label.
class PacketLabel {
 public:
  // eps is replaced by its coset representative; throws when eps is not a
  // character for the form or when the label does not fit the form's rank.
  static PacketLabel make(const FormalParameter& phi, const SignCharacter& eps, const GroupForm& form);
  static PacketLabel generic(const FormalParameter& phi, const GroupForm& form);

  const FormalParameter& phi() const { return phi_; }
  const SignCharacter& eps() const { return eps_; }
  const GroupForm& form() const { return form_; }
  const GpPartition& part() const { return part_; }
  const ComponentGroupInfo& info() const { return info_; }

  std::string to_string() const;

 private:
  static PacketLabel unchecked(const FormalParameter& phi, const SignCharacter& eps, const GroupForm& form);

  FormalParameter phi_;
  SignCharacter eps_;
  GroupForm form_;
  GpPartition part_;
  ComponentGroupInfo info_;

  friend std::optional<ReductionStep> reduction_step_impl(const PacketLabel&, bool);
};

enum class ReductionCase { a, b1, b2, c };
std::string to_string(ReductionCase c);

struct ReductionStep {
  ReductionCase case_tag = ReductionCase::a;
  int gl_sign = 1;
  int rank_consumed = 0;
  PacketLabel next;
  // the inducing GL data: phi_1 for case (a), the moved summand otherwise
  FormalParameter gl_part;
};

enum class ScanOrder { canonical, reversed };

bool is_supercuspidal(const PacketLabel& l);
std::optional<ReductionStep> reduction_step(const PacketLabel& l, ScanOrder order = ScanOrder::canonical);
std::vector<ReductionStep> reduction_chain(const PacketLabel& l, ScanOrder order = ScanOrder::canonical);
int beta_rep(const PacketLabel& l, ScanOrder order = ScanOrder::canonical);

// Character of the hatted parameter under the identification a <-> b.
SignCharacter transport_hat(const SignCharacter& eps, const GpPartition& hatted);

// eps(s_psi) * beta(phi_psi) * beta(pi), with beta(phi_psi) on the quasi-split form
int dual_sign_product_qs(const PacketLabel& l);
// the same product times the Kottwitz sign of the form; +1 for every label
int dual_sign_identity(const PacketLabel& l);

struct DualLabel {
  FormalParameter psi;
  SignCharacter eps;
  SignCharacter mw;
  int sign = 1;
};

DualLabel az_dual_label(const PacketLabel& l);

struct ArthurComparison {
  SignCharacter original_char;
  SignCharacter corrected_char;
  int eps_at_s_psi = 1;
  int beta_phi = 1;
  int beta_phi_psi = 1;
  int beta_pi = 1;
  int kottwitz = 1;
  int original_sign = 1;
  int corrected_sign = 1;
  bool character_agree = true;
  bool contradiction = false;
};

ArthurComparison arthur_comparison(const PacketLabel& l);

}  // namespace arthur
