#pragma once

#include <variant>
#include <vector>

#include "arthur/group_form.hpp"
#include "arthur/param.hpp"

namespace arthur {

inline int parity_sign(long long k) { return k % 2 ? -1 : 1; }

struct SignLedger {
  int r_G = 0;
  int r_Gstar = 0;
  int kottwitz = 1;
  GroupForm context;
};

SignLedger sign_ledger(const GroupForm& g);
int witt_rank(const GroupForm& g);
int kottwitz_sign(const GroupForm& g);

struct GLFactor {
  int k = 0;
};
using EndoscopicFactor = std::variant<GroupForm, GLFactor>;

int alpha(const GroupForm& g, const std::vector<EndoscopicFactor>& gprime);

// Parity of the corank count m_phi, read off the good-parity/bp/nsd split.
int levi_count(const GpPartition& part);
int beta_L(const FormalParameter& p, const GroupForm& g);
int beta_GL(const FormalParameter& p);
int beta_phi_psi(const FormalParameter& psi, const GroupForm& g);
int beta_phi_psi_closed_form(const FormalParameter& psi, const GroupForm& g);
int beta_oracle_discrete(const FormalParameter& phi, const GroupForm& g);

}  // namespace arthur
