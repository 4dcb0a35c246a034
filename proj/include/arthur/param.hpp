#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arthur/group_form.hpp"
#include "arthur/rational.hpp"

namespace arthur {

enum class SdClass { O, S, CO, CS, N };

std::string to_string(SdClass c);
// +1 for O/CO, -1 for S/CS, 0 for N
int sd_sign(SdClass c);

struct Irrep {
  std::string label;
  int dim = 1;
  SdClass sd = SdClass::O;

  bool self_dual() const { return sd != SdClass::N; }
};

// The (conjugate-)dual irrep. Self-dual classes map to themselves; for class N
// the label toggles a trailing '~'.
Irrep dual_of(const Irrep& rho);

struct Summand {
  Irrep rho;
  Rational x{0};
  int a = 1;
  int b = 1;
  int m = 1;

  int unit_dim() const { return rho.dim * a * b; }
  int dim() const { return unit_dim() * m; }
  Summand dual() const;
  // sign of rho (x) S_a (x) S_b as a (conjugate-)self-dual representation
  int self_dual_sign() const;
};

struct SummandKey {
  std::string label;
  Rational x{0};
  int a = 1;
  int b = 1;

  bool operator==(const SummandKey& o) const {
    return label == o.label && x == o.x && a == o.a && b == o.b;
  }
  bool operator<(const SummandKey& o) const;
};

SummandKey key_of(const Summand& s);

enum class Kind { arthur, L };

// A merged, canonically ordered multiset of summands.
class FormalParameter {
 public:
  FormalParameter() = default;

  static FormalParameter make(Kind kind, std::vector<Summand> summands);

  Kind kind() const { return kind_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  int dim() const;
  bool tempered() const;
  bool anti_tempered() const;

  FormalParameter plus(const FormalParameter& other) const;
  FormalParameter dual() const;

  bool operator==(const FormalParameter& o) const;

 private:
  Kind kind_ = Kind::arthur;
  std::vector<Summand> summands_;
};

struct GpPartition {
  std::vector<Summand> gp;
  std::vector<Summand> bp;
  // (representative, partner); the representative has x >= 0
  std::vector<std::pair<Summand, Summand>> nsd;
};

GpPartition validate_for_group(const FormalParameter& p, const GroupForm& g);

FormalParameter hat(const FormalParameter& p);
FormalParameter arthur_to_L(const FormalParameter& p);
// The same expansion without the kind check; used for GL pieces whose
// exponents leave the Arthur range.
FormalParameter expand_arthur_sl2(const FormalParameter& p);
FormalParameter swap_sl2(const FormalParameter& p);

int relevance_rank(const FormalParameter& p, const GroupForm& g);
bool is_relevant(const FormalParameter& p, const GroupForm& g);

std::string to_string(const Summand& s);
std::string to_string(const FormalParameter& p);
std::string serialize(const GroupForm& g, const FormalParameter& p);

}  // namespace arthur
