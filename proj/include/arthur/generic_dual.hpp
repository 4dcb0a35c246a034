#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arthur/group_form.hpp"
#include "arthur/packets.hpp"
#include "arthur/param.hpp"

namespace arthur {

// A generic representation in Langlands form: GL pieces induced onto a
// generic tempered representation of a smaller group of the same family.
struct GenericDatum {
  std::vector<FormalParameter> gl_parts;
  PacketLabel temp_part;
  GroupForm form;
};

GenericDatum make_generic_datum(std::vector<FormalParameter> gl_parts, const FormalParameter& temp,
                                const GroupForm& form);
// "<group>: <gl part> , <gl part> ; <tempered part>", either side may be empty
GenericDatum parse_generic_input(const std::string& text);

FormalParameter assembled_parameter(const GenericDatum& d);
FormalParameter generic_dual_L(const GenericDatum& d);

std::pair<FormalParameter, FormalParameter> phi0_phi1_split(const FormalParameter& phi_gp);

struct Twist {
  Irrep rho;
  Rational exponent{0};
  int mult = 0;

  bool operator==(const Twist& o) const {
    return rho.label == o.rho.label && exponent == o.exponent && mult == o.mult;
  }
};

struct StandardModuleShape {
  std::vector<Twist> twists;
  FormalParameter anchor;
};

StandardModuleShape standard_module_shape(const FormalParameter& phi_gp);

struct ChainRecord {
  Twist peel;
  FormalParameter remaining;
};

std::vector<ChainRecord> generic_dual_chain(const FormalParameter& phi_gp);
// The chain moves are established for Sp and split odd orthogonal groups;
// for the other families they are taken as a working hypothesis.
bool chain_moves_established(const GroupForm& g);

// Merge twists with equal (rho, exponent) and sort; used to compare multisets.
std::vector<Twist> twist_multiset(std::vector<Twist> twists);
// anchor + twists + their duals, as one L-parameter
FormalParameter reassemble(const StandardModuleShape& shape);

std::string to_string(const Twist& t);

}  // namespace arthur
