#pragma once

#include <string>

#include "arthur/component_group.hpp"
#include "arthur/dsl.hpp"
#include "arthur/packets.hpp"
#include "arthur/param.hpp"
#include "arthur/random.hpp"

namespace testing_helpers {

using namespace arthur;

inline const char* kSp2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)";
inline const char* kSo3 = "SO(3,split): one[1,O]@S(2)xS(1)";

struct Input {
  GroupForm g;
  FormalParameter p;
  GpPartition part;
  ComponentGroupInfo info;
};

inline Input load(const std::string& text) {
  Parsed in = parse(text);
  Input out{in.group, in.param, validate_for_group(in.param, in.group), {}};
  out.info = component_info(out.part, out.g);
  return out;
}

inline PacketLabel label(const std::string& text, const std::string& ch = "") {
  const Input in = load(text);
  const SignCharacter eps =
      ch.empty() ? SignCharacter::trivial(in.info.e0.keys()) : parse_character(ch, in.info.e0.keys());
  return PacketLabel::make(in.p, eps, in.g);
}

inline Rng test_rng(const std::string& name, std::uint64_t i) { return Rng(20261017, salt_of(name), i); }

}  // namespace testing_helpers
