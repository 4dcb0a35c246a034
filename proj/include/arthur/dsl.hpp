#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arthur/group_form.hpp"
#include "arthur/param.hpp"

namespace arthur {

// Whitespace-skipping cursor shared by the parameter, element and character
// grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_ws();
  bool at_end();
  char peek();
  bool accept(char c);
  bool accept(std::string_view word);
  void expect(char c);
  void expect(std::string_view word);
  std::string ident();
  int integer();
  long long signed_integer();
  Rational signed_rational();
  std::size_t pos() const { return offset_ + pos_; }
  std::size_t raw_pos() const { return pos_; }
  void reset(std::size_t raw) { pos_ = raw; }
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

struct Parsed {
  GroupForm group;
  FormalParameter param;
};

Parsed parse(std::string_view text);
GroupForm parse_group(Cursor& c);
// Parses `summand ("+" summand)*`; kind is arthur unless some |x| >= 1/2.
FormalParameter parse_param(Cursor& c);
// label ("|" rational)? "@S(" a ")xS(" b ")"
SummandKey parse_summand_key(Cursor& c);

std::string to_string(const SummandKey& k);

}  // namespace arthur
