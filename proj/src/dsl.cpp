#include "arthur/dsl.hpp"

#include <cctype>
#include <limits>

#include "arthur/errors.hpp"

namespace arthur {

void Cursor::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::at_end() {
  skip_ws();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

bool Cursor::accept(std::string_view word) {
  skip_ws();
  if (text_.substr(pos_, word.size()) != word) return false;
  pos_ += word.size();
  return true;
}

void Cursor::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

void Cursor::expect(std::string_view word) {
  if (!accept(word)) fail("expected '" + std::string(word) + "'");
}

void Cursor::fail(const std::string& msg) const { throw ParseError(msg, pos()); }

std::string Cursor::ident() {
  skip_ws();
  const std::size_t start = pos_;
  if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    fail("expected identifier");
  while (pos_ < text_.size() &&
         (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    ++pos_;
  if (pos_ < text_.size() && text_[pos_] == '~') ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

int Cursor::integer() {
  skip_ws();
  const std::size_t start = pos_;
  long long v = 0;
  while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    v = v * 10 + (text_[pos_] - '0');
    if (v > std::numeric_limits<int>::max()) {
      pos_ = start;
      fail("integer too large");
    }
    ++pos_;
  }
  if (pos_ == start) fail("expected integer");
  return static_cast<int>(v);
}

long long Cursor::signed_integer() {
  skip_ws();
  bool neg = false;
  if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
    neg = text_[pos_] == '-';
    ++pos_;
  }
  const long long v = integer();
  return neg ? -v : v;
}

Rational Cursor::signed_rational() {
  const long long p = signed_integer();
  long long q = 1;
  if (accept('/')) {
    const std::size_t at = pos();
    q = integer();
    if (q == 0) throw ParseError("zero denominator", at);
  }
  return Rational(p, q);
}

namespace {

Form parse_form(Cursor& c) {
  const std::size_t at = c.pos();
  const std::string f = c.ident();
  if (f == "split") return Form::split;
  if (f == "qs") return Form::qs;
  if (f == "inner") return Form::inner;
  throw ParseError("unknown form '" + f + "'", at);
}

SdClass parse_sd(Cursor& c) {
  const std::size_t at = c.pos();
  const std::string s = c.ident();
  if (s == "O") return SdClass::O;
  if (s == "S") return SdClass::S;
  if (s == "CO") return SdClass::CO;
  if (s == "CS") return SdClass::CS;
  if (s == "N") return SdClass::N;
  throw ParseError("unknown self-duality class '" + s + "'", at);
}

int positive(Cursor& c) {
  const std::size_t at = c.pos();
  const int v = c.integer();
  if (v <= 0) throw ParseError("nonpositive integer", at);
  return v;
}

void sl2_pair(Cursor& c, int& a, int& b) {
  c.expect('@');
  c.expect('S');
  c.expect('(');
  a = positive(c);
  c.expect(')');
  c.expect('x');
  c.expect('S');
  c.expect('(');
  b = positive(c);
  c.expect(')');
}

bool accept_dualflag(Cursor& c) {
  const std::size_t save = c.raw_pos();
  if (c.accept('+')) {
    c.skip_ws();
    const std::size_t word = c.raw_pos();
    if (c.accept("dual")) {
      const char next = c.peek();
      c.reset(word);
      c.accept("dual");
      if (next != '[' && !(std::isalnum(static_cast<unsigned char>(next)) || next == '_' || next == '~'))
        return true;
    }
  }
  c.reset(save);
  return false;
}

}  // namespace

GroupForm parse_group(Cursor& c) {
  const std::size_t at = c.pos();
  const std::string name = c.ident();
  try {
    if (name == "Sp") {
      c.expect('(');
      const int d = c.integer();
      c.expect(')');
      return GroupForm::sp(d);
    }
    if (name == "SO" || name == "U") {
      c.expect('(');
      const int d = c.integer();
      c.expect(',');
      const Form f = parse_form(c);
      c.expect(')');
      return name == "SO" ? GroupForm::so(d, f) : GroupForm::u(d, f);
    }
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), at);
  }
  throw ParseError("unknown group '" + name + "'", at);
}

FormalParameter parse_param(Cursor& c) {
  std::vector<Summand> out;
  bool arthur = true;
  do {
    const std::size_t at = c.pos();
    Summand s;
    s.rho.label = c.ident();
    c.expect('[');
    s.rho.dim = positive(c);
    c.expect(',');
    s.rho.sd = parse_sd(c);
    c.expect(']');
    if (c.accept('|')) s.x = c.signed_rational();
    sl2_pair(c, s.a, s.b);
    if (c.accept('^')) s.m = positive(c);
    if (s.rho.self_dual() && s.rho.label.back() == '~')
      throw ParseError("label " + s.rho.label + " is reserved for a non-self-dual irrep", at);
    if (abs(s.x) >= Rational(1, 2)) arthur = false;
    out.push_back(s);
    if (accept_dualflag(c)) out.push_back(s.dual());
  } while (c.accept('+'));
  try {
    return FormalParameter::make(arthur ? Kind::arthur : Kind::L, std::move(out));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), c.pos());
  }
}

SummandKey parse_summand_key(Cursor& c) {
  SummandKey k;
  k.label = c.ident();
  if (c.accept('|')) k.x = c.signed_rational();
  sl2_pair(c, k.a, k.b);
  return k;
}

Parsed parse(std::string_view text) {
  Cursor c(text);
  Parsed out;
  out.group = parse_group(c);
  c.expect(':');
  out.param = parse_param(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return out;
}

std::string to_string(const SummandKey& k) {
  std::string out = k.label;
  if (k.x != 0) out += "|" + to_string(k.x);
  return out + "@S(" + std::to_string(k.a) + ")xS(" + std::to_string(k.b) + ")";
}

}  // namespace arthur
