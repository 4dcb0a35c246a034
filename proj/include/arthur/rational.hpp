#pragma once

#include <boost/rational.hpp>
#include <string>

namespace boost {

// Boost's mixed int comparison recurses under C++20 rewritten operators;
// an exact non-template match takes precedence.
inline bool operator==(const rational<long long>& q, int v) {
  return q.denominator() == 1 && q.numerator() == static_cast<long long>(v);
}

}  // namespace boost

namespace arthur {

using Rational = boost::rational<long long>;

// "0", "3", "-1/2"
std::string to_string(const Rational& q);
// always "p/q", used by the JSON mirror
std::string to_pq(const Rational& q);

}  // namespace arthur
