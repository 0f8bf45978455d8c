#pragma once

#include <string>

#include <boost/rational.hpp>

// Boost 1.74 under C++20: `rational == int` is rewritten onto the reversed
// Boost.Operators friend, which calls `rational == int` again and recurses.
// Exact non-template overloads win overload resolution and end the loop.
namespace boost {
#define LISTFOLD_RATIONAL_EQ(T)                                                           \
  inline constexpr bool operator==(const rational<long long>& r, T i) {                   \
    return r.denominator() == 1 && r.numerator() == static_cast<long long>(i);            \
  }
LISTFOLD_RATIONAL_EQ(int)
LISTFOLD_RATIONAL_EQ(long)
LISTFOLD_RATIONAL_EQ(long long)
#undef LISTFOLD_RATIONAL_EQ
}  // namespace boost

namespace listfold {

/// Exact rational used for every fold-parameter and audit quantity.
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace listfold
