#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Quotient rounded toward negative infinity; b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Int pos_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0)
    r += boost::multiprecision::abs(b);
  return r;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// Trial-division factorization of n >= 1 into (prime, multiplicity) pairs in
// ascending prime order. Intended for desk-scale integers (group orders).
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n < 1)
    throw std::invalid_argument("factorize: argument must be >= 1");
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

}  // namespace hbl
