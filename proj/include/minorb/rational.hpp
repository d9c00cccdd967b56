#ifndef MINORB_RATIONAL_HPP
#define MINORB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace minorb {

using Rational = boost::rational<std::int64_t>;

/// Arbitrary-precision non-negative integer (module dimensions overflow 64 bits for E8).
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q)
{
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const Natural& n) { return n.str(); }

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",")
{
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    if constexpr (std::is_same_v<T, std::string>)
      out += xs[i];
    else if constexpr (std::is_same_v<T, Rational>)
      out += to_string(xs[i]);
    else
      out += std::to_string(xs[i]);
  }
  return out;
}

} // namespace minorb

#endif // MINORB_RATIONAL_HPP
