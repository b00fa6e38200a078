#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclespec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses a non-negative "p", "p/q" or finite decimal such as "2.5".
Rational parse_rational(const std::string& text);

/// Exact test of e >= c * n^(1 + 1/k), i.e. e^k >= c^k * n^(k+1).
bool meets_power_gate(std::uint64_t e, std::uint64_t n, const Rational& c, int k);

/// Exact test of deg >= c * n^(1/k), i.e. deg^k >= c^k * n.
bool meets_root_threshold(std::uint64_t deg, std::uint64_t n, const Rational& c, int k);

/// Floating value of c * n^(1+1/k) for diagnostics only.
double power_gate_value(std::uint64_t n, const Rational& c, int k);

}  // namespace cyclespec
