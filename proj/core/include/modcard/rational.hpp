#pragma once

#include <boost/rational.hpp>
#include <string>

namespace modcard {

using Rational = boost::rational<long long>;

long long floor_of(const Rational& r);
long long ceil_of(const Rational& r);
// Parses "p/q" or an integer; rejects anything with a decimal point.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace modcard
