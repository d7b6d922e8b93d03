#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb {

// Arbitrary-precision natural used for tape and machine numbers.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

// Cantor pairing (x+y)(x+y+1)/2 + y and its inverse.
Natural cantor_pair(const Natural& x, const Natural& y);
std::pair<Natural, Natural> cantor_unpair(const Natural& z);

}  // namespace cwb
