#pragma once

#include <gmpxx.h>

#include <string>

namespace koszul {

using Q = mpq_class;
using Z = mpz_class;

// "n" for integers, "n/d" otherwise
std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

inline bool is_integer(const Q& q) { return q.get_den() == 1; }

}  // namespace koszul
