#include "koszul/rational.hpp"

#include "koszul/errors.hpp"

namespace koszul {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ParseError("rational", "cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace koszul
