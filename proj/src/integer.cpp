#include "katalan/integer.hpp"

#include <cctype>

#include "katalan/errors.hpp"

namespace katalan {

Integer parse_integer(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ParseError("empty integer '" + s + "'");
  Integer out = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("bad integer '" + s + "'");
    }
    out = out * 10 + (s[i] - '0');
  }
  return neg ? Integer(-out) : out;
}

Integer binom(std::int64_t n, std::int64_t i) {
  if (i < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t t = 0; t < i; ++t) {
    num *= (n - t);
    den *= (t + 1);
  }
  return num / den;
}

}  // namespace katalan
