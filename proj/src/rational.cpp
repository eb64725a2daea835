#include "isoforge/rational.hpp"

#include <cctype>

#include "isoforge/error.hpp"

namespace isoforge {

std::string format_rational(const Rat &r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rational(const std::string &text) {
  auto is_int = [](const std::string &s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  // boost's integer reader rejects a leading '+'.
  auto drop_plus = [](const std::string &s) {
    return s.size() > 1 && s[0] == '+' ? s.substr(1) : s;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text))
      throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
    return Rat(Int(drop_plus(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
  Int d(drop_plus(den));
  if (d == 0)
    throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return Rat(Int(drop_plus(num)), d);
}

Rat rat_abs(const Rat &r) { return r < 0 ? Rat(-r) : r; }
Rat rat_min(const Rat &a, const Rat &b) { return a < b ? a : b; }
Rat rat_max(const Rat &a, const Rat &b) { return a < b ? b : a; }

}  // namespace isoforge
