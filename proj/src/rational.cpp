#include "rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

namespace treegap {

std::string rat_str(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace {

std::optional<Int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = (s[0] == '-');
    pos = 1;
  }
  if (pos == s.size()) return std::nullopt;
  Int v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    v = v * 10 + (s[pos] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

std::optional<Rat> rat_parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

Rat rat_pow(const Rat& base, long exp) {
  Rat acc = 1;
  Rat b = base;
  for (long e = exp; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  return acc;
}

Rat rat_lcm(const Rat& a, const Rat& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  return Rat(lcm(rat_num(a), rat_num(b)), gcd(rat_den(a), rat_den(b)));
}

}  // namespace treegap
