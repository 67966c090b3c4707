#include "graphene/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace graphene {

std::string ratToString(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

namespace {

long long parseInt(std::string_view s) {
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("ratFromString: bad integer '" + std::string(s) + "'");
  }
  return value;
}

} // namespace

Rat ratFromString(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("ratFromString: empty input");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parseInt(text));
  const long long num = parseInt(text.substr(0, slash));
  const long long den = parseInt(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("ratFromString: zero denominator");
  return Rat(num, den);
}

} // namespace graphene
