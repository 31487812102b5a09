#include "morrey/ext_scalar.hpp"

#include <charconv>
#include <limits>

namespace morrey {

double ExtScalar::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(r_.numerator()) / static_cast<double>(r_.denominator());
}

std::string ExtScalar::str() const {
  if (inf_) return "inf";
  if (r_.denominator() == 1) return std::to_string(r_.numerator());
  return std::to_string(r_.numerator()) + "/" + std::to_string(r_.denominator());
}

namespace {

long long parse_ll(std::string_view text, std::string_view whole) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ExtScalar ExtScalar::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text == "inf") return inf();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExtScalar(parse_ll(text, text));
  }
  const long long num = parse_ll(text.substr(0, slash), text);
  const long long den = parse_ll(text.substr(slash + 1), text);
  if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
  return ExtScalar(num, den);
}

}  // namespace morrey
