#include "dynmwm/graph/epsilon.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

Epsilon Epsilon::from_inverse(int inverse) {
  if (inverse < 2 || inverse % 2 != 0) {
    throw ContractViolation("epsilon must be 1/k for an even k >= 2, got 1/" +
                            std::to_string(inverse));
  }
  return Epsilon(inverse);
}

Epsilon Epsilon::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ContractViolation("cannot parse epsilon '" + std::string(text) + "'");
    }
    return value;
  };
  if (text.starts_with("1/")) return from_inverse(parse_int(text.substr(2)));
  double value = 0;
  try {
    value = std::stod(std::string(text));
  } catch (const std::exception&) {
    throw ContractViolation("cannot parse epsilon '" + std::string(text) + "'");
  }
  if (!(value > 0)) throw ContractViolation("epsilon must be positive");
  double inv = 1.0 / value;
  int rounded = static_cast<int>(std::lround(inv));
  if (std::fabs(inv - rounded) > 1e-9) {
    throw ContractViolation("epsilon " + std::string(text) + " is not a reciprocal of an integer");
  }
  return from_inverse(rounded);
}

std::string Epsilon::str() const { return "1/" + std::to_string(inverse_); }

}  // namespace dynmwm
