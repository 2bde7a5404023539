#pragma once

#include <string>
#include <string_view>

namespace dynmwm {

// Approximation parameter restricted to reciprocals of even integers, so that
// 1/(2*eps) rounds and the eps*W dual grid are exact in scaled integer units.
class Epsilon {
 public:
  static Epsilon from_inverse(int inverse);
  // Accepts "1/8", "8" (read as 1/8 only if prefixed by "1/"), or a decimal like "0.125".
  static Epsilon parse(std::string_view text);

  int inverse() const { return inverse_; }
  double value() const { return 1.0 / inverse_; }
  int rounds() const { return inverse_ / 2; }
  std::string str() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  explicit Epsilon(int inverse) : inverse_(inverse) {}
  int inverse_;
};

}  // namespace dynmwm
