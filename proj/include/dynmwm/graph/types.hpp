#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace dynmwm {

using Vertex = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a <= b ? Edge{a, b} : Edge{b, a}; }
inline Edge reversed(Edge e) { return Edge{e.v, e.u}; }

// Raised when an operation's documented precondition does not hold.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dynmwm
