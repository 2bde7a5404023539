#pragma once

#include <iosfwd>
#include <vector>

#include "dynmwm/omv/matrix.hpp"

namespace dynmwm {

enum class OmvOpKind { kDelete, kUpdate, kQuery };

struct OmvOp {
  OmvOpKind kind = OmvOpKind::kQuery;
  int i = 0;
  int j = 0;
  bool b = false;
  BitVector v;
};

// Lines "D i j", "U i j b", "Q <bits>"; '#' starts a comment.
std::vector<OmvOp> read_omv_stream(std::istream& is);
void write_omv_stream(std::ostream& os, const std::vector<OmvOp>& ops);

}  // namespace dynmwm
