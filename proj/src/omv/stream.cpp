#include "dynmwm/omv/stream.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

std::vector<OmvOp> read_omv_stream(std::istream& is) {
  std::vector<OmvOp> ops;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    OmvOp op;
    bool ok = false;
    if (tag == "D") {
      op.kind = OmvOpKind::kDelete;
      ok = static_cast<bool>(ls >> op.i >> op.j);
    } else if (tag == "U") {
      op.kind = OmvOpKind::kUpdate;
      int b = 0;
      ok = static_cast<bool>(ls >> op.i >> op.j >> b) && (b == 0 || b == 1);
      op.b = b == 1;
    } else if (tag == "Q") {
      op.kind = OmvOpKind::kQuery;
      std::string bits;
      ok = static_cast<bool>(ls >> bits);
      if (ok) op.v = BitVector::parse(bits);
    }
    std::string extra;
    if (!ok || (ls >> extra)) throw ContractViolation("bad OMv stream line " + std::to_string(lineno));
    ops.push_back(std::move(op));
  }
  return ops;
}

void write_omv_stream(std::ostream& os, const std::vector<OmvOp>& ops) {
  for (const auto& op : ops) {
    switch (op.kind) {
      case OmvOpKind::kDelete:
        os << "D " << op.i << ' ' << op.j << '\n';
        break;
      case OmvOpKind::kUpdate:
        os << "U " << op.i << ' ' << op.j << ' ' << (op.b ? 1 : 0) << '\n';
        break;
      case OmvOpKind::kQuery:
        os << "Q " << op.v.str() << '\n';
        break;
    }
  }
}

}  // namespace dynmwm
