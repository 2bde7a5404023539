#include "dynmwm/dynamic/stream.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace dynmwm {

std::vector<UpdateEvent> read_update_stream(std::istream& is) {
  std::vector<UpdateEvent> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    UpdateEvent ev{};
    ev.index = out.size();
    if (op == "+") {
      ev.kind = UpdateKind::kInsert;
      if (!(ls >> ev.u >> ev.v >> ev.w)) throw ContractViolation("bad insert on line " + std::to_string(lineno));
    } else if (op == "-") {
      ev.kind = UpdateKind::kDelete;
      if (!(ls >> ev.u >> ev.v)) throw ContractViolation("bad delete on line " + std::to_string(lineno));
    } else {
      throw ContractViolation("unknown update '" + op + "' on line " + std::to_string(lineno));
    }
    out.push_back(ev);
  }
  return out;
}

void write_update_stream(std::ostream& os, const std::vector<UpdateEvent>& events) {
  for (const auto& ev : events) {
    if (ev.kind == UpdateKind::kInsert) {
      os << "+ " << ev.u << ' ' << ev.v << ' ' << ev.w << '\n';
    } else {
      os << "- " << ev.u << ' ' << ev.v << '\n';
    }
  }
}

void validate_update(const WeightedGraph& g, const UpdateEvent& ev, DynamicMode mode) {
  const int n = g.vertex_count();
  if (ev.u < 0 || ev.v < 0 || ev.u >= n || ev.v >= n || ev.u == ev.v) {
    throw ContractViolation("update endpoints out of range");
  }
  if (ev.kind == UpdateKind::kInsert) {
    if (mode == DynamicMode::kDecremental) throw ContractViolation("insert in decremental mode");
    if (g.has_edge(ev.u, ev.v)) throw ContractViolation("insert of a present edge");
    if (ev.w < 1 || ev.w > g.max_weight()) throw ContractViolation("insert weight outside [1, W]");
  } else {
    if (mode == DynamicMode::kIncremental) throw ContractViolation("delete in incremental mode");
    if (!g.has_edge(ev.u, ev.v)) throw ContractViolation("delete of an absent edge");
  }
}

void apply_to_graph(WeightedGraph& g, const UpdateEvent& ev) {
  if (ev.kind == UpdateKind::kInsert) {
    g.insert_edge(ev.u, ev.v, ev.w);
  } else {
    g.delete_edge(ev.u, ev.v);
  }
}

}  // namespace dynmwm
