#include "dynmwm/oracle/backend.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dynmwm {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, std::uint64_t value) {
  for (int b = 0; b < 8; ++b) {
    h ^= (value >> (8 * b)) & 0xffU;
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t edge_hash(Edge e) {
  Edge n = make_edge(e.u, e.v);
  return mix((static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.u)) << 32) |
             static_cast<std::uint32_t>(n.v));
}

std::uint64_t edge_set_hash(std::span<const Edge> edges) {
  std::uint64_t h = 0;
  for (Edge e : edges) h += edge_hash(e);
  return h;
}

ExactMcmBackend::ExactMcmBackend(std::vector<std::uint8_t> side)
    : side_(std::move(side)), adj_(side_.size()), mate_(side_.size(), kNoVertex) {}

void ExactMcmBackend::link(Edge e) {
  auto& a = adj_[e.u];
  a.insert(std::lower_bound(a.begin(), a.end(), e.v), e.v);
  auto& b = adj_[e.v];
  b.insert(std::lower_bound(b.begin(), b.end(), e.u), e.u);
  ++edge_count_;
  edge_hash_ += edge_hash(e);
}

void ExactMcmBackend::unlink(Edge e) {
  auto& a = adj_[e.u];
  a.erase(std::lower_bound(a.begin(), a.end(), e.v));
  auto& b = adj_[e.v];
  b.erase(std::lower_bound(b.begin(), b.end(), e.u));
  --edge_count_;
  edge_hash_ -= edge_hash(e);
}

bool ExactMcmBackend::has_edge(Edge e) const {
  if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count()) return false;
  const auto& a = adj_[e.u];
  return std::binary_search(a.begin(), a.end(), e.v);
}

void ExactMcmBackend::insert(Edge e) {
  if (e.u < 0 || e.u >= vertex_count() || e.v < 0 || e.v >= vertex_count()) {
    throw ContractViolation("backend edge endpoint out of range");
  }
  if (side_[e.u] == side_[e.v]) throw ContractViolation("backend edge inside one side");
  if (has_edge(e)) {
    throw ContractViolation("backend edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
  }
  link(e);
  if (logging_) log_.push_back({true, e});
  if (mate_[e.u] == kNoVertex && mate_[e.v] == kNoVertex) {
    // a maximum matching plus one disjoint edge stays maximum
    if (!dirty_) {
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
      return;
    }
  }
  dirty_ = true;
}

void ExactMcmBackend::erase(Edge e) {
  if (!has_edge(e)) throw ContractViolation("backend edge absent");
  unlink(e);
  if (logging_) log_.push_back({false, e});
  if (mate_[e.u] == e.v) {
    mate_[e.u] = kNoVertex;
    mate_[e.v] = kNoVertex;
    dirty_ = true;
  }
}

void ExactMcmBackend::begin_log() {
  if (logging_) throw ContractViolation("backend log already open");
  logging_ = true;
  log_.clear();
  saved_mate_ = mate_;
  saved_dirty_ = dirty_;
}

void ExactMcmBackend::rollback() {
  if (!logging_) throw ContractViolation("backend rollback without log");
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    if (it->inserted) {
      unlink(it->e);
    } else {
      link(it->e);
    }
  }
  log_.clear();
  mate_ = saved_mate_;
  dirty_ = saved_dirty_;
  logging_ = false;
}

Vertex ExactMcmBackend::mate(Vertex v) {
  settle();
  return mate_[v];
}

std::vector<Edge> ExactMcmBackend::matching() {
  settle();
  std::vector<Edge> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (side_[v] == 0 && mate_[v] != kNoVertex) out.push_back({v, mate_[v]});
  }
  return out;
}

std::uint64_t ExactMcmBackend::state_hash() {
  settle();
  std::uint64_t h = kFnvOffset;
  fnv(h, edge_count_);
  fnv(h, edge_hash_);
  for (Vertex m : mate_) fnv(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(m)));
  return h;
}

void ExactMcmBackend::settle() {
  if (!dirty_) return;
  const int n = vertex_count();
  dist_.assign(n, kInf);
  cursor_.assign(n, 0);
  while (bfs()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (Vertex u = 0; u < n; ++u) {
      if (side_[u] == 0 && mate_[u] == kNoVertex) dfs(u);
    }
  }
  dirty_ = false;
}

bool ExactMcmBackend::bfs() {
  queue_.clear();
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (side_[u] != 0) continue;
    if (mate_[u] == kNoVertex) {
      dist_[u] = 0;
      queue_.push_back(u);
    } else {
      dist_[u] = kInf;
    }
  }
  bool found = false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex u = queue_[head];
    for (Vertex w : adj_[u]) {
      Vertex back = mate_[w];
      if (back == kNoVertex) {
        found = true;
      } else if (dist_[back] == kInf) {
        dist_[back] = dist_[u] + 1;
        queue_.push_back(back);
      }
    }
  }
  return found;
}

bool ExactMcmBackend::dfs(Vertex u) {
  const auto& nb = adj_[u];
  for (std::uint32_t& i = cursor_[u]; i < nb.size(); ++i) {
    Vertex w = nb[i];
    Vertex back = mate_[w];
    if (back == kNoVertex || (dist_[back] == dist_[u] + 1 && dfs(back))) {
      mate_[u] = w;
      mate_[w] = u;
      ++i;
      return true;
    }
  }
  dist_[u] = kInf;
  return false;
}

}  // namespace dynmwm
