#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

// Dynamic maximum cardinality matching on a bipartite graph with a fixed vertex set.
class McmBackend {
 public:
  virtual ~McmBackend() = default;
  virtual int vertex_count() const = 0;
  virtual void insert(Edge e) = 0;
  virtual void erase(Edge e) = 0;
  virtual bool has_edge(Edge e) const = 0;
  virtual Vertex mate(Vertex v) = 0;
  virtual std::vector<Edge> matching() = 0;
  // Covers the edge set and the maintained matching.
  virtual std::uint64_t state_hash() = 0;
  // Every change after begin_log() is undone by rollback(), in reverse order.
  virtual void begin_log() = 0;
  virtual void rollback() = 0;
};

// Exact backend. The matching is brought back to maximum lazily, before any read,
// by augmenting from the previous matching; this is the desk-scale stand-in for a
// dynamic (1 - eps_b) algorithm with eps_b = 0.
class ExactMcmBackend final : public McmBackend {
 public:
  explicit ExactMcmBackend(std::vector<std::uint8_t> side);

  int vertex_count() const override { return static_cast<int>(side_.size()); }
  void insert(Edge e) override;
  void erase(Edge e) override;
  bool has_edge(Edge e) const override;
  Vertex mate(Vertex v) override;
  std::vector<Edge> matching() override;
  std::uint64_t state_hash() override;
  void begin_log() override;
  void rollback() override;

  std::size_t edge_count() const { return edge_count_; }
  std::uint64_t edge_set_hash() const { return edge_hash_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

 private:
  struct Change {
    bool inserted;
    Edge e;
  };

  void settle();
  bool bfs();
  bool dfs(Vertex u);
  void link(Edge e);
  void unlink(Edge e);

  std::vector<std::uint8_t> side_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::uint64_t edge_hash_ = 0;
  std::vector<Vertex> mate_;
  bool dirty_ = false;

  bool logging_ = false;
  std::vector<Change> log_;
  std::vector<Vertex> saved_mate_;
  bool saved_dirty_ = false;

  std::vector<int> dist_;
  std::vector<std::uint32_t> cursor_;
  std::vector<Vertex> queue_;
};

// Order-independent hash of an undirected edge set.
std::uint64_t edge_set_hash(std::span<const Edge> edges);
std::uint64_t edge_hash(Edge e);

}  // namespace dynmwm
