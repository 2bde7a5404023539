#include "dynmwm/omv/decremental.hpp"

#include <cmath>

namespace dynmwm {

namespace {

long long loop_length(int n, double factor) {
  if (n < 2) return 0;
  return static_cast<long long>(std::ceil(10.0 * factor * n * n * std::log(static_cast<double>(n)) - 1e-9));
}

// Index set with O(1) removal and uniform sampling.
class Pool {
 public:
  explicit Pool(int n) : pos_(n, -1) {}
  void add(int x) {
    pos_[x] = static_cast<int>(items_.size());
    items_.push_back(x);
  }
  void remove(int x) {
    const int p = pos_[x];
    items_[p] = items_.back();
    pos_[items_[p]] = p;
    items_.pop_back();
    pos_[x] = -1;
  }
  bool contains(int x) const { return pos_[x] >= 0; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  int pick(std::mt19937_64& rng) const {
    return items_[std::uniform_int_distribution<std::size_t>(0, items_.size() - 1)(rng)];
  }
  const std::vector<int>& items() const { return items_; }
  BitVector mask(int n) const {
    BitVector b(n);
    for (int x : items_) b.set(x);
    return b;
  }

 private:
  std::vector<int> pos_;
  std::vector<int> items_;
};

}  // namespace

long long default_t_l(int n, double eps) { return loop_length(n, std::pow(eps, 0.25)); }
long long default_t_r(int n, double eps) { return loop_length(n, std::sqrt(eps)); }

std::vector<std::uint8_t> DecrementalOmv::host_sides(int n) {
  std::vector<std::uint8_t> side(4 * n, 1);
  for (int i = 0; i < n; ++i) {
    side[i] = 0;
    side[3 * n + i] = 0;
  }
  return side;
}

DecrementalOmv::DecrementalOmv(BooleanMatrix m, OmvConfig cfg, std::unique_ptr<McmBackend> backend)
    : m_(std::move(m)), cfg_(cfg), backend_(std::move(backend)), rng_(cfg.seed) {
  if (!(cfg_.eps > 0 && cfg_.eps < 1)) throw ContractViolation("OMv eps must lie in (0,1)");
  const int n = m_.size();
  if (!backend_) backend_ = std::make_unique<ExactMcmBackend>(host_sides(n));
  if (backend_->vertex_count() != 4 * n) throw ContractViolation("OMv backend must have 4n vertices");
  if (cfg_.t_l <= 0) cfg_.t_l = default_t_l(n, cfg_.eps);
  if (cfg_.t_r <= 0) cfg_.t_r = default_t_r(n, cfg_.eps);
  for (int i = 0; i < n; ++i) {
    backend_->insert({left(i), left_pendant(i)});
    backend_->insert({right(i), right_pendant(i)});
  }
  host_edges_ = 2 * static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m_.get(i, j)) {
        backend_->insert({left(i), right(j)});
        ++host_edges_;
      }
    }
  }
}

void DecrementalOmv::remove(int i, int j) {
  const int n = m_.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ContractViolation("OMv delete out of range");
  if (!m_.get(i, j)) throw ContractViolation("OMv delete of a zero entry");
  m_.set(i, j, false);
  backend_->erase({left(i), right(j)});
  --host_edges_;
}

BitVector DecrementalOmv::query(const BitVector& v) {
  const int n = m_.size();
  if (v.size() != n) throw ContractViolation("OMv query vector has the wrong length");
  ++queries_;
  stats_ = OmvQueryStats{};
  stats_.t_l = cfg_.t_l;
  stats_.t_r = cfg_.t_r;

  BitVector w(n);
  Pool s(n), t(n);
  for (int i = 0; i < n; ++i) s.add(i);
  for (int j = 0; j < n; ++j) {
    if (v.get(j)) t.add(j);
  }

  for (long long it = 0; it < cfg_.t_l && !s.empty() && !t.empty(); ++it) {
    const int a = s.pick(rng_);
    const int b = t.pick(rng_);
    if (m_.get(a, b)) {
      w.set(a);
      s.remove(a);
      ++stats_.set_loop1;
    }
  }
  {
    const double limit = std::pow(cfg_.eps, -0.25);
    const BitVector tm = t.mask(n);
    for (int a : s.items()) stats_.loop1_violations += m_.row_degree(a, tm) >= limit - 1e-9;
  }

  for (long long it = 0; it < cfg_.t_r && !s.empty() && !t.empty(); ++it) {
    const int a = s.pick(rng_);
    const int b = t.pick(rng_);
    if (!m_.get(a, b)) continue;
    const std::vector<int> rows = s.items();
    for (int r : rows) {
      if (m_.get(r, b)) {
        w.set(r);
        s.remove(r);
        ++stats_.set_loop2;
      }
    }
    t.remove(b);
  }
  {
    const double limit = std::pow(cfg_.eps, -0.5);
    const BitVector sm = s.mask(n);
    for (int b : t.items()) stats_.loop2_violations += m_.column_degree(b, sm) >= limit - 1e-9;
  }

  // SubsetPreparation: free S and T from their pendants, logging every edit.
  const std::uint64_t before = backend_->state_hash();
  backend_->begin_log();
  for (int a : s.items()) backend_->erase({left(a), left_pendant(a)});
  for (int b : t.items()) backend_->erase({right(b), right_pendant(b)});

  const double guard = cfg_.eps * n;
  while (true) {
    std::vector<int> hit;
    for (int a : s.items()) {
      const Vertex x = backend_->mate(left(a));
      if (x != kNoVertex && x >= 2 * n && x < 3 * n && t.contains(x - 2 * n)) hit.push_back(a);
    }
    if (hit.empty() || static_cast<double>(hit.size()) < guard - 1e-9) break;
    ++stats_.peel_rounds;
    for (int a : hit) {
      w.set(a);
      s.remove(a);
      ++stats_.set_peel;
      // the pendant is already gone; cut the row off from T so the backend rematches T
      for (int b : t.items()) {
        if (m_.get(a, b)) backend_->erase({left(a), right(b)});
      }
    }
  }
  {
    const BitVector tm = t.mask(n);
    for (int a : s.items()) {
      stats_.crossing_edges_at_exit += m_.row_degree(a, tm);
      const Vertex x = backend_->mate(left(a));
      stats_.matched_crossing_at_exit += x != kNoVertex && x >= 2 * n && x < 3 * n && t.contains(x - 2 * n);
    }
  }

  backend_->rollback();
  stats_.undo_ok = backend_->state_hash() == before;
  if (!stats_.undo_ok) throw ContractViolation("OMv undo did not restore the backend");
  return w;
}

}  // namespace dynmwm
