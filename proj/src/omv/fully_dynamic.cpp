#include "dynmwm/omv/fully_dynamic.hpp"

namespace dynmwm {

FullyDynamicOmv::FullyDynamicOmv(BooleanMatrix m, OmvConfig cfg, int rebuild_every)
    : live_(std::move(m)), cfg_(cfg), rebuild_every_(rebuild_every) {
  if (rebuild_every_ < 1) throw ContractViolation("rebuild period must be positive");
  rebuild();
  rebuilds_ = 0;
}

void FullyDynamicOmv::rebuild() {
  OmvConfig c = cfg_;
  c.seed = cfg_.seed + rebuilds_;
  dec_ = std::make_unique<DecrementalOmv>(live_, c);
  side_.clear();
  since_rebuild_ = 0;
  ++rebuilds_;
}

void FullyDynamicOmv::update(int i, int j, bool b) {
  const int n = live_.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw ContractViolation("OMv update out of range");
  live_.set(i, j, b);
  if (!b && dec_->matrix().get(i, j)) {
    dec_->remove(i, j);
  }
  if (b && !dec_->matrix().get(i, j)) {
    side_.insert({i, j});
  } else {
    side_.erase({i, j});
  }
  if (++since_rebuild_ >= rebuild_every_) rebuild();
}

BitVector FullyDynamicOmv::query(const BitVector& v) {
  BitVector w = dec_->query(v);
  for (auto [i, j] : side_) {
    if (v.get(j) && live_.get(i, j) && !w.get(i)) {
      w.set(i);
      ++corrections_;
    }
  }
  return w;
}

bool FullyDynamicOmv::invariants_hold() const {
  const BooleanMatrix& base = dec_->matrix();
  for (int i = 0; i < live_.size(); ++i) {
    for (int j = 0; j < live_.size(); ++j) {
      if (base.get(i, j) && !live_.get(i, j)) return false;
      if (live_.get(i, j) && !base.get(i, j) && !side_.count({i, j})) return false;
    }
  }
  return true;
}

}  // namespace dynmwm
