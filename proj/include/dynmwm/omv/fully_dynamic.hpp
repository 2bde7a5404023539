#pragma once

#include <memory>
#include <set>
#include <utility>

#include "dynmwm/omv/decremental.hpp"

namespace dynmwm {

// Fully dynamic OMv on top of the decremental instance: rebuild every `rebuild_every`
// updates, forward deletions of entries the instance still holds, keep the rest in a side set.
class FullyDynamicOmv {
 public:
  FullyDynamicOmv(BooleanMatrix m, OmvConfig cfg, int rebuild_every);

  int size() const { return live_.size(); }
  const BooleanMatrix& matrix() const { return live_; }
  const DecrementalOmv& inner() const { return *dec_; }
  const std::set<std::pair<int, int>>& side_set() const { return side_; }

  void update(int i, int j, bool b);
  BitVector query(const BitVector& v);

  // M >= M' entrywise, and M_ij > M'_ij only for entries in the side set.
  bool invariants_hold() const;
  std::size_t rebuilds() const { return rebuilds_; }
  std::size_t corrections() const { return corrections_; }

 private:
  void rebuild();

  BooleanMatrix live_;
  OmvConfig cfg_;
  int rebuild_every_;
  std::unique_ptr<DecrementalOmv> dec_;
  std::set<std::pair<int, int>> side_;
  int since_rebuild_ = 0;
  std::size_t rebuilds_ = 0;
  std::size_t corrections_ = 0;
};

}  // namespace dynmwm
