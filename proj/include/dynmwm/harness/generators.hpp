#pragma once

#include <cstdint>
#include <vector>

#include "dynmwm/dynamic/driver.hpp"
#include "dynmwm/omv/matrix.hpp"
#include "dynmwm/omv/stream.hpp"

namespace dynmwm {

// Each pair independently with probability `density`, weight uniform in [1, W].
WeightedGraph random_graph(std::uint64_t seed, int n, double density, Weight W);

// Valid for g and mode: incremental inserts only, decremental deletes each present
// edge at most once, fully dynamic mixes both. May end early when no valid update exists.
std::vector<UpdateEvent> random_update_stream(std::uint64_t seed, const WeightedGraph& g, std::size_t length,
                                              DynamicMode mode);

BooleanMatrix random_matrix(std::uint64_t seed, int n, double density);
BitVector random_bits(std::mt19937_64& rng, int n, double density);

// `updates` entry writes (U i j b) with `queries` Q lines spread evenly between them.
std::vector<OmvOp> random_omv_stream(std::uint64_t seed, int n, std::size_t updates, std::size_t queries,
                                     double query_density = 0.5);

}  // namespace dynmwm
