#pragma once

#include <cstdint>

#include "circnet/network.hpp"

namespace circnet {

enum class NetKind {
  PerfectlyOriented,  // planar, perfectly oriented
  General,            // planar, pruned, no degree-2, not perfectly oriented
  Acyclic,            // planar, perfectly oriented, no cycles
  NonPlanar,          // perfectly oriented, no embedding given
};

/// Deterministic random circular network: a grid fragment with outward
/// boundary stubs, oriented and trimmed according to the kind. Every edge
/// weight is a fresh variable named after its edge id. max_dim bounds the
/// grid side length.
Network random_network(NetKind kind, std::uint64_t seed, int max_dim = 3);

}  // namespace circnet
