#include "imwn/layout.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/core.h>

#include "imwn/errors.hpp"

namespace imwn {

void LayoutConfig::validate() const {
  if (nodes_per_stream < 3) {
    throw ConfigError(fmt::format("nodes_per_stream must be at least 3, got {}", nodes_per_stream));
  }
  if (num_streams != 1 && num_streams != 2) {
    throw ConfigError(fmt::format("num_streams must be 1 or 2, got {}", num_streams));
  }
  if (!(hop_length_m > 0.0)) {
    throw ConfigError(fmt::format("hop_length_m must be positive, got {}", hop_length_m));
  }
  if (num_streams == 2 && !(row_separation_m > 0.0)) {
    throw ConfigError(fmt::format("row_separation_m must be positive, got {}", row_separation_m));
  }
}

NodeGeometry::NodeGeometry(const LayoutConfig& config) : config_(config) {
  config_.validate();
  const std::size_t n = total_size();
  positions_.reserve(n);
  for (int s = 0; s < config_.num_streams; ++s) {
    for (int i = 1; i <= config_.nodes_per_stream; ++i) {
      positions_.push_back({(i - 1) * config_.hop_length_m, s * config_.row_separation_m});
    }
  }
  distances_.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = std::hypot(positions_[a].x - positions_[b].x, positions_[a].y - positions_[b].y);
      distances_[a * n + b] = d;
      distances_[b * n + a] = d;
    }
  }
}

bool NodeGeometry::contains(NodeId node) const {
  return node.stream >= 0 && node.stream < config_.num_streams && node.index >= 1 &&
         node.index <= config_.nodes_per_stream;
}

std::size_t NodeGeometry::flat_index(NodeId node) const {
  if (!contains(node)) {
    throw ConfigError(fmt::format("node ({}, {}) is not part of the layout", node.stream, node.index));
  }
  return static_cast<std::size_t>(node.stream * config_.nodes_per_stream + node.index - 1);
}

NodeId NodeGeometry::node_at(std::size_t flat) const {
  const auto per = static_cast<std::size_t>(config_.nodes_per_stream);
  return {static_cast<int>(flat / per), static_cast<int>(flat % per) + 1};
}

Point NodeGeometry::position(NodeId node) const { return positions_[flat_index(node)]; }

double NodeGeometry::distance(NodeId a, NodeId b) const { return distance(flat_index(a), flat_index(b)); }

bool NodeGeometry::outside_validated_range() const {
  return config_.num_streams == 1 ? total_nodes() >= 7 : total_nodes() >= 14;
}

NodeGeometry build_layout(const LayoutConfig& config) { return NodeGeometry(config); }

Route stream_route(const NodeGeometry& geometry, int stream, int source, int destination) {
  if (!geometry.contains({stream, source}) || !geometry.contains({stream, destination})) {
    throw ConfigError(fmt::format("route {} -> {} leaves stream {}", source, destination, stream));
  }
  if (std::abs(destination - source) + 1 < 3) {
    throw ConfigError(fmt::format("route {} -> {} has fewer than 3 nodes", source, destination));
  }
  Route route{stream, {}};
  const int step = destination > source ? 1 : -1;
  for (int i = source;; i += step) {
    route.nodes.push_back(i);
    if (i == destination) break;
  }
  return route;
}

std::vector<Route> leading_routes(const NodeGeometry& geometry, int hops) {
  std::vector<Route> routes;
  for (int s = 0; s < geometry.num_streams(); ++s) {
    routes.push_back(stream_route(geometry, s, 1, 1 + hops));
  }
  return routes;
}

}  // namespace imwn
