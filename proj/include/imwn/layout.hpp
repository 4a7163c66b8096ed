#pragma once

#include <cstddef>
#include <vector>

namespace imwn {

struct LayoutConfig {
  int nodes_per_stream = 6;
  int num_streams = 1;
  double hop_length_m = 100.0;
  double row_separation_m = 300.0;

  // Throws ConfigError.
  void validate() const;
};

// Node address. Streams are numbered 0 and 1 (rows); nodes are numbered
// 1..nodes_per_stream from left to right within a row.
struct NodeId {
  int stream = 0;
  int index = 1;

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Two aligned rows of equally spaced nodes plus the full pairwise distance
/// matrix. Row s sits at y = s * row_separation, node i at x = (i - 1) * hop_length.
/// Immutable once built.
class NodeGeometry {
 public:
  explicit NodeGeometry(const LayoutConfig& config);

  const LayoutConfig& config() const { return config_; }
  int nodes_per_stream() const { return config_.nodes_per_stream; }
  int num_streams() const { return config_.num_streams; }
  int total_nodes() const { return config_.nodes_per_stream * config_.num_streams; }

  bool contains(NodeId node) const;
  std::size_t flat_index(NodeId node) const;
  NodeId node_at(std::size_t flat) const;

  Point position(NodeId node) const;
  double distance(NodeId a, NodeId b) const;
  double distance(std::size_t a, std::size_t b) const { return distances_[a * total_size() + b]; }

  // Row-major total_nodes() x total_nodes() matrix.
  const std::vector<double>& distance_matrix() const { return distances_; }

  // More nodes than the original study validated (7 per stream for one
  // stream, 14 in total for two). Allowed, just flagged.
  bool outside_validated_range() const;

 private:
  std::size_t total_size() const { return static_cast<std::size_t>(total_nodes()); }

  LayoutConfig config_;
  std::vector<Point> positions_;
  std::vector<double> distances_;
};

NodeGeometry build_layout(const LayoutConfig& config);

/// Consecutive in-row node sequence from source to destination. The route
/// length is the effective nodes-per-stream for scheduling and capacity;
/// route position k (1-based) maps to physical node nodes[k - 1].
struct Route {
  int stream = 0;
  std::vector<int> nodes;

  int length() const { return static_cast<int>(nodes.size()); }
  int hops() const { return length() - 1; }
  NodeId at(int position) const { return {stream, nodes.at(static_cast<std::size_t>(position - 1))}; }
};

Route stream_route(const NodeGeometry& geometry, int stream, int source, int destination);

// Route of `hops` hops starting at node 1 of each active stream.
std::vector<Route> leading_routes(const NodeGeometry& geometry, int hops);

}  // namespace imwn
