#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "radiolb/message.hpp"

namespace radiolb {

/// Undirected, connected, labeled graph. Labels are unique and include the
/// source (0). Nodes are stored in ascending label order; per-node vectors
/// elsewhere in the library use the same index order.
class Network {
 public:
  using Edge = std::pair<Label, Label>;

  /// Validates: unique labels, source present, edge endpoints known, no
  /// self-loops, connected. Duplicate edges are merged.
  static Network from_edges(std::vector<Label> labels, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  bool contains(Label label) const noexcept;
  /// Position of `label` in labels(); throws UnknownLabel.
  std::size_t index_of(Label label) const;

  /// Sorted neighbor labels.
  std::span<const Label> neighbors(Label label) const { return adjacency_[index_of(label)]; }
  std::span<const Label> neighbors_at(std::size_t index) const { return adjacency_[index]; }
  bool adjacent(Label a, Label b) const;

  std::vector<Edge> edges() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  Network() = default;

  std::vector<Label> labels_;
  std::vector<std::vector<Label>> adjacency_;
  bool dense_ = false;  // labels_ == [0, n)
};

}  // namespace radiolb
