#include "radiolb/network.hpp"

#include <algorithm>
#include <string>

#include "radiolb/error.hpp"

namespace radiolb {

Network Network::from_edges(std::vector<Label> labels, const std::vector<Edge>& edges) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorCode::InvalidNetwork, "duplicate node label");
  }
  if (labels.empty() || labels.front() != kSource) {
    throw Error(ErrorCode::InvalidNetwork, "network must contain the source label 0");
  }

  Network net;
  net.labels_ = std::move(labels);
  net.adjacency_.resize(net.labels_.size());
  net.dense_ = net.labels_.back() + 1 == net.labels_.size();

  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::InvalidNetwork, "self-loop at " + std::to_string(a));
    const std::size_t ia = net.index_of(a);
    const std::size_t ib = net.index_of(b);
    net.adjacency_[ia].push_back(b);
    net.adjacency_[ib].push_back(a);
  }
  for (auto& adj : net.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  std::vector<bool> seen(net.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (Label w : net.adjacency_[v]) {
      const std::size_t iw = net.index_of(w);
      if (!seen[iw]) {
        seen[iw] = true;
        ++reached;
        stack.push_back(iw);
      }
    }
  }
  if (reached != net.size()) throw Error(ErrorCode::InvalidNetwork, "graph is not connected");
  return net;
}

bool Network::contains(Label label) const noexcept {
  if (dense_) return label < labels_.size();
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t Network::index_of(Label label) const {
  if (dense_) {
    if (label < labels_.size()) return label;
  } else {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it != labels_.end() && *it == label) return static_cast<std::size_t>(it - labels_.begin());
  }
  throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(label) + " is not a node");
}

bool Network::adjacent(Label a, Label b) const {
  auto adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<Network::Edge> Network::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (Label w : adjacency_[i]) {
      if (labels_[i] < w) out.emplace_back(labels_[i], w);
    }
  }
  return out;
}

}  // namespace radiolb
