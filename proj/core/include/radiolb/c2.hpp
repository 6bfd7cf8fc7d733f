#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radiolb/message.hpp"
#include "radiolb/network.hpp"

namespace radiolb {

/// Public family parameters: m components, k layer-1 nodes per component.
/// Known to every node.
struct C2Params {
  std::size_t m = 1;
  std::size_t k = 1;

  std::size_t node_count() const noexcept { return 1 + m * (k + 1); }
  std::uint64_t tau_limit() const noexcept { return std::uint64_t{1} << k; }

  friend bool operator==(const C2Params&, const C2Params&) = default;
};

/// One bitmask per component: bit j of taus[i] set iff layer-1 node j of
/// component i is adjacent to that component's layer-2 node.
struct TopologyVector {
  std::vector<std::uint64_t> taus;

  friend bool operator==(const TopologyVector&, const TopologyVector&) = default;
  friend auto operator<=>(const TopologyVector&, const TopologyVector&) = default;
};

inline constexpr std::size_t kMaxK = 62;

/// Throws InvalidTau unless m, k >= 1, k <= kMaxK, and every tau is in [1, 2^k).
void validate(const C2Params& params);
void validate(const C2Params& params, const TopologyVector& tv);

// Canonical labeling.
inline Label l1_label(const C2Params& p, std::size_t component, std::size_t j) {
  return static_cast<Label>(1 + component * p.k + j);
}
inline Label l2_label(const C2Params& p, std::size_t component) {
  return static_cast<Label>(1 + p.m * p.k + component);
}

/// 0, 1 or 2. Throws UnknownLabel for labels >= n.
int layer_of(Label label, const C2Params& params);
/// Component index of a layer-1 or layer-2 node; empty for the source.
std::optional<std::size_t> component_of(Label label, const C2Params& params);
/// Within-component index j of a layer-1 node. Throws UnknownLabel otherwise.
std::size_t l1_index(Label label, const C2Params& params);

Network build_c2(const C2Params& params, const TopologyVector& tv);
/// Inverse of build_c2 for canonically labeled networks.
TopologyVector topology_of(const Network& net, const C2Params& params);

/// Enumeration cap: RADIOLB_ENUM_CAP if set, else 10^6.
std::uint64_t enumeration_cap();
/// (2^k - 1)^m, saturating at UINT64_MAX.
std::uint64_t family_size(const C2Params& params);
/// All valid vectors in lexicographic order. Throws EnumerationTooLarge.
std::vector<TopologyVector> enumerate_c2(const C2Params& params);
std::vector<TopologyVector> enumerate_c2(const C2Params& params, std::uint64_t cap);

/// "c2:m=<m>,k=<k>,taus=<t0>,<t1>,..."
std::string encode_network(const C2Params& params, const TopologyVector& tv);
struct C2Instance {
  C2Params params;
  TopologyVector tv;
};
/// Strict parser for encode_network output. Throws Parse or InvalidTau.
C2Instance decode_network(std::string_view text);

}  // namespace radiolb
