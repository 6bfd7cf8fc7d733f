#include "radiolb/c2.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

#include "radiolb/error.hpp"

namespace radiolb {

void validate(const C2Params& params) {
  if (params.m < 1 || params.k < 1 || params.k > kMaxK) {
    throw Error(ErrorCode::InvalidTau, "C2 parameters need m >= 1 and 1 <= k <= 62");
  }
}

void validate(const C2Params& params, const TopologyVector& tv) {
  validate(params);
  if (tv.taus.size() != params.m) {
    throw Error(ErrorCode::InvalidTau, "topology vector has " + std::to_string(tv.taus.size()) +
                                           " entries, expected " + std::to_string(params.m));
  }
  for (std::size_t i = 0; i < tv.taus.size(); ++i) {
    if (tv.taus[i] == 0 || tv.taus[i] >= params.tau_limit()) {
      throw Error(ErrorCode::InvalidTau,
                  "tau[" + std::to_string(i) + "] = " + std::to_string(tv.taus[i]) + " out of range");
    }
  }
}

int layer_of(Label label, const C2Params& p) {
  if (label == kSource) return 0;
  if (label <= p.m * p.k) return 1;
  if (label < p.node_count()) return 2;
  throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(label) + " outside C2 family");
}

std::optional<std::size_t> component_of(Label label, const C2Params& p) {
  switch (layer_of(label, p)) {
    case 1: return (label - 1) / p.k;
    case 2: return label - 1 - p.m * p.k;
    default: return std::nullopt;
  }
}

std::size_t l1_index(Label label, const C2Params& p) {
  if (layer_of(label, p) != 1) {
    throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(label) + " is not in layer 1");
  }
  return (label - 1) % p.k;
}

Network build_c2(const C2Params& params, const TopologyVector& tv) {
  validate(params, tv);
  std::vector<Label> labels(params.node_count());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<Label>(v);

  std::vector<Network::Edge> edges;
  for (std::size_t i = 0; i < params.m; ++i) {
    for (std::size_t j = 0; j < params.k; ++j) {
      const Label x = l1_label(params, i, j);
      edges.emplace_back(kSource, x);
      if ((tv.taus[i] >> j) & 1U) edges.emplace_back(x, l2_label(params, i));
    }
  }
  return Network::from_edges(std::move(labels), edges);
}

TopologyVector topology_of(const Network& net, const C2Params& params) {
  if (net.size() != params.node_count()) {
    throw Error(ErrorCode::InvalidNetwork, "network size does not match C2 parameters");
  }
  TopologyVector tv;
  tv.taus.assign(params.m, 0);
  for (std::size_t i = 0; i < params.m; ++i) {
    for (Label x : net.neighbors(l2_label(params, i))) {
      if (component_of(x, params) != i || layer_of(x, params) != 1) {
        throw Error(ErrorCode::InvalidNetwork, "layer-2 node adjacent outside its component");
      }
      tv.taus[i] |= std::uint64_t{1} << l1_index(x, params);
    }
  }
  validate(params, tv);
  return tv;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("RADIOLB_ENUM_CAP")) {
    std::uint64_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc{} && ptr == end && v > 0) return v;
  }
  return 1'000'000;
}

std::uint64_t family_size(const C2Params& params) {
  validate(params);
  const std::uint64_t per = params.tau_limit() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < params.m; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= per;
  }
  return total;
}

std::vector<TopologyVector> enumerate_c2(const C2Params& params) {
  return enumerate_c2(params, enumeration_cap());
}

std::vector<TopologyVector> enumerate_c2(const C2Params& params, std::uint64_t cap) {
  const std::uint64_t total = family_size(params);
  if (total > cap) {
    throw Error(ErrorCode::EnumerationTooLarge,
                std::to_string(total) + " networks exceed cap " + std::to_string(cap));
  }
  std::vector<TopologyVector> out;
  out.reserve(total);
  TopologyVector cur{std::vector<std::uint64_t>(params.m, 1)};
  const std::uint64_t last = params.tau_limit() - 1;
  while (true) {
    out.push_back(cur);
    std::size_t pos = params.m;
    while (pos > 0 && cur.taus[pos - 1] == last) {
      cur.taus[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++cur.taus[pos - 1];
  }
  return out;
}

std::string encode_network(const C2Params& params, const TopologyVector& tv) {
  std::string out = "c2:m=" + std::to_string(params.m) + ",k=" + std::to_string(params.k) + ",taus=";
  for (std::size_t i = 0; i < tv.taus.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tv.taus[i]);
  }
  return out;
}

namespace {

std::uint64_t parse_uint(std::string_view& s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr == s.data()) {
    throw Error(ErrorCode::Parse, "expected decimal " + std::string(what));
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

void expect(std::string_view& s, std::string_view lit) {
  if (s.substr(0, lit.size()) != lit) {
    throw Error(ErrorCode::Parse, "expected '" + std::string(lit) + "'");
  }
  s.remove_prefix(lit.size());
}

}  // namespace

C2Instance decode_network(std::string_view s) {
  C2Instance inst;
  expect(s, "c2:m=");
  inst.params.m = parse_uint(s, "m");
  expect(s, ",k=");
  inst.params.k = parse_uint(s, "k");
  expect(s, ",taus=");
  inst.tv.taus.push_back(parse_uint(s, "tau"));
  while (!s.empty()) {
    expect(s, ",");
    inst.tv.taus.push_back(parse_uint(s, "tau"));
  }
  validate(inst.params, inst.tv);
  return inst;
}

}  // namespace radiolb
