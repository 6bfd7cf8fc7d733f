#pragma once

// Reference computations written against the raw definitions, sharing no
// code with the library beyond plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Label = std::uint32_t;
using EdgeList = std::vector<std::pair<Label, Label>>;

enum class Act { Listen, Transmit, Inactive };

// Listener v hears u iff u is the only transmitting node sharing an edge with v.
inline std::map<Label, std::optional<Label>> deliver(const std::vector<Label>& labels, const EdgeList& edges,
                                                     const std::map<Label, Act>& acts) {
  std::map<Label, std::optional<Label>> out;
  for (Label v : labels) {
    out[v] = std::nullopt;
    if (acts.at(v) != Act::Listen) continue;
    std::set<Label> talkers;
    for (const auto& [a, b] : edges) {
      if (a == v && acts.at(b) == Act::Transmit) talkers.insert(b);
      if (b == v && acts.at(a) == Act::Transmit) talkers.insert(a);
    }
    if (talkers.size() == 1) out[v] = *talkers.begin();
  }
  return out;
}

inline std::set<Label> collided(const std::vector<Label>& labels, const EdgeList& edges,
                                const std::map<Label, Act>& acts) {
  std::set<Label> out;
  for (Label v : labels) {
    if (acts.at(v) != Act::Listen) continue;
    std::set<Label> talkers;
    for (const auto& [a, b] : edges) {
      if (a == v && acts.at(b) == Act::Transmit) talkers.insert(b);
      if (b == v && acts.at(a) == Act::Transmit) talkers.insert(a);
    }
    if (talkers.size() >= 2) out.insert(v);
  }
  return out;
}

// Random connected graph on labels 0..n-1: a random spanning tree plus extras.
inline EdgeList random_connected(std::mt19937_64& rng, Label n, double extra_p) {
  EdgeList edges;
  std::set<std::pair<Label, Label>> seen;
  for (Label v = 1; v < n; ++v) {
    Label u = std::uniform_int_distribution<Label>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    seen.insert({u, v});
  }
  std::bernoulli_distribution coin(extra_p);
  for (Label a = 0; a < n; ++a) {
    for (Label b = a + 1; b < n; ++b) {
      if (!seen.count({a, b}) && coin(rng)) edges.emplace_back(a, b);
    }
  }
  return edges;
}

inline bool connected(Label n, const EdgeList& edges) {
  std::vector<Label> parent(n);
  for (Label i = 0; i < n; ++i) parent[i] = i;
  std::function<Label(Label)> find = [&](Label x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  for (Label i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

// Direct edge list of a C2 network, expanded from the labeling rule.
inline EdgeList c2_edges(std::size_t m, std::size_t k, const std::vector<std::uint64_t>& taus) {
  EdgeList e;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) e.emplace_back(0, static_cast<Label>(1 + i * k + j));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((taus[i] >> j) & 1U) e.emplace_back(static_cast<Label>(1 + i * k + j), static_cast<Label>(1 + m * k + i));
    }
  }
  return e;
}

// Completion of a C2 run where every layer-1 node is informed at round 0 and
// `fires(t, i)` gives the within-component indices transmitting at round t in
// component i. Layer-2 node i is informed at the first t with exactly one
// wired transmitter; completion is the last such round plus one.
inline std::optional<int> c2_completion(std::size_t m, const std::vector<std::uint64_t>& taus, int max_rounds,
                                        const std::function<std::uint64_t(int, std::size_t)>& fires) {
  if (max_rounds < 1) return std::nullopt;
  int last = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<int> got;
    for (int t = 1; t < max_rounds && !got; ++t) {
      if (std::popcount(fires(t, i) & taus[i]) == 1) got = t;
    }
    if (!got) return std::nullopt;
    last = std::max(last, *got);
  }
  return last + 1;
}

inline std::optional<int> round_robin_completion(std::size_t m, std::size_t k, const std::vector<std::uint64_t>& taus,
                                                 int max_rounds) {
  return c2_completion(m, taus, max_rounds, [k](int t, std::size_t i) -> std::uint64_t {
    const long j = static_cast<long>(t) - 1 - static_cast<long>(i * k);
    return (j >= 0 && j < static_cast<long>(k)) ? (std::uint64_t{1} << j) : 0;
  });
}

inline std::optional<int> schedule_completion(std::size_t m, const std::vector<std::uint64_t>& taus,
                                              const std::vector<std::uint64_t>& sets, int max_rounds) {
  return c2_completion(m, taus, max_rounds, [&sets](int t, std::size_t) -> std::uint64_t {
    return static_cast<std::size_t>(t) <= sets.size() ? sets[t - 1] : 0;
  });
}

// Every nonempty Z with |Z| <= k meets some member in exactly one element.
inline bool selective(std::size_t n, std::size_t k, const std::vector<std::uint64_t>& sets) {
  for (std::uint64_t z = 1; z < (std::uint64_t{1} << n); ++z) {
    if (static_cast<std::size_t>(std::popcount(z)) > k) continue;
    bool hit = false;
    for (auto f : sets) hit = hit || std::popcount(f & z) == 1;
    if (!hit) return false;
  }
  return true;
}

// Smallest family size by trying every multiset of subsets, size 1, 2, ...
inline std::size_t min_selective(std::size_t n, std::size_t k) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t size = 1;; ++size) {
    std::vector<std::uint64_t> pick(size, 0);
    std::function<bool(std::size_t, std::uint64_t)> go = [&](std::size_t pos, std::uint64_t from) {
      if (pos == size) return selective(n, k, pick);
      for (std::uint64_t s = from; s < limit; ++s) {
        pick[pos] = s;
        if (go(pos + 1, s)) return true;
      }
      return false;
    };
    if (go(0, 0)) return size;
  }
}

}  // namespace oracle
