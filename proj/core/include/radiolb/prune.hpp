#pragma once

#include <optional>
#include <set>
#include <vector>

#include "radiolb/c2.hpp"
#include "radiolb/engine.hpp"
#include "radiolb/message.hpp"
#include "radiolb/protocol.hpp"

namespace radiolb {

/// What the source's round-3t listening slot (round 3t-2) looked like.
struct Event {
  enum class Kind { Silent, Collision, Single };

  Kind kind = Kind::Silent;
  std::size_t component = 0;  // Single only
  std::uint64_t tau = 0;      // Single only

  static Event silent() { return {}; }
  static Event collision() { return {Kind::Collision, 0, 0}; }
  static Event single(std::size_t i, std::uint64_t tau) { return {Kind::Single, i, tau}; }

  friend bool operator==(const Event&, const Event&) = default;
};

std::string to_string(const Event& e);

struct PruneResult {
  std::vector<Event> event_seq;  // t = 1..r-1
  std::vector<TopologyVector> survivors;
  AdviceString advice;
  TopologyVector base_net;
  std::set<std::size_t> marked;
  std::optional<std::size_t> free_component;
};

/// Classifies round t >= 1 of `trace` (a Pi3 trace on a C2 network).
Event classify_event(const Trace& trace, const TopologyVector& tv, const C2Params& params, int t);
Event classify_event(const Protocol& p3, const Network& net, int t);

/// Events for t = 1..r-1 of a Pi3 run.
std::vector<Event> event_sequence(const Protocol& p3, const TopologyVector& tv, int r);

/// Keeps collision networks if any survivor collides; otherwise fixes the
/// lexicographically smallest survivor with a lone transmitter and keeps
/// networks with its exact event; otherwise keeps everything. Repeats for
/// t = 1..r-1, then marks the smallest final survivor.
PruneResult run_prune(const Protocol& p3, int r, const C2Params& params);

/// Silent marks nothing; Single(i) marks i; Collision marks the components of
/// the two lowest-labeled transmitters.
std::set<std::size_t> mark_components(const Protocol& p3, const Network& base, int r);

/// True iff `candidate` produces the survivors' event sequence.
bool membership(const Protocol& p3, const TopologyVector& candidate, const PruneResult& result,
                const C2Params& params, int r);

}  // namespace radiolb
