#pragma once

#include <map>
#include <optional>
#include <vector>

#include "radiolb/error.hpp"
#include "radiolb/message.hpp"
#include "radiolb/network.hpp"
#include "radiolb/protocol.hpp"

namespace radiolb {

inline const Bytes kDefaultPayload = "mu";

/// One synchronous round. `actions` and `deliveries` are indexed in the
/// network's label order. `collided_receivers` lists listeners with two or
/// more transmitting neighbors; nodes themselves never see it.
struct RoundRecord {
  int round = 0;
  std::vector<Action> actions;
  std::vector<Observation> deliveries;
  std::vector<Label> collided_receivers;
};

/// Collision rule: a listener receives iff exactly one neighbor transmits;
/// every other node observes phi.
RoundRecord step_round(const Network& net, std::vector<Action> actions, int round);
/// Map form. Throws UnknownLabel for a non-node key, MissingAction for a gap.
RoundRecord step_round(const Network& net, const std::map<Label, Action>& actions, int round);

struct Violation {
  ErrorCode code;
  Label label;
  int round;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class LegalityMode {
  Strict,  // throw on the first violation
  Record,  // record it, suppress the transmission, continue
};

struct RunOptions {
  Bytes payload = kDefaultPayload;
  /// Replaces the protocol's own setup when present (e.g. foreign advice).
  std::optional<SourceInput> source_input;
  LegalityMode legality = LegalityMode::Strict;
};

struct Trace {
  Network network;
  std::vector<RoundRecord> rounds;
  std::map<Label, int> informed;  // first reception round; source at 0
  std::vector<Violation> violations;

  const Action& action(Label label, int round) const;
  const Observation& delivery(Label label, int round) const;
  /// Labels that transmitted in `round`, ascending.
  std::vector<Label> transmitters(int round) const;
};

Trace run(const Network& net, const Protocol& proto, int max_rounds, const RunOptions& options = {});

/// Smallest r such that every node is informed by round r-1.
std::optional<int> completion_round(const Trace& trace);

/// Rebuilds the informed map from the round records alone.
std::map<Label, int> replay_informed(const Trace& trace);

}  // namespace radiolb
