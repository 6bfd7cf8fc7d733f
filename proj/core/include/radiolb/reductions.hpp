#pragma once

#include <string>
#include <string_view>

#include "radiolb/c2.hpp"
#include "radiolb/message.hpp"
#include "radiolb/network.hpp"
#include "radiolb/protocol.hpp"

namespace radiolb {

/// "adv:" then comma-separated entries, each "phi" or "<i:tau>".
std::string encode_advice(const AdviceString& advice);
AdviceString decode_advice(std::string_view text);

/// Layer-phased simulation: round t of `p0` is replayed in rounds 3t, 3t+1,
/// 3t+2, and a layer-i node acts only in round 3t+i. Each node rebuilds its
/// original reception list from the three rounds of every block.
Protocol to_pi1(const Protocol& p0);

/// Source echoes at round 3t what it heard at round 3t-2 (as a Relay that
/// keeps the original sender). Layer-1 nodes replay the source's original
/// decisions from the echo stream, then their own. Requires a Pi1 protocol.
Protocol to_pi2(const Protocol& p1);

/// Source gets the full topology at setup and sends <i, tau_i> for the
/// component of a lone round-(3t-2) transmitter, otherwise stays silent.
/// Layer-1 nodes recover the echoed message by simulating component i.
/// Requires a Pi2 protocol.
Protocol to_pi3(const Protocol& p2);

/// Entry t (t = 1..r-1) is the source's round-3t transmission of `p3` on
/// `net`. Requires a Pi3 protocol.
AdviceString make_advice(const Protocol& p3, const Network& net, int r);

/// Source sends payload plus advice at round 0 and is silent afterwards;
/// layer-1 nodes read advice entry i before acting in round 3i+1. The
/// protocol's setup computes make_advice(p3, net, r). Requires a Pi3 protocol.
Protocol to_pi4(const Protocol& p3, int r);

struct ReductionChain {
  Protocol pi1;
  Protocol pi2;
  Protocol pi3;
  Protocol pi4;

  const Protocol& stage(int s) const;
};

/// to_pi1 .. to_pi4 applied in sequence; `r` is the original round budget.
ReductionChain reduce(const Protocol& p0, int r);

}  // namespace radiolb
