#pragma once

#include <string>
#include <vector>

#include "radiolb/c2.hpp"
#include "radiolb/engine.hpp"
#include "radiolb/protocol.hpp"
#include "radiolb/selective.hpp"

namespace radiolb {

/// Source sends the payload at round 0; the layer-1 node labeled l relays
/// it at round l; layer-2 nodes only listen.
Protocol round_robin(const C2Params& params);

/// Only the source's round-0 transmission ever happens.
Protocol silent_l1(const C2Params& params);

/// Layer-1 node with within-component index j relays at round t >= 1 iff
/// j is in fam.sets[t-1]. Throws IndexOutOfUniverse unless fam.universe == k.
Protocol selfam_driven(const C2Params& params, const SetFamily& fam);

/// Registry: "round-robin", "silent", "selfam:<family-file>".
Protocol make_protocol(const std::string& name, const C2Params& params);

/// Runs `proto` in record mode; empty iff a strict run raises nothing.
std::vector<Violation> check_legality(const Protocol& proto, const Network& net, int max_rounds);

}  // namespace radiolb
