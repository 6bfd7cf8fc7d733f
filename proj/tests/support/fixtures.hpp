#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "radiolb/c2.hpp"
#include "radiolb/engine.hpp"
#include "radiolb/protocol.hpp"
#include "radiolb/protocols.hpp"
#include "radiolb/selective.hpp"

namespace fixtures {

using namespace radiolb;

inline SetFamily singletons(std::size_t k) {
  SetFamily fam{k, {}};
  for (std::size_t j = 0; j < k; ++j) fam.sets.push_back(std::uint64_t{1} << j);
  return fam;
}

// The three reference prey protocols for one parameter pair.
inline std::vector<Protocol> prey(const C2Params& params) {
  return {round_robin(params), silent_l1(params), selfam_driven(params, singletons(params.k))};
}

// Source sends the payload at round 0; a node listed in plan[round]
// transmits the payload whether or not it has heard anything.
inline Protocol scripted(const C2Params& params, std::vector<std::set<Label>> plan) {
  return Protocol("scripted", StageTag::Pi0, params,
                  [plan = std::move(plan)](const ProtocolContext& ctx, const SourceInput* in) -> Action {
                    if (ctx.own_label == kSource) {
                      return ctx.round == 0 && in ? Action::transmit(make_payload(in->payload)) : Action::listen();
                    }
                    const auto t = static_cast<std::size_t>(ctx.round);
                    if (t < plan.size() && plan[t].count(ctx.own_label)) {
                      return Action::transmit(make_payload(kDefaultPayload));
                    }
                    return Action::listen();
                  });
}

// Needs m, k >= 2. Nodes 1 and 2 transmit at round 1; an informed layer-2
// node answers at round 2; node 1 repeats at round 3 iff it heard that
// answer; the source speaks at round 4 iff it heard node 1; node 3 relays at
// round 5 iff it heard the source at round 4; node 4 relays at round 6.
inline Protocol adaptive(const C2Params& params) {
  return Protocol("adaptive", StageTag::Pi0, params, [](const ProtocolContext& ctx, const SourceInput* in) -> Action {
    const auto heard = [&](int t) { return t < ctx.round && !ctx.history[t].is_phi(); };
    const auto mu = make_payload(in ? in->payload : kDefaultPayload);
    const Label v = ctx.own_label;
    const int t = ctx.round;
    bool go = false;
    if (v == kSource) {
      go = t == 0 || (t == 4 && heard(3));
    } else if (layer_of(v, ctx.params) == 2) {
      go = t == 2 && heard(1);
    } else {
      go = (t == 1 && (v == 1 || v == 2)) || (t == 3 && v == 1 && heard(2)) || (t == 5 && v == 3 && heard(4)) ||
           (t == 6 && v == 4);
    }
    return go ? Action::transmit(mu) : Action::listen();
  });
}

inline std::optional<int> completion(const Protocol& p, const C2Params& params, const TopologyVector& tv, int rounds) {
  return completion_round(run(build_c2(params, tv), p, rounds));
}

}  // namespace fixtures
