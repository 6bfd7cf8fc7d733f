#include "radiolb/protocols.hpp"

#include <algorithm>

namespace radiolb {

namespace {

// First payload the node has received, if any.
MessagePtr held_payload(const ProtocolContext& ctx) {
  for (const auto& o : ctx.history) {
    if (!o.is_phi() && o.msg->is_payload()) return make_payload(o.msg->payload()->bytes);
  }
  return nullptr;
}

Action source_round_zero(const ProtocolContext& ctx, const SourceInput* in) {
  if (ctx.round == 0 && in) return Action::transmit(make_payload(in->payload));
  return Action::listen();
}

}  // namespace

Protocol round_robin(const C2Params& params) {
  validate(params);
  return Protocol("round-robin", StageTag::Pi0, params,
                  [](const ProtocolContext& ctx, const SourceInput* in) -> Action {
                    if (ctx.own_label == kSource) return source_round_zero(ctx, in);
                    if (layer_of(ctx.own_label, ctx.params) != 1) return Action::listen();
                    if (ctx.round != static_cast<int>(ctx.own_label)) return Action::listen();
                    if (auto mu = held_payload(ctx)) return Action::transmit(std::move(mu));
                    return Action::listen();
                  });
}

Protocol silent_l1(const C2Params& params) {
  validate(params);
  return Protocol("silent", StageTag::Pi0, params,
                  [](const ProtocolContext& ctx, const SourceInput* in) -> Action {
                    if (ctx.own_label == kSource) return source_round_zero(ctx, in);
                    return Action::listen();
                  });
}

Protocol selfam_driven(const C2Params& params, const SetFamily& fam) {
  validate(params);
  if (fam.universe != params.k) {
    throw Error(ErrorCode::IndexOutOfUniverse, "family universe " + std::to_string(fam.universe) +
                                                   " differs from k = " + std::to_string(params.k));
  }
  return Protocol("selfam", StageTag::Pi0, params,
                  [sets = fam.sets](const ProtocolContext& ctx, const SourceInput* in) -> Action {
                    if (ctx.own_label == kSource) return source_round_zero(ctx, in);
                    if (layer_of(ctx.own_label, ctx.params) != 1 || ctx.round < 1) return Action::listen();
                    const auto t = static_cast<std::size_t>(ctx.round);
                    if (t > sets.size()) return Action::listen();
                    const std::size_t j = l1_index(ctx.own_label, ctx.params);
                    if (((sets[t - 1] >> j) & 1U) == 0) return Action::listen();
                    if (auto mu = held_payload(ctx)) return Action::transmit(std::move(mu));
                    return Action::listen();
                  });
}

Protocol make_protocol(const std::string& name, const C2Params& params) {
  if (name == "round-robin") return round_robin(params);
  if (name == "silent") return silent_l1(params);
  if (name.rfind("selfam:", 0) == 0) return selfam_driven(params, read_family_file(name.substr(7)));
  throw Error(ErrorCode::Parse, "unknown protocol '" + name + "'");
}

std::vector<Violation> check_legality(const Protocol& proto, const Network& net, int max_rounds) {
  RunOptions opts;
  opts.legality = LegalityMode::Record;
  return run(net, proto, max_rounds, opts).violations;
}

}  // namespace radiolb
