#include "radiolb/engine.hpp"

#include <algorithm>
#include <string>

namespace radiolb {

RoundRecord step_round(const Network& net, std::vector<Action> actions, int round) {
  if (actions.size() != net.size()) {
    throw Error(ErrorCode::MissingAction, "expected one action per node");
  }
  RoundRecord rec;
  rec.round = round;
  rec.deliveries.assign(net.size(), Observation::phi());

  for (std::size_t v = 0; v < net.size(); ++v) {
    if (!actions[v].is_listen()) continue;
    std::size_t count = 0;
    std::size_t sender = 0;
    for (Label w : net.neighbors_at(v)) {
      const std::size_t iw = net.index_of(w);
      if (actions[iw].is_transmit()) {
        if (++count == 1) sender = iw;
      }
    }
    if (count == 1) {
      rec.deliveries[v] = Observation::received(net.labels()[sender], actions[sender].msg);
    } else if (count >= 2) {
      rec.collided_receivers.push_back(net.labels()[v]);
    }
  }
  rec.actions = std::move(actions);
  return rec;
}

RoundRecord step_round(const Network& net, const std::map<Label, Action>& actions, int round) {
  std::vector<Action> by_index(net.size());
  std::vector<bool> present(net.size(), false);
  for (const auto& [label, action] : actions) {
    const std::size_t i = net.index_of(label);
    by_index[i] = action;
    present[i] = true;
  }
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (!present[i]) {
      throw Error(ErrorCode::MissingAction,
                  "no action for node " + std::to_string(net.labels()[i]));
    }
  }
  return step_round(net, std::move(by_index), round);
}

const Action& Trace::action(Label label, int round) const {
  return rounds.at(static_cast<std::size_t>(round)).actions[network.index_of(label)];
}

const Observation& Trace::delivery(Label label, int round) const {
  return rounds.at(static_cast<std::size_t>(round)).deliveries[network.index_of(label)];
}

std::vector<Label> Trace::transmitters(int round) const {
  std::vector<Label> out;
  const auto& rec = rounds.at(static_cast<std::size_t>(round));
  for (std::size_t i = 0; i < rec.actions.size(); ++i) {
    if (rec.actions[i].is_transmit()) out.push_back(network.labels()[i]);
  }
  return out;
}

Trace run(const Network& net, const Protocol& proto, int max_rounds, const RunOptions& options) {
  Trace trace{net, {}, {}, {}};
  trace.informed[kSource] = 0;
  const std::size_t n = net.size();
  const std::size_t src = net.index_of(kSource);

  SourceInput input;
  if (options.source_input) {
    input = *options.source_input;
  } else {
    input.payload = options.payload;
    proto.setup(net, input);
  }

  std::vector<ProtocolContext> ctx(n);
  std::vector<bool> informed(n, false);
  informed[src] = true;
  for (std::size_t v = 0; v < n; ++v) {
    ctx[v].own_label = net.labels()[v];
    auto adj = net.neighbors_at(v);
    ctx[v].neighbor_labels.assign(adj.begin(), adj.end());
    ctx[v].params = proto.params();
    ctx[v].history.reserve(static_cast<std::size_t>(std::max(max_rounds, 0)));
  }

  trace.rounds.reserve(static_cast<std::size_t>(std::max(max_rounds, 0)));
  for (int t = 0; t < max_rounds; ++t) {
    std::vector<Action> actions(n);
    for (std::size_t v = 0; v < n; ++v) {
      ctx[v].round = t;
      actions[v] = proto.step(ctx[v], v == src ? &input : nullptr);
      if (!actions[v].is_transmit() || v == src) continue;

      std::optional<ErrorCode> bad;
      if (t == 0) {
        bad = ErrorCode::NonSourceRoundZero;
      } else if (!informed[v]) {
        bad = ErrorCode::SpontaneityViolation;
      }
      if (!bad) continue;
      if (options.legality == LegalityMode::Strict) {
        throw Error(*bad, "node " + std::to_string(net.labels()[v]) + " transmitted at round " +
                              std::to_string(t) + " in protocol " + proto.name());
      }
      trace.violations.push_back({*bad, net.labels()[v], t});
      actions[v] = Action::listen();
    }

    RoundRecord rec = step_round(net, std::move(actions), t);
    for (std::size_t v = 0; v < n; ++v) {
      const Observation& obs = rec.deliveries[v];
      if (!obs.is_phi() && !informed[v]) {
        informed[v] = true;
        trace.informed[net.labels()[v]] = t;
      }
      ctx[v].history.push_back(obs);
    }
    trace.rounds.push_back(std::move(rec));
  }
  return trace;
}

std::optional<int> completion_round(const Trace& trace) {
  if (trace.informed.size() != trace.network.size()) return std::nullopt;
  int last = 0;
  for (const auto& [label, round] : trace.informed) last = std::max(last, round);
  return last + 1;
}

std::map<Label, int> replay_informed(const Trace& trace) {
  std::map<Label, int> out{{kSource, 0}};
  for (const auto& rec : trace.rounds) {
    for (std::size_t v = 0; v < rec.deliveries.size(); ++v) {
      if (!rec.deliveries[v].is_phi()) out.try_emplace(trace.network.labels()[v], rec.round);
    }
  }
  return out;
}

}  // namespace radiolb
