#include "radiolb/reductions.hpp"

#include <charconv>
#include <optional>

#include "radiolb/engine.hpp"
#include "radiolb/error.hpp"

namespace radiolb {

std::string encode_advice(const AdviceString& advice) {
  std::string out = "adv:";
  for (std::size_t t = 0; t < advice.entries.size(); ++t) {
    if (t) out += ',';
    const auto& e = advice.entries[t];
    out += e ? "<" + std::to_string(e->component) + ":" + std::to_string(e->tau) + ">" : "phi";
  }
  return out;
}

AdviceString decode_advice(std::string_view s) {
  if (s.substr(0, 4) != "adv:") throw Error(ErrorCode::Parse, "advice must start with 'adv:'");
  s.remove_prefix(4);
  AdviceString adv;
  auto number = [&s](char stop) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p == s.data() || p == s.data() + s.size() || *p != stop) {
      throw Error(ErrorCode::Parse, "malformed advice entry");
    }
    s.remove_prefix(static_cast<std::size_t>(p - s.data()) + 1);
    return v;
  };
  while (!s.empty()) {
    if (s.substr(0, 3) == "phi") {
      adv.entries.emplace_back(std::nullopt);
      s.remove_prefix(3);
    } else if (s.front() == '<') {
      s.remove_prefix(1);
      const auto i = static_cast<std::size_t>(number(':'));
      const auto tau = number('>');
      adv.entries.emplace_back(ComponentDesc{i, tau});
    } else {
      throw Error(ErrorCode::Parse, "malformed advice entry");
    }
    if (!s.empty()) {
      if (s.front() != ',') throw Error(ErrorCode::Parse, "expected ',' in advice");
      s.remove_prefix(1);
      if (s.empty()) throw Error(ErrorCode::Parse, "trailing ',' in advice");
    }
  }
  return adv;
}

namespace {

void require_stage(const Protocol& p, StageTag expected, const char* op) {
  if (p.stage() != expected) {
    throw Error(ErrorCode::StageMismatch, std::string(op) + " needs a " + to_string(expected) +
                                              " protocol, got " + to_string(p.stage()) + " (" +
                                              p.name() + ")");
  }
}

// A simulated copy of one node running an inner protocol. Observations fed
// in are masked to phi for rounds in which the copy did not listen.
class Replica {
 public:
  Replica(const Protocol& proto, Label own, std::vector<Label> neighbors, const C2Params& params,
          std::optional<SourceInput> input = std::nullopt)
      : proto_(proto), input_(std::move(input)) {
    ctx_.own_label = own;
    ctx_.neighbor_labels = std::move(neighbors);
    ctx_.params = params;
  }

  int round() const noexcept { return ctx_.round; }

  const Action& action() {
    if (!action_) action_ = proto_.step(ctx_, input_ ? &*input_ : nullptr);
    return *action_;
  }

  void observe(const Observation& obs) {
    const bool listened = action().is_listen();
    ctx_.history.push_back(listened ? obs : Observation::phi());
    ++ctx_.round;
    action_.reset();
  }

 private:
  const Protocol& proto_;
  ProtocolContext ctx_;
  std::optional<SourceInput> input_;
  std::optional<Action> action_;
};

Action only_transmit(const Action& a) { return a.is_transmit() ? a : Action::listen(); }

std::vector<Label> all_l1_labels(const C2Params& p) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.k; ++j) out.push_back(l1_label(p, i, j));
  }
  return out;
}

Bytes payload_bytes(const Observation& obs) {
  if (!obs.is_phi() && obs.msg->is_payload()) return obs.msg->payload()->bytes;
  return {};
}

Network component_network(const C2Params& p, std::size_t i, std::uint64_t tau) {
  std::vector<Label> labels{kSource};
  std::vector<Network::Edge> edges;
  const Label y = l2_label(p, i);
  for (std::size_t j = 0; j < p.k; ++j) {
    const Label x = l1_label(p, i, j);
    labels.push_back(x);
    edges.emplace_back(kSource, x);
    if ((tau >> j) & 1U) edges.emplace_back(x, y);
  }
  labels.push_back(y);
  return Network::from_edges(std::move(labels), edges);
}

}  // namespace

Protocol to_pi1(const Protocol& p0) {
  auto inner = std::make_shared<const Protocol>(p0);
  auto step = [inner](const ProtocolContext& ctx, const SourceInput* in) -> Action {
    const int layer = layer_of(ctx.own_label, ctx.params);
    if (ctx.round % 3 != layer) return Action::listen();

    std::optional<SourceInput> own_input;
    if (in) own_input = *in;
    Replica orig(*inner, ctx.own_label, ctx.neighbor_labels, ctx.params, std::move(own_input));
    const int block = ctx.round / 3;
    for (int t = 0; t < block; ++t) {
      // Exactly one reception across the block means exactly one neighbor
      // transmitted: neighbors of one layer share a phase.
      std::optional<Observation> single;
      int received = 0;
      for (int j = 0; j < 3; ++j) {
        const Observation& o = ctx.history[static_cast<std::size_t>(3 * t + j)];
        if (!o.is_phi()) {
          ++received;
          single = o;
        }
      }
      orig.observe(received == 1 ? *single : Observation::phi());
    }
    return only_transmit(orig.action());
  };
  return memoized(Protocol(p0.name() + "/pi1", StageTag::Pi1, p0.params(), std::move(step)));
}

Protocol to_pi2(const Protocol& p1) {
  require_stage(p1, StageTag::Pi1, "to_pi2");
  auto inner = std::make_shared<const Protocol>(p1);
  auto step = [inner](const ProtocolContext& ctx, const SourceInput* in) -> Action {
    const int layer = layer_of(ctx.own_label, ctx.params);
    const int round = ctx.round;
    if (layer == 0) {
      if (round == 0) return Action::transmit(make_payload(in ? in->payload : Bytes{}));
      if (round % 3 != 0) return Action::listen();
      const Observation& heard = ctx.history[static_cast<std::size_t>(round - 2)];
      if (heard.is_phi()) return Action::listen();
      return Action::transmit(make_relay(heard.from, heard.msg));
    }
    if (layer == 2) return inner->step(ctx, nullptr);
    if (round % 3 != 1) return Action::listen();

    Replica source(*inner, kSource, all_l1_labels(ctx.params), ctx.params,
                   SourceInput{payload_bytes(ctx.history[0]), std::nullopt, std::nullopt});
    Replica self(*inner, ctx.own_label, ctx.neighbor_labels, ctx.params);

    // The source's original reception at round 3s+1 comes back as the echo at 3s+3.
    auto advance_source_to = [&](int target) {
      while (source.round() < target) {
        const int rr = source.round();
        Observation o = Observation::phi();
        if (rr % 3 == 1) {
          const Observation& echo = ctx.history[static_cast<std::size_t>(rr + 2)];
          if (!echo.is_phi() && echo.msg->relay()) {
            const Relay* rel = echo.msg->relay();
            o = Observation::received(rel->from, rel->inner);
          }
        }
        source.observe(o);
      }
    };

    for (int rr = 0; rr < round; ++rr) {
      if (rr % 3 == 0) {
        advance_source_to(rr);
        const Action& sa = source.action();
        self.observe(sa.is_transmit() ? Observation::received(kSource, sa.msg) : Observation::phi());
      } else {
        self.observe(ctx.history[static_cast<std::size_t>(rr)]);
      }
    }
    return only_transmit(self.action());
  };
  return memoized(Protocol(p1.name() + "/pi2", StageTag::Pi2, p1.params(), std::move(step)));
}

Protocol to_pi3(const Protocol& p2) {
  require_stage(p2, StageTag::Pi2, "to_pi3");
  auto inner = std::make_shared<const Protocol>(p2);
  const C2Params params = p2.params();

  auto step = [inner](const ProtocolContext& ctx, const SourceInput* in) -> Action {
    const int layer = layer_of(ctx.own_label, ctx.params);
    const int round = ctx.round;
    if (layer == 0) {
      if (round == 0) return Action::transmit(make_payload(in ? in->payload : Bytes{}));
      if (round % 3 != 0) return Action::listen();
      const Observation& heard = ctx.history[static_cast<std::size_t>(round - 2)];
      if (heard.is_phi()) return Action::listen();
      if (!in || !in->topology) throw Error(ErrorCode::Internal, "pi3 source lacks topology input");
      const std::size_t i = *component_of(heard.from, ctx.params);
      return Action::transmit(make_component_desc(i, in->topology->taus.at(i)));
    }
    if (layer == 2) return inner->step(ctx, nullptr);
    if (round % 3 != 1) return Action::listen();

    // Source transmissions of the simulated Pi2 execution, by round.
    std::vector<MessagePtr> script(static_cast<std::size_t>(round));
    auto scripted = Protocol("replica", StageTag::Pi2, ctx.params,
                             [&script, &inner](const ProtocolContext& c, const SourceInput*) -> Action {
                               if (c.own_label != kSource) return inner->step(c, nullptr);
                               const auto t = static_cast<std::size_t>(c.round);
                               if (t < script.size() && script[t]) return Action::transmit(script[t]);
                               return Action::listen();
                             });

    // Message the Pi2 source heard at round `at` from the lone transmitter of
    // component desc.component.
    auto recover_echo = [&](const ComponentDesc& desc, int at) -> MessagePtr {
      const Network net = component_network(ctx.params, desc.component, desc.tau);
      const Trace tr = run(net, scripted, at + 1);
      const auto tx = tr.transmitters(at);
      if (tx.size() != 1 || tx.front() == kSource) {
        throw Error(ErrorCode::Internal, "component replica disagrees with source description");
      }
      return make_relay(tx.front(), tr.action(tx.front(), at).msg);
    };

    Replica self(*inner, ctx.own_label, ctx.neighbor_labels, ctx.params);
    for (int rr = 0; rr < round; ++rr) {
      const Observation& real = ctx.history[static_cast<std::size_t>(rr)];
      if (rr == 0) {
        if (!real.is_phi() && real.from == kSource) script[0] = real.msg;
        self.observe(real);
      } else if (rr % 3 == 0) {
        if (real.is_phi()) {
          self.observe(real);
          continue;
        }
        const ComponentDesc* desc = real.msg->component_desc();
        if (!desc) throw Error(ErrorCode::Internal, "pi3 source sent a non-description message");
        MessagePtr echo = recover_echo(*desc, rr - 2);
        script[static_cast<std::size_t>(rr)] = echo;
        self.observe(Observation::received(kSource, std::move(echo)));
      } else {
        self.observe(real);
      }
    }
    return only_transmit(self.action());
  };

  auto setup = [params](const Network& net, SourceInput& input) {
    input.topology = topology_of(net, params);
  };
  return memoized(Protocol(p2.name() + "/pi3", StageTag::Pi3, params, std::move(step), std::move(setup)));
}

AdviceString make_advice(const Protocol& p3, const Network& net, int r) {
  require_stage(p3, StageTag::Pi3, "make_advice");
  AdviceString adv;
  if (r <= 1) return adv;
  const Trace tr = run(net, p3, 3 * (r - 1) + 1);
  for (int t = 1; t < r; ++t) {
    const Action& a = tr.action(kSource, 3 * t);
    if (!a.is_transmit()) {
      adv.entries.emplace_back(std::nullopt);
      continue;
    }
    const ComponentDesc* desc = a.msg->component_desc();
    if (!desc) throw Error(ErrorCode::StageMismatch, "pi3 source sent a non-description message");
    adv.entries.emplace_back(*desc);
  }
  return adv;
}

Protocol to_pi4(const Protocol& p3, int r) {
  require_stage(p3, StageTag::Pi3, "to_pi4");
  auto inner = std::make_shared<const Protocol>(p3);

  auto step = [inner](const ProtocolContext& ctx, const SourceInput* in) -> Action {
    const int layer = layer_of(ctx.own_label, ctx.params);
    const int round = ctx.round;
    if (layer == 0) {
      if (round != 0 || !in) return Action::listen();
      return Action::transmit(make_payload(in->payload, in->advice.value_or(AdviceString{})));
    }
    if (layer == 2) return inner->step(ctx, nullptr);
    if (round % 3 != 1) return Action::listen();

    const Observation& first = ctx.history[0];
    const BroadcastPayload* mu = first.is_phi() ? nullptr : first.msg->payload();
    const AdviceString advice = (mu && mu->advice) ? *mu->advice : AdviceString{};

    Replica self(*inner, ctx.own_label, ctx.neighbor_labels, ctx.params);
    for (int rr = 0; rr < round; ++rr) {
      if (rr == 0) {
        self.observe(mu ? Observation::received(kSource, make_payload(mu->bytes)) : first);
      } else if (rr % 3 == 0) {
        const auto s = static_cast<std::size_t>(rr / 3);
        if (s <= advice.entries.size() && advice.entries[s - 1]) {
          const ComponentDesc& d = *advice.entries[s - 1];
          self.observe(Observation::received(kSource, make_component_desc(d.component, d.tau)));
        } else {
          self.observe(Observation::phi());
        }
      } else {
        self.observe(ctx.history[static_cast<std::size_t>(rr)]);
      }
    }
    return only_transmit(self.action());
  };

  auto setup = [inner, r](const Network& net, SourceInput& input) {
    input.advice = make_advice(*inner, net, r);
  };
  return memoized(Protocol(p3.name() + "/pi4", StageTag::Pi4, p3.params(), std::move(step), std::move(setup)));
}

const Protocol& ReductionChain::stage(int s) const {
  switch (s) {
    case 1: return pi1;
    case 2: return pi2;
    case 3: return pi3;
    case 4: return pi4;
    default: throw Error(ErrorCode::StageMismatch, "stage must be 1..4");
  }
}

ReductionChain reduce(const Protocol& p0, int r) {
  Protocol p1 = to_pi1(p0);
  Protocol p2 = to_pi2(p1);
  Protocol p3 = to_pi3(p2);
  Protocol p4 = to_pi4(p3, r);
  return {std::move(p1), std::move(p2), std::move(p3), std::move(p4)};
}

}  // namespace radiolb
