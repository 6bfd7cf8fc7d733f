#include "radiolb/prune.hpp"

#include <algorithm>

#include "radiolb/reductions.hpp"

namespace radiolb {

namespace {

void require_pi3(const Protocol& p) {
  if (p.stage() != StageTag::Pi3) {
    throw Error(ErrorCode::StageMismatch, std::string("expected a pi3 protocol, got ") + to_string(p.stage()));
  }
}

std::vector<Label> l1_transmitters(const Trace& trace, const C2Params& params, int round) {
  std::vector<Label> out;
  for (Label l : trace.transmitters(round)) {
    if (layer_of(l, params) == 1) out.push_back(l);
  }
  return out;
}

// Enough rounds to see every event for t <= r-1 and the source answers.
int horizon(int r) { return std::max(3 * (r - 1) + 1, 1); }

}  // namespace

std::string to_string(const Event& e) {
  switch (e.kind) {
    case Event::Kind::Silent: return "phi";
    case Event::Kind::Collision: return "rho";
    case Event::Kind::Single: return "<" + std::to_string(e.component) + ":" + std::to_string(e.tau) + ">";
  }
  return "?";
}

Event classify_event(const Trace& trace, const TopologyVector& tv, const C2Params& params, int t) {
  if (t < 1) throw Error(ErrorCode::Internal, "events are defined for t >= 1");
  const auto tx = l1_transmitters(trace, params, 3 * t - 2);
  if (tx.empty()) return Event::silent();
  if (tx.size() >= 2) return Event::collision();
  const std::size_t i = *component_of(tx.front(), params);
  return Event::single(i, tv.taus.at(i));
}

Event classify_event(const Protocol& p3, const Network& net, int t) {
  require_pi3(p3);
  const Trace tr = run(net, p3, 3 * t - 1);
  return classify_event(tr, topology_of(net, p3.params()), p3.params(), t);
}

std::vector<Event> event_sequence(const Protocol& p3, const TopologyVector& tv, int r) {
  require_pi3(p3);
  std::vector<Event> seq;
  if (r <= 1) return seq;
  const Trace tr = run(build_c2(p3.params(), tv), p3, horizon(r));
  for (int t = 1; t < r; ++t) seq.push_back(classify_event(tr, tv, p3.params(), t));
  return seq;
}

std::set<std::size_t> mark_components(const Protocol& p3, const Network& base, int r) {
  require_pi3(p3);
  std::set<std::size_t> marked;
  if (r <= 1) return marked;
  const C2Params& params = p3.params();
  const Trace tr = run(base, p3, horizon(r));
  for (int t = 1; t < r; ++t) {
    const auto tx = l1_transmitters(tr, params, 3 * t - 2);  // ascending labels
    for (std::size_t n = 0; n < std::min<std::size_t>(tx.size(), 2); ++n) {
      marked.insert(*component_of(tx[n], params));
    }
  }
  return marked;
}

PruneResult run_prune(const Protocol& p3, int r, const C2Params& params) {
  require_pi3(p3);
  if (r < 1) throw Error(ErrorCode::Internal, "prune needs r >= 1");
  const auto family = enumerate_c2(params);

  PruneResult res;
  std::vector<std::size_t> alive(family.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  std::vector<std::vector<Event>> events(family.size());
  if (r > 1) {
    for (std::size_t i = 0; i < family.size(); ++i) events[i] = event_sequence(p3, family[i], r);
  }

  for (int t = 1; t < r; ++t) {
    const auto ti = static_cast<std::size_t>(t - 1);
    auto has = [&](Event::Kind k) {
      return std::any_of(alive.begin(), alive.end(), [&](std::size_t i) { return events[i][ti].kind == k; });
    };
    std::vector<std::size_t> next;
    if (has(Event::Kind::Collision)) {
      for (std::size_t i : alive) {
        if (events[i][ti].kind == Event::Kind::Collision) next.push_back(i);
      }
    } else if (has(Event::Kind::Single)) {
      // `alive` stays in enumeration (lexicographic) order.
      const std::size_t chosen = *std::find_if(alive.begin(), alive.end(), [&](std::size_t i) {
        return events[i][ti].kind == Event::Kind::Single;
      });
      const Event fixed = events[chosen][ti];
      for (std::size_t i : alive) {
        if (events[i][ti] == fixed) next.push_back(i);
      }
    } else {
      continue;
    }
    alive = std::move(next);
  }

  for (std::size_t i : alive) res.survivors.push_back(family[i]);
  res.base_net = res.survivors.front();
  res.event_seq = events[alive.front()];
  const Network base = build_c2(params, res.base_net);
  res.advice = make_advice(p3, base, r);
  res.marked = mark_components(p3, base, r);
  for (std::size_t i = 0; i < params.m; ++i) {
    if (!res.marked.count(i)) {
      res.free_component = i;
      break;
    }
  }
  return res;
}

bool membership(const Protocol& p3, const TopologyVector& candidate, const PruneResult& result,
                const C2Params& params, int r) {
  validate(params, candidate);
  return event_sequence(p3, candidate, r) == result.event_seq;
}

}  // namespace radiolb
