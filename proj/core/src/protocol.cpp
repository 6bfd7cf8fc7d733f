#include "radiolb/protocol.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace radiolb {

bool operator==(const ProtocolContext& a, const ProtocolContext& b) {
  return a.own_label == b.own_label && a.round == b.round && a.params == b.params &&
         a.neighbor_labels == b.neighbor_labels && a.history == b.history;
}

std::size_t hash_value(const ProtocolContext& ctx) noexcept {
  std::size_t h = hash_combine(ctx.own_label, static_cast<std::size_t>(ctx.round));
  h = hash_combine(h, ctx.params.m * 131 + ctx.params.k);
  for (Label l : ctx.neighbor_labels) h = hash_combine(h, l);
  for (const auto& o : ctx.history) h = hash_combine(h, o.hash());
  return h;
}

const char* to_string(StageTag stage) {
  switch (stage) {
    case StageTag::Pi0: return "pi0";
    case StageTag::Pi1: return "pi1";
    case StageTag::Pi2: return "pi2";
    case StageTag::Pi3: return "pi3";
    case StageTag::Pi4: return "pi4";
  }
  return "?";
}

Protocol::Protocol(std::string name, StageTag stage, C2Params params, StepFn step, SetupFn setup)
    : name_(std::move(name)),
      stage_(stage),
      params_(params),
      step_(std::move(step)),
      setup_(std::move(setup)) {}

namespace {

struct MemoKey {
  ProtocolContext ctx;
  std::optional<SourceInput> input;
  std::size_t hash;

  friend bool operator==(const MemoKey& a, const MemoKey& b) {
    return a.hash == b.hash && a.input == b.input && a.ctx == b.ctx;
  }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept { return k.hash; }
};

std::size_t hash_input(const SourceInput& in) {
  std::size_t h = std::hash<std::string>{}(in.payload);
  if (in.topology) {
    for (auto t : in.topology->taus) h = hash_combine(h, static_cast<std::size_t>(t));
  }
  if (in.advice) h = hash_combine(h, hash_advice(*in.advice));
  return h;
}

struct MemoCache {
  std::mutex mu;
  std::unordered_map<MemoKey, Action, MemoKeyHash> entries;
  std::size_t max_entries;
};

}  // namespace

Protocol memoized(Protocol proto, std::size_t max_entries) {
  auto cache = std::make_shared<MemoCache>();
  cache->max_entries = max_entries;
  auto inner = std::make_shared<const Protocol>(proto);
  auto step = [cache, inner](const ProtocolContext& ctx, const SourceInput* input) -> Action {
    MemoKey key{ctx, input ? std::optional<SourceInput>(*input) : std::nullopt, hash_value(ctx)};
    if (input) key.hash = hash_combine(key.hash, hash_input(*input));
    {
      std::lock_guard lock(cache->mu);
      if (auto it = cache->entries.find(key); it != cache->entries.end()) return it->second;
    }
    Action a = inner->step(ctx, input);
    std::lock_guard lock(cache->mu);
    if (cache->entries.size() >= cache->max_entries) cache->entries.clear();
    cache->entries.emplace(std::move(key), a);
    return a;
  };
  Protocol::SetupFn setup;
  if (inner->has_setup()) {
    setup = [inner](const Network& net, SourceInput& in) { inner->setup(net, in); };
  }
  return Protocol(proto.name(), proto.stage(), proto.params(), std::move(step), std::move(setup));
}

}  // namespace radiolb
