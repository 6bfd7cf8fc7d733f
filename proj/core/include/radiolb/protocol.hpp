#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radiolb/c2.hpp"
#include "radiolb/message.hpp"
#include "radiolb/network.hpp"

namespace radiolb {

/// Everything a node may base its action on: its own label, its neighbors'
/// labels, the round number, and what it observed in rounds 0..round-1.
struct ProtocolContext {
  Label own_label = 0;
  std::vector<Label> neighbor_labels;  // ascending
  int round = 0;
  std::vector<Observation> history;  // history.size() == round
  C2Params params;

  friend bool operator==(const ProtocolContext& a, const ProtocolContext& b);
};

std::size_t hash_value(const ProtocolContext& ctx) noexcept;

/// Private setup inputs handed only to the source: the broadcast payload,
/// and for the later transformed stages the full topology or an advice string.
struct SourceInput {
  Bytes payload;
  std::optional<TopologyVector> topology;
  std::optional<AdviceString> advice;

  friend bool operator==(const SourceInput&, const SourceInput&) = default;
};

enum class StageTag { Pi0, Pi1, Pi2, Pi3, Pi4 };

const char* to_string(StageTag stage);

/// A deterministic broadcast protocol: one pure step function run by every
/// node. `source_input` is non-null exactly when the engine steps the source.
class Protocol {
 public:
  using StepFn = std::function<Action(const ProtocolContext&, const SourceInput*)>;
  using SetupFn = std::function<void(const Network&, SourceInput&)>;

  Protocol(std::string name, StageTag stage, C2Params params, StepFn step, SetupFn setup = {});

  const std::string& name() const noexcept { return name_; }
  StageTag stage() const noexcept { return stage_; }
  const C2Params& params() const noexcept { return params_; }

  Action step(const ProtocolContext& ctx, const SourceInput* source_input = nullptr) const {
    return step_(ctx, source_input);
  }

  bool has_setup() const noexcept { return static_cast<bool>(setup_); }
  /// Fills the source's private inputs for a run on `net`.
  void setup(const Network& net, SourceInput& input) const {
    if (setup_) setup_(net, input);
  }

 private:
  std::string name_;
  StageTag stage_;
  C2Params params_;
  StepFn step_;
  SetupFn setup_;
};

/// Wraps `proto` with a thread-safe cache keyed on (context, source input).
/// Valid because step functions are pure; traces are unchanged.
Protocol memoized(Protocol proto, std::size_t max_entries = 1U << 18);

}  // namespace radiolb
