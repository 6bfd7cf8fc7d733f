#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace radiolb {

/// Node identifier. Label 0 is always the source.
using Label = std::uint32_t;
inline constexpr Label kSource = 0;

/// Opaque byte string (broadcast payload, protocol-private data).
using Bytes = std::string;

/// Description <i, tau> of one component: its index and its topology bitmask.
struct ComponentDesc {
  std::size_t component = 0;
  std::uint64_t tau = 0;

  friend bool operator==(const ComponentDesc&, const ComponentDesc&) = default;
  friend auto operator<=>(const ComponentDesc&, const ComponentDesc&) = default;
};

/// Per-round source messages of a component-describing protocol, entry t
/// (stored at index t-1) for t = 1..r-1. An empty optional is phi.
struct AdviceString {
  std::vector<std::optional<ComponentDesc>> entries;

  friend bool operator==(const AdviceString&, const AdviceString&) = default;
};

class Message;
using MessagePtr = std::shared_ptr<const Message>;

struct BroadcastPayload {
  Bytes bytes;
  std::optional<AdviceString> advice;
};

/// A message echoed by a relay node, carrying the original authenticated sender.
struct Relay {
  Label from = 0;
  MessagePtr inner;
};

struct Opaque {
  Bytes bytes;
};

/// Immutable message. Shared by pointer across histories; the structural hash
/// is computed once at construction.
class Message {
 public:
  using Body = std::variant<BroadcastPayload, ComponentDesc, Relay, Opaque>;

  explicit Message(Body body);

  const Body& body() const noexcept { return body_; }
  std::size_t hash() const noexcept { return hash_; }

  bool is_payload() const noexcept { return std::holds_alternative<BroadcastPayload>(body_); }
  const BroadcastPayload* payload() const noexcept { return std::get_if<BroadcastPayload>(&body_); }
  const ComponentDesc* component_desc() const noexcept { return std::get_if<ComponentDesc>(&body_); }
  const Relay* relay() const noexcept { return std::get_if<Relay>(&body_); }
  const Opaque* opaque() const noexcept { return std::get_if<Opaque>(&body_); }

  /// Trace tag: "mu", "comp", "relay" or "opaque".
  const char* tag() const noexcept;

  friend bool operator==(const Message& a, const Message& b);

 private:
  Body body_;
  std::size_t hash_;
};

bool same_message(const MessagePtr& a, const MessagePtr& b);

MessagePtr make_payload(Bytes bytes, std::optional<AdviceString> advice = std::nullopt);
MessagePtr make_component_desc(std::size_t component, std::uint64_t tau);
MessagePtr make_relay(Label from, MessagePtr inner);
MessagePtr make_opaque(Bytes bytes);

/// What a node sees at the end of a round: either a message with its
/// authenticated sender, or phi. Silence and collision both give phi.
struct Observation {
  Label from = 0;
  MessagePtr msg;

  static Observation phi() { return {}; }
  static Observation received(Label from, MessagePtr msg) { return {from, std::move(msg)}; }

  bool is_phi() const noexcept { return msg == nullptr; }
  std::size_t hash() const noexcept;

  friend bool operator==(const Observation& a, const Observation& b);
};

struct Action {
  enum class Kind { Listen, Transmit, Inactive };

  Kind kind = Kind::Listen;
  MessagePtr msg;

  static Action listen() { return {Kind::Listen, nullptr}; }
  static Action inactive() { return {Kind::Inactive, nullptr}; }
  static Action transmit(MessagePtr m) { return {Kind::Transmit, std::move(m)}; }

  bool is_listen() const noexcept { return kind == Kind::Listen; }
  bool is_transmit() const noexcept { return kind == Kind::Transmit; }

  friend bool operator==(const Action& a, const Action& b);
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_advice(const AdviceString& advice) noexcept;

}  // namespace radiolb
