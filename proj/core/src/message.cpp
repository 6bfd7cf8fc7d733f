#include "radiolb/message.hpp"

#include <functional>
#include <type_traits>

namespace radiolb {

namespace {

std::size_t hash_bytes(const Bytes& b) { return std::hash<std::string>{}(b); }

std::size_t hash_body(const Message::Body& body) {
  std::size_t h = body.index() * 0x51ed27ULL;
  std::visit(
      [&h](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BroadcastPayload>) {
          h = hash_combine(h, hash_bytes(v.bytes));
          h = hash_combine(h, v.advice ? hash_advice(*v.advice) : 0x7fULL);
        } else if constexpr (std::is_same_v<T, ComponentDesc>) {
          h = hash_combine(h, v.component);
          h = hash_combine(h, static_cast<std::size_t>(v.tau));
        } else if constexpr (std::is_same_v<T, Relay>) {
          h = hash_combine(h, v.from);
          h = hash_combine(h, v.inner ? v.inner->hash() : 0);
        } else {
          h = hash_combine(h, hash_bytes(v.bytes));
        }
      },
      body);
  return h;
}

}  // namespace

std::size_t hash_advice(const AdviceString& advice) noexcept {
  std::size_t h = advice.entries.size();
  for (const auto& e : advice.entries) {
    h = hash_combine(h, e ? hash_combine(e->component, static_cast<std::size_t>(e->tau)) : 0x3ULL);
  }
  return h;
}

Message::Message(Body body) : body_(std::move(body)), hash_(hash_body(body_)) {}

const char* Message::tag() const noexcept {
  switch (body_.index()) {
    case 0: return "mu";
    case 1: return "comp";
    case 2: return "relay";
    default: return "opaque";
  }
}

bool same_message(const MessagePtr& a, const MessagePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Message& a, const Message& b) {
  if (&a == &b) return true;
  if (a.hash_ != b.hash_ || a.body_.index() != b.body_.index()) return false;
  return std::visit(
      [&b](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        const auto& vb = std::get<T>(b.body_);
        if constexpr (std::is_same_v<T, BroadcastPayload>) {
          return va.bytes == vb.bytes && va.advice == vb.advice;
        } else if constexpr (std::is_same_v<T, ComponentDesc>) {
          return va == vb;
        } else if constexpr (std::is_same_v<T, Relay>) {
          return va.from == vb.from && same_message(va.inner, vb.inner);
        } else {
          return va.bytes == vb.bytes;
        }
      },
      a.body_);
}

MessagePtr make_payload(Bytes bytes, std::optional<AdviceString> advice) {
  return std::make_shared<const Message>(BroadcastPayload{std::move(bytes), std::move(advice)});
}

MessagePtr make_component_desc(std::size_t component, std::uint64_t tau) {
  return std::make_shared<const Message>(ComponentDesc{component, tau});
}

MessagePtr make_relay(Label from, MessagePtr inner) {
  return std::make_shared<const Message>(Relay{from, std::move(inner)});
}

MessagePtr make_opaque(Bytes bytes) {
  return std::make_shared<const Message>(Opaque{std::move(bytes)});
}

std::size_t Observation::hash() const noexcept {
  return msg ? hash_combine(from + 1, msg->hash()) : 0;
}

bool operator==(const Observation& a, const Observation& b) {
  if (a.is_phi() || b.is_phi()) return a.is_phi() && b.is_phi();
  return a.from == b.from && same_message(a.msg, b.msg);
}

bool operator==(const Action& a, const Action& b) {
  return a.kind == b.kind && same_message(a.msg, b.msg);
}

}  // namespace radiolb
