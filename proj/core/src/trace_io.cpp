#include "radiolb/trace_io.hpp"

#include <ostream>
#include <sstream>

#include "radiolb/reductions.hpp"

namespace radiolb {

std::string to_hex(const Bytes& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xF];
  }
  return out;
}

void append_message_fields(nlohmann::ordered_json& arr, const Message& msg) {
  arr.push_back(msg.tag());
  if (const auto* p = msg.payload()) {
    arr.push_back(to_hex(p->bytes));
    if (p->advice) {
      arr.push_back(encode_advice(*p->advice));
    } else {
      arr.push_back(nullptr);
    }
  } else if (const auto* c = msg.component_desc()) {
    arr.push_back(c->component);
    arr.push_back(c->tau);
  } else if (const auto* r = msg.relay()) {
    arr.push_back(r->from);
    append_message_fields(arr, *r->inner);
  } else if (const auto* o = msg.opaque()) {
    arr.push_back(to_hex(o->bytes));
  }
}

nlohmann::ordered_json round_to_json(const Network& net, const RoundRecord& rec) {
  using nlohmann::ordered_json;
  ordered_json tx = ordered_json::array();
  ordered_json rx = ordered_json::array();
  for (std::size_t v = 0; v < net.size(); ++v) {
    const Label label = net.labels()[v];
    const Action& a = rec.actions[v];
    if (a.is_transmit()) {
      ordered_json e = ordered_json::array({label});
      append_message_fields(e, *a.msg);
      tx.push_back(std::move(e));
    } else if (a.is_listen()) {
      const Observation& o = rec.deliveries[v];
      if (o.is_phi()) {
        rx.push_back(ordered_json::array({label, nullptr, "phi"}));
      } else {
        rx.push_back(ordered_json::array({label, o.from, o.msg->tag()}));
      }
    }
  }
  ordered_json collided = ordered_json::array();
  for (Label l : rec.collided_receivers) collided.push_back(l);

  ordered_json j;
  j["round"] = rec.round;
  j["tx"] = std::move(tx);
  j["rx"] = std::move(rx);
  j["collided"] = std::move(collided);
  return j;
}

void write_trace_jsonl(std::ostream& out, const Trace& trace) {
  for (const auto& rec : trace.rounds) out << round_to_json(trace.network, rec).dump() << '\n';
}

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream ss;
  write_trace_jsonl(ss, trace);
  return ss.str();
}

}  // namespace radiolb
