#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "radiolb/engine.hpp"

namespace radiolb {

/// Message fields after the tag: mu -> hex, advice|null; comp -> i, tau;
/// opaque -> hex; relay -> from, then the inner message's tag and fields.
void append_message_fields(nlohmann::ordered_json& arr, const Message& msg);

/// {"round":t,"tx":[[label,tag,fields...]...],"rx":[[label,from,tag]...],"collided":[...]}
/// Listeners that heard nothing appear in rx as [label,null,"phi"].
nlohmann::ordered_json round_to_json(const Network& net, const RoundRecord& rec);

/// One compact JSON object per line, one line per round.
void write_trace_jsonl(std::ostream& out, const Trace& trace);
std::string trace_to_jsonl(const Trace& trace);

std::string to_hex(const Bytes& bytes);

}  // namespace radiolb
