// radiolb: command-line front end for the radio broadcast simulator and
// lower-bound adversary. Every report is one JSON object per line with
// sorted keys.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "radiolb/adversary.hpp"
#include "radiolb/c2.hpp"
#include "radiolb/engine.hpp"
#include "radiolb/error.hpp"
#include "radiolb/protocols.hpp"
#include "radiolb/prune.hpp"
#include "radiolb/reductions.hpp"
#include "radiolb/selective.hpp"
#include "radiolb/trace_io.hpp"

namespace {

using nlohmann::json;
using namespace radiolb;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

C2Instance load_net(const std::string& arg) {
  if (arg.rfind("c2:", 0) == 0) return decode_network(arg);
  std::ifstream f(arg);
  if (!f) throw Error(ErrorCode::Parse, "cannot open network file " + arg);
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty()) return decode_network(line);
  }
  throw Error(ErrorCode::Parse, "network file " + arg + " is empty");
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json mask_json(std::uint64_t mask) {
  json arr = json::array();
  for (auto e : mask_elements(mask)) arr.push_back(e);
  return arr;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void write_trace(const Trace& tr, const std::string& path) {
  if (path.empty()) {
    write_trace_jsonl(std::cout, tr);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write trace file " + path);
  write_trace_jsonl(out, tr);
}

struct Flags {
  std::string net;
  std::string protocol;
  std::string trace_path;
  std::string family_path;
  std::string selfam_mode;
  int rounds = 0;
  int stage = 1;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t kk = 0;
};

int cmd_simulate(const Flags& f) {
  const auto inst = load_net(f.net);
  const Protocol proto = make_protocol(f.protocol, inst.params);
  const Trace tr = run(build_c2(inst.params, inst.tv), proto, f.rounds);
  if (!f.trace_path.empty()) write_trace(tr, f.trace_path);
  emit({{"completion", opt_int(completion_round(tr))},
        {"net", encode_network(inst.params, inst.tv)},
        {"protocol", f.protocol},
        {"rounds", f.rounds}});
  return 0;
}

int cmd_enumerate(const Flags& f) {
  const C2Params params{f.m, f.k};
  for (const auto& tv : enumerate_c2(params)) std::cout << encode_network(params, tv) << '\n';
  return 0;
}

int cmd_transform(const Flags& f) {
  const auto inst = load_net(f.net);
  const Protocol p0 = make_protocol(f.protocol, inst.params);
  const ReductionChain chain = reduce(p0, f.rounds);
  const Protocol& proto = chain.stage(f.stage);
  const Network net = build_c2(inst.params, inst.tv);
  const int rounds = 3 * f.rounds;
  const Trace tr = run(net, proto, rounds);
  write_trace(tr, f.trace_path);

  json report{{"completion", opt_int(completion_round(tr))},
              {"net", encode_network(inst.params, inst.tv)},
              {"protocol", f.protocol},
              {"rounds", rounds},
              {"stage", f.stage}};
  if (f.stage == 4) report["advice"] = encode_advice(make_advice(chain.pi3, net, f.rounds));
  emit(report);
  return 0;
}

json prune_json(const PruneResult& pr, const C2Params& params) {
  json events = json::array();
  for (const auto& e : pr.event_seq) events.push_back(to_string(e));
  json marked = json::array();
  for (auto c : pr.marked) marked.push_back(c);
  return {{"advice", encode_advice(pr.advice)},
          {"base", encode_network(params, pr.base_net)},
          {"events", events},
          {"free_component", pr.free_component ? json(*pr.free_component) : json(nullptr)},
          {"marked", marked},
          {"survivors", pr.survivors.size()}};
}

int cmd_prune(const Flags& f) {
  const C2Params params{f.m, f.k};
  validate(params);
  const Protocol p0 = make_protocol(f.protocol, params);
  const ReductionChain chain = reduce(p0, f.rounds);
  json report = prune_json(run_prune(chain.pi3, f.rounds, params), params);
  report["protocol"] = f.protocol;
  report["rounds"] = f.rounds;
  emit(report);
  return 0;
}

int cmd_adversary(const Flags& f) {
  const C2Params params{f.m, f.k};
  validate(params);
  const Protocol p0 = make_protocol(f.protocol, params);
  const AdversaryReport rep = run_adversary(p0, f.rounds, params);
  json report{{"budget", f.rounds}, {"protocol", f.protocol}};
  if (!rep.witness) {
    report["result"] = "none";
  } else {
    const Witness& w = *rep.witness;
    report["result"] = "witness";
    report["network"] = encode_network(params, w.network);
    report["z"] = mask_json(w.unhit_z);
    report["verified"] = w.verified;
    report["free_component"] =
        rep.prune.free_component ? json(*rep.prune.free_component) : json(nullptr);
    report["family"] = rep.family ? json(encode_family(rep.family->family)) : json(nullptr);
  }
  emit(report);
  return 0;
}

int cmd_selfam(const Flags& f) {
  const auto n = static_cast<std::size_t>(f.n);
  const auto k = static_cast<std::size_t>(f.kk);
  if (f.selfam_mode == "verify") {
    if (f.family_path.empty()) throw Error(ErrorCode::Parse, "selfam verify needs --family");
    const SetFamily fam = read_family_file(f.family_path);
    const auto check = is_selective(fam, n, k);
    emit({{"k", k},
          {"n", n},
          {"selective", check.selective},
          {"witness", check.witness ? mask_json(*check.witness) : json(nullptr)}});
  } else if (f.selfam_mode == "greedy") {
    const SetFamily fam = greedy_selective(n, k);
    emit({{"family", encode_family(fam)}, {"k", k}, {"n", n}, {"size", fam.sets.size()}});
  } else if (f.selfam_mode == "min") {
    emit({{"k", k}, {"min_size", min_selective_size(n, k)}, {"n", n}});
  } else {
    const SizeBound b = size_bound(f.n, f.kk);
    emit({{"global_round_bound", global_round_bound(f.n)},
          {"in_range", b.in_range},
          {"k", f.kk},
          {"n", f.n},
          {"size_bound", b.value}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radio-network broadcast simulator and lower-bound adversary"};
  app.require_subcommand(1);
  Flags f;

  auto* sim = app.add_subcommand("simulate", "Run a protocol on one C2 network");
  sim->add_option("--net", f.net, "c2:m=..,k=..,taus=.. string or file")->required();
  sim->add_option("--protocol", f.protocol, "round-robin | silent | selfam:<file>")->required();
  sim->add_option("--rounds", f.rounds, "Round budget")->required()->check(CLI::NonNegativeNumber);
  sim->add_option("--trace", f.trace_path, "Write the JSONL trace here");

  auto* en = app.add_subcommand("enumerate", "List every C2 network for (m, k)");
  en->add_option("--m", f.m)->required()->check(CLI::PositiveNumber);
  en->add_option("--k", f.k)->required()->check(CLI::Range(1, 62));

  auto* tf = app.add_subcommand("transform", "Run a reduced protocol (stage 1..4)");
  tf->add_option("--protocol", f.protocol)->required();
  tf->add_option("--stage", f.stage)->required()->check(CLI::Range(1, 4));
  tf->add_option("--net", f.net)->required();
  tf->add_option("--rounds", f.rounds, "Original round budget; runs 3x rounds")
      ->required()
      ->check(CLI::PositiveNumber);
  tf->add_option("--trace", f.trace_path, "Write the JSONL trace here instead of stdout");

  auto* pr = app.add_subcommand("prune", "Run the pruning procedure over the C2 family");
  pr->add_option("--protocol", f.protocol)->required();
  pr->add_option("--rounds", f.rounds)->required()->check(CLI::PositiveNumber);
  pr->add_option("--m", f.m)->required()->check(CLI::PositiveNumber);
  pr->add_option("--k", f.k)->required()->check(CLI::Range(1, 62));

  auto* adv = app.add_subcommand("adversary", "Search for a witness network");
  adv->add_option("--protocol", f.protocol)->required();
  adv->add_option("--budget", f.rounds)->required()->check(CLI::PositiveNumber);
  adv->add_option("--m", f.m)->required()->check(CLI::PositiveNumber);
  adv->add_option("--k", f.k)->required()->check(CLI::Range(1, 62));

  auto* sf = app.add_subcommand("selfam", "Selective-family tools");
  sf->add_option("mode", f.selfam_mode)->required()->check(CLI::IsMember({"verify", "greedy", "min", "bound"}));
  sf->add_option("--n", f.n)->required()->check(CLI::PositiveNumber);
  sf->add_option("--k", f.kk)->required()->check(CLI::PositiveNumber);
  sf->add_option("--family", f.family_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sim) return cmd_simulate(f);
    if (*en) return cmd_enumerate(f);
    if (*tf) return cmd_transform(f);
    if (*pr) return cmd_prune(f);
    if (*adv) return cmd_adversary(f);
    return cmd_selfam(f);
  } catch (const Error& e) {
    std::cerr << "radiolb: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitDomain;
  }
}
