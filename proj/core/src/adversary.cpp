#include "radiolb/adversary.hpp"

#include <algorithm>

#include "radiolb/engine.hpp"
#include "radiolb/reductions.hpp"

namespace radiolb {

namespace {

RunOptions advised(const AdviceString& advice) {
  RunOptions opts;
  opts.source_input = SourceInput{kDefaultPayload, std::nullopt, advice};
  return opts;
}

}  // namespace

DerivedFamily derive_family(const Protocol& p4, const PruneResult& pr, std::size_t i, int r,
                            const C2Params& params) {
  if (!pr.free_component || *pr.free_component != i) {
    throw Error(ErrorCode::FreeComponentMissing,
                "component " + std::to_string(i) + " is not the free component of this prune result");
  }
  if (p4.stage() != StageTag::Pi4) throw Error(ErrorCode::StageMismatch, "derive_family needs a pi4 protocol");

  DerivedFamily df;
  df.component = i;
  df.family.universe = params.k;
  df.family.sets.assign(static_cast<std::size_t>(std::max(r, 0)), 0);
  const Label y = l2_label(params, i);
  const RunOptions opts = advised(pr.advice);

  for (std::uint64_t z : small_subsets(params.k, params.k)) {
    TopologyVector variant = pr.base_net;
    variant.taus[i] = z;
    const Trace tr = run(build_c2(params, variant), p4, 3 * r, opts);
    auto it = tr.informed.find(y);
    const int y_rx = it == tr.informed.end() ? -1 : it->second;

    std::optional<int> success;
    if (y_rx >= 0) success = (y_rx - 1) / 3;
    df.first_success[z] = success;

    for (int j = 0; j < r; ++j) {
      if (y_rx >= 0 && y_rx <= 3 * j) break;
      for (std::size_t x : mask_elements(z)) {
        if (tr.action(l1_label(params, i, x), 3 * j + 1).is_transmit()) {
          df.family.sets[static_cast<std::size_t>(j)] |= std::uint64_t{1} << x;
        }
      }
    }
  }
  return df;
}

bool cross_check(const Protocol& p0, const Witness& w, const C2Params& params) {
  const Trace tr = run(build_c2(params, w.network), p0, w.budget);
  return !completion_round(tr).has_value();
}

AdversaryReport run_adversary(const Protocol& p0, int r, const C2Params& params) {
  if (r < 1) throw Error(ErrorCode::Internal, "budget must be >= 1");
  const ReductionChain chain = reduce(p0, r);

  AdversaryReport rep;
  rep.prune = run_prune(chain.pi3, r, params);
  const PruneResult& pr = rep.prune;

  std::optional<Witness> candidate;
  if (pr.free_component) {
    const std::size_t i = *pr.free_component;
    rep.family = derive_family(chain.pi4, pr, i, r, params);
    for (std::uint64_t z : small_subsets(params.k, params.k)) {
      if (!rep.family->first_success.at(z)) {
        Witness w;
        w.network = pr.base_net;
        w.network.taus[i] = z;
        w.unhit_z = z;
        w.budget = r;
        candidate = w;
        break;
      }
    }
  } else {
    const RunOptions opts = advised(pr.advice);
    for (const auto& tv : pr.survivors) {
      const Trace tr = run(build_c2(params, tv), chain.pi4, 3 * r, opts);
      if (completion_round(tr)) continue;
      Witness w;
      w.network = tv;
      w.budget = r;
      for (std::size_t c = 0; c < params.m; ++c) {
        if (!tr.informed.count(l2_label(params, c))) {
          w.unhit_z = tv.taus[c];
          break;
        }
      }
      candidate = w;
      break;
    }
  }

  if (candidate) {
    candidate->verified = cross_check(p0, *candidate, params);
    if (!candidate->verified) {
      throw Error(ErrorCode::Internal, "reduction chain predicts failure on " +
                                           encode_network(params, candidate->network) +
                                           " but the original protocol completes");
    }
    rep.witness = candidate;
  }
  return rep;
}

std::optional<Witness> find_witness(const Protocol& p0, int r, const C2Params& params) {
  return run_adversary(p0, r, params).witness;
}

}  // namespace radiolb
