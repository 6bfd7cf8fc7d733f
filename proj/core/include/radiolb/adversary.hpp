#pragma once

#include <map>
#include <optional>

#include "radiolb/c2.hpp"
#include "radiolb/protocol.hpp"
#include "radiolb/prune.hpp"
#include "radiolb/selective.hpp"

namespace radiolb {

/// Family F_0..F_(r-1) over the free component's layer-1 indices: x is in
/// F_j iff in some Z-variant x is wired to the component's layer-2 node y,
/// transmits in round 3j+1, and y has heard nothing through round 3j.
struct DerivedFamily {
  std::size_t component = 0;
  SetFamily family;
  /// Per nonempty Z (mask): first j whose round 3j+1 informs y, if any.
  std::map<std::uint64_t, std::optional<int>> first_success;
};

struct Witness {
  TopologyVector network;
  std::uint64_t unhit_z = 0;
  int budget = 0;
  bool verified = false;
};

/// Throws FreeComponentMissing unless pr.free_component == i.
DerivedFamily derive_family(const Protocol& p4, const PruneResult& pr, std::size_t i, int r,
                            const C2Params& params);

struct AdversaryReport {
  PruneResult prune;
  std::optional<DerivedFamily> family;  // absent when no component is free
  std::optional<Witness> witness;
};

/// Full pipeline: reductions, Prune, derived family, first unhit Z in
/// lexicographic order. A returned witness has passed cross_check; a
/// disagreement throws Internal. Without a free component, the Prune
/// survivors are checked directly under the uniform advice.
AdversaryReport run_adversary(const Protocol& p0, int r, const C2Params& params);
std::optional<Witness> find_witness(const Protocol& p0, int r, const C2Params& params);

/// True iff `p0` run directly on the witness network is incomplete at w.budget.
bool cross_check(const Protocol& p0, const Witness& w, const C2Params& params);

}  // namespace radiolb
