#include "radiolb/selective.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "radiolb/error.hpp"

namespace radiolb {

std::vector<std::size_t> mask_elements(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t elements_mask(const std::vector<std::size_t>& elems) {
  std::uint64_t m = 0;
  for (auto e : elems) m |= std::uint64_t{1} << e;
  return m;
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
  auto ea = mask_elements(a);
  auto eb = mask_elements(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

namespace {

void require_universe(std::size_t n, std::size_t k, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::UniverseTooLarge,
                "universe " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (k < 1 || k > n) {
    throw Error(ErrorCode::IndexOutOfUniverse, "need 1 <= k <= n");
  }
}

// Preorder DFS over sorted element lists yields lexicographic order.
void collect(std::size_t n, std::size_t k, std::uint64_t prefix, std::size_t next, std::size_t size,
             std::vector<std::uint64_t>& out) {
  for (std::size_t e = next; e < n; ++e) {
    const std::uint64_t z = prefix | (std::uint64_t{1} << e);
    out.push_back(z);
    if (size + 1 < k) collect(n, k, z, e + 1, size + 1, out);
  }
}

bool selects(std::uint64_t set, std::uint64_t z) { return std::popcount(set & z) == 1; }

}  // namespace

std::vector<std::uint64_t> small_subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  collect(n, std::min(k, n), 0, 0, 0, out);
  return out;
}

SelectivityCheck is_selective(const SetFamily& fam, std::size_t n, std::size_t k) {
  require_universe(n, k, kSelectivityCap);
  for (std::uint64_t z : small_subsets(n, k)) {
    const bool hit = std::any_of(fam.sets.begin(), fam.sets.end(),
                                 [z](std::uint64_t f) { return selects(f, z); });
    if (!hit) return {false, z};
  }
  return {true, std::nullopt};
}

SetFamily greedy_selective(std::size_t n, std::size_t k) {
  require_universe(n, k, kGreedyCap);
  const auto zs = small_subsets(n, k);
  std::vector<bool> done(zs.size(), false);
  std::size_t remaining = zs.size();
  SetFamily fam{n, {}};
  const std::uint64_t limit = std::uint64_t{1} << n;

  while (remaining > 0) {
    std::uint64_t best = 0;
    std::size_t best_gain = 0;
    for (std::uint64_t c = 1; c < limit; ++c) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        if (!done[i] && selects(c, zs[i])) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    fam.sets.push_back(best);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (!done[i] && selects(best, zs[i])) {
        done[i] = true;
        --remaining;
      }
    }
  }
  return fam;
}

namespace {

struct MinSearch {
  std::vector<std::uint64_t> zs;
  std::uint64_t limit;
  std::vector<std::uint64_t> chosen;

  bool all_selected() const {
    return std::all_of(zs.begin(), zs.end(), [this](std::uint64_t z) {
      return std::any_of(chosen.begin(), chosen.end(), [z](std::uint64_t f) { return selects(f, z); });
    });
  }

  std::optional<std::uint64_t> first_unselected() const {
    for (std::uint64_t z : zs) {
      if (std::none_of(chosen.begin(), chosen.end(), [z](std::uint64_t f) { return selects(f, z); })) {
        return z;
      }
    }
    return std::nullopt;
  }

  // Unordered families as strictly increasing mask sequences.
  bool extend(std::uint64_t next, std::size_t depth) {
    auto open = first_unselected();
    if (!open) return true;
    if (depth == 0) return false;
    bool reachable = false;
    for (std::uint64_t c = next; c < limit; ++c) {
      if (selects(c, *open)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) return false;
    for (std::uint64_t c = next; c < limit; ++c) {
      chosen.push_back(c);
      if (extend(c + 1, depth - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::size_t min_selective_size(std::size_t n, std::size_t k) {
  require_universe(n, k, kExactMinCap);
  MinSearch s{small_subsets(n, k), std::uint64_t{1} << n, {}};
  for (std::size_t depth = 1;; ++depth) {
    s.chosen.clear();
    if (s.extend(1, depth)) return depth;
  }
}

SizeBound size_bound(std::uint64_t n, std::uint64_t k) {
  SizeBound b;
  if (k == 0) return b;
  b.value = static_cast<double>(k) / 24.0 * std::log2(static_cast<double>(n) / static_cast<double>(k));
  b.in_range = n > 2 && k >= 2 && 64 * k <= n;
  return b;
}

std::uint64_t global_round_bound(std::uint64_t n) {
  // Smallest q with (1536 q)^2 >= n.
  std::uint64_t q = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n)) / 1536.0));
  auto covers = [n](std::uint64_t c) {
    const std::uint64_t side = 1536 * c;
    return side >= (std::uint64_t{1} << 32) || side * side >= n;
  };
  while (q > 0 && covers(q - 1)) --q;
  while (!covers(q)) ++q;
  return std::max<std::uint64_t>(q, 1);
}

std::string encode_family(const SetFamily& fam) {
  std::string out = "n=" + std::to_string(fam.universe) + "\n";
  for (std::uint64_t s : fam.sets) {
    bool first = true;
    for (auto e : mask_elements(s)) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SetFamily decode_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0) {
    throw Error(ErrorCode::Parse, "family must start with 'n=<n>'");
  }
  SetFamily fam;
  {
    const char* b = line.data() + 2;
    const char* e = line.data() + line.size();
    auto [p, ec] = std::from_chars(b, e, fam.universe);
    if (ec != std::errc{} || p != e) throw Error(ErrorCode::Parse, "bad universe size");
    if (fam.universe > 63) throw Error(ErrorCode::UniverseTooLarge, "universe above 63");
  }
  while (std::getline(in, line)) {
    std::uint64_t mask = 0;
    const char* p = line.data();
    const char* e = line.data() + line.size();
    while (p < e) {
      std::size_t v = 0;
      auto [q, ec] = std::from_chars(p, e, v);
      if (ec != std::errc{}) throw Error(ErrorCode::Parse, "bad set element in '" + line + "'");
      if (v >= fam.universe) {
        throw Error(ErrorCode::IndexOutOfUniverse, "element " + std::to_string(v) + " outside [n]");
      }
      mask |= std::uint64_t{1} << v;
      p = q;
      if (p < e) {
        if (*p != ',') throw Error(ErrorCode::Parse, "expected ',' in '" + line + "'");
        ++p;
      }
    }
    fam.sets.push_back(mask);
  }
  return fam;
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot open family file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return decode_family(ss.str());
}

}  // namespace radiolb
