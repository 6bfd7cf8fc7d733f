#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace radiolb {

/// Ordered family of subsets of [universe] = {0, ..., universe-1}, each a
/// bitmask. Order is significant: sets[t] is the set used in round t+1 by
/// family-driven schedules.
struct SetFamily {
  std::size_t universe = 0;
  std::vector<std::uint64_t> sets;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

inline constexpr std::size_t kSelectivityCap = 20;  // is_selective, greedy
inline constexpr std::size_t kGreedyCap = 12;
inline constexpr std::size_t kExactMinCap = 5;

std::vector<std::size_t> mask_elements(std::uint64_t mask);
std::uint64_t elements_mask(const std::vector<std::size_t>& elems);

/// Strict "sorted element list" lexicographic order on subsets:
/// {0} < {0,1} < {0,1,2} < {0,2} < {1} < ...
bool lex_less(std::uint64_t a, std::uint64_t b);

/// Every nonempty Z subset of [n] with |Z| <= k, in lex_less order.
std::vector<std::uint64_t> small_subsets(std::size_t n, std::size_t k);

struct SelectivityCheck {
  bool selective = false;
  std::optional<std::uint64_t> witness;  // smallest unhit Z when not selective
};

/// True iff every nonempty Z, |Z| <= k, meets some member in exactly one
/// element. Throws UniverseTooLarge for n > kSelectivityCap.
SelectivityCheck is_selective(const SetFamily& fam, std::size_t n, std::size_t k);

SetFamily greedy_selective(std::size_t n, std::size_t k);

/// Exact minimum size of an (n,k)-selective family (n <= kExactMinCap).
std::size_t min_selective_size(std::size_t n, std::size_t k);

struct SizeBound {
  double value = 0.0;
  bool in_range = false;  // n > 2 and 2 <= k <= n/64
};

/// k/24 * log2(n/k).
SizeBound size_bound(std::uint64_t n, std::uint64_t k);

/// ceil(sqrt(n) / 1536), computed exactly.
std::uint64_t global_round_bound(std::uint64_t n);

/// "n=<n>" then one set per line as comma-separated indices.
std::string encode_family(const SetFamily& fam);
SetFamily decode_family(const std::string& text);
SetFamily read_family_file(const std::string& path);

}  // namespace radiolb
