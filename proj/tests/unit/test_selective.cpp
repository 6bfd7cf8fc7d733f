#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "radiolb/error.hpp"
#include "radiolb/selective.hpp"

using namespace radiolb;

TEST_CASE("selectivity examples") {
  CHECK(is_selective({2, {1, 2}}, 2, 2).selective);
  const auto bad = is_selective({2, {3}}, 2, 2);
  CHECK_FALSE(bad.selective);
  // {0} and {1} each meet {0,1} once; only {0,1} itself is missed.
  CHECK(bad.witness == 0b11);
  for (std::size_t n = 1; n <= 6; ++n) {
    SetFamily singles{n, {}};
    for (std::size_t j = 0; j < n; ++j) singles.sets.push_back(std::uint64_t{1} << j);
    for (std::size_t k = 1; k <= n; ++k) CHECK(is_selective(singles, n, k).selective);
  }
  try {
    is_selective({21, {}}, 21, 2);
    FAIL("expected UniverseTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UniverseTooLarge);
  }
}

TEST_CASE("subset order follows sorted element lists") {
  CHECK(lex_less(0b001, 0b011));
  CHECK(lex_less(0b011, 0b111));
  CHECK(lex_less(0b111, 0b101));
  CHECK(lex_less(0b101, 0b010));
  CHECK_FALSE(lex_less(0b010, 0b010));
  const auto all = small_subsets(3, 3);
  CHECK(all == std::vector<std::uint64_t>{0b001, 0b011, 0b111, 0b101, 0b010, 0b110, 0b100});
  CHECK(small_subsets(3, 1) == std::vector<std::uint64_t>{0b001, 0b010, 0b100});
  CHECK(mask_elements(0b1010) == std::vector<std::size_t>{1, 3});
  CHECK(elements_mask({1, 3}) == 0b1010);
}

TEST_CASE("witness is the smallest unhit set") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    SetFamily fam{n, {}};
    const int len = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int s = 0; s < len; ++s) fam.sets.push_back(std::uniform_int_distribution<std::uint64_t>(0, 15)(rng));
    std::optional<std::vector<std::size_t>> want;
    for (std::uint64_t z = 1; z < 16; ++z) {
      if (static_cast<std::size_t>(std::popcount(z)) > k) continue;
      bool hit = false;
      for (auto f : fam.sets) hit = hit || std::popcount(f & z) == 1;
      if (hit) continue;
      std::vector<std::size_t> elems;
      for (std::size_t j = 0; j < n; ++j) {
        if ((z >> j) & 1U) elems.push_back(j);
      }
      if (!want || elems < *want) want = elems;
    }
    const auto got = is_selective(fam, n, k);
    CHECK(got.selective == !want.has_value());
    if (want) CHECK(mask_elements(*got.witness) == *want);
  }
}

TEST_CASE("checker agrees with the oracle on all small families") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks); ++pick) {
      SetFamily fam{n, {}};
      for (std::uint64_t s = 0; s < masks; ++s) {
        if ((pick >> s) & 1U) fam.sets.push_back(s);
      }
      for (std::size_t k = 1; k <= n; ++k) CHECK(is_selective(fam, n, k).selective == oracle::selective(n, k, fam.sets));
    }
  }
}

TEST_CASE("selectivity is closed downward in k") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks); ++pick) {
      SetFamily fam{n, {}};
      for (std::uint64_t s = 0; s < masks; ++s) {
        if ((pick >> s) & 1U) fam.sets.push_back(s);
      }
      for (std::size_t k = n; k >= 2; --k) {
        if (!is_selective(fam, n, k).selective) continue;
        for (std::size_t kk = 1; kk < k; ++kk) REQUIRE(is_selective(fam, n, kk).selective);
      }
    }
  }
}

TEST_CASE("greedy families verify and sit between the exact minimum and n") {
  CHECK(greedy_selective(1, 1) == SetFamily{1, {1}});
  CHECK(greedy_selective(2, 2).sets.size() == 2);
  CHECK(greedy_selective(4, 4).sets.size() <= 4);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto fam = greedy_selective(n, k);
      CHECK(fam.universe == n);
      CHECK(is_selective(fam, n, k).selective);
      CHECK(oracle::selective(n, k, fam.sets));
      CHECK(fam.sets.size() <= n);
      if (n <= 4) CHECK(min_selective_size(n, k) <= fam.sets.size());
    }
  }
}

TEST_CASE("exact minimum") {
  CHECK(min_selective_size(2, 2) == 2);
  CHECK(min_selective_size(1, 1) == 1);
  const auto m33 = min_selective_size(3, 3);
  CHECK(m33 >= std::log2(3.0));
  CHECK(m33 <= 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(min_selective_size(n, k) == oracle::min_selective(n, k));
    }
  }
  CHECK(min_selective_size(5, 2) >= 1);
  CHECK_THROWS_AS(min_selective_size(6, 2), Error);
}

TEST_CASE("size bound and global round bound") {
  const auto b = size_bound(128, 2);
  CHECK(b.value == 0.5);
  CHECK(b.in_range);
  CHECK(size_bound(std::uint64_t{1} << 20, std::uint64_t{1} << 10).value == doctest::Approx(1024.0 / 24.0 * 10.0));
  CHECK(size_bound(std::uint64_t{1} << 20, std::uint64_t{1} << 10).in_range);
  CHECK_FALSE(size_bound(128, 3).in_range);
  CHECK_FALSE(size_bound(128, 1).in_range);
  CHECK_FALSE(size_bound(2, 2).in_range);

  CHECK(global_round_bound(1536ULL * 1536ULL) == 1);
  CHECK(global_round_bound(4ULL * 1536ULL * 1536ULL) == 2);
  CHECK(global_round_bound(1536ULL * 1536ULL + 1) == 2);
  CHECK(global_round_bound(1) == 1);
}

TEST_CASE("family text format") {
  const SetFamily fam{4, {0b0011, 0, 0b1000}};
  const auto text = encode_family(fam);
  CHECK(text == "n=4\n0,1\n\n3\n");
  CHECK(decode_family(text) == fam);
  CHECK_THROWS_AS(decode_family("n=2\n0,2\n"), Error);
  CHECK_THROWS_AS(decode_family("m=2\n"), Error);
  CHECK_THROWS_AS(decode_family("n=2\n0,x\n"), Error);
}
