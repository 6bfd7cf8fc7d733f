#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "radiolb/reductions.hpp"

using namespace radiolb;
using fixtures::completion;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("layer-phased round-robin on the four-node instance") {
  const C2Params p{1, 2};
  const auto pi1 = to_pi1(round_robin(p));
  CHECK(pi1.stage() == StageTag::Pi1);
  const auto tr = run(build_c2(p, {{3}}), pi1, 9);
  CHECK(tr.transmitters(0) == std::vector<Label>{0});
  CHECK(tr.transmitters(4) == std::vector<Label>{1});
  CHECK(tr.transmitters(7) == std::vector<Label>{2});
  CHECK(tr.informed.at(3) == 4);
  // The original completes at 2; layer 2 hears at 3*1+1, so completion is 5.
  CHECK(completion_round(tr) == 5);
}

TEST_CASE("silent stays silent after round 0 at every stage") {
  const C2Params p{2, 2};
  const auto chain = reduce(silent_l1(p), 4);
  for (int s = 1; s <= 4; ++s) {
    const auto tr = run(build_c2(p, {{3, 1}}), chain.stage(s), 12);
    CHECK(tr.transmitters(0) == std::vector<Label>{0});
    for (int t = 1; t < 12; ++t) CHECK(tr.transmitters(t).empty());
  }
}

TEST_CASE("transmitters obey the layer phase at every stage") {
  for (const C2Params p : {C2Params{2, 2}, C2Params{1, 3}}) {
    for (const auto& p0 : fixtures::prey(p)) {
      const int R = static_cast<int>(p.m * p.k) + 2;
      const auto chain = reduce(p0, R);
      for (const auto& tv : enumerate_c2(p)) {
        const auto net = build_c2(p, tv);
        for (int s = 1; s <= 4; ++s) {
          const auto tr = run(net, chain.stage(s), 3 * R);
          for (int t = 0; t < 3 * R; ++t) {
            for (Label v : tr.transmitters(t)) CHECK(layer_of(v, p) == t % 3);
          }
        }
      }
    }
  }
}

TEST_CASE("stage order is enforced") {
  const C2Params p{1, 2};
  const auto p0 = round_robin(p);
  const auto p1 = to_pi1(p0);
  const auto net = build_c2(p, {{1}});
  CHECK(code_of([&] { to_pi2(p0); }) == ErrorCode::StageMismatch);
  CHECK(code_of([&] { to_pi3(p1); }) == ErrorCode::StageMismatch);
  CHECK(code_of([&] { make_advice(p1, net, 2); }) == ErrorCode::StageMismatch);
  CHECK(code_of([&] { to_pi4(to_pi2(p1), 2); }) == ErrorCode::StageMismatch);
  CHECK(to_pi2(p1).stage() == StageTag::Pi2);
}

TEST_CASE("the echo stage repeats what the source heard") {
  const C2Params p{2, 2};
  for (const auto& p0 : fixtures::prey(p)) {
    const auto chain = reduce(p0, 6);
    for (const auto& tv : enumerate_c2(p)) {
      const auto net = build_c2(p, tv);
      const auto tr = run(net, chain.pi2, 18);
      CHECK(tr.action(kSource, 0).is_transmit());
      CHECK(tr.action(kSource, 0).msg->is_payload());
      for (int t = 1; 3 * t < 18; ++t) {
        const auto& heard = tr.delivery(kSource, 3 * t - 2);
        const auto& act = tr.action(kSource, 3 * t);
        if (heard.is_phi()) {
          CHECK_FALSE(act.is_transmit());
          continue;
        }
        REQUIRE(act.is_transmit());
        const auto* relay = act.msg->relay();
        REQUIRE(relay != nullptr);
        CHECK(relay->from == heard.from);
        CHECK(same_message(relay->inner, heard.msg));
      }
      if (tr.transmitters(4).size() >= 2) CHECK_FALSE(tr.action(kSource, 6).is_transmit());
    }
  }
}

TEST_CASE("component descriptions on the seven-node instance") {
  const C2Params p{2, 2};
  const auto chain = reduce(round_robin(p), 5);
  const auto tr = run(build_c2(p, {{3, 1}}), chain.pi3, 15);
  CHECK(tr.transmitters(10) == std::vector<Label>{3});
  const auto& act = tr.action(kSource, 12);
  REQUIRE(act.is_transmit());
  REQUIRE(act.msg->component_desc() != nullptr);
  CHECK(*act.msg->component_desc() == ComponentDesc{1, 1});
  CHECK_FALSE(tr.action(kSource, 3).is_transmit());
}

TEST_CASE("stages 1, 2 and 3 complete together network by network") {
  for (const C2Params p : {C2Params{2, 2}, C2Params{2, 3}}) {
    for (const auto& p0 : fixtures::prey(p)) {
      const int R = static_cast<int>(p.m * p.k) + 2;
      const auto chain = reduce(p0, R);
      for (const auto& tv : enumerate_c2(p)) {
        const auto c1 = completion(chain.pi1, p, tv, 3 * R);
        CHECK(completion(chain.pi2, p, tv, 3 * R) == c1);
        CHECK(completion(chain.pi3, p, tv, 3 * R) == c1);
      }
    }
  }
}

TEST_CASE("advice examples") {
  const C2Params p{1, 2};
  const auto net = build_c2(p, {{3}});
  const auto silent = reduce(silent_l1(p), 4);
  CHECK(make_advice(silent.pi3, net, 4) == AdviceString{{std::nullopt, std::nullopt, std::nullopt}});
  const auto rr = reduce(round_robin(p), 3);
  const auto adv = make_advice(rr.pi3, net, 3);
  CHECK(adv == AdviceString{{std::nullopt, ComponentDesc{0, 3}}});
  CHECK(make_advice(rr.pi3, net, 1).entries.empty());
}

TEST_CASE("advice equals the source transmissions of a separate run") {
  const C2Params p{2, 2};
  for (const auto& p0 : fixtures::prey(p)) {
    const int r = 6;
    const auto chain = reduce(p0, r);
    for (const auto& tv : enumerate_c2(p)) {
      const auto net = build_c2(p, tv);
      const auto adv = make_advice(chain.pi3, net, r);
      const auto tr = run(net, chain.pi3, 3 * r);
      REQUIRE(adv.entries.size() == static_cast<std::size_t>(r - 1));
      for (int t = 1; t < r; ++t) {
        const auto& act = tr.action(kSource, 3 * t);
        const auto& e = adv.entries[t - 1];
        CHECK(act.is_transmit() == e.has_value());
        if (e) CHECK(*act.msg->component_desc() == *e);
      }
    }
  }
}

TEST_CASE("advised stage matches stage 3 and the source speaks once") {
  const C2Params p{2, 2};
  const int r = 6;
  for (const auto& p0 : fixtures::prey(p)) {
    const auto chain = reduce(p0, r);
    for (const auto& tv : enumerate_c2(p)) {
      const auto net = build_c2(p, tv);
      const auto tr4 = run(net, chain.pi4, 3 * r);
      CHECK(completion_round(tr4) == completion(chain.pi3, p, tv, 3 * r));
      int spoke = 0;
      for (int t = 0; t < 3 * r; ++t) spoke += tr4.action(kSource, t).is_transmit() ? 1 : 0;
      CHECK(spoke == 1);
      const auto* mu = tr4.action(kSource, 0).msg->payload();
      REQUIRE(mu != nullptr);
      CHECK(mu->advice == make_advice(chain.pi3, net, r));
    }
  }
}

TEST_CASE("foreign advice can change the outcome") {
  const C2Params p{2, 2};
  const int r = 8;
  const auto chain = reduce(fixtures::adaptive(p), r);
  const auto family = enumerate_c2(p);
  bool differs = false;
  for (const auto& n : family) {
    const auto own = completion(chain.pi4, p, n, 3 * r);
    const auto c0 = completion(fixtures::adaptive(p), p, n, r);
    CHECK(own == (c0 ? std::optional<int>(3 * *c0 - 1) : std::nullopt));
    for (const auto& m : family) {
      if (m == n) continue;
      RunOptions opts;
      opts.source_input = SourceInput{kDefaultPayload, std::nullopt, make_advice(chain.pi3, build_c2(p, m), r)};
      const auto other = completion_round(run(build_c2(p, n), chain.pi4, 3 * r, opts));
      differs = differs || other != own;
    }
  }
  CHECK(differs);

  RunOptions wrong;
  wrong.source_input = SourceInput{kDefaultPayload, std::nullopt, make_advice(chain.pi3, build_c2(p, {{2, 1}}), r)};
  CHECK(completion(chain.pi4, p, {{1, 1}}, 3 * r).has_value());
  CHECK_FALSE(completion_round(run(build_c2(p, {{1, 1}}), chain.pi4, 3 * r, wrong)).has_value());
}

TEST_CASE("completion maps to 3c - 1 at every stage") {
  for (const C2Params p : {C2Params{1, 2}, C2Params{2, 2}, C2Params{2, 3}}) {
    const int R = static_cast<int>(p.m * p.k) + 2;
    const auto p0 = round_robin(p);
    const auto chain = reduce(p0, R);
    for (const auto& tv : enumerate_c2(p)) {
      const auto c = oracle::round_robin_completion(p.m, p.k, tv.taus, R);
      REQUIRE(c.has_value());
      for (int s = 1; s <= 4; ++s) CHECK(completion(chain.stage(s), p, tv, 3 * R) == 3 * *c - 1);
    }
  }
}

TEST_CASE("an adaptive protocol keeps its behavior through every stage") {
  for (const C2Params p : {C2Params{2, 2}, C2Params{2, 3}, C2Params{3, 2}}) {
    const int r = 8;
    const auto p0 = fixtures::adaptive(p);
    const auto chain = reduce(p0, r);
    for (const auto& tv : enumerate_c2(p)) {
      CHECK(check_legality(p0, build_c2(p, tv), r).empty());
      const auto c0 = completion(p0, p, tv, r);
      for (int s = 1; s <= 4; ++s) {
        CAPTURE(s);
        const auto cs = completion(chain.stage(s), p, tv, 3 * r);
        CHECK(cs == (c0 ? std::optional<int>(3 * *c0 - 1) : std::nullopt));
      }
    }
  }
}
