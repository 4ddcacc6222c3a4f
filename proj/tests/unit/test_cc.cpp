#include <doctest.h>

#include <thread>

#include "hwcc/cc.hpp"
#include "support.hpp"

using namespace hwcc;
using hwcc::test::C;

namespace {

std::vector<Clan> L(std::initializer_list<const char*> items) {
  std::vector<Clan> out;
  for (const char* s : items) out.push_back(C(s));
  return out;
}

}  // namespace

TEST_CASE("characteristic cycle examples") {
  CHECK(cc(C("1+")).display_order() == L({"1+", "++"}));
  CHECK(cc(C("1+2+")).display_order() == L({"1+2+", "1+++", "++1+", "++++"}));
  CHECK(cc(C("12+")).display_order() == L({"12+", "1++"}));
  CHECK(cc(C("+")).display_order() == L({"+"}));
  CHECK(cc(C("1")).display_order() == L({"1"}));
  CHECK(cc(C("+1+")).display_order() == L({"+1+", "+++"}));
}

TEST_CASE("leading term cycle examples") {
  CHECK(ltc(C("1+")).display_order() == L({"++"}));
  CHECK(ltc(C("+1+")) == cc(C("+1+")));
  CHECK(ltc(C("1+2+")).display_order() == L({"++1+", "++++"}));
  CHECK(ltc(C("1+2+")).support() == C("1+2+"));
}

TEST_CASE("associated variety") {
  CHECK(av(Clan::all_numbers(5)) == 0);
  CHECK(av(Clan::all_plus(5)) == 5);
  CHECK(av(C("1+2+")) == 4);
}

TEST_CASE("annihilator partner") {
  CHECK(annihilator_partner(C("1+")) == C("++"));
  CHECK(annihilator_partner(C("1+2+")) == C("++1+"));
  CHECK_FALSE(annihilator_partner(C("+1+2")).has_value());
  CHECK_FALSE(annihilator_partner(C("1++")).has_value());
  CHECK_FALSE(annihilator_partner(C("1")).has_value());
  CHECK(ltc(C("1+2+")).display_order() == cc(C("++1+")).display_order());
}

TEST_CASE("recursion cases") {
  CHECK(CcEngine::recursion_case(C("+")) == 0);
  CHECK(CcEngine::recursion_case(C("+1")) == 1);
  CHECK(CcEngine::recursion_case(C("12")) == 2);
  CHECK(CcEngine::recursion_case(C("1+")) == 3);
  CHECK(CcEngine::recursion_case(C("1++")) == 2);
  CHECK_THROWS_AS(CcEngine::recursion_case(Clan()), std::invalid_argument);
}

TEST_CASE("per-term invariants on random large clans") {
  std::mt19937_64 rng(2024);
  CcEngine engine;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 20 + trial;
    const auto c = test::random_clan(n, rng);
    const auto cyc = engine.cc(c);
    CHECK(cyc.multiplicity(c) == 1);
    const auto tc = tau_clan(c);
    for (const auto& [t, m] : cyc.terms()) {
      CHECK(m == 1);
      CHECK(closure_leq(t, c));
      const auto tt = tau_clan(t);
      CHECK(std::includes(tt.begin(), tt.end(), tc.begin(), tc.end()));
    }
    CHECK(engine.ltc(c).size() > 0);
  }
}

TEST_CASE("smooth supports give one term") {
  for (int n = 1; n <= 14; ++n) {
    for (int l = 0; l <= n; ++l) {
      std::vector<int> raw(static_cast<std::size_t>(n), 0);
      for (int i = l; i < n; ++i) raw[static_cast<std::size_t>(i)] = 1;
      const auto c = Clan::canonical(raw);
      CHECK(cc(c).size() == 1);
      CHECK(cc(c).contains(c));
    }
  }
}

TEST_CASE("engine is safe to share between threads") {
  const auto clans = all_clans(9);
  CcEngine serial;
  std::vector<CharacteristicCycle> expected;
  for (const auto& c : clans) expected.push_back(serial.cc(c));

  CcEngine shared;
  std::vector<std::vector<CharacteristicCycle>> got(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < got.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < clans.size(); ++i) got[t].push_back(shared.cc(clans[(i + t * 61) % clans.size()]));
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < got.size(); ++t)
    for (std::size_t i = 0; i < clans.size(); ++i) CHECK(got[t][i] == expected[(i + t * 61) % clans.size()]);
  CHECK(shared.memo_size() >= clans.size());
  shared.clear();
  CHECK(shared.memo_size() == 0);
}
