#include <doctest.h>

#include "hwcc/oracle.hpp"
#include "support.hpp"

using namespace hwcc;
using hwcc::test::C;
using hwcc::test::W;

TEST_CASE("parsing both syntaxes") {
  CHECK(C("+12++") == C("+,1,2,+,+"));
  CHECK(C("(1+2+)") == C("1,+,2,+"));
  CHECK(C(" 1 , + ").size() == 2);
  CHECK(C("").empty());
  const auto big = C("1,2,3,4,5,6,7,8,9,10,+");
  CHECK(big.size() == 11);
  CHECK(big.number(10) == 10);
  CHECK(big.to_string() == "1,2,3,4,5,6,7,8,9,10,+");
  CHECK(C("+1+").to_string() == "+1+");
  CHECK(C("+1+").to_token_string() == "+,1,+");
}

TEST_CASE("parse errors name the slot") {
  const auto slot_of = [](const char* text) {
    try {
      (void)Clan::parse(text);
    } catch (const ClanError& e) {
      return e.slot();
    }
    return -1;
  };
  CHECK(slot_of("1+3") == 3);
  CHECK(slot_of("2+") == 1);
  CHECK(slot_of("+,+,-") == 3);
  CHECK(slot_of("+a") == 2);
  CHECK(slot_of("1,,2") == 2);
  CHECK(slot_of("1,0") == 2);
  CHECK(slot_of("21") == 1);
  CHECK(slot_of("+1+") == -1);
}

TEST_CASE("canonical relabeling and masks") {
  const std::vector<int> raw{0, 5, 9, 0, 2};
  CHECK(Clan::canonical(raw) == C("+12+3"));
  CHECK(Clan::from_mask(4, 0b0101) == C("1+2+"));
  CHECK(Clan::all_plus(3) == C("+++"));
  CHECK(Clan::all_numbers(3) == C("123"));
  const auto naive = test::clans_naive(6);
  const auto lib = all_clans(6);
  CHECK(std::set<Clan>(naive.begin(), naive.end()) == std::set<Clan>(lib.begin(), lib.end()));
  CHECK(C("+1") < C("1+"));
}

TEST_CASE("full clans") {
  CHECK(to_full(C("+12++")).to_string() == "+12++|--21-");
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : all_clans(n)) CHECK(from_full(to_full(c)) == c);
  }
  CHECK_THROWS_AS(from_full(FullClan{{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_full(FullClan{{0, 0}}), std::invalid_argument);
}

TEST_CASE("bijection with the highest weight set") {
  CHECK(clan_from_w(W("5,-1,-2,4,3")) == C("+12++"));
  CHECK(clan_from_w(W("4,3,2,1")) == C("++++"));
  CHECK(clan_from_w(W("-1,-2,-3")) == C("123"));
  CHECK(w_from_clan(C("12+34++")) == W("-1,-2,7,-3,-4,6,5"));
  CHECK(w_from_clan(C("+1+23++")) == W("7,-1,6,-2,-3,5,4"));
  CHECK(w_from_clan(C("+++")) == W("3,2,1"));
  CHECK_THROWS_AS(clan_from_w(W("-2,-1,3")), std::invalid_argument);
  for (int n = 1; n <= 10; ++n) {
    for (const auto& c : all_clans(n)) CHECK(clan_from_w(w_from_clan(c)) == c);
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& w : script_w_elements(n)) CHECK(w_from_clan(clan_from_w(w)) == w);
  }
}

TEST_CASE("tau on clans matches tau on W") {
  CHECK(tau_clan(C("++12")) == TauSet{1, 3, 4});
  CHECK(tau_clan(C("1+2+")) == TauSet{1, 3});
  CHECK(tau_clan(C("+1+")) == TauSet{2});
  for (int n = 1; n <= 8; ++n) {
    for (const auto& c : all_clans(n)) CHECK(tau_clan(c) == tau(w_from_clan(c)));
  }
}

TEST_CASE("dimension") {
  CHECK(dim(C("1+")) == 3);
  CHECK(dim(C("1+2+")) == 12);
  for (int n = 1; n <= 6; ++n) CHECK(dim(Clan::all_numbers(n)) == n * n);
}

TEST_CASE("s_op") {
  CHECK(s_op(C("++++"), 4) == C("+++1"));
  CHECK(s_op(C("+++1"), 3) == C("++1+"));
  CHECK_FALSE(s_op(C("++"), 1).has_value());
  CHECK(s_op(C("1++"), 3) == C("1+2"));
  CHECK_THROWS_AS(s_op(C("++"), 3), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& c : all_clans(n)) {
      for (int j = 1; j <= n; ++j) {
        if (const auto s = s_op(c, j)) {
          CHECK(dim(*s) == dim(c) + 1);
          CHECK(closure_leq(c, *s));
        }
      }
    }
  }
}

TEST_CASE("closure order") {
  CHECK(closure_leq(C("++++"), C("1+2+")));
  CHECK(closure_leq(C("1+"), C("1+")));
  CHECK_FALSE(closure_leq(C("12"), C("++")));
  CHECK(plus_prefix_counts(C("1+2+")) == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(closure_leq(C("+"), C("++")), std::invalid_argument);
  // Antisymmetry and transitivity.
  const auto clans = all_clans(5);
  for (const auto& a : clans) {
    for (const auto& b : clans) {
      if (a != b) CHECK_FALSE((closure_leq(a, b) && closure_leq(b, a)));
      if (!closure_leq(a, b)) continue;
      for (const auto& c : clans) {
        if (closure_leq(b, c)) CHECK(closure_leq(a, c));
      }
    }
  }
}

TEST_CASE("T operators: displayed rules") {
  CHECK(t_op(C("++++"), 4, 3) == std::vector<Clan>{C("+++1")});
  CHECK(t_op(C("1+2+"), 2, 1) == std::vector<Clan>{C("+12+")});
  CHECK(t_op(C("+1+"), 1, 2) == std::vector<Clan>{C("++1")});
  CHECK(t_op(C("+12"), 1, 2) == std::vector<Clan>{C("1+2")});
  CHECK(t_op(C("+12+"), 1, 2) == std::vector<Clan>{C("1+2+")});
  CHECK(t_op(C("++1+"), 2, 1) == std::vector<Clan>{C("+1++")});
  CHECK(t_op(C("1+2"), 2, 1) == std::vector<Clan>{C("+12")});
  CHECK(t_op(C("1+"), 2, 1) == std::vector<Clan>{C("+1")});
  auto pair = t_op(C("++1"), 2, 3);
  REQUIRE(pair.has_value());
  std::sort(pair->begin(), pair->end());
  CHECK(*pair == std::vector<Clan>{C("+++"), C("+1+")});
  CHECK_FALSE(t_op(C("++"), 1, 2).has_value());
  CHECK_THROWS_AS(t_op(C("+++"), 1, 3), std::invalid_argument);
}

TEST_CASE("T operators agree with the Weyl group definition") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& c : all_clans(n)) {
      for (int j = 1; j < n; ++j) {
        for (const auto& [a, b] : {std::pair{j, j + 1}, std::pair{j + 1, j}}) {
          auto lhs = t_op(c, a, b);
          if (lhs) std::sort(lhs->begin(), lhs->end());
          CHECK(lhs == t_op_weyl(c, a, b));
          if (!lhs) continue;
          for (const auto& r : *lhs) {
            CHECK(test::tau_contains(tau_clan(r), a));
            CHECK_FALSE(test::tau_contains(tau_clan(r), b));
          }
          if (std::max(a, b) < n) CHECK(t_op(lhs->front(), b, a) == std::vector<Clan>{c});
        }
      }
    }
  }
}

TEST_CASE("decompose, compose and lift") {
  auto d = decompose(C("12+34++"));
  CHECK(d.head == Head::One);
  CHECK(d.tail == C("1+23++"));
  d = decompose(C("+1+23++"));
  CHECK(d.head == Head::Plus);
  CHECK(d.tail == C("1+23++"));
  d = decompose(C("+"));
  CHECK(d.head == Head::Plus);
  CHECK(d.tail.empty());
  CHECK_THROWS_AS(decompose(Clan()), std::invalid_argument);
  CHECK(compose(Head::One, C("1+23++")) == C("12+34++"));

  CHECK(lift_w(Head::One, W("1,-2,7,-3,-4,6,5")) == W("-1,-2,7,-3,-4,6,5"));
  CHECK(lift_w(Head::Plus, W("1,-2,7,-3,-4,6,5")) == W("7,-1,6,-2,-3,5,4"));
  CHECK(lift_w(Head::Plus, SignedPermutation::identity(7)) == W("7,1,2,3,4,5,6"));
  CHECK_THROWS_AS(lift_w(Head::One, W("2,1")), std::invalid_argument);
  CHECK(embed_fixing_one(W("-1,3,2")) == W("1,-2,4,3"));

  for (int n = 2; n <= 8; ++n) {
    for (const auto& c : all_clans(n)) {
      const auto [head, tail] = decompose(c);
      CHECK(compose(head, tail) == c);
      CHECK(clan_from_w(lift_w(head, embed_fixing_one(w_from_clan(tail)))) == c);
    }
  }
}
