#include "chains/length_vector.hpp"
#include "chains/rational.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace chains;
namespace oracle = chains::testing;

TEST_CASE("rational literals") {
  CHECK(to_fraction_string(parse_rational("3")) == "3");
  CHECK(to_fraction_string(parse_rational("-2")) == "-2");
  CHECK(to_fraction_string(parse_rational("1/4")) == "1/4");
  CHECK(to_fraction_string(parse_rational("-3/9")) == "-1/3");
  CHECK(to_fraction_string(parse_rational("0.25")) == "1/4");
  CHECK(to_fraction_string(parse_rational("2.5e-1")) == "1/4");
  CHECK(to_fraction_string(parse_rational("1.5e2")) == "150");
  CHECK(to_fraction_string(parse_rational(" 7 / 2 ")) == "7/2");
  CHECK(to_fraction_string(parse_rational("010")) == "10");
  CHECK(to_fraction_string(parse_rational("0.010")) == "1/100");
  CHECK(parse_rational("0.5") == Rational(1, 2));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("mask helpers") {
  CHECK(mask_of({1, 3, 4}) == 0b1101u);
  CHECK(mask_elements(0b1101u) == std::vector<int>{1, 3, 4});
  CHECK(mask_to_string(mask_of({2, 3, 6})) == "{2,3,6}");
  CHECK(mask_to_string(0) == "{}");
  CHECK(popcount(0b1101u) == 3);
  CHECK(full_mask(4) == 0b1111u);
  CHECK(mask_contains(0b100u, 3));
  CHECK_FALSE(mask_contains(0b100u, 2));
}

TEST_CASE("parsing length vectors") {
  LengthVector csv = LengthVector::parse("1, 1, 1, 2, 3, 3");
  CHECK(csv.n() == 6);
  CHECK(csv.at(4) == Rational(2));
  CHECK(csv.total() == Rational(11));

  LengthVector json = LengthVector::parse(R"(["1/4", "1", "1", "1", "2", "2"])");
  CHECK(json.n() == 6);
  CHECK(json.at(1) == Rational(1, 4));

  LengthVector nums = LengthVector::parse("[1, 2, 3]");
  CHECK(nums.at(3) == Rational(3));

  CHECK_THROWS_AS(LengthVector::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LengthVector::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(LengthVector::parse("1,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(LengthVector::parse("1,-2,3"), std::invalid_argument);
  CHECK_THROWS_AS(LengthVector::parse("[true, 1, 1]"), std::invalid_argument);
  CHECK_THROWS_AS(LengthVector::parse("1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"),
                  std::invalid_argument);
}

TEST_CASE("scaled integer view") {
  LengthVector l = LengthVector::parse("1/4,1,1,1,2,2");
  CHECK(l.scaled() == std::vector<Int>{1, 4, 4, 4, 8, 8});
  CHECK(l.scaled_total() == 29);
  CHECK(l.fits64());
  CHECK(l.scaled_total64() == 29);

  // Coprime huge denominators push the scaled total past the int64 window.
  LengthVector big = LengthVector::parse("1/1073741824,1/3486784401,1");
  CHECK_FALSE(big.fits64());
  CHECK(classify_subset(big, mask_of({3})) == SubsetClass::Long);
  CHECK(classify_subset(big, mask_of({1, 2})) == SubsetClass::Short);
  CHECK(is_generic(big));
}

TEST_CASE("subset classification") {
  LengthVector l = LengthVector::parse("1,1,1,2,3,3");
  CHECK(classify_subset(l, 0) == SubsetClass::Short);
  CHECK(classify_subset(l, mask_of({2, 3, 6})) == SubsetClass::Short);
  CHECK(classify_subset(l, mask_of({5, 6})) == SubsetClass::Long);
  CHECK(classify_subset(l, full_mask(6)) == SubsetClass::Long);

  LengthVector square = LengthVector::parse("1,1,1,1");
  CHECK(classify_subset(square, mask_of({1, 2})) == SubsetClass::Degenerate);

  std::mt19937 rng(7u);
  for (int trial = 0; trial < 40; ++trial) {
    LengthVector r = oracle::random_generic(rng, 4 + trial % 5);
    Mask limit = full_mask(r.n());
    std::uniform_int_distribution<Mask> pick(0, limit);
    for (int i = 0; i < 20; ++i) {
      Mask m = pick(rng);
      CHECK(classify_subset(r, m) == oracle::classify_brute(r, m));
    }
  }
}

TEST_CASE("genericity and degenerate subsets") {
  CHECK(is_generic(LengthVector::parse("1,1,1,2,3,3")));
  CHECK(is_generic(LengthVector::parse("1,1,1,1,5")));
  CHECK_FALSE(is_generic(LengthVector::parse("1,1,1,1")));
  CHECK_FALSE(is_generic(LengthVector::parse("1,2,3,6")));

  auto square = LengthVector::parse("1,1,1,1");
  CHECK(degenerate_subsets(square) ==
        std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})});
  CHECK(degenerate_subsets(square, 2).size() == 2);
  CHECK(degenerate_subsets(LengthVector::parse("1,1,1,2,3,3")).empty());

  std::mt19937 rng(11u);
  std::uniform_int_distribution<int> small(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 4;
    std::vector<Rational> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back(small(rng));
    LengthVector l(std::move(entries));
    CHECK(is_generic(l) == oracle::generic_brute(l));
  }
}

TEST_CASE("dominance") {
  CHECK(is_dominated(LengthVector::parse("1,1,1,2,3,3")));
  CHECK(is_dominated(LengthVector::parse("1,2,2")));
  CHECK_FALSE(is_dominated(LengthVector::parse("1,1,1,1/2")));
  CHECK_FALSE(is_dominated(LengthVector::parse("3,1,2,1,1,2")));
}

TEST_CASE("normalization") {
  LengthVector l = LengthVector::parse("3,1,2,1,1,3");
  LengthVector norm = normalize(l);
  CHECK(norm.entries() ==
        std::vector<Rational>{1, 1, 1, 2, 3, 3});

  auto perm = normalize_permutation(l);
  CHECK(perm.size() == 6);
  CHECK(perm[5] == 6);
  for (int i = 1; i <= 6; ++i) CHECK(norm.at(perm[static_cast<std::size_t>(i) - 1]) == l.at(i));
  // Stability: the three equal entries keep their original order.
  CHECK(perm == std::vector<int>{5, 1, 4, 2, 3, 6});

  std::mt19937 rng(13u);
  for (int trial = 0; trial < 30; ++trial) {
    LengthVector r = oracle::random_generic(rng, 4 + trial % 6);
    LengthVector nr = normalize(r);
    for (int i = 1; i + 1 < r.n(); ++i) CHECK(nr.at(i) <= nr.at(i + 1));
    CHECK(nr.at(r.n()) == r.at(r.n()));
    CHECK(normalize(nr).entries() == nr.entries());
  }
}

TEST_CASE("chain space dimension") {
  CHECK(dimension(6, 3) == 7);
  CHECK(dimension(4, 4) == 5);
  CHECK(dimension(3, 2) == 0);
  CHECK(dimension(5, 3) == 5);
  CHECK_THROWS_AS(dimension(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(dimension(4, 1), std::invalid_argument);
}

TEST_CASE("enumeration cap") {
  int original = max_supported_n();
  set_max_supported_n(26);
  CHECK(max_supported_n() == 26);
  CHECK_NOTHROW(require_supported_n(26));
  CHECK_THROWS_AS(require_supported_n(27), std::invalid_argument);
  set_max_supported_n(100);
  CHECK(max_supported_n() == 30);
  set_max_supported_n(1);
  CHECK(max_supported_n() == 3);
  set_max_supported_n(original);
}
