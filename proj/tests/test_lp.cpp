#include <doctest.h>

#include "chains/lp.hpp"

#include <vector>

using namespace chains;

namespace {

using Status = SimplexResult::Status;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size() && i < x.size(); ++i) sum += a[i] * x[i];
  return sum;
}

// Optimal solutions must satisfy every constraint exactly; rational
// arithmetic leaves no tolerance to hide behind.
void check_feasible(const SimplexResult& r, const std::vector<LinearConstraint>& cons,
                    const std::vector<Rational>& objective) {
  REQUIRE(r.status == Status::Optimal);
  for (const Rational& x : r.solution) CHECK(x >= 0);
  for (const auto& c : cons) {
    Rational lhs = dot(c.coeffs, r.solution);
    switch (c.rel) {
      case Rel::Le: CHECK(lhs <= c.rhs); break;
      case Rel::Ge: CHECK(lhs >= c.rhs); break;
      case Rel::Eq: CHECK(lhs == c.rhs); break;
    }
  }
  CHECK(dot(objective, r.solution) == r.objective);
}

}  // namespace

TEST_CASE("two-variable optimum on a vertex") {
  std::vector<Rational> obj = {3, 2};
  std::vector<LinearConstraint> cons = {
      {{1, 1}, Rel::Le, 4},
      {{1, 3}, Rel::Le, 6},
  };
  auto r = simplex_maximize(obj, cons, 2);
  check_feasible(r, cons, obj);
  CHECK(r.objective == 12);
  CHECK(r.solution == std::vector<Rational>{4, 0});
}

TEST_CASE("equality system with a unique point") {
  std::vector<Rational> obj = {1, 2};
  std::vector<LinearConstraint> cons = {
      {{1, 1}, Rel::Eq, 4},
      {{1, -1}, Rel::Eq, 2},
  };
  auto r = simplex_maximize(obj, cons, 2);
  check_feasible(r, cons, obj);
  CHECK(r.solution == std::vector<Rational>{3, 1});
  CHECK(r.objective == 5);
}

TEST_CASE("infeasible systems are reported") {
  auto r = simplex_maximize({1, 1}, {{{1, 1}, Rel::Ge, 5}, {{1, 1}, Rel::Le, 3}}, 2);
  CHECK(r.status == Status::Infeasible);

  // A zero row with nonzero right-hand side can never be satisfied.
  auto zero = simplex_maximize({1}, {{{0}, Rel::Eq, 1}}, 1);
  CHECK(zero.status == Status::Infeasible);
}

TEST_CASE("unbounded directions are reported") {
  auto r = simplex_maximize({1}, {{{-1}, Rel::Le, 1}}, 1);
  CHECK(r.status == Status::Unbounded);

  auto free_axis = simplex_maximize({0, 1}, {{{1}, Rel::Le, 2}}, 2);
  CHECK(free_axis.status == Status::Unbounded);
}

TEST_CASE("negative right-hand sides are normalized") {
  std::vector<Rational> obj = {-1};
  std::vector<LinearConstraint> cons = {{{-1}, Rel::Le, -5}};  // x >= 5
  auto r = simplex_maximize(obj, cons, 1);
  check_feasible(r, cons, obj);
  CHECK(r.solution == std::vector<Rational>{5});
  CHECK(r.objective == -5);
}

TEST_CASE("short coefficient rows extend with zeros") {
  std::vector<Rational> obj = {1, 1};
  std::vector<LinearConstraint> cons = {
      {{1}, Rel::Le, 2},       // only x constrained
      {{0, 1}, Rel::Le, 3},
  };
  auto r = simplex_maximize(obj, cons, 2);
  check_feasible(r, cons, obj);
  CHECK(r.objective == 5);
}

TEST_CASE("surplus rows pass through phase one") {
  std::vector<Rational> obj = {1, 1};
  std::vector<LinearConstraint> cons = {
      {{1, 1}, Rel::Ge, 2},
      {{1, 0}, Rel::Le, 3},
      {{0, 1}, Rel::Le, 4},
  };
  auto r = simplex_maximize(obj, cons, 2);
  check_feasible(r, cons, obj);
  CHECK(r.objective == 7);
}

TEST_CASE("cycling-prone instance terminates at its optimum") {
  // The classic degenerate instance that cycles under naive pivoting.
  std::vector<Rational> obj = {Rational(3, 4), -150, Rational(1, 50), -6};
  std::vector<LinearConstraint> cons = {
      {{Rational(1, 4), -60, Rational(-1, 25), 9}, Rel::Le, 0},
      {{Rational(1, 2), -90, Rational(-1, 50), 3}, Rel::Le, 0},
      {{0, 0, 1, 0}, Rel::Le, 1},
  };
  auto r = simplex_maximize(obj, cons, 4);
  check_feasible(r, cons, obj);
  CHECK(r.objective == Rational(1, 20));
}

TEST_CASE("artificial columns stay out of phase two") {
  // Margin-style system that once terminated with a bogus unbounded status:
  // after phase one, a pivot sequence gave an artificial column a positive
  // reduced cost, it re-entered, and no ratio bound existed.
  std::vector<Rational> obj = {0, 0, 0, 0, 1, -1};
  std::vector<LinearConstraint> cons = {
      {{1, 1, 1, 1, 0, 0}, Rel::Eq, 1},
      {{-1, 1, 0, 0, 0, 0}, Rel::Ge, 0},
      {{0, -1, 1, 0, 0, 0}, Rel::Ge, 0},
      {{2, 2, 0, 2, 1, -1}, Rel::Le, 1},
  };
  auto r = simplex_maximize(obj, cons, 6);
  check_feasible(r, cons, obj);
  CHECK(r.objective == 1);
}

TEST_CASE("margin objective finds the widest slack") {
  // One short set, one long set, entries kept above a floor; the best margin
  // is pinned by the two subset rows meeting.
  std::vector<Rational> obj = {0, 0, 0, 0, 1};
  std::vector<LinearConstraint> cons = {
      {{1, 1, 1, 1, 0}, Rel::Eq, 1},
      {{1, 0, 0, 0, 0}, Rel::Ge, Rational(1, 100)},
      {{0, 1, 0, 0, 0}, Rel::Ge, Rational(1, 100)},
      {{0, 0, 1, 0, 0}, Rel::Ge, Rational(1, 100)},
      {{0, 0, 0, 1, 0}, Rel::Ge, Rational(1, 100)},
      {{0, 0, 0, 2, 1}, Rel::Le, 1},          // {4} stays short by delta
      {{2, 2, 2, 0, -1}, Rel::Ge, 1},         // {1,2,3} stays long by delta
  };
  auto r = simplex_maximize(obj, cons, 5);
  check_feasible(r, cons, obj);
  CHECK(r.objective == Rational(49, 50));
}

TEST_CASE("objective of the zero vector is zero") {
  auto r = simplex_maximize({0, 0}, {{{1, 1}, Rel::Le, 1}}, 2);
  REQUIRE(r.status == Status::Optimal);
  CHECK(r.objective == 0);
}
