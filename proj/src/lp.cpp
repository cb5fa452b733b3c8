#include "chains/lp.hpp"

#include <stdexcept>

namespace chains {

namespace {

struct Tableau {
  int rows = 0;
  int cols = 0;                           // variable columns, rhs lives at index cols
  std::vector<std::vector<Rational>> a;   // rows x (cols + 1)
  std::vector<Rational> obj;              // cols + 1; obj[cols] = -objective value
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rational p = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    auto& row = a[static_cast<std::size_t>(r)];
    for (auto& v : row) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rational factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      auto& target = a[static_cast<std::size_t>(i)];
      for (int j = 0; j <= cols; ++j)
        target[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
    }
    Rational factor = obj[static_cast<std::size_t>(c)];
    if (factor != 0)
      for (int j = 0; j <= cols; ++j)
        obj[static_cast<std::size_t>(j)] -= factor * row[static_cast<std::size_t>(j)];
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Rebuilds the reduced-cost row for the given cost vector under the current basis.
  void load_objective(const std::vector<Rational>& cost) {
    obj.assign(static_cast<std::size_t>(cols) + 1, Rational(0));
    for (int j = 0; j < cols && j < static_cast<int>(cost.size()); ++j)
      obj[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
    for (int r = 0; r < rows; ++r) {
      int b = basis[static_cast<std::size_t>(r)];
      Rational cb = (b < static_cast<int>(cost.size())) ? cost[static_cast<std::size_t>(b)] : Rational(0);
      if (cb == 0) continue;
      for (int j = 0; j <= cols; ++j)
        obj[static_cast<std::size_t>(j)] -= cb * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
  }

  // Bland's rule: smallest eligible entering column, leaving row by minimum
  // ratio with smallest basic column breaking ties. Returns false when optimal,
  // throws on an unbounded direction. Columns at or past enter_limit can never
  // enter the basis (phase 2 shuts out the artificials this way).
  bool step(int enter_limit) {
    int enter = -1;
    for (int j = 0; j < enter_limit; ++j)
      if (obj[static_cast<std::size_t>(j)] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rational best_ratio = 0;
    for (int r = 0; r < rows; ++r) {
      const Rational& coef = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(enter)];
      if (coef <= 0) continue;
      Rational ratio = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols)] / coef;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)]))
      {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("simplex: unbounded direction");
    pivot(leave, enter);
    return true;
  }

  Rational objective_value() const { return -obj[static_cast<std::size_t>(cols)]; }
};

}  // namespace

SimplexResult simplex_maximize(const std::vector<Rational>& objective,
                               const std::vector<LinearConstraint>& constraints,
                               int num_vars) {
  if (num_vars <= 0) throw std::invalid_argument("simplex: need at least one variable");

  struct Row {
    std::vector<Rational> a;
    Rel rel;
    Rational b;
  };
  std::vector<Row> rows;
  rows.reserve(constraints.size());
  for (const auto& c : constraints) {
    Row row;
    row.a.assign(static_cast<std::size_t>(num_vars), Rational(0));
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
      if (j >= static_cast<std::size_t>(num_vars))
        throw std::invalid_argument("simplex: constraint wider than variable count");
      row.a[j] = c.coeffs[j];
    }
    row.rel = c.rel;
    row.b = c.rhs;
    if (row.b < 0) {
      for (auto& v : row.a) v = -v;
      row.b = -row.b;
      row.rel = row.rel == Rel::Le ? Rel::Ge : (row.rel == Rel::Ge ? Rel::Le : Rel::Eq);
    }
    rows.push_back(std::move(row));
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  for (const auto& row : rows)
    if (row.rel != Rel::Eq) ++slack_count;
  int artificial_count = 0;
  for (const auto& row : rows)
    if (row.rel != Rel::Le) ++artificial_count;

  Tableau t;
  t.rows = m;
  t.cols = num_vars + slack_count + artificial_count;
  t.a.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(t.cols) + 1, Rational(0)));
  t.basis.assign(static_cast<std::size_t>(m), -1);

  int next_slack = num_vars;
  int first_artificial = num_vars + slack_count;
  int next_artificial = first_artificial;
  for (int r = 0; r < m; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    for (int j = 0; j < num_vars; ++j)
      t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = row.a[static_cast<std::size_t>(j)];
    t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.cols)] = row.b;
    if (row.rel == Rel::Le) {
      t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(next_slack)] = 1;
      t.basis[static_cast<std::size_t>(r)] = next_slack;
      ++next_slack;
    } else if (row.rel == Rel::Ge) {
      t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(next_slack)] = -1;
      ++next_slack;
      t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(next_artificial)] = 1;
      t.basis[static_cast<std::size_t>(r)] = next_artificial;
      ++next_artificial;
    } else {
      t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(next_artificial)] = 1;
      t.basis[static_cast<std::size_t>(r)] = next_artificial;
      ++next_artificial;
    }
  }

  SimplexResult result;

  if (artificial_count > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(t.cols), Rational(0));
    for (int j = first_artificial; j < t.cols; ++j) phase1[static_cast<std::size_t>(j)] = -1;
    t.load_objective(phase1);
    while (t.step(t.cols)) {
    }
    if (t.objective_value() != 0) {
      result.status = SimplexResult::Status::Infeasible;
      return result;
    }
    // Pivot leftover artificials out of the basis; an all-zero row is redundant.
    for (int r = 0; r < t.rows; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] < first_artificial) continue;
      int c = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) {
          c = j;
          break;
        }
      if (c >= 0) t.pivot(r, c);
    }
  }

  std::vector<Rational> phase2(static_cast<std::size_t>(t.cols), Rational(0));
  for (int j = 0; j < num_vars && j < static_cast<int>(objective.size()); ++j)
    phase2[static_cast<std::size_t>(j)] = objective[static_cast<std::size_t>(j)];
  t.load_objective(phase2);

  try {
    while (t.step(first_artificial)) {
    }
  } catch (const std::runtime_error&) {
    result.status = SimplexResult::Status::Unbounded;
    return result;
  }

  result.status = SimplexResult::Status::Optimal;
  result.solution.assign(static_cast<std::size_t>(num_vars), Rational(0));
  for (int r = 0; r < t.rows; ++r) {
    int b = t.basis[static_cast<std::size_t>(r)];
    if (b >= 0 && b < num_vars)
      result.solution[static_cast<std::size_t>(b)] = t.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.cols)];
  }
  result.objective = 0;
  for (int j = 0; j < num_vars && j < static_cast<int>(objective.size()); ++j)
    result.objective += objective[static_cast<std::size_t>(j)] * result.solution[static_cast<std::size_t>(j)];
  return result;
}

}  // namespace chains
