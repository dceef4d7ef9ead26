#include "pcup/lp.hpp"

#include <stdexcept>

namespace pcup::lp {

namespace {

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural columns, rhs is stored separately
  std::vector<Vec> a;
  Vec rhs;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  void drop_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --rows;
  }
};

// Maximizes cost . x over the current tableau, never entering columns with
// allowed[j] == false. Returns false when unbounded.
bool run_simplex(Tableau& t, const Vec& cost, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t enter = t.cols;
    for (std::size_t j = 0; j < t.cols && enter == t.cols; ++j) {
      if (!allowed[j]) continue;
      Rat reduced = cost[j];
      for (std::size_t i = 0; i < t.rows; ++i)
        if (t.a[i][j] != 0) reduced -= cost[t.basis[i]] * t.a[i][j];
      if (reduced > 0) enter = j;
    }
    if (enter == t.cols) return true;
    std::size_t leave = t.rows;
    Rat best;
    for (std::size_t i = 0; i < t.rows; ++i) {
      if (t.a[i][enter] <= 0) continue;
      Rat ratio = t.rhs[i] / t.a[i][enter];
      if (leave == t.rows || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.rows) return false;
    t.pivot(leave, enter);
  }
}

}  // namespace

Result maximize(const Problem& problem, const Vec& objective) {
  const std::size_t n = problem.num_vars;
  if (objective.size() != n) throw std::invalid_argument("lp: objective size");
  std::vector<bool> is_free = problem.is_free;
  is_free.resize(n, false);

  // Column layout: one column per nonnegative variable, two (x+, x-) per free
  // variable, then slacks/surplus, then artificials.
  std::vector<std::size_t> col_of(n);
  std::size_t structural = 0;
  for (std::size_t v = 0; v < n; ++v) {
    col_of[v] = structural;
    structural += is_free[v] ? 2 : 1;
  }
  const std::size_t m = problem.constraints.size();
  std::size_t slack_count = 0;
  for (const auto& c : problem.constraints)
    if (c.rel != Relation::eq) ++slack_count;
  const std::size_t first_slack = structural;
  const std::size_t first_art = structural + slack_count;
  const std::size_t total = first_art + m;

  Tableau t;
  t.rows = m;
  t.cols = total;
  t.a.assign(m, Vec(total, Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.basis.assign(m, 0);
  std::size_t next_slack = first_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    if (c.coeffs.size() != n) throw std::invalid_argument("lp: constraint size");
    Rat flip = c.rhs < 0 ? -1 : 1;
    for (std::size_t v = 0; v < n; ++v) {
      t.a[i][col_of[v]] = flip * c.coeffs[v];
      if (is_free[v]) t.a[i][col_of[v] + 1] = -flip * c.coeffs[v];
    }
    if (c.rel == Relation::le) t.a[i][next_slack++] = flip;
    else if (c.rel == Relation::ge) t.a[i][next_slack++] = -flip;
    t.rhs[i] = flip * c.rhs;
    t.a[i][first_art + i] = 1;
    t.basis[i] = first_art + i;
  }

  // Phase 1: drive the artificials to zero.
  Vec phase1(total, Rat(0));
  for (std::size_t j = first_art; j < total; ++j) phase1[j] = -1;
  std::vector<bool> allowed(total, true);
  run_simplex(t, phase1, allowed);
  Rat infeasibility = 0;
  for (std::size_t i = 0; i < t.rows; ++i)
    if (t.basis[i] >= first_art) infeasibility += t.rhs[i];
  if (infeasibility != 0) return {Status::infeasible, 0, {}};

  for (std::size_t i = 0; i < t.rows;) {
    if (t.basis[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < first_art && t.a[i][j] == 0) ++j;
    if (j == first_art) {
      t.drop_row(i);
    } else {
      t.pivot(i, j);
      ++i;
    }
  }
  for (std::size_t j = first_art; j < total; ++j) allowed[j] = false;

  // Phase 2.
  Vec cost(total, Rat(0));
  for (std::size_t v = 0; v < n; ++v) {
    cost[col_of[v]] = objective[v];
    if (is_free[v]) cost[col_of[v] + 1] = -objective[v];
  }
  if (!run_simplex(t, cost, allowed)) return {Status::unbounded, 0, {}};

  Vec columns(total, Rat(0));
  for (std::size_t i = 0; i < t.rows; ++i) columns[t.basis[i]] = t.rhs[i];
  Result out{Status::optimal, 0, Vec(n, Rat(0))};
  for (std::size_t v = 0; v < n; ++v) {
    out.x[v] = columns[col_of[v]];
    if (is_free[v]) out.x[v] -= columns[col_of[v] + 1];
    out.value += objective[v] * out.x[v];
  }
  return out;
}

Result minimize(const Problem& problem, const Vec& objective) {
  Result r = maximize(problem, -objective);
  if (r.status == Status::optimal) r.value = -r.value;
  return r;
}

bool feasible(const Problem& problem) {
  return maximize(problem, Vec(problem.num_vars, Rat(0))).status != Status::infeasible;
}

}  // namespace pcup::lp
