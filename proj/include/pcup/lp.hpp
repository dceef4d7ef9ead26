#pragma once

// Exact two-phase simplex over the rationals (Bland's rule, so it cannot
// cycle). Sized for the tiny systems that cone membership and cell
// intersection tests produce: a handful of variables, tens of rows.

#include <cstddef>
#include <vector>

#include "pcup/linalg.hpp"

namespace pcup::lp {

enum class Relation { le, eq, ge };

struct Constraint {
  Vec coeffs;
  Relation rel = Relation::le;
  Rat rhs = 0;
};

struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> is_free;  // empty means every variable is >= 0
  std::vector<Constraint> constraints;

  explicit Problem(std::size_t n, bool all_free = false)
      : num_vars(n), is_free(n, all_free) {}

  void add(Vec coeffs, Relation rel, Rat rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rat value = 0;
  Vec x;
};

Result maximize(const Problem& problem, const Vec& objective);
Result minimize(const Problem& problem, const Vec& objective);
bool feasible(const Problem& problem);

}  // namespace pcup::lp
