// Exact rational linear feasibility. Phase-1/phase-2 dense simplex with
// Bland's rule, so termination is guaranteed under exact arithmetic.
// Strict inequalities are decided by maximising a slack s bounded above
// by 1: the strict system is feasible iff the optimum satisfies s > 0.
#pragma once

#include "tvt/rational.hpp"

#include <cstddef>
#include <vector>

namespace tvt {

enum class Rel { Le, Lt, Ge, Gt, Eq };

struct LinearRow {
  Vec coeffs;
  Rel rel = Rel::Ge;
  Rational rhs;
};

enum class LpStatus { Feasible, Infeasible };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vec witness;      // set iff feasible; verified against every row
  Vec certificate;  // set iff infeasible and requested; one multiplier per row
  bool feasible() const { return status == LpStatus::Feasible; }
};

// Decides feasibility of the row system over `dim` free rational variables.
// On feasible return the witness satisfies every row exactly (strict rows
// strictly). With want_certificate, an infeasible return carries verified
// multipliers lambda >= 0 on inequality rows (sign-free on Eq rows) with
//   sum lambda_i a_i = 0  and  sum lambda_i b_i > 0, or
//   sum lambda_i b_i = 0 with positive weight on at least one strict row,
// where rows are first normalised so that inequalities read a.x >(=) b.
LpOutcome lp_feasible(const std::vector<LinearRow>& rows, std::size_t dim,
                      bool want_certificate = false);

bool satisfies(const std::vector<LinearRow>& rows, const Vec& x);
bool valid_infeasibility_certificate(const std::vector<LinearRow>& rows,
                                     const Vec& multipliers);

namespace lp_detail {

// General form used internally by the geometry predicates: per-variable
// nonnegativity, Ge/Eq rows only, maximise objective.x (objective may be
// empty meaning pure feasibility).
struct GeneralLp {
  std::size_t nvars = 0;
  std::vector<bool> nonneg;  // per variable; empty means all free
  std::vector<LinearRow> rows;
  Vec objective;  // maximised; empty means feasibility only
};

struct GeneralResult {
  bool feasible = false;
  Rational value;  // objective value at optimum (0 if no objective)
  Vec x;
};

GeneralResult solve(const GeneralLp& lp);

}  // namespace lp_detail

}  // namespace tvt
