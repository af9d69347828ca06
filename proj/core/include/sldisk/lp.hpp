#pragma once

#include <vector>

#include "sldisk/rational.hpp"

namespace sldisk {

// Affine functional constant + sum(coeffs[i] * x[i]), used as the constraint
// form(x) >= 0 (or > 0 where strictness is requested).
struct AffineForm {
  std::vector<Rational> coeffs;
  Rational constant;

  Rational eval(const std::vector<Rational>& x) const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> point;
};

// Exact rational simplex (two phases, Bland's rule; free variables split into
// nonnegative differences). Maximizes objective . x subject to form(x) >= 0 for
// every form.
LpResult lp_maximize(const std::vector<AffineForm>& forms, const std::vector<Rational>& objective);
LpResult lp_minimize(const std::vector<AffineForm>& forms, const std::vector<Rational>& objective);

struct InteriorResult {
  enum class Kind { StrictPoint, NoInterior, Empty } kind = Kind::Empty;
  std::vector<Rational> point;  // strict for every flagged form when kind == StrictPoint
};

// Finds a point satisfying every form weakly and every flagged form strictly, via
// the auxiliary program max t, form(x) >= t (capped at t <= 1). An empty strict
// flag vector means all forms strict.
InteriorResult feasible_interior(const std::vector<AffineForm>& forms,
                                 const std::vector<char>& strict = {});

}  // namespace sldisk
