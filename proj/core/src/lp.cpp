#include "sldisk/lp.hpp"

#include <vector>

#include "sldisk/errors.hpp"

namespace sldisk {

Rational AffineForm::eval(const std::vector<Rational>& x) const {
  require_internal(x.size() == coeffs.size(), "point arity mismatch");
  Rational v = constant;
  for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
  return v;
}

namespace {

// Dense simplex tableau over the rationals: maximize c.y for y >= 0, A y = b,
// b >= 0, with Bland's rule throughout so degenerate bases cannot cycle.
struct Tableau {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<int> basis;
  int cols = 0;

  int rows() const { return static_cast<int>(A.size()); }

  void pivot(int pi, int pj) {
    Rational piv = A[pi][pj];
    for (int j = 0; j < cols; ++j) A[pi][j] /= piv;
    b[pi] /= piv;
    for (int r = 0; r < rows(); ++r) {
      if (r == pi || A[r][pj] == 0) continue;
      Rational f = A[r][pj];
      for (int j = 0; j < cols; ++j) A[r][j] -= f * A[pi][j];
      b[r] -= f * b[pi];
    }
    basis[pi] = pj;
  }

  Rational reduced_cost(const std::vector<Rational>& c, int j) const {
    Rational r = c[j];
    for (int i = 0; i < rows(); ++i) {
      if (c[basis[i]] != 0) r -= c[basis[i]] * A[i][j];
    }
    return r;
  }

  // Returns false when the objective is unbounded above.
  bool run(const std::vector<Rational>& c, int enterable_limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < enterable_limit; ++j) {
        if (reduced_cost(c, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == -1) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (A[i][enter] <= 0) continue;
        Rational ratio = b[i] / A[i][enter];
        if (leave == -1 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }

  Rational objective_value(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (int i = 0; i < rows(); ++i) v += c[basis[i]] * b[i];
    return v;
  }
};

}  // namespace

LpResult lp_maximize(const std::vector<AffineForm>& forms,
                     const std::vector<Rational>& objective) {
  int n = static_cast<int>(objective.size());
  for (const auto& f : forms) {
    require_internal(static_cast<int>(f.coeffs.size()) == n, "form arity mismatch");
  }
  int m = static_cast<int>(forms.size());
  // Columns: split pair (u_k, w_k) per free variable, one surplus per row,
  // one artificial per row.
  int surplus0 = 2 * n;
  int art0 = surplus0 + m;

  Tableau t;
  t.cols = art0 + m;
  for (int i = 0; i < m; ++i) {
    // coeffs.x >= -const  row: coeffs.x - s_i = -const
    std::vector<Rational> row(t.cols, Rational(0));
    Rational rhs = -forms[i].constant;
    for (int k = 0; k < n; ++k) {
      row[2 * k] = forms[i].coeffs[k];
      row[2 * k + 1] = -forms[i].coeffs[k];
    }
    row[surplus0 + i] = -1;
    if (rhs < 0) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
    }
    row[art0 + i] = 1;
    t.A.push_back(std::move(row));
    t.b.push_back(rhs);
    t.basis.push_back(art0 + i);
  }

  if (m > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (int j = art0; j < t.cols; ++j) phase1[j] = -1;
    bool ok = t.run(phase1, t.cols);
    require_internal(ok, "phase-1 objective unbounded");
    if (t.objective_value(phase1) < 0) return {LpStatus::Infeasible, Rational(0), {}};
    // Drive leftover zero-level artificials out of the basis; a row with no
    // usable column is redundant and is dropped.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis[i] < art0) continue;
      int j = 0;
      while (j < art0 && t.A[i][j] == 0) ++j;
      if (j < art0) {
        t.pivot(i, j);
      } else {
        t.A.erase(t.A.begin() + i);
        t.b.erase(t.b.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
  }

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (int k = 0; k < n; ++k) {
    phase2[2 * k] = objective[k];
    phase2[2 * k + 1] = -objective[k];
  }
  if (!t.run(phase2, art0)) return {LpStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> y(t.cols, Rational(0));
  for (int i = 0; i < t.rows(); ++i) y[t.basis[i]] = t.b[i];
  std::vector<Rational> x(n);
  Rational value = 0;
  for (int k = 0; k < n; ++k) {
    x[k] = y[2 * k] - y[2 * k + 1];
    value += objective[k] * x[k];
  }
  return {LpStatus::Optimal, value, std::move(x)};
}

LpResult lp_minimize(const std::vector<AffineForm>& forms,
                     const std::vector<Rational>& objective) {
  std::vector<Rational> neg;
  neg.reserve(objective.size());
  for (const auto& c : objective) neg.push_back(-c);
  LpResult r = lp_maximize(forms, neg);
  r.value = -r.value;
  return r;
}

InteriorResult feasible_interior(const std::vector<AffineForm>& forms,
                                 const std::vector<char>& strict) {
  require_internal(strict.empty() || strict.size() == forms.size(),
                   "strictness flags arity mismatch");
  size_t n = forms.empty() ? 0 : forms[0].coeffs.size();
  // Maximize t subject to flagged forms >= t, others >= 0, t <= 1. A positive
  // optimum certifies a point satisfying every flagged form strictly.
  std::vector<AffineForm> sys;
  for (size_t i = 0; i < forms.size(); ++i) {
    AffineForm f = forms[i];
    f.coeffs.push_back(strict.empty() || strict[i] ? Rational(-1) : Rational(0));
    sys.push_back(std::move(f));
  }
  AffineForm cap;
  cap.coeffs.assign(n + 1, Rational(0));
  cap.coeffs[n] = -1;
  cap.constant = 1;  // 1 - t >= 0
  sys.push_back(cap);

  std::vector<Rational> obj(n + 1, Rational(0));
  obj[n] = 1;
  LpResult r = lp_maximize(sys, obj);
  if (r.status == LpStatus::Infeasible) return {InteriorResult::Kind::Empty, {}};
  require_internal(r.status == LpStatus::Optimal, "capped objective cannot be unbounded");
  if (r.value > 0) {
    r.point.pop_back();
    return {InteriorResult::Kind::StrictPoint, std::move(r.point)};
  }
  // value == 0 certifies a weakly feasible point; a negative optimum means even
  // the non-strict system has none
  if (r.value < 0) return {InteriorResult::Kind::Empty, {}};
  return {InteriorResult::Kind::NoInterior, {}};
}

}  // namespace sldisk
