#include "thresholds/lp.hpp"

#include <limits>

#include "thresholds/errors.hpp"

namespace thresholds::lp {

namespace {

class Tableau {
 public:
  // rows: constraint rows [a | b]; basis[i] is the basic column of row i.
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;  // structural columns, excluding rhs
  std::size_t pivots = 0;

  const Rational& rhs(std::size_t i) const { return rows[i][ncols]; }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimizes cost over the columns allowed[j]; returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Reduced costs c_j - c_B B^-1 A_j, read off the canonical tableau.
      std::size_t entering = ncols;
      for (std::size_t j = 0; j < ncols && entering == ncols; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced < 0) entering = j;
      }
      if (entering == ncols) return true;
      std::size_t leaving = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= 0) continue;
        Rational ratio = rhs(i) / rows[i][entering];
        if (leaving == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == rows.size()) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

Solution solve(const Program& program) {
  const std::size_t n = program.nvars;
  if (program.objective.size() != n) throw PreconditionError("objective length does not match nvars");
  for (const auto& c : program.constraints)
    if (c.coeffs.size() != n) throw PreconditionError("constraint length does not match nvars");

  // Normalize to nonnegative right-hand sides.
  std::vector<Constraint> cons = program.constraints;
  for (auto& c : cons) {
    if (c.rhs < 0) {
      for (auto& a : c.coeffs) a = -a;
      c.rhs = -c.rhs;
      if (c.relation == Relation::LessEqual)
        c.relation = Relation::GreaterEqual;
      else if (c.relation == Relation::GreaterEqual)
        c.relation = Relation::LessEqual;
    }
  }

  const std::size_t m = cons.size();
  std::size_t nslack = 0, nart = 0;
  for (const auto& c : cons) {
    if (c.relation != Relation::Equal) ++nslack;
    if (c.relation != Relation::LessEqual) ++nart;
  }
  Tableau t;
  t.ncols = n + nslack + nart;
  t.rows.assign(m, std::vector<Rational>(t.ncols + 1));
  t.basis.assign(m, 0);
  std::size_t slack = n, art = n + nslack;
  std::vector<bool> is_artificial(t.ncols, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = cons[i].coeffs[j];
    t.rows[i][t.ncols] = cons[i].rhs;
    switch (cons[i].relation) {
      case Relation::LessEqual:
        t.rows[i][slack] = 1;
        t.basis[i] = slack++;
        break;
      case Relation::GreaterEqual:
        t.rows[i][slack++] = -1;
        t.rows[i][art] = 1;
        is_artificial[art] = true;
        t.basis[i] = art++;
        break;
      case Relation::Equal:
        t.rows[i][art] = 1;
        is_artificial[art] = true;
        t.basis[i] = art++;
        break;
    }
  }

  Solution sol;
  std::vector<bool> all(t.ncols, true);
  if (nart > 0) {
    std::vector<Rational> phase1(t.ncols);
    for (std::size_t j = 0; j < t.ncols; ++j)
      if (is_artificial[j]) phase1[j] = 1;
    t.optimize(phase1, all);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (is_artificial[t.basis[i]]) infeas += t.rhs(i);
    if (infeas > 0) {
      sol.status = Status::Infeasible;
      sol.pivots = t.pivots;
      return sol;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (!is_artificial[t.basis[i]]) {
        ++i;
        continue;
      }
      std::size_t col = t.ncols;
      for (std::size_t j = 0; j < t.ncols; ++j)
        if (!is_artificial[j] && t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col == t.ncols) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<Rational> cost(t.ncols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = program.objective[j];
  std::vector<bool> allowed(t.ncols);
  for (std::size_t j = 0; j < t.ncols; ++j) allowed[j] = !is_artificial[j];
  bool bounded = t.optimize(cost, allowed);
  sol.pivots = t.pivots;
  if (!bounded) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs(i);
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += program.objective[j] * sol.x[j];
  return sol;
}

}  // namespace thresholds::lp
