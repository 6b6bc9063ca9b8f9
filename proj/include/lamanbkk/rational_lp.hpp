#pragma once

// Dense exact simplex over the rationals.
//
// Problems are stated as
//     maximize  c^T x
//     s.t.      a_i^T x  (<=, =, >=)  b_i
//               lower_j <= x_j <= upper_j   (each bound optional)
// and converted to the standard form  max c'^T z, A z = b, z >= 0  internally.
// Pivoting uses Bland's smallest-index rule, so the solver terminates on
// degenerate problems and identical inputs yield identical bases.
//
// Certificates use one sign convention for every row, bound rows included:
// multipliers of "<=" rows are >= 0, of ">=" rows are <= 0, of "=" rows free.
//   Optimal:    sum_i y_i a_i = c      and  sum_i y_i b_i = c^T x*
//   Infeasible: sum_i y_i a_i = 0      and  sum_i y_i b_i < 0

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lamanbkk/errors.hpp"
#include "lamanbkk/rational.hpp"

namespace lamanbkk {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  QVector row;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct LinearProgram {
  explicit LinearProgram(std::size_t num_vars = 0)
      : objective(num_vars), lower(num_vars), upper(num_vars) {}

  std::size_t num_vars() const { return objective.size(); }

  void add(QVector row, Relation relation, Rational rhs) {
    constraints.push_back({std::move(row), relation, std::move(rhs)});
  }

  QVector objective;  // maximized
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower;  // unset = unbounded
  std::vector<std::optional<Rational>> upper;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  QVector point;  // Optimal: the optimum; Unbounded: a feasible point
  Rational value;
  // Multipliers for the constraint rows, then for the bound rows
  // (x_j >= lower_j, x_j <= upper_j; zero where the bound is absent).
  QVector certificate;
  QVector lower_multipliers;
  QVector upper_multipliers;
  // Reduced costs c_N - c_B A_B^{-1} A_N of the standard-form columns at the
  // final basis (zero on basic and artificial columns). All <= 0 at an optimum.
  QVector reduced_costs;
  QVector ray;  // Unbounded: direction d with A d feasible and c^T d > 0
  std::vector<std::size_t> basis;
};

struct SolveOptions {
  bool certificates = true;
};

namespace detail {

enum class ColumnKind { Shifted, Reflected, FreePos, FreeNeg, Slack, Artificial };

struct StandardForm {
  struct VarMap {
    enum Kind { Lower, UpperOnly, Free, Boxed } kind;
    std::size_t col;  // first column
    Rational shift;
    std::size_t bound_row = 0;  // Boxed: index of the z <= u - l row
  };
  std::vector<VarMap> vars;
  std::size_t structural = 0;  // columns before slacks
  std::size_t rows = 0;
  std::size_t cols = 0;  // excluding rhs
  std::vector<int> row_sign;  // +1 or -1 after rhs normalisation
  std::vector<std::size_t> origin_col;  // initial identity column per row
  std::vector<bool> artificial;          // per column
  QMatrix tableau;                       // rows x (cols + 1)
  QVector cost;                          // phase II costs per column
};

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) { build(); }

  LPOutcome run(const SolveOptions& options) {
    LPOutcome out;
    // Phase I: maximize -(sum of artificials).
    QVector phase1(sf_.cols);
    bool any_artificial = false;
    for (std::size_t c = 0; c < sf_.cols; ++c)
      if (sf_.artificial[c]) {
        phase1[c] = -1;
        any_artificial = true;
      }
    if (any_artificial) {
      set_objective(phase1);
      iterate(false);
      if (objective_value_ < 0) {
        out.status = LPStatus::Infeasible;
        if (options.certificates) fill_multipliers(out, QVector(lp_.num_vars()));
        out.basis = basis_;
        return out;
      }
      drive_out_artificials();
    }
    set_objective(sf_.cost);
    std::optional<std::size_t> unbounded_col = iterate(true);
    out.basis = basis_;
    out.point = extract_point();
    if (unbounded_col) {
      out.status = LPStatus::Unbounded;
      out.ray = extract_ray(*unbounded_col);
      return out;
    }
    out.status = LPStatus::Optimal;
    out.value = dot(lp_.objective, out.point);
    if (options.certificates) {
      out.reduced_costs.assign(sf_.cols, 0);
      for (std::size_t c = 0; c < sf_.cols; ++c)
        if (!sf_.artificial[c]) out.reduced_costs[c] = reduced_[c];
      fill_multipliers(out, lp_.objective);
    }
    return out;
  }

 private:
  void build() {
    const std::size_t n = lp_.num_vars();
    for (const auto& con : lp_.constraints)
      if (con.row.size() != n) throw InputError("constraint row has wrong length");
    if (lp_.lower.size() != n || lp_.upper.size() != n) throw InputError("bound vectors have wrong length");

    // Structural columns.
    std::size_t col = 0;
    std::size_t extra_rows = 0;
    sf_.vars.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      auto& vm = sf_.vars[j];
      const auto& lo = lp_.lower[j];
      const auto& up = lp_.upper[j];
      vm.col = col;
      if (lo && up) {
        vm.kind = StandardForm::VarMap::Boxed;
        vm.shift = *lo;
        vm.bound_row = lp_.constraints.size() + extra_rows++;
        col += 1;
      } else if (lo) {
        vm.kind = StandardForm::VarMap::Lower;
        vm.shift = *lo;
        col += 1;
      } else if (up) {
        vm.kind = StandardForm::VarMap::UpperOnly;
        vm.shift = *up;
        col += 1;
      } else {
        vm.kind = StandardForm::VarMap::Free;
        vm.shift = 0;
        col += 2;
      }
    }
    sf_.structural = col;
    sf_.rows = lp_.constraints.size() + extra_rows;

    // Rows in z-space, before slacks: coefficient rows, relation, rhs.
    std::vector<QVector> rows(sf_.rows, QVector(sf_.structural));
    std::vector<Relation> rel(sf_.rows);
    QVector rhs(sf_.rows);
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      const auto& con = lp_.constraints[i];
      rel[i] = con.relation;
      rhs[i] = con.rhs;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& a = con.row[j];
        if (a == 0) continue;
        const auto& vm = sf_.vars[j];
        switch (vm.kind) {
          case StandardForm::VarMap::Lower:
          case StandardForm::VarMap::Boxed:
            rows[i][vm.col] = a;
            rhs[i] -= a * vm.shift;
            break;
          case StandardForm::VarMap::UpperOnly:
            rows[i][vm.col] = -a;
            rhs[i] -= a * vm.shift;
            break;
          case StandardForm::VarMap::Free:
            rows[i][vm.col] = a;
            rows[i][vm.col + 1] = -a;
            break;
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& vm = sf_.vars[j];
      if (vm.kind != StandardForm::VarMap::Boxed) continue;
      rows[vm.bound_row][vm.col] = 1;
      rel[vm.bound_row] = Relation::LessEqual;
      rhs[vm.bound_row] = *lp_.upper[j] - *lp_.lower[j];
    }

    // Slack/surplus columns, then sign normalisation, then artificials.
    std::vector<std::optional<std::size_t>> slack_col(sf_.rows);
    std::size_t total = sf_.structural;
    for (std::size_t i = 0; i < sf_.rows; ++i)
      if (rel[i] != Relation::Equal) slack_col[i] = total++;
    sf_.row_sign.assign(sf_.rows, 1);
    for (std::size_t i = 0; i < sf_.rows; ++i)
      if (rhs[i] < 0) sf_.row_sign[i] = -1;
    sf_.origin_col.assign(sf_.rows, 0);
    std::vector<bool> needs_artificial(sf_.rows, false);
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      // The slack coefficient after normalisation is sign * (+1 for <=, -1 for >=).
      if (slack_col[i]) {
        int coef = sf_.row_sign[i] * (rel[i] == Relation::LessEqual ? 1 : -1);
        if (coef == 1) {
          sf_.origin_col[i] = *slack_col[i];
          continue;
        }
      }
      needs_artificial[i] = true;
    }
    std::size_t art_begin = total;
    for (std::size_t i = 0; i < sf_.rows; ++i)
      if (needs_artificial[i]) sf_.origin_col[i] = total++;
    sf_.cols = total;
    sf_.artificial.assign(sf_.cols, false);
    for (std::size_t c = art_begin; c < sf_.cols; ++c) sf_.artificial[c] = true;

    sf_.tableau.assign(sf_.rows, QVector(sf_.cols + 1));
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      auto& t = sf_.tableau[i];
      const int s = sf_.row_sign[i];
      for (std::size_t c = 0; c < sf_.structural; ++c)
        if (rows[i][c] != 0) t[c] = s * rows[i][c];
      if (slack_col[i]) t[*slack_col[i]] = s * (rel[i] == Relation::LessEqual ? 1 : -1);
      if (needs_artificial[i]) t[sf_.origin_col[i]] = 1;
      t[sf_.cols] = s * rhs[i];
    }
    basis_ = sf_.origin_col;

    sf_.cost.assign(sf_.cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& vm = sf_.vars[j];
      const Rational& c = lp_.objective[j];
      switch (vm.kind) {
        case StandardForm::VarMap::Lower:
        case StandardForm::VarMap::Boxed:
          sf_.cost[vm.col] = c;
          break;
        case StandardForm::VarMap::UpperOnly:
          sf_.cost[vm.col] = -c;
          break;
        case StandardForm::VarMap::Free:
          sf_.cost[vm.col] = c;
          sf_.cost[vm.col + 1] = -c;
          break;
      }
    }
    banned_.assign(sf_.cols, false);
  }

  void set_objective(const QVector& cost) {
    cost_ = cost;
    reduced_.assign(sf_.cols, 0);
    for (std::size_t c = 0; c < sf_.cols; ++c) reduced_[c] = cost[c];
    objective_value_ = 0;
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      const auto& t = sf_.tableau[i];
      for (std::size_t c = 0; c < sf_.cols; ++c)
        if (t[c] != 0) reduced_[c] -= cb * t[c];
      objective_value_ += cb * t[sf_.cols];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = sf_.tableau[row];
    const Rational inv = 1 / pr[col];
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c <= sf_.cols; ++c) {
      if (pr[c] == 0) continue;
      pr[c] *= inv;
      nz.push_back(c);
    }
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      if (i == row) continue;
      auto& t = sf_.tableau[i];
      if (t[col] == 0) continue;
      const Rational f = t[col];
      for (std::size_t c : nz) t[c] -= f * pr[c];
    }
    if (reduced_[col] != 0) {
      const Rational f = reduced_[col];
      for (std::size_t c : nz) {
        if (c == sf_.cols)
          objective_value_ += f * pr[c];
        else
          reduced_[c] -= f * pr[c];
      }
    }
    basis_[row] = col;
  }

  // Returns the entering column when the problem is unbounded.
  std::optional<std::size_t> iterate(bool phase2) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < sf_.cols; ++c) {
        if (phase2 && (banned_[c] || sf_.artificial[c])) continue;
        if (reduced_[c] > 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < sf_.rows; ++i) {
        const Rational& a = sf_.tableau[i][*enter];
        if (a <= 0) continue;
        Rational ratio = sf_.tableau[i][sf_.cols] / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      if (!sf_.artificial[basis_[i]]) continue;
      for (std::size_t c = 0; c < sf_.cols; ++c) {
        if (sf_.artificial[c] || sf_.tableau[i][c] == 0) continue;
        pivot(i, c);
        break;
      }
    }
    for (std::size_t c = 0; c < sf_.cols; ++c)
      if (sf_.artificial[c]) banned_[c] = true;
  }

  QVector column_values() const {
    QVector z(sf_.cols);
    for (std::size_t i = 0; i < sf_.rows; ++i) z[basis_[i]] = sf_.tableau[i][sf_.cols];
    return z;
  }

  QVector to_original(const QVector& z, bool direction) const {
    QVector x(lp_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      const auto& vm = sf_.vars[j];
      const Rational shift = direction ? Rational(0) : vm.shift;
      switch (vm.kind) {
        case StandardForm::VarMap::Lower:
        case StandardForm::VarMap::Boxed:
          x[j] = shift + z[vm.col];
          break;
        case StandardForm::VarMap::UpperOnly:
          x[j] = shift - z[vm.col];
          break;
        case StandardForm::VarMap::Free:
          x[j] = z[vm.col] - z[vm.col + 1];
          break;
      }
    }
    return x;
  }

  QVector extract_point() const { return to_original(column_values(), false); }

  QVector extract_ray(std::size_t enter) const {
    QVector d(sf_.cols);
    d[enter] = 1;
    for (std::size_t i = 0; i < sf_.rows; ++i) d[basis_[i]] -= sf_.tableau[i][enter];
    return to_original(d, true);
  }

  // Builds row multipliers from the current reduced costs. `cost` is the
  // original objective for phase II and zero for a phase I infeasibility proof.
  void fill_multipliers(LPOutcome& out, const QVector& cost) const {
    const std::size_t n = lp_.num_vars();
    const std::size_t m = lp_.constraints.size();
    // Standard-form duals: the origin column of each row is a unit column
    // (coefficient +1) with cost c_o, so y_i = c_o - reduced_o.
    QVector ystd(sf_.rows);
    for (std::size_t i = 0; i < sf_.rows; ++i) {
      std::size_t o = sf_.origin_col[i];
      ystd[i] = cost_[o] - reduced_[o];
    }
    out.certificate.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) out.certificate[i] = sf_.row_sign[i] * ystd[i];
    out.lower_multipliers.assign(n, 0);
    out.upper_multipliers.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Rational residual = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& a = lp_.constraints[i].row[j];
        if (a != 0) residual -= out.certificate[i] * a;
      }
      const auto& vm = sf_.vars[j];
      switch (vm.kind) {
        case StandardForm::VarMap::Lower:
          out.lower_multipliers[j] = residual;
          break;
        case StandardForm::VarMap::UpperOnly:
          out.upper_multipliers[j] = residual;
          break;
        case StandardForm::VarMap::Boxed: {
          Rational yu = sf_.row_sign[vm.bound_row] * ystd[vm.bound_row];
          out.upper_multipliers[j] = yu;
          out.lower_multipliers[j] = residual - yu;
          break;
        }
        case StandardForm::VarMap::Free:
          break;
      }
    }
  }

  const LinearProgram& lp_;
  StandardForm sf_;
  std::vector<std::size_t> basis_;
  std::vector<bool> banned_;
  QVector cost_;
  QVector reduced_;
  Rational objective_value_;
};

}  // namespace detail

/// Solves `lp` exactly. See the file comment for the certificate convention.
inline LPOutcome solve(const LinearProgram& lp, SolveOptions options = {}) {
  detail::Simplex simplex(lp);
  return simplex.run(options);
}

/// Phase-one wrapper: returns a feasible point, or nullopt with the Farkas
/// multipliers written to `certificate` when one is requested.
inline std::optional<QVector> feasible(std::size_t num_vars, const std::vector<LinearConstraint>& constraints,
                                       LPOutcome* certificate = nullptr) {
  LinearProgram lp(num_vars);
  lp.constraints = constraints;
  LPOutcome out = solve(lp, {.certificates = certificate != nullptr});
  if (certificate) *certificate = out;
  if (out.status == LPStatus::Infeasible) return std::nullopt;
  return out.point;
}

inline bool satisfies(const LinearProgram& lp, const QVector& x) {
  if (x.size() != lp.num_vars()) return false;
  for (const auto& con : lp.constraints) {
    Rational lhs = dot(con.row, x);
    switch (con.relation) {
      case Relation::LessEqual:
        if (lhs > con.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < con.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != con.rhs) return false;
        break;
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  return true;
}

namespace detail {

inline bool multiplier_signs_ok(const LinearProgram& lp, const LPOutcome& out) {
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Rational& y = out.certificate[i];
    switch (lp.constraints[i].relation) {
      case Relation::LessEqual:
        if (y < 0) return false;
        break;
      case Relation::GreaterEqual:
        if (y > 0) return false;
        break;
      case Relation::Equal:
        break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    if (out.lower_multipliers[j] > 0 || out.upper_multipliers[j] < 0) return false;
    if (!lp.lower[j] && out.lower_multipliers[j] != 0) return false;
    if (!lp.upper[j] && out.upper_multipliers[j] != 0) return false;
  }
  return true;
}

// Returns (sum_i y_i a_i, sum_i y_i b_i) including bound rows.
inline std::pair<QVector, Rational> combine_rows(const LinearProgram& lp, const LPOutcome& out) {
  QVector lhs(lp.num_vars());
  Rational rhs = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] += out.certificate[i] * con.row[j];
    rhs += out.certificate[i] * con.rhs;
  }
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    lhs[j] += out.lower_multipliers[j] + out.upper_multipliers[j];
    if (lp.lower[j]) rhs += out.lower_multipliers[j] * *lp.lower[j];
    if (lp.upper[j]) rhs += out.upper_multipliers[j] * *lp.upper[j];
  }
  return {lhs, rhs};
}

}  // namespace detail

/// Checks an Infeasible outcome's multipliers: they combine the rows into
/// the contradiction 0 <= (negative number).
inline bool verify_farkas(const LinearProgram& lp, const LPOutcome& out) {
  if (out.status != LPStatus::Infeasible || out.certificate.size() != lp.constraints.size()) return false;
  if (!detail::multiplier_signs_ok(lp, out)) return false;
  auto [lhs, rhs] = detail::combine_rows(lp, out);
  for (const auto& v : lhs)
    if (v != 0) return false;
  return rhs < 0;
}

/// Checks an Optimal outcome: primal feasibility, dual feasibility and a zero
/// duality gap, all exactly.
inline bool verify_optimal(const LinearProgram& lp, const LPOutcome& out) {
  if (out.status != LPStatus::Optimal || !satisfies(lp, out.point)) return false;
  if (out.certificate.size() != lp.constraints.size()) return false;
  if (!detail::multiplier_signs_ok(lp, out)) return false;
  auto [lhs, rhs] = detail::combine_rows(lp, out);
  if (lhs != lp.objective) return false;
  return rhs == out.value && dot(lp.objective, out.point) == out.value;
}

}  // namespace lamanbkk
