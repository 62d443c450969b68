#include "hjnn/simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hjnn {
namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kFeasibilityTol = 1e-9;
constexpr double kWeightSlack = 1e-12;
constexpr int kMaxIterations = 100000;

// Dense tableau in canonical form with respect to `basis`. Row `rows` is the
// reduced-cost row; its last entry holds minus the objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& reduced(std::size_t c) { return at(rows_, c); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void price(std::span<const double> cost) {
    for (std::size_t c = 0; c <= cols_; ++c) {
      double v = c < cols_ ? cost[c] : 0.0;
      for (std::size_t r = 0; r < rows_; ++r) v -= cost[basis_[r]] * at(r, c);
      reduced(c) = v;
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  // Bland's rule: smallest improving column, ratio ties broken by smallest basic index.
  void optimize(std::size_t enterable) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      std::size_t enter = enterable;
      for (std::size_t c = 0; c < enterable; ++c) {
        if (reduced(c) < -kPivotTol) {
          enter = c;
          break;
        }
      }
      if (enter == enterable) return;

      std::size_t leave = rows_;
      double best_ratio = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotTol) continue;
        const double ratio = rhs(r) / a;
        if (leave == rows_ || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      // The feasible set is a subset of the simplex, so the LP is never unbounded.
      if (leave == rows_) throw std::logic_error("solve_simplex_lp: unbounded direction on a bounded LP");
      pivot(leave, enter);
    }
    throw std::runtime_error("solve_simplex_lp: iteration limit reached");
  }

  std::size_t rows() const { return rows_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

}  // namespace

SimplexWeights::SimplexWeights(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw std::invalid_argument("SimplexWeights: empty weight vector");
  double sum = 0.0;
  for (double a : alpha_) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("SimplexWeights: weight outside [0, 1]");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("SimplexWeights: weights sum to " + std::to_string(sum));
  }
}

SimplexLpResult solve_simplex_lp(std::span<const double> costs, std::span<const Point> vs,
                                 const Point& target) {
  const std::size_t m = vs.size();
  if (m == 0) throw std::invalid_argument("solve_simplex_lp: no columns");
  if (costs.size() != m) throw DimensionError("solve_simplex_lp: costs and points differ in length");
  const std::size_t n = target.size();
  for (const auto& v : vs) require_same_dim(v.size(), n, "solve_simplex_lp");

  // Rows: sum alpha = 1, then one row per coordinate. Columns: m weights, then
  // one artificial per row.
  const std::size_t rows = n + 1;
  const std::size_t cols = m + rows;
  Tableau tab(rows, cols);
  for (std::size_t j = 0; j < m; ++j) tab.at(0, j) = 1.0;
  tab.rhs(0) = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) tab.at(i + 1, j) = vs[j][i];
    tab.rhs(i + 1) = target[i];
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (tab.rhs(r) < 0.0) {
      for (std::size_t c = 0; c < m; ++c) tab.at(r, c) = -tab.at(r, c);
      tab.rhs(r) = -tab.rhs(r);
    }
    tab.at(r, m + r) = 1.0;
    tab.basis(r) = m + r;
  }

  // Phase 1: minimize the artificial sum.
  std::vector<double> cost(cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) cost[m + r] = 1.0;
  tab.price(cost);
  tab.optimize(cols);
  if (-tab.reduced(cols) > kFeasibilityTol) return {kInfinity, std::nullopt};

  // Drive zero-level artificials out of the basis where a real column can replace them.
  for (std::size_t r = 0; r < rows; ++r) {
    if (tab.basis(r) < m) continue;
    for (std::size_t c = 0; c < m; ++c) {
      if (std::abs(tab.at(r, c)) > kPivotTol) {
        tab.pivot(r, c);
        break;
      }
    }
  }

  // Phase 2: original costs; artificials may no longer enter.
  std::fill(cost.begin(), cost.end(), 0.0);
  for (std::size_t j = 0; j < m; ++j) cost[j] = costs[j];
  tab.price(cost);
  tab.optimize(m);

  std::vector<double> alpha(m, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t b = tab.basis(r);
    if (b < m) alpha[b] = tab.rhs(r);
  }
  double value = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    if (alpha[j] < 0.0 && alpha[j] >= -kWeightSlack) alpha[j] = 0.0;
    if (alpha[j] > 1.0 && alpha[j] <= 1.0 + kWeightSlack) alpha[j] = 1.0;
    value += alpha[j] * costs[j];
  }
  return {value, SimplexWeights(std::move(alpha))};
}

}  // namespace hjnn
