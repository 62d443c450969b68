#include "hjnn/arch_two.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace hjnn {

InitialDataNet::InitialDataNet(ConcaveFn initial, std::vector<AffineRow> branches)
    : initial_(std::move(initial)), branches_(std::move(branches)) {
  if (branches_.empty()) throw std::invalid_argument("InitialDataNet: at least one branch is required");
  dim_ = branches_.front().v.size();
  if (dim_ == 0) throw DimensionError("InitialDataNet: branch points must have dimension >= 1");
  for (const auto& b : branches_) {
    require_same_dim(b.v.size(), dim_, "InitialDataNet branch");
    if (!std::isfinite(b.b)) throw std::domain_error("InitialDataNet: offsets must be finite");
  }
  if (auto n = initial_.negated().dimension(); n) require_same_dim(*n, dim_, "InitialDataNet initial data");
  certificate_ = check_assumption_h(branches_);
  if (!certificate_.holds()) throw AssumptionHViolated(*certificate_.violation);

  quadratic_ = std::holds_alternative<catalog::HalfSquaredNorm>(initial_.negated().variant());
  sparse_.reserve(branches_.size());
  for (const auto& b : branches_) {
    SparseRow row;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (b.v[k] == 0.0) continue;
      row.index.push_back(k);
      row.value.push_back(b.v[k]);
      row.squared_norm += b.v[k] * b.v[k];
    }
    sparse_.push_back(std::move(row));
  }
}

namespace {

void check_eval_args(const InitialDataNet& net, const Point& x, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("f2_eval: t must be nonnegative (got " + std::to_string(t) + ")");
  require_same_dim(x.size(), net.dim(), "f2_eval");
}

}  // namespace

EvalResult f2_eval(const InitialDataNet& net, const Point& x, double t) {
  if (!net.quadratic_initial()) return f2_eval_direct(net, x, t);
  check_eval_args(net, x, t);
  const double base = -0.5 * dot(x.span(), x.span());
  const auto rows = net.sparse_rows();
  const auto branches = net.branches();
  BranchMin acc;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    double s = 0.0;
    for (std::size_t k = 0; k < r.index.size(); ++k) s += x[r.index[k]] * r.value[k];
    acc.offer(base + t * s - 0.5 * t * t * r.squared_norm + t * branches[i].b, i);
  }
  return acc.result();
}

EvalResult f2_eval_direct(const InitialDataNet& net, const Point& x, double t) {
  check_eval_args(net, x, t);
  std::vector<double> y(net.dim());
  BranchMin acc;
  const auto branches = net.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& v = branches[i].v;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = x[k] - t * v[k];
    acc.offer(net.initial()(y) + t * branches[i].b, i);
  }
  return acc.result();
}

double hamiltonian_pwa(const InitialDataNet& net, const Point& p) {
  require_same_dim(p.size(), net.dim(), "hamiltonian_pwa");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& r : net.branches()) best = std::max(best, dot(p.span(), r.v.span()) - r.b);
  return best;
}

SimplexLpResult conjugate_pwa(const InitialDataNet& net, const Point& v) {
  require_same_dim(v.size(), net.dim(), "conjugate_pwa");
  std::vector<double> costs;
  std::vector<Point> vs;
  costs.reserve(net.size());
  vs.reserve(net.size());
  for (const auto& r : net.branches()) {
    costs.push_back(r.b);
    vs.push_back(r.v);
  }
  return solve_simplex_lp(costs, vs, v);
}

std::vector<AffineRow> build_norm_hamiltonian(NormHamiltonian kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_norm_hamiltonian: n must be >= 1");
  std::vector<AffineRow> rows;
  if (kind == NormHamiltonian::l1) {
    if (n > 20) {
      throw std::invalid_argument("build_norm_hamiltonian: l1 with n = " + std::to_string(n) +
                                  " would need 2^n rows; refusing n > 20");
    }
    const std::size_t m = std::size_t{1} << n;
    rows.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
      Point v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = ((r >> (n - 1 - j)) & 1U) ? -1.0 : 1.0;
      rows.push_back({std::move(v), 0.0});
    }
  } else {
    rows.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (double sign : {1.0, -1.0}) {
        Point v(n, 0.0);
        v[j] = sign;
        rows.push_back({std::move(v), 0.0});
      }
    }
  }
  return rows;
}

}  // namespace hjnn
