#include "hjnn/arch_one.hpp"

#include <stdexcept>
#include <string>

namespace hjnn {

LagrangianNet::LagrangianNet(ConvexFn lagrangian, std::vector<LagrangianBranch> branches)
    : lagrangian_(std::move(lagrangian)), branches_(std::move(branches)) {
  if (branches_.empty()) throw std::invalid_argument("LagrangianNet: at least one branch is required");
  if (!lagrangian_.lipschitz()) {
    throw std::invalid_argument("LagrangianNet: Lagrangian " + lagrangian_.name() +
                                " is not convex and globally Lipschitz");
  }
  dim_ = branches_.front().u.size();
  if (dim_ == 0) throw DimensionError("LagrangianNet: branch points must have dimension >= 1");
  for (const auto& b : branches_) require_same_dim(b.u.size(), dim_, "LagrangianNet branch");
  if (auto n = lagrangian_.dimension(); n) require_same_dim(*n, dim_, "LagrangianNet Lagrangian");
  for (const auto& b : branches_) {
    if (!std::isfinite(b.a)) throw std::domain_error("LagrangianNet: offsets must be finite");
  }
}

EvalResult f1_eval(const LagrangianNet& net, const Point& x, double t) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("f1_eval: t must be positive (got " + std::to_string(t) +
                                "); use f1_initial for t = 0");
  }
  require_same_dim(x.size(), net.dim(), "f1_eval");
  std::vector<double> w(net.dim());
  BranchMin acc;
  const auto branches = net.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& u = branches[i].u;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = (x[k] - u[k]) / t;
    acc.offer(t * net.lagrangian().eval_finite(w) + branches[i].a, i);
  }
  return acc.result();
}

EvalResult f1_initial(const LagrangianNet& net, const Point& x) {
  require_same_dim(x.size(), net.dim(), "f1_initial");
  BranchMin acc;
  const auto branches = net.branches();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    // Lipschitz L has a finite asymptotic function.
    acc.offer(asymptotic_fn(net.lagrangian(), x - branches[i].u).value() + branches[i].a, i);
  }
  return acc.result();
}

ConvexFn hamiltonian_of(const LagrangianNet& net) {
  auto h = conjugate_analytic(net.lagrangian());
  if (!h) {
    throw std::invalid_argument("hamiltonian_of: no closed-form conjugate for " + net.lagrangian().name() +
                                "; use conjugate_numeric to check values pointwise");
  }
  return *h;
}

}  // namespace hjnn
