#pragma once

#include <span>
#include <vector>

#include "hjnn/assumption_h.hpp"
#include "hjnn/convex_fn.hpp"
#include "hjnn/eval_result.hpp"
#include "hjnn/simplex_lp.hpp"

namespace hjnn {

/// f2(x, t) = min_i { J(x - t v_i) + t b_i } with concave J. Under assumption (H)
/// this is the viscosity solution with initial data J and the max-affine
/// Hamiltonian H(p) = max_i { <p, v_i> - b_i }.
class InitialDataNet {
 public:
  /// Throws AssumptionHViolated when no convex function interpolates (v_i, b_i),
  /// std::invalid_argument for an empty branch list, DimensionError on mismatch.
  InitialDataNet(ConcaveFn initial, std::vector<AffineRow> branches);

  [[nodiscard]] const ConcaveFn& initial() const { return initial_; }
  [[nodiscard]] std::span<const AffineRow> branches() const { return branches_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return branches_.size(); }
  [[nodiscard]] const HCertificate& certificate() const { return certificate_; }
  /// J uniformly Lipschitz; f2 is then the unique uniformly continuous solution.
  /// Recorded, not required.
  [[nodiscard]] bool unique_solution() const { return initial_.lipschitz(); }

  /// Nonzero pattern of v_i and ||v_i||^2, used by the quadratic fast path.
  struct SparseRow {
    std::vector<std::size_t> index;
    std::vector<double> value;
    double squared_norm = 0.0;
  };
  [[nodiscard]] std::span<const SparseRow> sparse_rows() const { return sparse_; }
  /// J = -||x||^2 / 2.
  [[nodiscard]] bool quadratic_initial() const { return quadratic_; }

 private:
  ConcaveFn initial_;
  std::vector<AffineRow> branches_;
  std::size_t dim_;
  HCertificate certificate_;
  std::vector<SparseRow> sparse_;
  bool quadratic_ = false;
};

/// Requires t >= 0. At t = 0 every branch equals J(x).
///
/// For J = -||x||^2 / 2 each branch is expanded as
/// -||x||^2/2 + t<x, v_i> - t^2 ||v_i||^2 / 2 + t b_i over the nonzeros of v_i,
/// so a net with sparse v_i costs O(n + sum nnz(v_i)) instead of O(n m).
EvalResult f2_eval(const InitialDataNet& net, const Point& x, double t);

/// The formula evaluated term by term, J(x - t v_i) + t b_i. Reference for the fast path.
EvalResult f2_eval_direct(const InitialDataNet& net, const Point& x, double t);

/// H(p) = max_i { <p, v_i> - b_i }.
double hamiltonian_pwa(const InitialDataNet& net, const Point& p);

/// H*(v) through the simplex LP; +inf outside co{v_i}.
SimplexLpResult conjugate_pwa(const InitialDataNet& net, const Point& v);

enum class NormHamiltonian { l1, linf };

/// Rows with max_i <p, v_i> = ||p||_1 (2^n sign vectors) or ||p||_inf
/// (the 2n vectors +-e_j), all offsets zero.
///
/// l1 rows: row r has coordinate j negative iff bit (n - 1 - j) of r is set,
/// so the all-plus vector comes first. linf rows: +e_1, -e_1, +e_2, ...
/// l1 refuses n > 20.
std::vector<AffineRow> build_norm_hamiltonian(NormHamiltonian kind, std::size_t n);

}  // namespace hjnn
