#pragma once

// Example networks built directly in code, independent of the config parser.

#include <cstdint>
#include <random>
#include <vector>

#include "hjnn/arch_one.hpp"
#include "hjnn/arch_two.hpp"

namespace fixtures {

using hjnn::AffineRow;
using hjnn::Point;

inline Point e(std::size_t n, std::initializer_list<double> head) {
  Point p(n, 0.0);
  std::size_t i = 0;
  for (double c : head) p[i++] = c;
  return p;
}

inline hjnn::LagrangianNet clipped1d() {
  return {hjnn::ConvexFn::clipped_quadratic_1d(), {{Point{-2.0}, -0.5}, {Point{0.0}, 0.0}, {Point{2.0}, -1.0}}};
}

inline hjnn::LagrangianNet norm10d() {
  return {hjnn::ConvexFn::shifted_norm_plus(),
          {{e(10, {-2.0}), -0.5}, {e(10, {2.0, -2.0, -1.0}), 0.0}, {e(10, {0.0, 2.0}), -1.0}}};
}

inline std::vector<AffineRow> quad1d_rows() { return {{Point{-2.0}, 0.5}, {Point{0.0}, -5.0}, {Point{2.0}, 1.0}}; }

inline hjnn::ConcaveFn neg_half_sq() { return hjnn::ConcaveFn(hjnn::ConvexFn::half_squared_norm()); }

inline hjnn::InitialDataNet quad1d() { return {neg_half_sq(), quad1d_rows()}; }

inline hjnn::InitialDataNet quad10d() {
  return {neg_half_sq(), {{e(10, {-2.0}), 0.5}, {e(10, {2.0, -2.0, -1.0}), -5.0}, {e(10, {0.0, 2.0}), 1.0}}};
}

inline hjnn::InitialDataNet norm_ham(hjnn::NormHamiltonian kind, std::size_t n = 5) {
  return {neg_half_sq(), hjnn::build_norm_hamiltonian(kind, n)};
}

inline Point random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  Point p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = d(rng);
  return p;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace fixtures
