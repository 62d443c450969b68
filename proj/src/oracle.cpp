#include "hjnn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hjnn {
namespace {

constexpr double kScreenMinTime = 0.1;

// Minimum of term(k, point, scratch) over all grid indices k; the point buffer
// holds grid point k on entry. min is exact and order-independent, so the
// parallel reduction returns the serial answer bit for bit.
template <class Term>
ExtendedScalar grid_min(const UniformGrid& grid, const Term& term, Execution exec) {
  const std::size_t n = grid.dim();
  if (exec == Execution::serial) {
    std::vector<double> p(n), scratch(n);
    ExtendedScalar best = kInfinity;
    for (std::uint64_t k = 0; k < grid.size(); ++k) {
      grid.point(k, p);
      best = min(best, term(p, scratch));
    }
    return best;
  }

  ExtendedScalar best = kInfinity;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel
  {
    std::vector<double> p(n), scratch(n);
    ExtendedScalar local = kInfinity;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        grid.point(static_cast<std::uint64_t>(k), p);
        local = min(local, term(p, scratch));
      } catch (...) {
#pragma omp critical(hjnn_grid_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(hjnn_grid_min)
    best = min(best, local);
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

std::string format_point(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

Point uniform_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = dist(rng);
  return x;
}

void summarize(VerifyReport& rep) {
  double gap_sum = 0.0, res_sum = 0.0;
  std::size_t gaps = 0;
  for (const auto& r : rep.records) {
    if (r.oracle_gap) {
      rep.max_oracle_gap = std::max(rep.max_oracle_gap, *r.oracle_gap);
      gap_sum += *r.oracle_gap;
      ++gaps;
    }
    if (r.residual) {
      const double res = r.residual->to_double();
      if (r.screened) {
        rep.max_residual = std::max(rep.max_residual, res);
        res_sum += res;
        ++rep.screened;
      } else {
        rep.max_unscreened_residual = std::max(rep.max_unscreened_residual, res);
      }
    }
  }
  rep.mean_oracle_gap = gaps ? gap_sum / static_cast<double>(gaps) : 0.0;
  rep.mean_residual = rep.screened ? res_sum / static_cast<double>(rep.screened) : 0.0;
  rep.pass = (!rep.oracle_checked || rep.max_oracle_gap <= rep.oracle_tolerance) &&
             (!rep.residual_checked || rep.max_residual <= rep.residual_tolerance);
}

template <class Net, class Eval>
ScreenedResiduals screened_residuals(const Net& net, const Eval& eval, std::size_t count, std::uint64_t seed,
                                     double h) {
  ScreenedResiduals out;
  const PointFn ham = residual_hamiltonian(net);
  const SolutionFn s = [&](const Point& x, double t) { return eval(x, t).value; };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> tdist(0.1, 3.0);
  const std::size_t max_attempts = 100 * count;
  while (out.residuals.size() < count && out.attempts < max_attempts) {
    ++out.attempts;
    Point x = uniform_point(rng, net.dim(), -4.0, 4.0);
    const double t = tdist(rng);
    if (!is_screened_smooth(net, x, t, eval(x, t))) continue;
    out.residuals.push_back(hj_residual(s, ham, x, t, h));
    out.xs.push_back(std::move(x));
    out.ts.push_back(t);
  }
  return out;
}

}  // namespace

void OracleConfig::validate() const {
  if (!(search_box_halfwidth > 0.0)) throw std::invalid_argument("OracleConfig: search box must be positive");
  if (pts_per_axis < 3 || pts_per_axis % 2 == 0) {
    throw std::invalid_argument("OracleConfig: pts_per_axis must be odd and >= 3");
  }
  if (!(fd_step > 0.0)) throw std::invalid_argument("OracleConfig: fd_step must be positive");
}

double lax_oleinik_bruteforce(const RealPointFn& initial, const PointFn& hstar, const Point& x, double t,
                              const OracleConfig& cfg, Execution exec) {
  if (!(t > 0.0)) throw std::invalid_argument("lax_oleinik_bruteforce: t must be positive");
  cfg.validate();
  const UniformGrid grid(x, cfg.search_box_halfwidth, cfg.pts_per_axis);
  const auto term = [&](std::span<const double> u, std::vector<double>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = (x[i] - u[i]) / t;
    const ExtendedScalar h = hstar(w);
    if (h.is_infinite()) return kInfinity;
    return ExtendedScalar(initial(u) + t * h.value());
  };
  const ExtendedScalar best = grid_min(grid, term, exec);
  if (best.is_infinite()) {
    throw std::domain_error("lax_oleinik_bruteforce: search box does not meet x - t dom H*");
  }
  return best.value();
}

std::vector<ExtendedScalar> tabulate(const PointFn& hstar, const UniformGrid& grid) {
  std::vector<ExtendedScalar> out(grid.size());
  std::vector<double> p(grid.dim());
  for (std::uint64_t k = 0; k < grid.size(); ++k) {
    grid.point(k, p);
    out[k] = hstar(p);
  }
  return out;
}

double lax_oleinik_bruteforce_v(const RealPointFn& initial, const UniformGrid& v_grid,
                                std::span<const ExtendedScalar> hstar_on_grid, const Point& x, double t,
                                Execution exec) {
  if (!(t >= 0.0)) throw std::invalid_argument("lax_oleinik_bruteforce_v: t must be nonnegative");
  require_same_dim(x.size(), v_grid.dim(), "lax_oleinik_bruteforce_v");
  if (hstar_on_grid.size() != v_grid.size()) {
    throw std::invalid_argument("lax_oleinik_bruteforce_v: table does not match the grid");
  }
  // Indexed loop rather than grid_min: the term needs k to read the table.
  const std::size_t n = x.size();
  ExtendedScalar best = kInfinity;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(v_grid.size());
  const auto body = [&](std::int64_t k, std::vector<double>& v, std::vector<double>& y) -> ExtendedScalar {
    const ExtendedScalar h = hstar_on_grid[static_cast<std::size_t>(k)];
    if (h.is_infinite()) return kInfinity;
    v_grid.point(static_cast<std::uint64_t>(k), v);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - t * v[i];
    return ExtendedScalar(initial(y) + t * h.value());
  };
  if (exec == Execution::serial) {
    std::vector<double> v(n), y(n);
    for (std::int64_t k = 0; k < count; ++k) best = min(best, body(k, v, y));
  } else {
#pragma omp parallel
    {
      std::vector<double> v(n), y(n);
      ExtendedScalar local = kInfinity;
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < count; ++k) {
        try {
          local = min(local, body(k, v, y));
        } catch (...) {
#pragma omp critical(hjnn_grid_failure)
          if (!failure) failure = std::current_exception();
        }
      }
#pragma omp critical(hjnn_grid_min)
      best = min(best, local);
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (best.is_infinite()) throw std::domain_error("lax_oleinik_bruteforce_v: H* is +inf on the whole grid");
  return best.value();
}

Gradient gradient_fd(const SolutionFn& s, const Point& x, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("gradient_fd: step must be positive");
  if (!(t - h > 0.0)) throw std::invalid_argument("gradient_fd: need t - h > 0");
  Gradient g;
  g.dt = (s(x, t + h) - s(x, t - h)) / (2.0 * h);
  g.dx = Point(x.size());
  Point probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double plus = s(probe, t);
    probe[i] = x[i] - h;
    const double minus = s(probe, t);
    probe[i] = x[i];
    g.dx[i] = (plus - minus) / (2.0 * h);
  }
  return g;
}

ExtendedScalar hj_residual(const SolutionFn& s, const PointFn& hamiltonian, const Point& x, double t, double h) {
  const Gradient g = gradient_fd(s, x, t, h);
  const ExtendedScalar hv = hamiltonian(g.dx.span());
  if (hv.is_infinite()) return kInfinity;
  return std::abs(g.dt + hv.value());
}

bool is_screened_smooth(const LagrangianNet& net, const Point& x, double t, const EvalResult& r) {
  if (t < kScreenMinTime || r.gap <= ExtendedScalar(kScreenGap)) return false;
  const auto& u = net.branches()[r.argmin].u;
  std::vector<double> w(net.dim());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (x[i] - u[i]) / t;
  return kink_distance(net.lagrangian(), w) > kScreenKinkDistance;
}

bool is_screened_smooth(const InitialDataNet& net, const Point& x, double t, const EvalResult& r) {
  if (t < kScreenMinTime || r.gap <= ExtendedScalar(kScreenGap)) return false;
  const auto& v = net.branches()[r.argmin].v;
  std::vector<double> y(net.dim());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] - t * v[i];
  return kink_distance(net.initial().negated(), y) > kScreenKinkDistance;
}

PointFn residual_hamiltonian(const LagrangianNet& net) {
  ConvexFn h = hamiltonian_of(net);
  return [h = std::move(h)](std::span<const double> p) {
    const Point snapped = snap_to_domain(h, Point(std::vector<double>(p.begin(), p.end())), kDomainSnapTolerance);
    return h(snapped.span());
  };
}

PointFn residual_hamiltonian(const InitialDataNet& net) {
  return [&net](std::span<const double> p) -> ExtendedScalar {
    return hamiltonian_pwa(net, Point(std::vector<double>(p.begin(), p.end())));
  };
}

ScreenedResiduals sample_screened_residuals(const LagrangianNet& net, std::size_t count, std::uint64_t seed,
                                            double h) {
  return screened_residuals(
      net, [&](const Point& x, double t) { return f1_eval(net, x, t); }, count, seed, h);
}

ScreenedResiduals sample_screened_residuals(const InitialDataNet& net, std::size_t count, std::uint64_t seed,
                                            double h) {
  return screened_residuals(
      net, [&](const Point& x, double t) { return f2_eval(net, x, t); }, count, seed, h);
}

UniformGrid velocity_grid(const InitialDataNet& net) {
  const std::size_t n = net.dim();
  if (n > kMaxGridDim) {
    throw OracleRefusal("velocity grid refused for dimension " + std::to_string(n) + " > " +
                        std::to_string(kMaxGridDim));
  }
  Point lo = net.branches().front().v, hi = lo;
  for (const auto& r : net.branches()) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], r.v[i]);
      hi[i] = std::max(hi[i], r.v[i]);
    }
  }
  Point center(n);
  double half = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    center[i] = 0.5 * (lo[i] + hi[i]);
    half = std::max(half, 0.5 * (hi[i] - lo[i]));
  }
  if (half == 0.0) half = 1e-3;
  constexpr double kSpacing = 1e-3;
  constexpr double kMaxPoints = 4e6;
  auto pts = static_cast<std::size_t>(2.0 * std::ceil(half / kSpacing - 1e-9)) + 1;
  const auto cap = static_cast<std::size_t>(std::floor(std::pow(kMaxPoints, 1.0 / static_cast<double>(n))));
  if (pts > cap) pts = cap % 2 == 1 ? cap : cap - 1;
  return UniformGrid(center, half, std::max<std::size_t>(pts, 3));
}

OracleConfig default_oracle_config(std::size_t n) {
  OracleConfig cfg;
  if (n == 2) cfg.pts_per_axis = 2001;
  if (n >= 3) cfg.pts_per_axis = 161;
  return cfg;
}

double oracle_tolerance_for(const OracleConfig& cfg) {
  const double spacing = 2.0 * cfg.search_box_halfwidth / static_cast<double>(cfg.pts_per_axis - 1);
  return kOracleTolerance * std::max(1.0, spacing / 1e-3);
}

VerifyReport verify_report(const LagrangianNet& net, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.architecture = "arch1";
  rep.dimension = net.dim();
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  rep.oracle_checked = !opts.residual_only;
  if (rep.oracle_checked && net.dim() > kMaxGridDim) {
    throw OracleRefusal("verify: oracle comparison needs dimension <= 3 (got " + std::to_string(net.dim()) +
                        "); rerun in residual-only mode");
  }
  if (rep.oracle_checked) opts.cfg.validate();
  rep.oracle_tolerance = oracle_tolerance_for(opts.cfg);

  std::optional<PointFn> ham;
  if (conjugate_analytic(net.lagrangian())) ham = residual_hamiltonian(net);
  rep.residual_checked = ham.has_value();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> tdist(0.1, 3.0);
  const RealPointFn initial = [&](std::span<const double> u) {
    return f1_initial(net, Point(std::vector<double>(u.begin(), u.end()))).value;
  };
  const PointFn hstar = [&](std::span<const double> w) { return net.lagrangian()(w); };
  const SolutionFn s = [&](const Point& x, double t) { return f1_eval(net, x, t).value; };

  for (std::size_t i = 0; i < opts.samples; ++i) {
    SampleRecord rec;
    rec.index = i;
    rec.x = uniform_point(rng, net.dim(), -4.0, 4.0);
    rec.t = tdist(rng);
    const EvalResult r = f1_eval(net, rec.x, rec.t);
    rec.value = r.value;
    if (rep.oracle_checked) {
      rec.oracle = lax_oleinik_bruteforce(initial, hstar, rec.x, rec.t, opts.cfg);
      rec.oracle_gap = std::abs(*rec.oracle - rec.value);
    }
    if (ham && rec.t - opts.cfg.fd_step > 0.0) {
      rec.screened = is_screened_smooth(net, rec.x, rec.t, r);
      rec.residual = hj_residual(s, *ham, rec.x, rec.t, opts.cfg.fd_step);
    }
    rep.records.push_back(std::move(rec));
  }
  summarize(rep);
  return rep;
}

VerifyReport verify_report(const InitialDataNet& net, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.architecture = "arch2";
  rep.dimension = net.dim();
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  rep.oracle_checked = !opts.residual_only;
  rep.residual_checked = true;
  if (rep.oracle_checked && net.dim() > kMaxGridDim) {
    throw OracleRefusal("verify: oracle comparison needs dimension <= 3 (got " + std::to_string(net.dim()) +
                        "); rerun in residual-only mode");
  }

  std::optional<UniformGrid> vgrid;
  std::vector<ExtendedScalar> table;
  if (rep.oracle_checked && opts.samples > 0) {
    vgrid = velocity_grid(net);
    table = tabulate([&](std::span<const double> v) {
      return conjugate_pwa(net, Point(std::vector<double>(v.begin(), v.end()))).value;
    }, *vgrid);
    rep.oracle_tolerance = kOracleTolerance * std::max(1.0, vgrid->spacing() / 1e-3);
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> tdist(0.0, 3.0);
  const RealPointFn initial = [&](std::span<const double> y) { return net.initial()(y); };
  const PointFn ham = residual_hamiltonian(net);
  const SolutionFn s = [&](const Point& x, double t) { return f2_eval(net, x, t).value; };

  for (std::size_t i = 0; i < opts.samples; ++i) {
    SampleRecord rec;
    rec.index = i;
    rec.x = uniform_point(rng, net.dim(), -4.0, 4.0);
    rec.t = tdist(rng);
    const EvalResult r = f2_eval(net, rec.x, rec.t);
    rec.value = r.value;
    if (vgrid) {
      rec.oracle = lax_oleinik_bruteforce_v(initial, *vgrid, table, rec.x, rec.t);
      rec.oracle_gap = std::abs(*rec.oracle - rec.value);
    }
    if (rec.t - opts.cfg.fd_step > 0.0) {
      rec.screened = is_screened_smooth(net, rec.x, rec.t, r);
      rec.residual = hj_residual(s, ham, rec.x, rec.t, opts.cfg.fd_step);
    }
    rep.records.push_back(std::move(rec));
  }
  summarize(rep);
  return rep;
}

std::string VerifyReport::to_key_values() const {
  std::ostringstream os;
  os.precision(17);
  os << "architecture=" << architecture << '\n'
     << "dimension=" << dimension << '\n'
     << "samples=" << samples << '\n'
     << "seed=" << seed << '\n'
     << "oracle_checked=" << (oracle_checked ? 1 : 0) << '\n'
     << "oracle_tolerance=" << oracle_tolerance << '\n'
     << "max_oracle_gap=" << max_oracle_gap << '\n'
     << "mean_oracle_gap=" << mean_oracle_gap << '\n'
     << "residual_checked=" << (residual_checked ? 1 : 0) << '\n'
     << "residual_tolerance=" << residual_tolerance << '\n'
     << "screened=" << screened << '\n'
     << "max_residual=" << max_residual << '\n'
     << "mean_residual=" << mean_residual << '\n'
     << "max_unscreened_residual=" << max_unscreened_residual << '\n'
     << "pass=" << (pass ? 1 : 0) << '\n';
  return os.str();
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os.precision(6);
  os << "Verification report (" << architecture << ", n = " << dimension << ", " << samples
     << " samples, seed " << seed << ")\n";
  if (oracle_checked) {
    os << "  oracle gap: max " << max_oracle_gap << ", mean " << mean_oracle_gap << " (tolerance "
       << oracle_tolerance << ")\n";
  } else {
    os << "  oracle gap: not checked\n";
  }
  if (residual_checked) {
    os << "  residual at " << screened << " screened points: max " << max_residual << ", mean "
       << mean_residual << " (tolerance " << residual_tolerance << ")\n"
       << "  residual at unscreened points (informational): max " << max_unscreened_residual << '\n';
  } else {
    os << "  residual: not checked (no closed-form Hamiltonian)\n";
  }
  os << "  result: " << (pass ? "PASS" : "FAIL") << "\n\n";
  os.precision(10);
  for (const auto& r : records) {
    os << "  #" << r.index << " x=" << format_point(r.x) << " t=" << r.t << " value=" << r.value;
    if (r.oracle) os << " oracle=" << *r.oracle << " gap=" << *r.oracle_gap;
    if (r.residual) os << " residual=" << *r.residual << (r.screened ? " (screened)" : " (unscreened)");
    os << '\n';
  }
  return os.str();
}

}  // namespace hjnn
