#include "hjnn/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hjnn {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, const std::string& field) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ValidationError(field, "expected a finite real number, got '" + std::string(t) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text, const std::string& field) {
  const std::string_view t = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ValidationError(field, "expected a nonnegative integer, got '" + std::string(t) + "'");
  }
  return v;
}

ParamRow parse_row(std::string_view text, const std::string& field) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw ValidationError(field, "expected '<c1,...,cn> ; <scalar>', got '" + std::string(trim(text)) + "'");
  }
  return {Point(parse_real_list(text.substr(0, semi), field)), parse_real(text.substr(semi + 1), field)};
}

std::string join(std::span<const double> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_real(xs[i]);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Splits the text into (line number, content) pairs with comments and blanks removed.
std::vector<std::pair<std::size_t, std::string_view>> logical_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(lineno, line);
  }
  return out;
}

std::pair<std::string_view, std::string_view> split_key(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return {{}, line};
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

NormKind parse_norm_kind(std::string_view v, const std::string& field) {
  if (v == "1") return NormKind::l1;
  if (v == "2") return NormKind::l2;
  if (v == "inf") return NormKind::linf;
  throw ValidationError(field, "expected 1, 2 or inf, got '" + std::string(v) + "'");
}

}  // namespace

std::string to_string(Architecture a) { return a == Architecture::arch1 ? "arch1" : "arch2"; }

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<double> parse_real_list(std::string_view text, const std::string& field) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma), field));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

ProblemConfig parse_problem_config(std::string_view text) {
  ProblemConfig cfg;
  bool have_arch = false, have_dim = false, have_name = false, have_negate = false;
  enum class Section { top, function, params } section = Section::top;

  for (const auto& [lineno, line] : logical_lines(text)) {
    const std::string where = "line " + std::to_string(lineno);
    if (line.front() == '[') {
      if (line == "[function]") {
        section = Section::function;
      } else if (line == "[params]") {
        section = Section::params;
      } else {
        throw ValidationError("section", where + ": unknown section " + std::string(line));
      }
      continue;
    }
    const auto [key, value] = split_key(line);
    switch (section) {
      case Section::top:
        if (key == "architecture") {
          if (value == "arch1") cfg.architecture = Architecture::arch1;
          else if (value == "arch2") cfg.architecture = Architecture::arch2;
          else throw ValidationError("architecture", "expected arch1 or arch2, got '" + std::string(value) + "'");
          have_arch = true;
        } else if (key == "dimension") {
          cfg.dimension = parse_count(value, "dimension");
          if (cfg.dimension == 0) throw ValidationError("dimension", "must be >= 1");
          have_dim = true;
        } else {
          throw ValidationError(key.empty() ? std::string("top-level") : std::string(key),
                                where + ": unexpected statement before [function]");
        }
        break;
      case Section::function:
        if (key == "name") {
          cfg.function.name = std::string(value);
          have_name = true;
        } else if (key == "p") {
          cfg.function.p = parse_norm_kind(value, "function.p");
        } else if (key == "negate") {
          if (value != "true" && value != "false") {
            throw ValidationError("function.negate", "expected true or false");
          }
          cfg.function.negate = value == "true";
          have_negate = true;
        } else if (key == "row") {
          auto row = parse_row(value, "function.row");
          cfg.function.rows.push_back({std::move(row.point), row.scalar});
        } else {
          throw ValidationError("function." + std::string(key), where + ": unknown key");
        }
        break;
      case Section::params:
        if (key.empty()) {
          cfg.params.push_back(parse_row(value, "params (" + where + ")"));
        } else if (key == "norm_hamiltonian") {
          if (value == "l1") cfg.norm_hamiltonian = NormHamiltonian::l1;
          else if (value == "linf") cfg.norm_hamiltonian = NormHamiltonian::linf;
          else throw ValidationError("params.norm_hamiltonian", "expected l1 or linf");
        } else {
          throw ValidationError("params." + std::string(key), where + ": unknown key");
        }
        break;
    }
  }

  if (!have_arch) throw ValidationError("architecture", "missing");
  if (!have_dim) throw ValidationError("dimension", "missing");
  if (!have_name) throw ValidationError("function.name", "missing");
  if (!have_negate) cfg.function.negate = cfg.architecture == Architecture::arch2;
  if (cfg.params.empty() && !cfg.norm_hamiltonian) throw ValidationError("params", "no parameter rows");
  if (!cfg.params.empty() && cfg.norm_hamiltonian) {
    throw ValidationError("params", "give either rows or norm_hamiltonian, not both");
  }
  return cfg;
}

std::string serialize(const ProblemConfig& cfg) {
  std::ostringstream os;
  os << "architecture = " << to_string(cfg.architecture) << '\n'
     << "dimension = " << cfg.dimension << "\n\n"
     << "[function]\n"
     << "name = " << cfg.function.name << '\n';
  if (cfg.function.p) os << "p = " << to_string(*cfg.function.p) << '\n';
  os << "negate = " << (cfg.function.negate ? "true" : "false") << '\n';
  for (const auto& r : cfg.function.rows) os << "row = " << join(r.v.span()) << " ; " << format_real(r.b) << '\n';
  os << "\n[params]\n";
  if (cfg.norm_hamiltonian) {
    os << "norm_hamiltonian = " << (*cfg.norm_hamiltonian == NormHamiltonian::l1 ? "l1" : "linf") << '\n';
  }
  for (const auto& r : cfg.params) os << join(r.point.span()) << " ; " << format_real(r.scalar) << '\n';
  return os.str();
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
  return parse_problem_config(read_file(path));
}

ConvexFn build_function(const FunctionSpec& spec, std::size_t dimension) {
  const auto& n = spec.name;
  if (spec.p && n != "pnorm") throw ValidationError("function.p", "only valid for pnorm");
  if (!spec.rows.empty() && n != "max_affine") throw ValidationError("function.row", "only valid for max_affine");
  if (n == "clipped_quadratic_1d" || n == "indicator_conjugate_quadratic_1d") {
    if (dimension != 1) throw ValidationError("dimension", n + " requires dimension 1");
    return n == "clipped_quadratic_1d" ? ConvexFn::clipped_quadratic_1d()
                                       : ConvexFn::indicator_conjugate_quadratic_1d();
  }
  if (n == "pnorm") {
    if (!spec.p) throw ValidationError("function.p", "pnorm needs p = 1, 2 or inf");
    return ConvexFn::pnorm(*spec.p);
  }
  if (n == "shifted_norm_plus") return ConvexFn::shifted_norm_plus();
  if (n == "half_squared_norm") return ConvexFn::half_squared_norm();
  if (n == "norm_on_unit_ball") return ConvexFn::norm_on_unit_ball();
  if (n == "max_affine") {
    if (spec.rows.empty()) throw ValidationError("function.row", "max_affine needs at least one row");
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
      if (spec.rows[i].v.size() != dimension) {
        throw ValidationError("function.row", "row " + std::to_string(i + 1) + " has dimension " +
                                                  std::to_string(spec.rows[i].v.size()) + ", expected " +
                                                  std::to_string(dimension));
      }
    }
    return ConvexFn::max_affine(spec.rows);
  }
  throw ValidationError("function.name", "unknown catalog function '" + n + "'");
}

Network build_network(const ProblemConfig& cfg) {
  ConvexFn f = build_function(cfg.function, cfg.dimension);
  for (std::size_t i = 0; i < cfg.params.size(); ++i) {
    if (cfg.params[i].point.size() != cfg.dimension) {
      throw ValidationError("params", "row " + std::to_string(i + 1) + " has dimension " +
                                          std::to_string(cfg.params[i].point.size()) + ", expected " +
                                          std::to_string(cfg.dimension));
    }
  }

  if (cfg.architecture == Architecture::arch1) {
    if (cfg.function.negate) throw ValidationError("function.negate", "arch1 takes the Lagrangian itself");
    if (cfg.norm_hamiltonian) throw ValidationError("params.norm_hamiltonian", "only valid for arch2");
    if (!f.lipschitz()) {
      throw ValidationError("function.name", f.name() + " is not globally Lipschitz; arch1 cannot use it");
    }
    std::vector<LagrangianBranch> branches;
    for (const auto& r : cfg.params) branches.push_back({r.point, r.scalar});
    return LagrangianNet(std::move(f), std::move(branches));
  }

  if (!cfg.function.negate) {
    throw ValidationError("function.negate", "arch2 needs negate = true (initial data J = -f is concave)");
  }
  if (!f.finite_everywhere()) throw ValidationError("function.name", f.name() + " is not finite everywhere");
  std::vector<AffineRow> rows;
  if (cfg.norm_hamiltonian) {
    try {
      rows = build_norm_hamiltonian(*cfg.norm_hamiltonian, cfg.dimension);
    } catch (const std::invalid_argument& e) {
      throw ValidationError("params.norm_hamiltonian", e.what());
    }
  } else {
    for (const auto& r : cfg.params) rows.push_back({r.point, r.scalar});
  }
  return InitialDataNet(ConcaveFn(std::move(f)), std::move(rows));
}

SliceSpec parse_slice_spec(std::string_view text) {
  SliceSpec spec;
  bool have_axes = false, have_times = false;
  for (const auto& [lineno, line] : logical_lines(text)) {
    const auto [key, value] = split_key(line);
    if (key == "axes") {
      for (double a : parse_real_list(value, "axes")) {
        if (a < 1.0 || a != std::floor(a)) throw ValidationError("axes", "axes are 1-based integers");
        spec.free_axes.push_back(static_cast<std::size_t>(a) - 1);
      }
      have_axes = true;
    } else if (key == "range") {
      const auto r = parse_real_list(value, "range");
      if (r.size() != 3 || r[2] < 1.0 || r[2] != std::floor(r[2])) {
        throw ValidationError("range", "expected '<min>, <max>, <steps>'");
      }
      spec.ranges.push_back({r[0], r[1], static_cast<std::size_t>(r[2])});
    } else if (key == "fixed") {
      spec.fixed_coords = parse_real_list(value, "fixed");
    } else if (key == "times") {
      spec.times = parse_real_list(value, "times");
      have_times = true;
    } else {
      throw ValidationError(key.empty() ? std::string("slice") : std::string(key),
                            "line " + std::to_string(lineno) + ": unknown statement");
    }
  }
  if (!have_axes) throw ValidationError("axes", "missing");
  if (!have_times) throw ValidationError("times", "missing");
  return spec;
}

std::string serialize(const SliceSpec& spec) {
  std::ostringstream os;
  os << "axes = ";
  for (std::size_t i = 0; i < spec.free_axes.size(); ++i) os << (i ? "," : "") << spec.free_axes[i] + 1;
  os << '\n';
  for (const auto& r : spec.ranges) {
    os << "range = " << format_real(r.min) << ", " << format_real(r.max) << ", " << r.steps << '\n';
  }
  if (!spec.fixed_coords.empty()) os << "fixed = " << join(spec.fixed_coords) << '\n';
  os << "times = " << join(spec.times) << '\n';
  return os.str();
}

SliceSpec load_slice_spec(const std::filesystem::path& path) { return parse_slice_spec(read_file(path)); }

}  // namespace hjnn
