#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hjnn/arch_one.hpp"
#include "hjnn/arch_two.hpp"
#include "hjnn/slice.hpp"

namespace hjnn {

/// A malformed or inconsistent configuration; `field()` names the culprit.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Architecture { arch1, arch2 };

std::string to_string(Architecture a);

/// Catalog function as written in a config file.
struct FunctionSpec {
  std::string name;
  bool negate = false;              // architecture 2 uses J = -f
  std::optional<NormKind> p;        // pnorm only
  std::vector<AffineRow> rows;      // max_affine only
  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

struct ParamRow {
  Point point;
  double scalar = 0.0;
  friend bool operator==(const ParamRow&, const ParamRow&) = default;
};

/// A problem: architecture, catalog function, and either explicit parameter
/// rows or a norm-Hamiltonian generator directive (architecture 2).
///
/// Text grammar (one statement per line, `#` starts a comment):
///
///     architecture = arch1 | arch2
///     dimension = <int >= 1>
///     [function]
///     name = clipped_quadratic_1d | pnorm | shifted_norm_plus | half_squared_norm | max_affine
///     p = 1 | 2 | inf                  (pnorm)
///     negate = true | false            (true exactly for arch2)
///     row = <c1,...,cn> ; <b>          (max_affine, repeated)
///     [params]
///     <c1,...,cn> ; <scalar>           (repeated: (u_i ; a_i) or (v_i ; b_i))
///     norm_hamiltonian = l1 | linf     (arch2, instead of rows)
struct ProblemConfig {
  Architecture architecture = Architecture::arch1;
  std::size_t dimension = 1;
  FunctionSpec function;
  std::vector<ParamRow> params;
  std::optional<NormHamiltonian> norm_hamiltonian;
  friend bool operator==(const ProblemConfig&, const ProblemConfig&) = default;
};

ProblemConfig parse_problem_config(std::string_view text);
std::string serialize(const ProblemConfig& cfg);

/// Throws IoError when the file cannot be read, ValidationError when it does not parse.
ProblemConfig load_problem_config(const std::filesystem::path& path);

ConvexFn build_function(const FunctionSpec& spec, std::size_t dimension);

using Network = std::variant<LagrangianNet, InitialDataNet>;

/// Constructs the network; throws ValidationError or AssumptionHViolated.
Network build_network(const ProblemConfig& cfg);

/// Slice grammar:
///
///     axes = <i>[,<j>]                 (1-based coordinate indices)
///     range = <min>, <max>, <steps>    (one line per axis, same order)
///     fixed = <c1,...,cn>              (optional, defaults to the origin)
///     times = <t1>, <t2>, ...          (ascending, >= 0)
SliceSpec parse_slice_spec(std::string_view text);
std::string serialize(const SliceSpec& spec);
SliceSpec load_slice_spec(const std::filesystem::path& path);

/// Parses a comma-separated list of reals. Throws ValidationError(field, ...).
std::vector<double> parse_real_list(std::string_view text, const std::string& field);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double v);

}  // namespace hjnn
