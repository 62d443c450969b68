#include "hjnn/commands.hpp"

#include <cstdio>
#include <functional>

#include "hjnn/bench.hpp"
#include "hjnn/io.hpp"
#include "hjnn/oracle.hpp"

namespace hjnn {
namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Maps the library's exception types onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const AssumptionHViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const OracleRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace

int cmd_eval(const std::filesystem::path& config, const std::string& x, double t, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Network net = build_network(load_problem_config(config));
    const Point point(parse_real_list(x, "x"));
    const std::size_t dim = std::visit([](const auto& n) { return n.dim(); }, net);
    if (point.size() != dim) {
      throw ValidationError("x", "has " + std::to_string(point.size()) + " coordinates, config dimension is " +
                                     std::to_string(dim));
    }
    const EvalResult r = std::visit(
        [&](const auto& n) -> EvalResult {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LagrangianNet>) {
            if (t < 0.0) throw ValidationError("t", "must be >= 0");
            return t == 0.0 ? f1_initial(n, point) : f1_eval(n, point, t);
          } else {
            return f2_eval(n, point, t);
          }
        },
        net);
    out << "value=" << format17(r.value) << " argmin=" << r.argmin + 1
        << " gap=" << (r.gap.is_infinite() ? std::string("inf") : format17(r.gap.value())) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_slice(const std::filesystem::path& config, const std::filesystem::path& slice, const std::string& prefix,
              bool render, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = build_network(load_problem_config(config));
    const SliceSpec spec = load_slice_spec(slice);
    const auto rows = std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LagrangianNet>) {
            return f1_slice(n, spec);
          } else {
            return f2_slice(n, spec);
          }
        },
        net);

    // Everything is computed before the first byte is written.
    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (std::size_t k = 0; k < spec.times.size(); ++k) {
      const std::string stem = slice_file_stem(prefix, spec.times[k]);
      files.emplace_back(stem + ".csv", slice_csv(spec, rows, k));
      if (render) {
        const auto img = slice_pgm(spec, rows, k);
        files.emplace_back(stem + ".pgm", std::string(img.begin(), img.end()));
      }
    }
    for (const auto& [path, contents] : files) {
      write_file(path, contents);
      out << "wrote " << path.string() << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const std::filesystem::path& config, std::size_t samples, std::uint64_t seed, bool residual_only,
               const std::optional<std::filesystem::path>& report, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = build_network(load_problem_config(config));
    VerifyOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.residual_only = residual_only;
    const VerifyReport rep = std::visit(
        [&](const auto& n) {
          opts.cfg = default_oracle_config(n.dim());
          return verify_report(n, opts);
        },
        net);

    std::filesystem::path base = report ? *report : std::filesystem::path(config).replace_extension(".verify");
    write_file(std::filesystem::path(base.string() + ".txt"), rep.to_text());
    write_file(std::filesystem::path(base.string() + ".kv"), rep.to_key_values());
    out << rep.to_key_values();
    return static_cast<int>(rep.pass ? kExitOk : kExitVerifyFailed);
  });
}

int cmd_bench(const std::string& architecture, const std::vector<std::size_t>& dims, std::size_t m,
              std::size_t reps, const std::optional<std::filesystem::path>& csv_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Architecture arch;
    if (architecture == "arch1") arch = Architecture::arch1;
    else if (architecture == "arch2") arch = Architecture::arch2;
    else throw ValidationError("architecture", "expected arch1 or arch2");
    const auto rows = run_bench(arch, dims, m, reps);
    const std::string csv = bench_csv(rows);
    if (csv_path) write_file(*csv_path, csv);
    out << csv;
    return static_cast<int>(kExitOk);
  });
}

}  // namespace hjnn
