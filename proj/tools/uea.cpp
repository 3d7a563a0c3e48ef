// uea: products, tables and checks for universal enveloping algebras of
// small nilpotent Lie algebras.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
// 3 engine mismatch.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uea/catalog.hpp"
#include "uea/closed_form.hpp"
#include "uea/error.hpp"
#include "uea/expr.hpp"
#include "uea/nilpotency.hpp"
#include "uea/spec_json.hpp"
#include "uea/straighten.hpp"
#include "uea/table.hpp"

namespace {

using namespace uea;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kMismatch = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const ValidationReport& r) : Error("invalid spec"), report(r) {}
  ValidationReport report;
};

struct Target {
  std::optional<AlgebraId> id;
  LieAlgebraSpec spec;
};

// Catalog id, abelian_k, or a path to a spec JSON file.
Target resolve(const std::string& name) {
  if (auto id = parse_algebra_id(name)) return {id, builtin(*id)};
  if (name.rfind("abelian_", 0) == 0) return {std::nullopt, builtin(std::string_view(name))};
  LieAlgebraSpec spec = load_spec(name);
  ValidationReport report = validate(spec);
  if (!report.ok) throw InvalidSpec(report);
  return {std::nullopt, std::move(spec)};
}

void write_out(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << bytes;
  if (!f) throw Error("write to " + path + " failed");
}

int cmd_product(const std::string& algebra, const std::string& left, const std::string& right,
                std::string engine) {
  const Target t = resolve(algebra);
  if (engine.empty()) engine = t.id ? "closed" : "oracle";
  if (engine != "closed" && engine != "oracle" && engine != "both") {
    throw UsageError("unknown engine '" + engine + "'");
  }
  if (engine != "oracle" && !t.id) {
    throw UsageError("engine '" + engine + "' requires a catalog algebra");
  }
  const Polynomial l = to_polynomial(t.spec, parse_expr(left, t.spec.dim()));
  const Polynomial r = to_polynomial(t.spec, parse_expr(right, t.spec.dim()));

  if (engine == "oracle") {
    std::cout << oracle_product(t.spec, l, r) << '\n';
    return kOk;
  }
  const Polynomial closed = product(*t.id, l, r);
  std::cout << closed << '\n';
  if (engine == "both") {
    const Polynomial oracle = oracle_product(t.spec, l, r);
    if (closed != oracle) {
      std::cout << "MISMATCH\noracle: " << oracle << '\n';
      return kMismatch;
    }
    std::cout << "MATCH\n";
  }
  return kOk;
}

int cmd_table(const std::string& algebra, unsigned max_degree, const std::string& engine_name,
              const std::string& format_name, const std::string& out, unsigned workers) {
  const auto engine = parse_engine(engine_name);
  if (!engine) throw UsageError("unknown engine '" + engine_name + "'");
  const TableFormat format = parse_table_format(format_name);
  const Target t = resolve(algebra);
  TableSource source = t.id ? TableSource(*t.id) : TableSource(t.spec);
  TableOptions opts;
  opts.workers = workers;
  const Table table = generate_table(source, max_degree, *engine, opts);
  write_out(out, export_table(table.manifest, table.records, format));
  return kOk;
}

int cmd_validate(const std::string& path) {
  const LieAlgebraSpec spec = load_spec(path);
  const ValidationReport report = validate(spec);
  std::cout << spec.name() << " (dim " << spec.dim() << "): " << report.to_string();
  if (!report.ok) return kInvalid;

  const NilpotencyProfile profile = lower_central_series(spec);
  std::cout << "lower central series dims:";
  for (auto d : profile.series_dims) std::cout << ' ' << d;
  std::cout << '\n';
  if (profile.nilpotent) {
    std::cout << "nilpotent, class " << *profile.nilpotency_class << '\n';
    std::cout << "engel degrees:";
    for (const auto& [g, k] : engel_check(spec)) std::cout << " x" << g.value << ':' << k;
    std::cout << '\n';
  } else {
    std::cout << "not nilpotent\n";
  }
  return kOk;
}

double time_grid(AlgebraId id, unsigned max_degree, Engine engine, unsigned workers,
                 unsigned repeat) {
  TableOptions opts;
  opts.workers = workers;
  double best = 0;
  for (unsigned i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    (void)generate_table(id, max_degree, engine, opts);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (i == 0 || dt.count() < best) best = dt.count();
  }
  return best;
}

int cmd_bench(const std::string& algebra, unsigned max_degree, unsigned workers, unsigned repeat) {
  const auto id = parse_algebra_id(algebra);
  if (!id) throw UsageError("bench needs a catalog algebra, got '" + algebra + "'");
  const double closed = time_grid(*id, max_degree, Engine::closed_form, workers, repeat);
  const double oracle = time_grid(*id, max_degree, Engine::oracle, workers, repeat);
  const double speedup = closed > 0 ? oracle / closed : 0;
  std::cout << std::fixed << std::setprecision(4);
  std::cout << "algebra " << algebra << ", max degree " << max_degree << ", "
            << expected_record_count(static_cast<std::size_t>(dimension(*id)), max_degree)
            << " pairs, best of " << repeat << '\n';
  std::cout << "closed_form " << closed << " s\n";
  std::cout << "oracle      " << oracle << " s\n";
  std::cout << std::setprecision(1) << "speedup     " << speedup << "x ("
            << (speedup >= 10 ? "meets" : "below") << " 10x)\n";
  return kOk;
}

int cmd_oracle(const std::string& algebra, const std::string& expr) {
  const Target t = resolve(algebra);
  std::cout << to_polynomial(t.spec, parse_expr(expr, t.spec.dim())) << '\n';
  return kOk;
}

int cmd_export_spec(const std::string& algebra, const std::string& out) {
  write_out(out, spec_to_json(resolve(algebra).spec).dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact products in universal enveloping algebras of nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string algebra, left, right, engine, table_engine, format = "json", out = "-", spec_path, expr;
  unsigned max_degree = 0, workers = 0, repeat = 3;

  auto* product_cmd = app.add_subcommand("product", "Multiply two expressions");
  product_cmd->add_option("--algebra", algebra, "Catalog id or spec JSON path")->required();
  product_cmd->add_option("--left", left)->required();
  product_cmd->add_option("--right", right)->required();
  product_cmd->add_option("--engine", engine, "closed, oracle or both");

  auto* table_cmd = app.add_subcommand("table", "Export a structure-constant table");
  table_cmd->add_option("--algebra", algebra)->required();
  table_cmd->add_option("--max-degree", max_degree)->required();
  table_cmd->add_option("--engine", table_engine, "closed_form, oracle or cross_checked")
      ->default_val("closed_form");
  table_cmd->add_option("--format", format, "json or csv")->capture_default_str();
  table_cmd->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
  table_cmd->add_option("--workers", workers, "Worker threads, 0 for all cores");

  auto* validate_cmd = app.add_subcommand("validate", "Check a spec and report nilpotency");
  validate_cmd->add_option("--spec", spec_path)->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time closed form against the oracle");
  bench_cmd->add_option("--algebra", algebra)->required();
  bench_cmd->add_option("--max-degree", max_degree)->required();
  bench_cmd->add_option("--workers", workers)->default_val(1u);
  bench_cmd->add_option("--repeat", repeat)->capture_default_str()->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Straighten an expression to PBW form");
  oracle_cmd->add_option("--algebra", algebra)->required();
  oracle_cmd->add_option("--expr", expr)->required();

  auto* export_cmd = app.add_subcommand("export-spec", "Write an algebra as spec JSON");
  export_cmd->add_option("--algebra", algebra)->required();
  export_cmd->add_option("--out", out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*product_cmd) return cmd_product(algebra, left, right, engine);
    if (*table_cmd) return cmd_table(algebra, max_degree, table_engine, format, out, workers);
    if (*validate_cmd) return cmd_validate(spec_path);
    if (*bench_cmd) return cmd_bench(algebra, max_degree, workers, repeat);
    if (*oracle_cmd) return cmd_oracle(algebra, expr);
    if (*export_cmd) return cmd_export_spec(algebra, out);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: spec failed validation\n" << e.report.to_string();
    return kInvalid;
  } catch (const EngineMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
