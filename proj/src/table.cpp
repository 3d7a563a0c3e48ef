#include "uea/table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "uea/closed_form.hpp"
#include "uea/combinatorics.hpp"
#include "uea/polynomial_json.hpp"
#include "uea/spec_json.hpp"
#include "uea/straighten.hpp"

namespace uea {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const Monomial& m, char sep) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += sep;
    out += std::to_string(m[i]);
  }
  return out;
}

ordered_json exps_json(const Monomial& m) {
  ordered_json j = ordered_json::array();
  for (auto e : m.exponents()) j.push_back(e);
  return j;
}

ordered_json poly_json(const Polynomial& p) {
  ordered_json j = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json t;
    t["coeff"] = c.to_string();
    t["mono"] = exps_json(m);
    j.push_back(std::move(t));
  }
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::closed_form: return "closed_form";
    case Engine::oracle: return "oracle";
    case Engine::cross_checked: return "cross_checked";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "closed_form" || name == "closed") return Engine::closed_form;
  if (name == "oracle") return Engine::oracle;
  if (name == "cross_checked" || name == "both") return Engine::cross_checked;
  return std::nullopt;
}

CrossCheckDivergence::CrossCheckDivergence(Monomial left, Monomial right, Polynomial closed,
                                           Polynomial oracle)
    : EngineMismatch("cross-check divergence on " + left.to_string() + " * " +
                     right.to_string() + ": closed form " + closed.to_string() + ", oracle " +
                     oracle.to_string()),
      left_(std::move(left)),
      right_(std::move(right)),
      closed_(std::move(closed)),
      oracle_(std::move(oracle)) {}

std::size_t expected_record_count(std::size_t dim, unsigned max_degree) {
  const mpz_class n = binomial(max_degree + dim, dim);
  return static_cast<std::size_t>(n.get_ui() * n.get_ui());
}

std::string custom_spec_label(const LieAlgebraSpec& spec) {
  std::ostringstream os;
  os << "custom:" << spec.name() << ':' << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(spec_to_json(spec).dump());
  return os.str();
}

Table generate_table(const TableSource& source, unsigned max_degree, Engine engine,
                     const TableOptions& options) {
  const AlgebraId* id = std::get_if<AlgebraId>(&source);
  const LieAlgebraSpec spec = id ? builtin(*id) : std::get<LieAlgebraSpec>(source);
  if (engine != Engine::oracle && !id) {
    throw Error("engine " + std::string(to_string(engine)) + " requires a catalog algebra");
  }
  if (!spec.well_formed()) throw Error("spec '" + spec.name() + "' is malformed");

  const auto dim = static_cast<std::size_t>(spec.dim());
  const std::vector<Monomial> basis = monomials_up_to_degree(dim, max_degree);
  const std::size_t n = basis.size();
  const std::size_t total = n * n;

  ClosedFormFn closed = options.closed_form;
  if (!closed) closed = [](AlgebraId a, const Monomial& l, const Monomial& r) {
    return product(a, l, r);
  };

  std::vector<std::optional<Polynomial>> results(total);
  std::vector<std::exception_ptr> failures(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};

  auto record_failure = [&](std::size_t idx, std::exception_ptr e) {
    failures[idx] = std::move(e);
    std::size_t cur = stop_at.load();
    while (idx < cur && !stop_at.compare_exchange_weak(cur, idx)) {
    }
  };

  auto work = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total || idx > stop_at.load()) return;
      const Monomial& l = basis[idx / n];
      const Monomial& r = basis[idx % n];
      try {
        switch (engine) {
          case Engine::closed_form: results[idx] = closed(*id, l, r); break;
          case Engine::oracle: results[idx] = oracle_product(spec, l, r); break;
          case Engine::cross_checked: {
            Polynomial c = closed(*id, l, r);
            Polynomial o = oracle_product(spec, l, r);
            if (c != o) throw CrossCheckDivergence(l, r, std::move(c), std::move(o));
            results[idx] = std::move(c);
            break;
          }
        }
      } catch (...) {
        record_failure(idx, std::current_exception());
      }
    }
  };

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  // Every index below stop_at was claimed and finished, so this is the first failure in grid order.
  if (const std::size_t s = stop_at.load(); s != std::numeric_limits<std::size_t>::max()) {
    std::rethrow_exception(failures[s]);
  }

  Table table;
  table.manifest.algebra = id ? std::string(to_string(*id)) : custom_spec_label(spec);
  table.manifest.max_degree = max_degree;
  table.manifest.engine = engine;
  table.manifest.record_count = total;
  table.records.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    table.records.push_back({basis[idx / n], basis[idx % n], std::move(*results[idx])});
  }
  return table;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  throw UnsupportedFormat("unsupported table format '" + std::string(name) + "'");
}

std::string export_table(const TableManifest& manifest, const std::vector<TableRecord>& records,
                         TableFormat format) {
  if (format == TableFormat::csv) {
    std::string out = "left;right;coeff;mono\n";
    for (const auto& rec : records) {
      const std::string prefix = join(rec.left, ',') + ';' + join(rec.right, ',') + ';';
      for (const auto& [m, c] : rec.result.terms()) {
        out += prefix + c.to_string() + ';' + join(m, ',') + '\n';
      }
    }
    return out;
  }
  ordered_json j;
  j["algebra"] = manifest.algebra;
  j["max_degree"] = manifest.max_degree;
  j["engine"] = std::string(to_string(manifest.engine));
  ordered_json entries = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json e;
    e["left"] = exps_json(rec.left);
    e["right"] = exps_json(rec.right);
    e["result"] = poly_json(rec.result);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(1) + "\n";
}

std::string export_table(const TableManifest& manifest, const std::vector<TableRecord>& records,
                         std::string_view format) {
  return export_table(manifest, records, parse_table_format(format));
}

Table import_table_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("table JSON: ") + e.what());
  }
  try {
    Table t;
    t.manifest.algebra = j.at("algebra").get<std::string>();
    t.manifest.max_degree = j.at("max_degree").get<unsigned>();
    const auto engine = parse_engine(j.at("engine").get<std::string>());
    if (!engine) throw Error("table JSON: unknown engine");
    t.manifest.engine = *engine;
    for (const auto& e : j.at("entries")) {
      const std::size_t dim = e.at("left").size();
      t.records.push_back({monomial_from_json(e.at("left"), dim),
                           monomial_from_json(e.at("right"), dim),
                           polynomial_from_json(e.at("result"), dim)});
    }
    t.manifest.record_count = t.records.size();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("table JSON: ") + e.what());
  }
}

}  // namespace uea
