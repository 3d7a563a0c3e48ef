#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "uea/catalog.hpp"
#include "uea/error.hpp"
#include "uea/polynomial.hpp"

namespace uea {

enum class Engine { closed_form, oracle, cross_checked };

std::string_view to_string(Engine engine);
std::optional<Engine> parse_engine(std::string_view name);

struct TableRecord {
  Monomial left;
  Monomial right;
  Polynomial result;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

struct TableManifest {
  // Catalog name, or "custom:<name>:<fnv1a-64 of the spec JSON>".
  std::string algebra;
  unsigned max_degree = 0;
  Engine engine = Engine::closed_form;
  std::size_t record_count = 0;

  friend bool operator==(const TableManifest&, const TableManifest&) = default;
};

struct Table {
  TableManifest manifest;
  std::vector<TableRecord> records;
};

using TableSource = std::variant<AlgebraId, LieAlgebraSpec>;
using ClosedFormFn = std::function<Polynomial(AlgebraId, const Monomial&, const Monomial&)>;

struct TableOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  // Replaces the closed-form engine; used to exercise cross-check failures.
  ClosedFormFn closed_form;
};

// First (lowest grid index) pair on which the two engines disagree.
class CrossCheckDivergence : public EngineMismatch {
 public:
  CrossCheckDivergence(Monomial left, Monomial right, Polynomial closed, Polynomial oracle);

  const Monomial& left() const noexcept { return left_; }
  const Monomial& right() const noexcept { return right_; }
  const Polynomial& closed_form() const noexcept { return closed_; }
  const Polynomial& oracle() const noexcept { return oracle_; }

 private:
  Monomial left_;
  Monomial right_;
  Polynomial closed_;
  Polynomial oracle_;
};

// (C(max_degree + dim, dim))^2.
std::size_t expected_record_count(std::size_t dim, unsigned max_degree);

std::string custom_spec_label(const LieAlgebraSpec& spec);

// All ordered pairs of monomials of degree <= max_degree, in graded-lex order
// of (left, right). The closed_form engine needs a catalog id.
Table generate_table(const TableSource& source, unsigned max_degree, Engine engine,
                     const TableOptions& options = {});

enum class TableFormat { json, csv };

// Throws UnsupportedFormat.
TableFormat parse_table_format(std::string_view name);

std::string export_table(const TableManifest& manifest, const std::vector<TableRecord>& records,
                         TableFormat format);
std::string export_table(const TableManifest& manifest, const std::vector<TableRecord>& records,
                         std::string_view format);

// Inverse of the JSON export. record_count is taken from the entries.
Table import_table_json(std::string_view text);

}  // namespace uea
