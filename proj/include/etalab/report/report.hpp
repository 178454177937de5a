#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etalab/eta/types.hpp"

namespace etalab::report {

enum class OutputFormat { kText, kCsv, kJson };

OutputFormat parse_format(const std::string& name);

// values are decimal strings (truncated, sign-prefixed for fixed-point).
struct ReportRow {
  std::string label;
  std::optional<eta::TailIndex> n;
  std::vector<std::pair<std::string, std::string>> values;

  const std::string* find(const std::string& column) const;
};

struct Report {
  std::string command;
  long precision_bits = 0;
  std::vector<std::string> columns;  // value columns, in order
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  void add(ReportRow row);  // extends `columns` with unseen value names
};

std::string render_text(const Report& r);
// Header "label,n,<columns>"; notes are not part of the CSV.
std::string render_csv(const Report& r);
// {"command", "precision_bits", "columns", "rows": [{"label", "n", "values"}], "notes"}
std::string render_json(const Report& r);
std::string render(const Report& r, OutputFormat format);

Report parse_json_report(const std::string& text);

}  // namespace etalab::report
