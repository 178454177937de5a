#include "etalab/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace etalab::report {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ParseError("unknown format '" + name + "' (text, csv or json)", 1);
}

const std::string* ReportRow::find(const std::string& column) const {
  for (const auto& [name, value] : values) {
    if (name == column) return &value;
  }
  return nullptr;
}

void Report::add(ReportRow row) {
  for (const auto& entry : row.values) {
    if (std::find(columns.begin(), columns.end(), entry.first) == columns.end()) {
      columns.push_back(entry.first);
    }
  }
  rows.push_back(std::move(row));
}

namespace {

std::string n_text(const ReportRow& row) { return row.n ? std::to_string(row.n->value()) : ""; }

std::string cell(const ReportRow& row, const std::string& column) {
  const std::string* v = row.find(column);
  return v ? *v : "";
}

}  // namespace

std::string render_text(const Report& r) {
  std::vector<std::string> header{"label", "n"};
  header.insert(header.end(), r.columns.begin(), r.columns.end());
  std::vector<std::vector<std::string>> table{header};
  for (const ReportRow& row : r.rows) {
    std::vector<std::string> line{row.label, n_text(row)};
    for (const std::string& c : r.columns) line.push_back(cell(row, c));
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream out;
  out << r.command << " (" << r.precision_bits << "-bit precision)\n";
  for (const auto& line : table) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += "  ";
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    out << text << '\n';
  }
  for (const std::string& note : r.notes) out << "# " << note << '\n';
  return out.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "label,n";
  for (const std::string& c : r.columns) out << ',' << c;
  out << '\n';
  for (const ReportRow& row : r.rows) {
    out << row.label << ',' << n_text(row);
    for (const std::string& c : r.columns) out << ',' << cell(row, c);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["precision_bits"] = r.precision_bits;
  doc["columns"] = r.columns;
  Json rows = Json::array();
  for (const ReportRow& row : r.rows) {
    Json values = Json::object();
    for (const auto& [name, value] : row.values) values[name] = value;
    Json entry;
    entry["label"] = row.label;
    entry["n"] = row.n ? Json(std::to_string(row.n->value())) : Json(nullptr);
    entry["values"] = std::move(values);
    rows.push_back(std::move(entry));
  }
  doc["rows"] = std::move(rows);
  doc["notes"] = r.notes;
  return doc.dump(2) + "\n";
}

std::string render(const Report& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return render_text(r);
    case OutputFormat::kCsv:
      return render_csv(r);
    case OutputFormat::kJson:
      return render_json(r);
  }
  return render_text(r);
}

Report parse_json_report(const std::string& text) {
  const Json doc = Json::parse(text);
  Report r;
  r.command = doc.at("command").get<std::string>();
  r.precision_bits = doc.at("precision_bits").get<long>();
  r.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const Json& entry : doc.at("rows")) {
    ReportRow row;
    row.label = entry.at("label").get<std::string>();
    if (!entry.at("n").is_null()) {
      row.n = eta::TailIndex(std::stoull(entry.at("n").get<std::string>()));
    }
    for (const auto& [name, value] : entry.at("values").items()) {
      row.values.emplace_back(name, value.get<std::string>());
    }
    r.rows.push_back(std::move(row));
  }
  r.notes = doc.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace etalab::report
