#include "cimat/document.hpp"

#include <algorithm>

#include <json.hpp>

#include "cimat/errors.hpp"

namespace cimat {
namespace {

template <class T>
MatrixDocument document_of(const CIMatrix<T>& m, ScalarKind kind, bool with_mu) {
  MatrixDocument doc;
  doc.n = m.n();
  doc.kind = kind;
  if (with_mu) {
    std::vector<std::string> mu;
    for (const T& v : m.nodes.values()) mu.push_back(v.str());
    doc.mu = std::move(mu);
  }
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    std::vector<std::string> row;
    for (const T& v : m.entries.row(r)) row.push_back(v.str());
    doc.entries.push_back(std::move(row));
  }
  return doc;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T, class F>
Matrix<T> entries_as(const MatrixDocument& doc, F&& parse_one) {
  if (doc.n == 0 || doc.entries.size() != doc.n) throw ShapeError("document shape mismatch");
  Matrix<T> m(doc.n, doc.n, parse_one(doc.entries[0][0]));
  for (std::size_t r = 0; r < doc.n; ++r) {
    if (doc.entries[r].size() != doc.n) throw ShapeError("document row has wrong length");
    for (std::size_t c = 0; c < doc.n; ++c) m(r, c) = parse_one(doc.entries[r][c]);
  }
  return m;
}

}  // namespace

std::string_view scalar_kind_name(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational: return "rational";
    case ScalarKind::float64: return "float64";
    case ScalarKind::symbolic: return "symbolic";
  }
  return "unknown";
}

ScalarKind parse_scalar_kind(std::string_view name) {
  if (name == "rational") return ScalarKind::rational;
  if (name == "float64") return ScalarKind::float64;
  if (name == "symbolic") return ScalarKind::symbolic;
  throw ParseError("unknown scalar kind '" + std::string(name) + "'");
}

MatrixDocument to_document(const CIMatrix<Rational>& m) { return document_of(m, ScalarKind::rational, true); }
MatrixDocument to_document(const CIMatrix<Float64>& m) { return document_of(m, ScalarKind::float64, true); }
MatrixDocument to_document(const CIMatrix<MultiPoly>& m) { return document_of(m, ScalarKind::symbolic, false); }

std::string canonical_scalar(std::string_view text, ScalarKind kind, std::size_t num_vars) {
  switch (kind) {
    case ScalarKind::rational: return Rational::parse(text).str();
    case ScalarKind::float64: return Float64::parse(text).str();
    case ScalarKind::symbolic: return MultiPoly::parse(text, num_vars).str();
  }
  throw ParseError("unknown scalar kind");
}

std::string render_json(const MatrixDocument& doc) {
  nlohmann::ordered_json j;
  j["schema"] = kMatrixSchema;
  j["n"] = doc.n;
  j["scalar_kind"] = scalar_kind_name(doc.kind);
  if (doc.mu) {
    j["mu"] = *doc.mu;
  } else {
    j["mu"] = "symbolic";
  }
  j["entries"] = doc.entries;
  return j.dump(2) + "\n";
}

std::string render_csv(const MatrixDocument& doc) {
  std::string out;
  for (const auto& row : doc.entries) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string render_pretty(const MatrixDocument& doc) {
  std::vector<std::vector<std::string>> cells = doc.entries;
  if (doc.kind == ScalarKind::symbolic) {
    for (auto& row : cells) {
      for (auto& cell : row) {
        if (MultiPoly::parse(cell, doc.n).size() > 1) cell = "(" + cell + ")";
      }
    }
  }
  std::vector<std::size_t> width(doc.n, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    out += "[ ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      out += std::string(width[c] - row[c].size(), ' ');
      out += c + 1 < row.size() ? "  " : " ";
    }
    out += "]\n";
  }
  return out;
}

MatrixDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kMatrixSchema) {
      throw ParseError("unsupported schema '" + j.at("schema").get<std::string>() + "'");
    }
    MatrixDocument doc;
    doc.n = j.at("n").get<std::size_t>();
    doc.kind = parse_scalar_kind(j.at("scalar_kind").get<std::string>());
    if (doc.n == 0) throw ParseError("document has n = 0");
    const auto& mu = j.at("mu");
    if (mu.is_string()) {
      if (mu.get<std::string>() != "symbolic" || doc.kind != ScalarKind::symbolic) {
        throw ParseError("mu must be a list unless the document is symbolic");
      }
    } else {
      if (doc.kind == ScalarKind::symbolic) throw ParseError("symbolic document must set mu to \"symbolic\"");
      std::vector<std::string> values;
      for (const auto& v : mu) values.push_back(canonical_scalar(v.get<std::string>(), doc.kind, doc.n));
      if (values.size() != doc.n) throw ParseError("mu has the wrong length");
      doc.mu = std::move(values);
    }
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != doc.n) throw ParseError("entries must have n rows");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != doc.n) throw ParseError("entries must have n columns");
      std::vector<std::string> parsed;
      for (const auto& cell : row) parsed.push_back(canonical_scalar(cell.get<std::string>(), doc.kind, doc.n));
      doc.entries.push_back(std::move(parsed));
    }
    for (const auto& cell : doc.entries.back()) {
      if (cell != "1") throw ParseError("bottom row of a CI-matrix must be all ones");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text, ScalarKind kind) {
  std::vector<std::vector<std::string>> rows;
  for (const std::string& line : split(text, '\n')) {
    if (line.empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) throw ParseError("empty CSV");
  const std::size_t width = rows.front().size();
  for (auto& row : rows) {
    if (row.size() != width) throw ParseError("ragged CSV");
    for (auto& cell : row) cell = canonical_scalar(cell, kind, width);
  }
  return rows;
}

Matrix<Rational> rational_entries(const MatrixDocument& doc) {
  return entries_as<Rational>(doc, [](const std::string& s) { return Rational::parse(s); });
}

Matrix<Float64> float_entries(const MatrixDocument& doc) {
  return entries_as<Float64>(doc, [](const std::string& s) { return Float64::parse(s); });
}

Matrix<MultiPoly> symbolic_entries(const MatrixDocument& doc) {
  return entries_as<MultiPoly>(doc, [&](const std::string& s) { return MultiPoly::parse(s, doc.n); });
}

}  // namespace cimat
