#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gersh/certificate.hpp"
#include "gersh/disk.hpp"
#include "gersh/geometry.hpp"
#include "gersh/matrix.hpp"
#include "gersh/oracle.hpp"
#include "gersh/structured.hpp"

namespace gersh::io {

using json = nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("expected [re, im] pair");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const DenseMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(complex_to_json(z));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw parse_error("matrix JSON needs rows, cols, entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw parse_error("matrix dimensions must be non-negative integers");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (!j["entries"].is_array()) throw parse_error("matrix entries must be an array");
  std::vector<Complex> entries;
  entries.reserve(j["entries"].size());
  for (const json& e : j["entries"]) entries.push_back(complex_from_json(e));
  try {
    return DenseMatrix(rows, cols, std::move(entries));
  } catch (const precondition_error& err) {
    throw parse_error(std::string("invalid matrix: ") + err.what());
  }
}

/// CSV: one row per line, comma-separated reals. Complex input must use JSON.
inline DenseMatrix matrix_from_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      const char* first = line.data() + pos;
      const char* last = line.data() + comma;
      while (first < last && (*first == ' ' || *first == '\t')) ++first;
      while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last)
        throw parse_error("CSV: cannot parse number '" + std::string(first, last) + "'");
      row.push_back(value);
      pos = comma + 1;
      if (comma == line.size()) break;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("CSV: no rows");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw parse_error("CSV: ragged rows");
  try {
    return DenseMatrix::from_real(rows);
  } catch (const precondition_error& err) {
    throw parse_error(std::string("invalid matrix: ") + err.what());
  }
}

inline json point_set_to_json(const PointPairSet& s) {
  json pairs = json::array();
  for (const auto& [p, q] : s.pairs) pairs.push_back(json{{"p", p}, {"q", q}});
  return json{{"dimension", s.dimension}, {"epsilon", s.epsilon}, {"pairs", std::move(pairs)}};
}

inline PointPairSet point_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("epsilon") || !j.contains("pairs"))
    throw parse_error("point set JSON needs dimension, epsilon, pairs");
  PointPairSet s;
  if (!j["dimension"].is_number_unsigned()) throw parse_error("dimension must be a non-negative integer");
  s.dimension = j["dimension"].get<std::size_t>();
  if (!j["epsilon"].is_number()) throw parse_error("epsilon must be a number");
  s.epsilon = j["epsilon"].get<double>();
  if (!j["pairs"].is_array()) throw parse_error("pairs must be an array");
  for (const json& e : j["pairs"]) {
    if (!e.is_object() || !e.contains("p") || !e.contains("q"))
      throw parse_error("each pair needs p and q");
    s.pairs.emplace_back(e["p"].get<std::vector<double>>(), e["q"].get<std::vector<double>>());
  }
  try {
    validate_point_pairs(s, "point set");
  } catch (const precondition_error& err) {
    throw parse_error(std::string("invalid point set: ") + err.what());
  }
  return s;
}

inline json shifts_to_json(const ShiftVector& s) {
  json row = json::array();
  for (Complex c : s.row_shifts) row.push_back(complex_to_json(c));
  json out{{"row_shifts", std::move(row)}};
  if (s.col_shifts) {
    json col = json::array();
    for (Complex e : *s.col_shifts) col.push_back(complex_to_json(e));
    out["col_shifts"] = std::move(col);
  } else {
    out["col_shifts"] = nullptr;
  }
  return out;
}

inline json certificate_to_json(const Certificate& c) {
  return json{{"verdict", c.verdict},
              {"row_margins", c.row_margins},
              {"shifts", shifts_to_json(c.shifts)},
              {"rank_lower_bound", c.rank_lower_bound},
              {"lambda", complex_to_json(c.lambda)}};
}

inline json disk_union_to_json(const DiskUnion& u) {
  json disks = json::array();
  for (std::size_t i = 0; i < u.rows.size(); ++i) {
    const RowRegion& r = u.rows[i];
    disks.push_back(json{{"row", i},
                         {"center", complex_to_json(r.primary.center)},
                         {"radius", r.primary.radius}});
    if (r.secondary)
      disks.push_back(json{{"row", i},
                           {"center", complex_to_json(r.secondary->center)},
                           {"radius", r.secondary->radius}});
  }
  return disks;
}

inline json eigen_solution_to_json(const oracle::EigenSolution& sol) {
  json vals = json::array();
  for (Complex z : sol.eigenvalues) vals.push_back(complex_to_json(z));
  json clusters = json::array();
  for (const auto& c : sol.clusters)
    clusters.push_back(json{{"representative", complex_to_json(c.representative)},
                            {"multiplicity", c.multiplicity}});
  return json{{"eigenvalues", std::move(vals)},
              {"clusters", std::move(clusters)},
              {"residual", sol.residual}};
}

inline json pair_report_to_json(const PairDiskReport& r) {
  json out{{"lambda", complex_to_json(r.lambda)},
           {"mu", complex_to_json(r.mu)},
           {"disks", disk_union_to_json(r.disks)}};
  out["witness_row"] = r.witness_row ? json(*r.witness_row) : json(nullptr);
  if (r.delta) out["delta"] = *r.delta;
  return out;
}

inline json feasibility_to_json(const FeasibilityVerdict& v) {
  json out{{"conclusion", to_string(v.conclusion)},
           {"constraints_ok", v.constraints_ok},
           {"bound_applicable", v.bound_applicable},
           {"bound", v.bound},
           {"epsilon", v.epsilon},
           {"dimension", v.dimension},
           {"k", v.k},
           {"relaxed", v.relaxed},
           {"max_constraint_excess", v.max_constraint_excess}};
  out["gram"] = v.gram ? matrix_to_json(*v.gram) : json(nullptr);
  out["certificate"] = v.certificate ? certificate_to_json(*v.certificate) : json(nullptr);
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Writes via a temp file in the same directory, then renames into place.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("invalid JSON");
  return j;
}

/// Extension-based dispatch: .json for complex matrices, .csv for real ones.
inline DenseMatrix read_matrix(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".json") return matrix_from_json(parse_json_text(read_file(path)));
  if (ext == ".csv") {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path.string());
    return matrix_from_csv(in);
  }
  throw parse_error("unsupported matrix extension (use .json or .csv): " + path.string());
}

inline PointPairSet read_point_set(const std::filesystem::path& path) {
  return point_set_from_json(parse_json_text(read_file(path)));
}

inline std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gersh::io
