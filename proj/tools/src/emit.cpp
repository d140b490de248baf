#include "soergel_cli/emit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace soergel::cli {
namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar(j));
  }
}

std::string csv_table(const Table& t) {
  std::ostringstream s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) s << (i ? "," : "") << csv_cell(cells[i]);
    s << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return s.str();
}

std::string text_table(const Table& t) {
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream s;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) l += "  ";
      l += cells[i] + std::string(w[i] - cells[i].size(), ' ');
    }
    while (!l.empty() && l.back() == ' ') l.pop_back();
    s << l << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  return s.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + s + "'");
}

std::string emit(const Output& out, Format f) {
  switch (f) {
    case Format::kJson: return out.doc.dump(2) + "\n";
    case Format::kCsv: {
      if (out.table) return csv_table(*out.table);
      std::vector<std::pair<std::string, std::string>> kv;
      flatten(out.doc, "", kv);
      Table t{{"key", "value"}, {}};
      for (auto& [k, v] : kv) t.rows.push_back({k, v});
      return csv_table(t);
    }
    case Format::kText: {
      if (!out.text.empty()) return out.text;
      std::ostringstream s;
      std::vector<std::pair<std::string, std::string>> kv;
      Json scalars = Json::object();
      for (const auto& [k, v] : out.doc.items())
        if (!out.table || !v.is_array()) scalars[k] = v;
      flatten(scalars, "", kv);
      for (auto& [k, v] : kv) s << k << ": " << v << "\n";
      if (out.table) s << text_table(*out.table);
      return s.str();
    }
  }
  return {};
}

std::string laurent_string(const LaurentPoly& p) { return p.to_string(); }

Json graded_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (const auto& [d, n] : dims) j[std::to_string(d)] = n;
  return j;
}

Json hecke_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, p] : h.terms()) terms.push_back({{"w", w.to_string()}, {"coeff", laurent_string(p)}});
  return {{"terms", terms}};
}

Json summands_json(const std::map<std::pair<WeylElement, int>, int>& multiset) {
  Json a = Json::array();
  for (const auto& [key, mult] : multiset)
    for (int i = 0; i < mult; ++i) a.push_back({{"w", key.first.to_string()}, {"shift", key.second}});
  return a;
}

std::map<std::pair<WeylElement, int>, int> summands_from_json(const Json& j) {
  std::map<std::pair<WeylElement, int>, int> m;
  for (const auto& e : j) ++m[{WeylElement::parse(e.at("w").get<std::string>()), e.at("shift").get<int>()}];
  return m;
}

}  // namespace soergel::cli
