#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "soergel/hecke.hpp"
#include "soergel/laurent.hpp"
#include "soergel/weyl.hpp"

namespace soergel::cli {

/// Keys come out sorted, so dumps are canonical.
using Json = nlohmann::json;

enum class Format { kJson, kCsv, kText };

Format parse_format(const std::string& s);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// What a command produces. csv prints the table when there is one and the
/// flattened document otherwise; text prefers `text` when set.
struct Output {
  Json doc = Json::object();
  std::optional<Table> table;
  std::string text;
};

std::string emit(const Output& out, Format f);

/// "v^-1+v", ascending exponents.
std::string laurent_string(const LaurentPoly& p);
/// {"terms": [{"w": "321", "coeff": "v^3+v"}, ...]} in standard-basis order.
Json hecke_json(const HeckeElement& h);
/// {"0": 1, "2": 3}
Json graded_json(const std::map<int, std::size_t>& dims);

/// Decomposition summands as [{"w": "321", "shift": 0}, ...] with repeats, sorted.
Json summands_json(const std::map<std::pair<WeylElement, int>, int>& multiset);
std::map<std::pair<WeylElement, int>, int> summands_from_json(const Json& j);

}  // namespace soergel::cli
