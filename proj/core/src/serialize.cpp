#include "spinten/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace spinten {

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const RunConfig& c) {
  ordered_json out;
  out["subcommand"] = c.subcommand;
  out["field"] = c.field_given ? c.field.to_string() : "default";
  out["seed"] = std::to_string(c.seed);
  out["trials"] = c.trials < 0 ? "default" : std::to_string(c.trials);
  ordered_json primes = ordered_json::array();
  for (const auto& p : c.primes) primes.push_back(p.get_str());
  out["primes"] = std::move(primes);
  out["jobs"] = std::to_string(c.jobs);
  if (!c.plane_file.empty()) out["plane_file"] = c.plane_file;
  return out;
}

void erase_wall_clock(ordered_json& node) {
  if (node.is_object()) {
    node.erase("wall_clock_ms");
    for (auto& [key, value] : node.items()) erase_wall_clock(value);
  } else if (node.is_array()) {
    for (auto& value : node) erase_wall_clock(value);
  }
}

mpq_class entry_to_rational(const ordered_json& e, std::size_t row, std::size_t col) {
  const auto where = [&] {
    return "row " + std::to_string(row) + ", column " + std::to_string(col);
  };
  mpq_class v;
  if (e.is_number_integer()) {
    v = mpq_class(static_cast<long>(e.get<long long>()));
  } else if (e.is_string()) {
    if (v.set_str(e.get<std::string>(), 10) != 0)
      throw std::invalid_argument("plane candidate: unparsable rational at " + where());
    if (v.get_den() == 0)
      throw std::invalid_argument("plane candidate: zero denominator at " + where());
    v.canonicalize();
  } else {
    throw std::invalid_argument("plane candidate: entries must be strings or integers (" +
                                where() + ")");
  }
  return v;
}

}  // namespace

std::string report_to_json(const RunReport& r) {
  ordered_json doc;
  doc["schema"] = r.schema;
  doc["tool_version"] = r.tool_version;
  doc["config"] = config_json(r.config);
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["status"] = c.status;
    cj["detail"] = c.detail;
    cj["artifacts"] = ordered_json::parse(c.artifacts);
    cj["wall_clock_ms"] = c.wall_clock_ms;
    claims.push_back(std::move(cj));
  }
  doc["claims"] = std::move(claims);
  doc["status"] = r.status;
  doc["wall_clock_ms"] = r.wall_clock_ms;
  return doc.dump(2) + "\n";
}

std::string strip_wall_clock(const std::string& report_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(report_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("strip_wall_clock: not JSON: ") + e.what());
  }
  erase_wall_clock(doc);
  return doc.dump(2) + "\n";
}

std::vector<std::vector<mpq_class>> parse_plane_candidate(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("plane candidate: not JSON: ") + e.what());
  }
  const ordered_json* rows = &doc;
  if (doc.is_object()) {
    if (!doc.contains("basis"))
      throw std::invalid_argument("plane candidate: object form needs a \"basis\" member");
    rows = &doc["basis"];
  }
  if (!rows->is_array() || rows->size() != 6)
    throw std::invalid_argument("plane candidate: expected 6 rows");
  std::vector<std::vector<mpq_class>> out;
  out.reserve(6);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto& row = (*rows)[r];
    if (!row.is_array() || row.size() != 16)
      throw std::invalid_argument("plane candidate: row " + std::to_string(r) +
                                  " must have 16 entries");
    std::vector<mpq_class> coords;
    coords.reserve(16);
    for (std::size_t c = 0; c < 16; ++c) coords.push_back(entry_to_rational(row[c], r, c));
    out.push_back(std::move(coords));
  }
  return out;
}

std::string plane_candidate_to_json(const std::vector<std::vector<mpq_class>>& basis) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : basis) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(std::move(r));
  }
  ordered_json doc;
  doc["basis"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace spinten
