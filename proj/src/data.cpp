#include "data.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <unordered_map>

#include "csv.hpp"
#include "errors.hpp"

namespace resgen {

namespace {

std::optional<double> parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

void expect_header(const std::vector<std::string>& got, const std::vector<std::string>& want,
                   const std::string& path) {
  if (got.size() != want.size()) {
    throw SchemaError(path + ": bad header (expected " + std::to_string(want.size()) +
                      " columns, got " + std::to_string(got.size()) + ")");
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (trim(got[i]) != want[i]) {
      throw SchemaError(path + ": header column " + std::to_string(i + 1) + " is '" +
                        got[i] + "', expected '" + want[i] + "'");
    }
  }
}

}  // namespace

std::string kind_name(AssetKind k) { return k == AssetKind::solar ? "solar" : "wind"; }

AssetKind parse_kind(const std::string& s) {
  if (s == "solar") return AssetKind::solar;
  if (s == "wind") return AssetKind::wind;
  throw SchemaError("unknown asset kind '" + s + "' (expected solar|wind)");
}

int DailyPanel::row_of(const Date& d) const {
  auto it = std::lower_bound(days.begin(), days.end(), d);
  if (it == days.end() || *it != d) return -1;
  return static_cast<int>(it - days.begin());
}

double DailyPanel::missing_fraction(int row) const {
  int count = 0;
  for (int h = 0; h < 24; ++h) count += missing(row, h) ? 1 : 0;
  return count / 24.0;
}

std::vector<Date> DailyPanel::usable_days() const {
  std::vector<Date> out;
  for (std::size_t r = 0; r < days.size(); ++r) {
    if (missing_fraction(static_cast<int>(r)) <= 0.5) out.push_back(days[r]);
  }
  return out;
}

int Dataset::asset_index(const std::string& id) const {
  for (std::size_t i = 0; i < assets.size(); ++i) {
    if (assets[i].asset_id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<AssetRecord> load_assets(const std::string& assets_csv) {
  CsvReader reader(assets_csv);
  auto header = reader.next();
  if (!header) throw SchemaError(assets_csv + ": empty file");
  expect_header(*header,
                {"asset_id", "kind", "nominal_capacity_mw", "latitude", "longitude", "zone"},
                assets_csv);
  std::vector<AssetRecord> assets;
  std::set<std::string> seen;
  while (auto row = reader.next()) {
    if (row->size() != 6) {
      throw SchemaError(assets_csv + ":" + std::to_string(reader.line_number()) +
                        ": expected 6 fields");
    }
    AssetRecord a;
    a.asset_id = trim((*row)[0]);
    if (a.asset_id.empty()) {
      throw SchemaError(assets_csv + ":" + std::to_string(reader.line_number()) +
                        ": empty asset_id");
    }
    if (!seen.insert(a.asset_id).second) {
      throw SchemaError(assets_csv + ": duplicate asset_id '" + a.asset_id + "'");
    }
    a.kind = parse_kind(trim((*row)[1]));
    auto cap = parse_number((*row)[2]);
    if (!cap || *cap <= 0.0) {
      throw SchemaError(assets_csv + ":" + std::to_string(reader.line_number()) +
                        ": nominal_capacity_mw must be finite and positive");
    }
    a.nominal_capacity_mw = *cap;
    auto lat = parse_number((*row)[3]);
    auto lon = parse_number((*row)[4]);
    if (!lat || !lon) {
      throw SchemaError(assets_csv + ":" + std::to_string(reader.line_number()) +
                        ": bad latitude/longitude");
    }
    a.latitude = *lat;
    a.longitude = *lon;
    a.zone = trim((*row)[5]);
    assets.push_back(std::move(a));
  }
  if (assets.empty()) throw SchemaError(assets_csv + ": no assets");
  return assets;
}

Dataset load_panels(const std::string& assets_csv, const std::string& series_csv) {
  Dataset ds;
  ds.assets = load_assets(assets_csv);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < ds.assets.size(); ++i) {
    index[ds.assets[i].asset_id] = static_cast<int>(i);
  }

  struct Cell {
    std::optional<double> f, g;
  };
  // per asset: date -> 24 cells
  std::vector<std::map<Date, std::array<Cell, 24>>> grid(ds.assets.size());
  std::vector<std::map<Date, std::array<bool, 24>>> seen(ds.assets.size());

  CsvReader reader(series_csv);
  auto header = reader.next();
  if (!header) throw SchemaError(series_csv + ": empty file");
  expect_header(*header, {"asset_id", "date", "hour", "forecast_mwh", "actual_mwh"},
                series_csv);
  while (auto row = reader.next()) {
    const std::string at = series_csv + ":" + std::to_string(reader.line_number());
    if (row->size() != 5) throw SchemaError(at + ": expected 5 fields");
    ++ds.summary.series_rows;
    const std::string id = trim((*row)[0]);
    auto it = index.find(id);
    if (it == index.end()) throw SchemaError(at + ": unknown asset_id '" + id + "'");
    Date d;
    try {
      d = Date::parse(trim((*row)[1]));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(at + ": " + e.what());
    }
    auto hour = parse_number((*row)[2]);
    if (!hour || *hour < 1 || *hour > 24 || *hour != static_cast<int>(*hour)) {
      throw SchemaError(at + ": hour must be an integer in 1..24");
    }
    const int h = static_cast<int>(*hour) - 1;
    auto& was = seen[it->second][d];
    if (was[h]) {
      throw SchemaError(at + ": duplicate row for (" + id + ", " + d.to_string() + ", hour " +
                        std::to_string(h + 1) + ")");
    }
    was[h] = true;
    Cell& cell = grid[it->second][d][h];
    cell.f = parse_number((*row)[3]);
    cell.g = parse_number((*row)[4]);
    if ((cell.f && *cell.f < 0.0) || (cell.g && *cell.g < 0.0)) {
      throw SchemaError(at + ": negative MWh for (" + id + ", " + d.to_string() + ", hour " +
                        std::to_string(h + 1) + ")");
    }
  }

  ds.panels.resize(ds.assets.size());
  for (std::size_t i = 0; i < ds.assets.size(); ++i) {
    DailyPanel& p = ds.panels[i];
    p.asset_id = ds.assets[i].asset_id;
    const auto& g = grid[i];
    p.days.reserve(g.size());
    for (const auto& [d, _] : g) p.days.push_back(d);
    const int n = static_cast<int>(p.days.size());
    p.forecast = Eigen::MatrixXd::Zero(n, 24);
    p.actual = Eigen::MatrixXd::Zero(n, 24);
    p.missing = BoolMatrix::Constant(n, 24, true);
    int r = 0;
    for (const auto& [d, cells] : g) {
      for (int h = 0; h < 24; ++h) {
        const Cell& c = cells[h];
        if (c.f && c.g) {
          p.forecast(r, h) = *c.f;
          p.actual(r, h) = *c.g;
          p.missing(r, h) = false;
        }
      }
      ++r;
    }
    ds.summary.missing_cells += p.missing.count();
  }
  ds.summary.assets = static_cast<long>(ds.assets.size());
  return ds;
}

void save_assets(const std::vector<AssetRecord>& assets, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PipelineError("cannot write " + path);
  out << "asset_id,kind,nominal_capacity_mw,latitude,longitude,zone\n";
  for (const auto& a : assets) {
    out << a.asset_id << ',' << kind_name(a.kind) << ',' << format_double(a.nominal_capacity_mw)
        << ',' << format_double(a.latitude) << ',' << format_double(a.longitude) << ',' << a.zone
        << '\n';
  }
}

void save_series(const std::vector<DailyPanel>& panels, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PipelineError("cannot write " + path);
  out << "asset_id,date,hour,forecast_mwh,actual_mwh\n";
  for (const auto& p : panels) {
    for (std::size_t r = 0; r < p.days.size(); ++r) {
      for (int h = 0; h < 24; ++h) {
        out << p.asset_id << ',' << p.days[r].to_string() << ',' << (h + 1) << ',';
        if (!p.missing(r, h)) {
          out << format_double(p.forecast(r, h)) << ',' << format_double(p.actual(r, h));
        } else {
          out << ',';
        }
        out << '\n';
      }
    }
  }
}

}  // namespace resgen
