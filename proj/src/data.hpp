#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "calendar.hpp"

namespace resgen {

enum class AssetKind { solar, wind };

std::string kind_name(AssetKind k);
AssetKind parse_kind(const std::string& s);  // throws SchemaError

struct AssetRecord {
  std::string asset_id;
  AssetKind kind = AssetKind::solar;
  double nominal_capacity_mw = 0.0;
  double latitude = 0.0;
  double longitude = 0.0;
  std::string zone;
};

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Day-indexed hourly forecast/actual series for one asset. Rows follow
/// `days` (ascending); 24 columns (hour 1..24 -> column 0..23). Immutable
/// after load; safe to share across threads.
struct DailyPanel {
  std::string asset_id;
  std::vector<Date> days;
  Eigen::MatrixXd forecast;  // MWh, days x 24
  Eigen::MatrixXd actual;    // MWh, days x 24
  BoolMatrix missing;        // true = cell unusable

  int row_of(const Date& d) const;  // -1 when absent
  double missing_fraction(int row) const;

  /// Days usable for calibration windows: present and <= 50% missing hours.
  std::vector<Date> usable_days() const;
};

struct LoadSummary {
  long series_rows = 0;
  long missing_cells = 0;
  long assets = 0;
};

struct Dataset {
  std::vector<AssetRecord> assets;
  std::vector<DailyPanel> panels;  // same order as assets
  LoadSummary summary;

  int asset_index(const std::string& id) const;  // -1 when absent
};

std::vector<AssetRecord> load_assets(const std::string& assets_csv);

/// Load and validate both files. Blank or unparseable numeric cells are
/// flagged missing; negative values, duplicate (asset,date,hour) rows and
/// unknown asset ids are hard errors.
Dataset load_panels(const std::string& assets_csv, const std::string& series_csv);

void save_assets(const std::vector<AssetRecord>& assets, const std::string& path);
void save_series(const std::vector<DailyPanel>& panels, const std::string& path);

}  // namespace resgen
