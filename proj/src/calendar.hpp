#pragma once

#include <compare>
#include <string>
#include <vector>

namespace resgen {

/// Proleptic Gregorian calendar date.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  static Date parse(const std::string& iso);  // "YYYY-MM-DD"
  std::string to_string() const;

  bool is_valid() const;
  int day_of_year() const;   // 1-based
  int days_in_year() const;  // 365 or 366
  long serial() const;       // days since 1970-01-01
  static Date from_serial(long days);
  Date next() const { return from_serial(serial() + 1); }
};

/// phi(d) = (day_of_year - 1) / days_in_year, in [0, 1).
double year_fraction(const Date& d);

/// Distance between year fractions on the circle: min(|dphi|, 1 - |dphi|).
double circular_distance(double phi_a, double phi_b);

struct DayWindow {
  Date target_date;
  double theta = 0.0;
  std::vector<Date> members;  // sorted ascending
};

/// All available dates within circular year-fraction distance theta of the
/// target. Throws CalibrationError when no date qualifies.
DayWindow build_window(const Date& target, double theta,
                       const std::vector<Date>& available);

}  // namespace resgen
