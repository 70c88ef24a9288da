#include "calendar.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "errors.hpp"

namespace resgen {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year{d.year} / d.month / d.day;
}

}  // namespace

Date Date::parse(const std::string& iso) {
  Date d;
  char dash1 = 0, dash2 = 0;
  if (std::sscanf(iso.c_str(), "%d%c%d%c%d", &d.year, &dash1, &d.month, &dash2,
                  &d.day) != 5 ||
      dash1 != '-' || dash2 != '-' || !d.is_valid()) {
    throw std::invalid_argument("invalid ISO date: '" + iso + "'");
  }
  return d;
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

bool Date::is_valid() const {
  if (year < 1 || year > 9999) return false;
  return to_ymd(*this).ok();
}

int Date::day_of_year() const {
  using namespace std::chrono;
  const sys_days here{to_ymd(*this)};
  const sys_days jan1{year_month_day{std::chrono::year{year} / 1 / 1}};
  return static_cast<int>((here - jan1).count()) + 1;
}

int Date::days_in_year() const {
  return std::chrono::year{year}.is_leap() ? 366 : 365;
}

long Date::serial() const {
  return std::chrono::sys_days{to_ymd(*this)}.time_since_epoch().count();
}

Date Date::from_serial(long days) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  return Date{static_cast<int>(ymd.year()), static_cast<int>(unsigned(ymd.month())),
              static_cast<int>(unsigned(ymd.day()))};
}

double year_fraction(const Date& d) {
  if (!d.is_valid()) throw std::invalid_argument("year_fraction: invalid date " + d.to_string());
  return static_cast<double>(d.day_of_year() - 1) / d.days_in_year();
}

double circular_distance(double phi_a, double phi_b) {
  double diff = std::fabs(phi_a - phi_b);
  return std::min(diff, 1.0 - diff);
}

DayWindow build_window(const Date& target, double theta,
                       const std::vector<Date>& available) {
  if (!(theta > 0.0 && theta <= 0.5)) {
    throw std::invalid_argument("build_window: theta must lie in (0, 0.5]");
  }
  if (available.empty()) {
    throw std::invalid_argument("build_window: no available dates");
  }
  DayWindow w;
  w.target_date = target;
  w.theta = theta;
  const double phi_t = year_fraction(target);
  for (const Date& d : available) {
    if (circular_distance(year_fraction(d), phi_t) <= theta + 1e-12) {
      w.members.push_back(d);
    }
  }
  std::sort(w.members.begin(), w.members.end());
  w.members.erase(std::unique(w.members.begin(), w.members.end()), w.members.end());
  if (w.members.empty()) {
    throw CalibrationError("build_window: empty window around " + target.to_string());
  }
  return w;
}

}  // namespace resgen
