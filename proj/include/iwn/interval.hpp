#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>

#include "iwn/errors.hpp"

namespace iwn {

/// A closed bounded real interval [lower, upper].
///
/// A degenerate interval [x,x] is identified with the real number x.
/// All operations are pure; values are immutable after construction.
class Interval {
public:
  Interval() : lower_(0.0), upper_(0.0) {}

  Interval(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!(lower <= upper)) {
      std::ostringstream oss;
      oss << "invalid interval: lower " << lower << " > upper " << upper;
      throw invalid_interval(oss.str());
    }
  }

  /// The degenerate interval [x,x].
  static Interval point(double x) { return Interval(x, x); }

  double lower() const { return lower_; }
  double upper() const { return upper_; }

  double midpoint() const { return (lower_ + upper_) / 2.0; }
  double radius() const { return (upper_ - lower_) / 2.0; }

  bool degenerate() const { return lower_ == upper_; }

  /// Set inclusion: *this is a subset of other.
  bool subset_of(const Interval& other) const {
    return other.lower_ <= lower_ && upper_ <= other.upper_;
  }

  bool contains(double x) const { return lower_ <= x && x <= upper_; }

  bool operator==(const Interval& other) const {
    return lower_ == other.lower_ && upper_ == other.upper_;
  }
  bool operator!=(const Interval& other) const { return !(*this == other); }

  Interval operator+(const Interval& y) const {
    return Interval(lower_ + y.lower_, upper_ + y.upper_);
  }

  Interval operator-() const { return Interval(-upper_, -lower_); }

  Interval operator-(const Interval& y) const { return *this + (-y); }

  Interval operator*(const Interval& y) const {
    const double p1 = lower_ * y.lower_;
    const double p2 = lower_ * y.upper_;
    const double p3 = upper_ * y.lower_;
    const double p4 = upper_ * y.upper_;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
  }

  Interval operator/(const Interval& y) const {
    if (y.lower_ <= 0.0 && 0.0 <= y.upper_) {
      throw division_by_interval_containing_zero(
          "division by an interval containing zero: " + y.to_string());
    }
    return *this * Interval(1.0 / y.upper_, 1.0 / y.lower_);
  }

  Interval& operator+=(const Interval& y) { return *this = *this + y; }

  /// Scalar multiple c*X for c >= 0.
  Interval scaled(double c) const {
    if (c < 0.0) return Interval(c * upper_, c * lower_);
    return Interval(c * lower_, c * upper_);
  }

  /// Endpoint power [l^a, u^a]; exact for the monotone map x -> x^a on
  /// non-negative endpoints and a >= 0.
  Interval pow(double alpha) const {
    if (lower_ < 0.0) throw invalid_interval("pow requires non-negative lower bound");
    if (alpha < 0.0) throw negative_alpha("pow requires alpha >= 0");
    return Interval(std::pow(lower_, alpha), std::pow(upper_, alpha));
  }

  /// "[lower,upper]" with fixed decimal places; integral endpoints print
  /// without trailing zeros, matching the published tables.
  std::string to_string(int decimals = 2) const;

private:
  double lower_;
  double upper_;
};

/// Componentwise minimum of endpoints.
inline Interval inf(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lower(), y.lower()), std::min(x.upper(), y.upper()));
}

/// Componentwise maximum of endpoints.
inline Interval sup(const Interval& x, const Interval& y) {
  return Interval(std::max(x.lower(), y.lower()), std::max(x.upper(), y.upper()));
}

/// Hausdorff distance max(|x.l - y.l|, |x.u - y.u|).
inline double hausdorff(const Interval& x, const Interval& y) {
  return std::max(std::abs(x.lower() - y.lower()), std::abs(x.upper() - y.upper()));
}

enum class Relation { Less, Greater, Equivalent };

struct OrderDecision {
  Relation relation = Relation::Equivalent;
  bool tie_broken_by_radius = false;
};

/// Total order on (midpoint, radius): compare midpoints first; for equal
/// midpoints the interval with the greater radius ("maximum variability")
/// is the greater one. Equivalent only when both agree.
///
/// epsilon fuzzes the midpoint and radius equality tests for noisy data;
/// the default is exact comparison.
inline OrderDecision compare(const Interval& x, const Interval& y, double epsilon = 0.0) {
  const double dm = x.midpoint() - y.midpoint();
  if (dm < -epsilon) return {Relation::Less, false};
  if (dm > epsilon) return {Relation::Greater, false};
  const double dr = x.radius() - y.radius();
  if (dr < -epsilon) return {Relation::Less, true};
  if (dr > epsilon) return {Relation::Greater, true};
  return {Relation::Equivalent, false};
}

/// Number rendering shared by interval and table output: fixed decimal
/// places, integral values printed in full with no fraction and never in
/// scientific notation.
inline std::string format_number(double v, int decimals = 2) {
  std::ostringstream oss;
  oss << std::fixed;
  const double rounded = std::round(v);
  if (std::abs(v - rounded) < 1e-9 * std::max(1.0, std::abs(v))) {
    oss << std::setprecision(0) << rounded;
  } else {
    oss << std::setprecision(decimals) << v;
  }
  return oss.str();
}

inline std::string Interval::to_string(int decimals) const {
  return "[" + format_number(lower_, decimals) + "," + format_number(upper_, decimals) + "]";
}

}  // namespace iwn
