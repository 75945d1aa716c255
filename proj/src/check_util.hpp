#pragma once

#include <g2kit/graded_poly.hpp>
#include <g2kit/report.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace g2kit::detail {

/// Collects every violation of an exact identity.
class FailureLog {
 public:
  void note(const std::string& where, const Rational& diff) {
    if (diff == 0) return;
    ++count_;
    max_ = std::max(max_, std::fabs(diff.get_d()));
    if (items_.size() < kShown) items_.push_back(where + " off by " + format_rational(diff));
  }
  void note(const std::string& where, const GradedPoly& diff) {
    if (diff.is_zero()) return;
    ++count_;
    for (const auto& [m, c] : diff.terms()) max_ = std::max(max_, std::fabs(c.get_d()));
    if (items_.size() < kShown) items_.push_back(where + " off by " + diff.to_string());
  }
  bool ok() const { return count_ == 0; }
  double residual() const { return max_; }

  Check to_check(std::string name, std::string anchor) const {
    std::string details;
    if (count_ > 0) {
      details = std::to_string(count_) + " violation(s): ";
      for (std::size_t i = 0; i < items_.size(); ++i) details += (i ? "; " : "") + items_[i];
      if (count_ > items_.size()) details += "; ...";
    }
    return Check{std::move(name), std::move(anchor), ok(), max_, std::move(details)};
  }

 private:
  static constexpr std::size_t kShown = 8;
  std::size_t count_ = 0;
  std::vector<std::string> items_;
  double max_ = 0.0;
};

inline std::string idx(std::initializer_list<std::size_t> ids) {
  std::string s = "(";
  bool first = true;
  for (auto i : ids) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + ")";
}

/// Check that a field vanishes identically, citing its first nonzero coefficient.
inline Check vanishing_check(std::string name, std::string anchor, const Derivation& d) {
  std::size_t nonzero = 0;
  double max = 0.0;
  for (std::size_t i = 0; i < d.context()->size(); ++i) {
    nonzero += d.component(i).terms().size();
    for (const auto& [m, c] : d.component(i).terms()) max = std::max(max, std::fabs(c.get_d()));
  }
  std::string details;
  if (auto e = first_nonzero(d)) {
    details = std::to_string(nonzero) + " nonzero coefficient(s); first: d/d" + e->variable + " coefficient " +
              format_rational(e->coefficient) + " at " + e->monomial;
  }
  return Check{std::move(name), std::move(anchor), nonzero == 0, max, std::move(details)};
}

}  // namespace g2kit::detail
