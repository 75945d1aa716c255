#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2kit {

/// One verified identity. `anchor` states the identity being checked.
struct Check {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::optional<double> residual;
  std::string details;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered list of checks; passes iff every check passes.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  void set_title(std::string t) { title_ = std::move(t); }

  const std::vector<Check>& checks() const { return checks_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(const std::string& key, std::string value) { meta_[key] = std::move(value); }

  Check& add(Check c) { return checks_.emplace_back(std::move(c)); }
  Check& add(std::string name, std::string anchor, bool passed, std::string details = {},
             std::optional<double> residual = std::nullopt);
  /// Residual check: passes iff residual <= tol.
  Check& add_residual(std::string name, std::string anchor, double residual, double tol, std::string details = {});

  /// Appends the checks of `other`, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  const Check* find(const std::string& name) const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::map<std::string, std::string> meta_;
};

std::string to_text(const Report& r);

}  // namespace g2kit
