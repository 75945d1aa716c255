#include <g2kit/report.hpp>

#include <algorithm>
#include <sstream>

namespace g2kit {

Check& Report::add(std::string name, std::string anchor, bool passed, std::string details, std::optional<double> residual) {
  return add(Check{std::move(name), std::move(anchor), passed, residual, std::move(details)});
}

Check& Report::add_residual(std::string name, std::string anchor, double residual, double tol, std::string details) {
  // NaN residuals must fail.
  const bool ok = residual <= tol;
  if (details.empty()) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual %.3e (tol %.1e)", residual, tol);
    details = buf;
  }
  return add(std::move(name), std::move(anchor), ok, std::move(details), residual);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.meta_) meta_.try_emplace(prefix + k, v);
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  if (!r.title().empty()) os << "== " << r.title() << " ==\n";
  for (const auto& [k, v] : r.meta()) os << "  " << k << ": " << v << "\n";
  for (const auto& c : r.checks()) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.details.empty()) os << " -- " << c.details;
    os << "\n";
  }
  os << (r.passed() ? "overall: PASS" : "overall: FAIL (" + std::to_string(r.failures()) + " failing)") << "\n";
  return os.str();
}

}  // namespace g2kit
