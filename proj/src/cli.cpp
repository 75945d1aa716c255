#include <g2kit/cli.hpp>

#include <g2kit/catalog.hpp>
#include <g2kit/io.hpp>
#include <g2kit/two_groupoid.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace g2kit {

namespace {

struct Options {
  std::string format = "text";
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string file;
  std::string example;
  std::string output;
  bool psi_only = false;
};

SamplingOptions sampling(const Options& o, double default_tol) {
  SamplingOptions s;
  s.samples = o.samples;
  s.seed = o.seed;
  s.tol = o.tol.value_or(default_tol);
  return s;
}

int emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << format_json(report_to_json(r)) << "\n";
  else
    out << to_text(r);
  return r.passed() ? kAllPassed : kChecksFailed;
}

void require_kind(const Bundle& b, std::initializer_list<const char*> kinds) {
  if (std::any_of(kinds.begin(), kinds.end(), [&](const char* k) { return b.kind == k; })) return;
  std::string expected;
  for (const char* k : kinds) expected += (expected.empty() ? "" : " or ") + std::string(k);
  throw InputError("bundle kind \"" + b.kind + "\" where " + expected + " was expected");
}

Bundle load(const Options& o, std::initializer_list<const char*> kinds) {
  Bundle b = parse_bundle(o.file);
  try {
    require_kind(b, kinds);
  } catch (const InputError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  return b;
}

int report_command(const Options& o, Report (*build)(const Bundle&), std::ostream& out) {
  const Bundle b = parse_bundle(o.file);
  Report r;
  try {
    r = build(b);
  } catch (const InputError& e) {
    throw InputError(o.file + ": " + e.what());
  }
  r.set_meta("file", o.file);
  return emit_report(r, o, out);
}

void write_text_listing(std::ostream& os, const std::string& label, const Tensor3& t) {
  for (std::size_t a = 0; a < t.dim0(); ++a)
    for (std::size_t b = 0; b < t.dim1(); ++b)
      for (std::size_t c = 0; c < t.dim2(); ++c)
        if (t(a, b, c) != 0) os << "  " << label << "(" << a << "," << b << "," << c << ") = " << format_rational(t(a, b, c)) << "\n";
}

void write_text_listing(std::ostream& os, const RMatrix& m) {
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (m(a, i) != 0) os << "  delta(" << a << "," << i << ") = " << format_rational(m(a, i)) << "\n";
}

int convert(const Options& o, bool from_lie2, std::ostream& out) {
  const Bundle b = load(o, {from_lie2 ? "lie2" : "crossed"});
  Json converted;
  std::ostringstream text;
  if (from_lie2) {
    const CrossedModuleData c = to_crossed_module(std::get<StrictLie2Data>(b.data));
    converted = bundle_to_json("crossed", crossed_to_json(c));
    text << "crossed module, dim h = " << c.dim_h << ", dim g = " << c.dim_g << "\n";
    write_text_listing(text, "bracket_h", c.bracket_h);
    write_text_listing(text, "bracket_g", c.bracket_g);
    write_text_listing(text, "alpha", c.alpha);
    write_text_listing(text, c.delta);
  } else {
    const StrictLie2Data l = from_crossed_module(std::get<CrossedModuleData>(b.data));
    converted = bundle_to_json("lie2", lie2_to_json(l));
    text << "strict Lie 2-algebra, dim h = " << l.dim_h << ", dim g = " << l.dim_g << "\n";
    write_text_listing(text, "bracket_g", l.bracket_g);
    write_text_listing(text, "act", l.act);
    write_text_listing(text, l.delta);
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    f << format_json(converted) << "\n";
  }
  if (o.format == "json")
    out << format_json(converted) << "\n";
  else
    out << text.str();
  return kAllPassed;
}

int integrate(const Options& o, std::ostream& out) {
  const IntegrationSetup s = integration_setup(o.example);
  return emit_report(integrate_report(s, sampling(o, 1e-9), o.psi_only), o, out);
}

int verify_2groupoid(const Options& o, std::ostream& out) {
  const IntegrationSetup s = integration_setup(o.example);
  const double tol = s.name == "tm" ? 1e-12 : 1e-9;
  return emit_report(verify_two_groupoid(s, sampling(o, tol)), o, out);
}

int list_examples(std::ostream& out) {
  out << "actions:";
  for (const auto& n : catalog::action_names()) out << " " << n;
  out << "\nintegration examples:";
  for (const auto& n : integration_names()) out << " " << n;
  out << "\ngroup crossed modules:";
  for (const auto& n : crossed_module_names()) out << " " << n;
  out << "\n";
  return kAllPassed;
}

}  // namespace

Report lie2_bundle_report(const Bundle& b) {
  require_kind(b, {"lie2", "crossed"});
  if (b.kind == "crossed") return validate_crossed_module(std::get<CrossedModuleData>(b.data));
  const auto& l = std::get<StrictLie2Data>(b.data);
  Report r("strict Lie 2-algebra");
  r.merge(validate_lie2(l));
  r.merge(check_qalgebra(l), "Q-algebra: ");
  return r;
}

Report algebroid_bundle_report(const Bundle& b) {
  require_kind(b, {"algebroid", "poisson"});
  const auto& a = std::get<LieAlgebroidData>(b.data);
  Report r("Lie algebroid");
  r.merge(check_homological(build_Q(a)));
  r.set_meta("base_dim", std::to_string(a.base_dim()));
  r.set_meta("rank", std::to_string(a.rank()));
  return r;
}

Report action_bundle_report(const Bundle& b) {
  require_kind(b, {"action"});
  const auto& s = std::get<StrictActionData>(b.data);
  Report r("strict action");
  r.merge(validate_lie2(s.L), "L: ");
  r.merge(check_homological(build_Q(s.A)), "A: ");
  r.merge(validate_action_dgla(s), "DGLA: ");
  r.merge(validate_action_classical(s), "classical: ");
  r.merge(check_double_q(s), "double Q: ");
  return r;
}

Report derive_bundle_report(const Bundle& b) {
  require_kind(b, {"algebroid", "poisson"});
  const auto& a = std::get<LieAlgebroidData>(b.data);
  Report r = derived_structure_report(a);
  const Derivation q = build_Q(a);
  const auto& ctx = a.context();
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      const Section s = derived_bracket(q, Section::basis(ctx, a.rank(), i), Section::basis(ctx, a.rank(), j));
      std::string v;
      for (std::size_t k = 0; k < a.rank(); ++k)
        if (!s.coeffs[k].is_zero()) v += (v.empty() ? "" : " + ") + ("(" + s.coeffs[k].to_string() + ") e" + std::to_string(k));
      r.set_meta("[e" + std::to_string(i) + ",e" + std::to_string(j) + "]", v.empty() ? "0" : v);
    }
  r.set_meta("Q", q.to_string());
  return r;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strict Lie 2-algebra actions on Lie algebroids and their integration", "g2kit"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", o.tol, "Tolerance for numerical checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--samples", o.samples, "Samples per numerical check")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Validate a bundle file");
  check->require_subcommand(1);
  auto add_file_cmd = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Bundle file")->required();
    sub->callback([&action, fn] { action = fn; });
  };
  add_file_cmd(check, "lie2", "Strict Lie 2-algebra or crossed module", [&] { return report_command(o, lie2_bundle_report, out); });
  add_file_cmd(check, "algebroid", "Lie algebroid or Poisson bivector", [&] { return report_command(o, algebroid_bundle_report, out); });
  add_file_cmd(check, "action", "Strict action on a Lie algebroid", [&] { return report_command(o, action_bundle_report, out); });

  auto* conv = app.add_subcommand("convert", "Convert between strict Lie 2-algebras and crossed modules");
  conv->require_subcommand(1);
  conv->add_option("-o,--output", o.output, "Also write the converted bundle to this file");
  add_file_cmd(conv, "lie2", "Strict Lie 2-algebra to crossed module", [&] { return convert(o, true, out); });
  add_file_cmd(conv, "crossed", "Crossed module to strict Lie 2-algebra", [&] { return convert(o, false, out); });

  auto* derive = app.add_subcommand("derive", "Recover structure from the homological field");
  derive->require_subcommand(1);
  add_file_cmd(derive, "brackets", "Derived brackets and anchor of an algebroid", [&] { return report_command(o, derive_bundle_report, out); });

  auto* integ = app.add_subcommand("integrate", "Check the integrated actions Psi and Phi of an example");
  integ->add_option("--example", o.example, "Example name")->required();
  integ->add_flag("--psi-only", o.psi_only, "Skip the 2-group action Phi");
  integ->callback([&] { action = [&] { return integrate(o, out); }; });

  auto* verify = app.add_subcommand("verify", "Verify derived structures");
  verify->require_subcommand(1);
  auto* v2 = verify->add_subcommand("2groupoid", "Codiagonal 2-groupoid of an example");
  v2->add_option("--example", o.example, "Example name")->required();
  v2->callback([&] { action = [&] { return verify_2groupoid(o, out); }; });

  app.add_subcommand("list", "List the named examples")->callback([&] { action = [&] { return list_examples(out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    err << "g2kit: " << e.what() << "\n";
    return kBadInput;
  }
  if (!action) {
    err << "g2kit: no command given\n";
    return kBadInput;
  }
  try {
    return action();
  } catch (const ValidationError& e) {
    err << "g2kit: " << e.what() << "\n";
    emit_report(e.report(), o, out);
    return kChecksFailed;
  } catch (const InputError& e) {
    err << "g2kit: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "g2kit: " << e.what() << "\n";
    return kBadInput;
  }
}

int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace g2kit
