#include "pbclass/cli/app.hpp"

#include "pbclass/cli/check.hpp"
#include "pbclass/cli/jobspec.hpp"
#include "pbclass/cli/reference.hpp"
#include "pbclass/cli/report.hpp"
#include "pbclass/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace pbclass::cli {

namespace {

struct JobFlags {
  std::string job_file;
  std::string complex;
  std::string group;
  std::string mu1;
  std::optional<std::size_t> max_reps;
  std::string format;
  bool emit = false;
};

void add_job_flags(CLI::App* cmd, JobFlags& f) {
  cmd->add_option("--job", f.job_file, "Job file with complex, group, mu1 and options");
  cmd->add_option("--complex", f.complex,
                  "sphere | orientable:g | nonorientable:k | torus | klein | rp2 | "
                  "inline {generators: [...], relators: [...]}");
  cmd->add_option("--group", f.group, "Catalog name such as O(2) or PO(6), or an inline descriptor");
  cmd->add_option("--mu1", f.mu1, "Images of the generators in pi0, e.g. [[1],[0]]");
  cmd->add_option("--max-reps", f.max_reps, "Representatives listed for infinite orbit sets");
  cmd->add_option("--format", f.format, "table | machine");
  cmd->add_flag("--emit-spec", f.emit, "Print the canonical inline job and exit");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read job file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

JobSpec build_job(const JobFlags& f) {
  JobSpec spec;
  bool have_complex = false, have_group = false;
  if (!f.job_file.empty()) {
    spec = parse_job(read_file(f.job_file));
    have_complex = have_group = true;
  }
  if (!f.complex.empty()) {
    spec.complex = parse_complex(f.complex);
    have_complex = true;
    if (f.mu1.empty()) spec.mu1.reset();
  }
  if (!f.group.empty()) {
    spec.group = parse_group(f.group);
    have_group = true;
    if (f.mu1.empty()) spec.mu1.reset();
  }
  if (!have_complex) throw SchemaError("--complex is required");
  if (!have_group) throw SchemaError("--group is required");
  require_valid(spec.group);
  if (!f.mu1.empty()) spec.mu1 = parse_mu1(f.mu1, spec.complex, spec.group);
  if (f.max_reps) spec.max_reps = *f.max_reps;
  if (!f.format.empty()) spec.format = parse_format(f.format);
  return spec;
}

int cmd_classify(const JobFlags& f, std::ostream& out) {
  const JobSpec spec = build_job(f);
  if (f.emit) {
    out << emit_spec(spec);
    return kExitOk;
  }
  ClassifyOptions opts;
  opts.max_reps = spec.max_reps;

  ClassifyReport report;
  if (spec.mu1) {
    const Mu1Class mu1 = mu1_from_generator_images(spec.complex, spec.group, *spec.mu1);
    report.results.push_back(classify(spec.complex, spec.group, mu1, opts));
    report.total = report.results.back().orbit_count;
    report.single = true;
  } else {
    Classification c = classify_all(spec.complex, spec.group, opts);
    report.results = std::move(c.results);
    report.total = c.total;
  }
  bool warned = false;
  for (auto& r : report.results) {
    r.warnings = reference_warnings(spec.complex, spec.group, r);
    warned = warned || !r.warnings.empty();
  }
  render_classification(out, spec.format, spec.complex, spec.group, report);
  return warned ? kExitReferenceMismatch : kExitOk;
}

int cmd_h2(const JobFlags& f, std::ostream& out) {
  const JobSpec spec = build_job(f);
  if (f.emit) {
    out << emit_spec(spec);
    return kExitOk;
  }
  const Mu1Class mu1 = spec.mu1
                           ? mu1_from_generator_images(spec.complex, spec.group, *spec.mu1)
                           : enumerate_mu1(spec.complex, spec.group).front();
  const LocalSystem l = local_system(spec.complex, spec.group, mu1.hom);
  H2Report report{mu1, h0(l), h1(l), h2(l).group, std::nullopt, {}};
  if (spec.complex.is_surface()) report.duality = duality_check(l);
  report.warnings = reference_h2_warnings(spec.complex, spec.group, mu1, report.h2);
  render_h2(out, spec.format, spec.complex, spec.group, report);
  return report.warnings.empty() ? kExitOk : kExitReferenceMismatch;
}

int cmd_check(const std::string& scope, const std::string& complex,
              const std::string& group, std::ostream& out) {
  std::vector<TwoComplex> complexes =
      scope == "quick" ? small_surfaces() : sweep_surfaces();
  std::vector<GroupDescriptor> groups = representative_builtins();
  if (!complex.empty()) complexes = {parse_complex(complex)};
  if (!group.empty()) groups = {parse_group(group)};

  const CheckSummary s = run_checks(complexes, groups);
  for (const auto& n : s.notices) out << "notice: " << n << '\n';
  for (const auto& m : s.mismatches) out << "MISMATCH: " << m << '\n';
  out << "instances: " << s.instances << "  oracle H^2: " << s.oracle_h2_checked
      << "  oracle orbits: " << s.oracle_orbits_checked
      << "  duality: " << s.duality_checked << "  skipped: " << s.skipped
      << "  mismatches: " << s.mismatches.size() << '\n';
  out << (s.ok() ? "check passed" : "check FAILED") << '\n';
  return s.ok() ? kExitOk : kExitFailure;
}

void cmd_list_builtins(std::ostream& out) {
  out << "groups:\n";
  for (const auto& line : builtin_catalog()) out << "  " << line << '\n';
  out << "complexes:\n"
      << "  sphere            no 1-cells, one 2-cell\n"
      << "  orientable:g      closed orientable surface of genus g (torus = orientable:1)\n"
      << "  nonorientable:k   connected sum of k projective planes (rp2 = nonorientable:1,"
         " klein = nonorientable:2)\n"
      << "  inline            {generators: [a, b], relators: [\"a b a^-1 b^-1\"]}\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of principal G-bundles over 2-complexes", "pbclass"};
  app.require_subcommand(1);

  JobFlags classify_flags, h2_flags;
  auto* classify_cmd = app.add_subcommand("classify", "Classify bundles, one row per mu1");
  add_job_flags(classify_cmd, classify_flags);
  auto* h2_cmd = app.add_subcommand("h2", "Twisted cohomology H^0, H^1, H^2 for one mu1");
  add_job_flags(h2_cmd, h2_flags);

  std::string scope = "full", check_complex, check_group;
  auto* check_cmd = app.add_subcommand("check", "Oracle and duality cross-checks");
  check_cmd->add_option("--scope", scope, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));
  check_cmd->add_option("--complex", check_complex, "Check only this complex");
  check_cmd->add_option("--group", check_group, "Check only this group");

  auto* list_cmd = app.add_subcommand("list-builtins", "List catalog groups and complexes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_flags, out);
    if (*h2_cmd) return cmd_h2(h2_flags, out);
    if (*check_cmd) return cmd_check(scope, check_complex, check_group, out);
    if (*list_cmd) {
      cmd_list_builtins(out);
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

} // namespace pbclass::cli
