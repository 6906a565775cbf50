#include "pbclass/cli/report.hpp"

#include "pbclass/cli/reference.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace pbclass::cli {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json element_json(const AbElement& e) {
  json a = json::array();
  for (const auto& c : e.coords) a.push_back(integer_json(c));
  return a;
}

json count_json(const std::optional<Integer>& c) {
  return c ? integer_json(*c) : json("INFINITE");
}

json complex_json(const TwoComplex& x) {
  json j;
  j["name"] = x.name();
  j["generators"] = x.gen_names();
  j["relators"] = json::array();
  for (const auto& r : x.relators()) j["relators"].push_back(x.format_word(r));
  return j;
}

json group_json(const GroupDescriptor& d) {
  json j;
  j["name"] = d.name;
  j["pi0"] = d.pi0.to_string();
  j["pi1"] = d.pi1.to_string();
  return j;
}

json factors_json(const FgAbGroup& g) {
  json a = json::array();
  for (const auto& f : g.invariant_factors()) a.push_back(integer_json(f));
  return a;
}

void write_header(std::ostream& out, const TwoComplex& x, const GroupDescriptor& d) {
  out << "complex  " << x.name() << "  generators:";
  if (x.gen_names().empty()) out << " (none)";
  for (const auto& g : x.gen_names()) out << ' ' << g;
  out << "  relators:";
  for (std::size_t j = 0; j < x.relators().size(); ++j) {
    const std::string w = x.format_word(x.relators()[j]);
    out << (j ? ", " : " ") << (w.empty() ? "1" : w);
  }
  out << '\n';
  out << "group    " << d.name << "  pi0 = " << d.pi0.to_string()
      << "  pi1 = " << d.pi1.to_string() << '\n';
}

void write_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

} // namespace

std::string format_element(const AbElement& e) {
  if (e.coords.empty()) return "0";
  if (e.coords.size() == 1) return e.coords[0].get_str();
  return e.to_string();
}

std::string format_mu1(const TwoComplex& x, const Mu1Class& mu1) {
  if (x.num_gens() == 0) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < x.num_gens(); ++i) {
    if (i) s += ' ';
    s += x.gen_names()[i] + "->" + format_element(mu1.generator_images[i]);
  }
  return s;
}

void render_classification(std::ostream& out, OutputFormat format,
                           const TwoComplex& x, const GroupDescriptor& d,
                           const ClassifyReport& report) {
  if (format == OutputFormat::Machine) {
    json root;
    root["complex"] = complex_json(x);
    root["group"] = group_json(d);
    root["entries"] = json::array();
    for (const auto& r : report.results) {
      json e;
      e["mu1"] = json::array();
      for (const auto& img : r.mu1.generator_images) e["mu1"].push_back(element_json(img));
      e["h2"] = r.h2.group.to_string();
      e["h2_invariant_factors"] = factors_json(r.h2.group);
      e["orbit_count"] = count_json(r.orbit_count);
      e["reps"] = json::array();
      for (const auto& rep : r.orbit_reps) e["reps"].push_back(element_json(rep));
      e["orbit_sizes"] = json::array();
      for (const auto& s : r.orbit_sizes) e["orbit_sizes"].push_back(integer_json(s));
      if (const auto ref = reference_entry(x, d, r.mu1); ref && !ref->mu2_meaning.empty())
        e["mu2_meaning"] = ref->mu2_meaning;
      e["warnings"] = r.warnings;
      root["entries"].push_back(e);
    }
    if (!report.single) root["total"] = count_json(report.total);
    out << root.dump(2) << '\n';
    return;
  }

  write_header(out, x, d);
  out << '\n';
  std::vector<std::vector<std::string>> rows{{"#", "mu1", "H^2", "classes", "representatives"}};
  for (const auto& r : report.results) {
    std::string reps;
    for (const auto& rep : r.orbit_reps) reps += (reps.empty() ? "" : " ") + format_element(rep);
    if (r.infinite()) reps += reps.empty() ? "..." : " ...";
    rows.push_back({std::to_string(r.mu1.index), format_mu1(x, r.mu1),
                    r.h2.group.to_string(),
                    r.orbit_count ? r.orbit_count->get_str() : "INFINITE", reps});
  }
  write_rows(out, rows);
  if (!report.single)
    out << "\ntotal: " << (report.total ? report.total->get_str() : "INFINITE") << '\n';
  bool first = true;
  for (const auto& r : report.results)
    for (const auto& w : r.warnings) {
      if (first) out << '\n';
      first = false;
      out << w << '\n';
    }
}

void render_h2(std::ostream& out, OutputFormat format, const TwoComplex& x,
               const GroupDescriptor& d, const H2Report& report) {
  if (format == OutputFormat::Machine) {
    json root;
    root["complex"] = complex_json(x);
    root["group"] = group_json(d);
    root["mu1"] = json::array();
    for (const auto& img : report.mu1.generator_images)
      root["mu1"].push_back(element_json(img));
    root["h0"] = report.h0.to_string();
    root["h0_invariant_factors"] = factors_json(report.h0);
    root["h1"] = report.h1.to_string();
    root["h1_invariant_factors"] = factors_json(report.h1);
    root["h2"] = report.h2.to_string();
    root["h2_invariant_factors"] = factors_json(report.h2);
    if (report.duality) {
      root["duality"] = {{"h2", report.duality->lhs.to_string()},
                         {"coinvariants", report.duality->rhs.to_string()},
                         {"agree", report.duality->agree}};
    }
    root["warnings"] = report.warnings;
    out << root.dump(2) << '\n';
    return;
  }

  write_header(out, x, d);
  out << "mu1      " << format_mu1(x, report.mu1) << "\n\n";
  out << "H^0 = " << report.h0.to_string() << '\n';
  out << "H^1 = " << report.h1.to_string() << '\n';
  out << "H^2 = " << report.h2.to_string() << '\n';
  if (report.duality)
    out << "duality: coinvariants = " << report.duality->rhs.to_string()
        << (report.duality->agree ? " (agrees)" : " (DISAGREES)") << '\n';
  if (!report.warnings.empty()) out << '\n';
  for (const auto& w : report.warnings) out << w << '\n';
}

} // namespace pbclass::cli
