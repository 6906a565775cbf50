#include "pbclass/cli/jobspec.hpp"

#include "pbclass/error.hpp"

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <regex>

namespace pbclass::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

YAML::Node load(std::string_view text) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& ex) {
    throw SchemaError("cannot parse '" + std::string(text) + "': " + ex.what());
  }
}

std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsScalar()) throw SchemaError(what + " must be a scalar");
  return n.Scalar();
}

Integer integer(const YAML::Node& n, const std::string& what) {
  const std::string s = trim(scalar(n, what));
  static const std::regex pattern(R"(^[+-]?\d+$)");
  if (!std::regex_match(s, pattern))
    throw SchemaError(what + ": '" + s + "' is not an integer");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::size_t count(const YAML::Node& n, const std::string& what) {
  const Integer v = integer(n, what);
  if (v < 0 || !v.fits_ulong_p()) throw SchemaError(what + " must be a nonnegative count");
  return v.get_ui();
}

void require_sequence(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsSequence()) throw SchemaError(what + " must be a list");
}

void require_map(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsMap()) throw SchemaError(what + " must be a mapping");
}

void reject_unknown_keys(const YAML::Node& n, const std::vector<std::string>& known,
                         const std::string& what) {
  for (const auto& kv : n) {
    const std::string k = kv.first.as<std::string>();
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw SchemaError("unknown key '" + k + "' in " + what);
  }
}

TwoComplex builtin_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "sphere") return sphere();
  if (s == "torus") return orientable_surface(1);
  if (s == "klein") return nonorientable_surface(2);
  if (s == "rp2") return nonorientable_surface(1);
  static const std::regex pattern(R"(^(orientable|nonorientable):(\d+)$)");
  std::smatch m;
  if (!std::regex_match(s, m, pattern))
    throw SchemaError("unknown complex '" + s +
                      "' (expected sphere, orientable:g, nonorientable:k, torus, "
                      "klein, rp2 or an inline presentation)");
  const auto p = static_cast<std::size_t>(std::stoul(m[2].str()));
  if (m[1] == "orientable") return orientable_surface(p);
  if (p == 0) throw SchemaError("nonorientable:k needs k >= 1");
  return nonorientable_surface(p);
}

TwoComplex complex_from_node(const YAML::Node& n) {
  if (n && n.IsScalar()) return builtin_complex(n.Scalar());
  require_map(n, "complex");
  reject_unknown_keys(n, {"name", "generators", "relators", "surface"}, "complex");
  std::vector<std::string> gens;
  if (n["generators"]) {
    require_sequence(n["generators"], "complex.generators");
    for (const auto& g : n["generators"]) {
      const std::string name = trim(scalar(g, "generator name"));
      static const std::regex ident(R"(^[A-Za-z_][A-Za-z0-9_]*$)");
      if (!std::regex_match(name, ident))
        throw SchemaError("bad generator name '" + name + "'");
      if (std::find(gens.begin(), gens.end(), name) != gens.end())
        throw SchemaError("duplicate generator name '" + name + "'");
      gens.push_back(name);
    }
  }
  std::vector<Word> rels;
  require_sequence(n["relators"], "complex.relators");
  for (const auto& r : n["relators"]) rels.push_back(parse_word(scalar(r, "relator"), gens));
  const std::string name = n["name"] ? scalar(n["name"], "complex.name") : "custom";

  TwoComplex x(gens.size(), std::move(rels), name, gens);
  if (n["surface"]) {
    const TwoComplex s = builtin_complex(scalar(n["surface"], "complex.surface"));
    if (!(s == x) || s.gen_names() != x.gen_names())
      throw SchemaError("presentation does not match surface '" + s.name() + "'");
    return s;
  }
  return x;
}

FgAbGroup group_from_node(const YAML::Node& n, const std::string& what) {
  if (!n) return FgAbGroup::trivial();
  require_map(n, what);
  reject_unknown_keys(n, {"torsion", "rank"}, what);
  Vector torsion;
  if (n["torsion"]) {
    require_sequence(n["torsion"], what + ".torsion");
    for (const auto& t : n["torsion"]) torsion.push_back(integer(t, what + ".torsion"));
  }
  const std::size_t rank = n["rank"] ? count(n["rank"], what + ".rank") : 0;
  return {std::move(torsion), rank};
}

IntMatrix matrix_from_node(const YAML::Node& n, const std::string& what) {
  require_sequence(n, what);
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : n) {
    require_sequence(r, what + " row");
    rows.emplace_back();
    for (const auto& x : r) rows.back().push_back(integer(x, what));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw SchemaError(what + " has ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

AbElement element_from_node(const YAML::Node& n, std::size_t arity,
                            const std::string& what) {
  Vector coords;
  if (n && n.IsScalar()) {
    coords.push_back(integer(n, what));
  } else {
    require_sequence(n, what);
    for (const auto& x : n) coords.push_back(integer(x, what));
  }
  if (coords.size() != arity)
    throw SchemaError(what + " has " + std::to_string(coords.size()) +
                      " coordinates, expected " + std::to_string(arity));
  return {std::move(coords)};
}

GroupDescriptor group_from_yaml(const YAML::Node& n) {
  if (n && n.IsScalar()) return builtin(trim(n.Scalar()));
  require_map(n, "group");
  reject_unknown_keys(n, {"name", "builtin", "pi0", "pi1", "action"}, "group");
  GroupDescriptor d;
  d.name = n["name"] ? scalar(n["name"], "group.name") : "custom";
  d.pi0 = group_from_node(n["pi0"], "group.pi0");
  d.pi1 = group_from_node(n["pi1"], "group.pi1");
  if (const YAML::Node a = n["action"]) {
    require_map(a, "group.action");
    std::size_t expected = 0;
    for (const auto& kv : a) {
      (void)kv;
      ++expected;
    }
    for (std::size_t i = 0; i < expected; ++i) {
      const std::string key = "g" + std::to_string(i);
      const YAML::Node entry = a[key];
      if (!entry) throw SchemaError("group.action is missing key '" + key + "'");
      if (entry.IsMap()) {
        reject_unknown_keys(entry, {"table"}, "group.action." + key);
        require_sequence(entry["table"], "group.action." + key + ".table");
        ElementTable t;
        for (const auto& img : entry["table"])
          t.images.push_back(element_from_node(img, d.pi1.num_gens(),
                                               "group.action." + key + ".table entry"));
        d.action.emplace_back(std::move(t));
      } else {
        d.action.emplace_back(matrix_from_node(entry, "group.action." + key));
      }
    }
  } else {
    for (std::size_t i = 0; i < d.pi0.num_gens(); ++i)
      d.action.emplace_back(IntMatrix::identity(d.pi1.num_gens()));
  }
  if (n["builtin"]) {
    const GroupDescriptor b = builtin(scalar(n["builtin"], "group.builtin"));
    bool same = b.pi0 == d.pi0 && b.pi1 == d.pi1 && b.action.size() == d.action.size();
    for (std::size_t i = 0; same && i < b.action.size(); ++i)
      same = action_matrix(b, i) == action_matrix(d, i);
    if (!same) throw SchemaError("descriptor does not match catalog group '" + b.name + "'");
    return b;
  }
  return d;
}

std::vector<AbElement> mu1_from_node(const YAML::Node& n, const TwoComplex& x,
                                     const GroupDescriptor& d) {
  require_sequence(n, "mu1");
  if (n.size() != x.num_gens())
    throw SchemaError("mu1 lists " + std::to_string(n.size()) + " images but the complex has " +
                      std::to_string(x.num_gens()) + " generators");
  std::vector<AbElement> out;
  for (const auto& img : n) {
    AbElement e = element_from_node(img, d.pi0.num_gens(), "mu1 image");
    out.push_back(d.pi0.reduce(e.coords));
  }
  return out;
}

nlohmann::ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::ordered_json group_json(const FgAbGroup& g) {
  nlohmann::ordered_json j;
  j["torsion"] = nlohmann::ordered_json::array();
  for (const auto& t : g.torsion()) j["torsion"].push_back(integer_json(t));
  j["rank"] = g.free_rank();
  return j;
}

} // namespace

TwoComplex parse_complex(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return complex_from_node(load(t));
  return builtin_complex(t);
}

GroupDescriptor parse_group(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return group_from_yaml(load(t));
  return builtin(t);
}

std::vector<AbElement> parse_mu1(std::string_view text, const TwoComplex& x,
                                 const GroupDescriptor& d) {
  return mu1_from_node(load(text), x, d);
}

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "machine") return OutputFormat::Machine;
  throw SchemaError("unknown format '" + std::string(text) + "' (table|machine)");
}

JobSpec parse_job(std::string_view text) {
  const YAML::Node root = load(text);
  require_map(root, "job");
  reject_unknown_keys(root, {"complex", "group", "mu1", "options"}, "job");
  if (!root["complex"]) throw SchemaError("job needs a complex");
  if (!root["group"]) throw SchemaError("job needs a group");
  JobSpec spec;
  spec.complex = complex_from_node(root["complex"]);
  spec.group = group_from_yaml(root["group"]);
  if (root["mu1"] && !root["mu1"].IsNull())
    spec.mu1 = mu1_from_node(root["mu1"], spec.complex, spec.group);
  if (const YAML::Node o = root["options"]) {
    require_map(o, "options");
    reject_unknown_keys(o, {"max_reps", "format"}, "options");
    if (o["max_reps"]) spec.max_reps = count(o["max_reps"], "options.max_reps");
    if (o["format"]) spec.format = parse_format(scalar(o["format"], "options.format"));
  }
  return spec;
}

std::string emit_spec(const JobSpec& spec) {
  using json = nlohmann::ordered_json;
  json root;

  const TwoComplex& x = spec.complex;
  json c;
  c["name"] = x.name();
  c["generators"] = x.gen_names();
  c["relators"] = json::array();
  for (const auto& r : x.relators()) c["relators"].push_back(x.format_word(r));
  if (x.is_surface()) c["surface"] = x.name();
  root["complex"] = c;

  const GroupDescriptor& d = spec.group;
  json g;
  g["name"] = d.name;
  if (d.builtin) g["builtin"] = d.name;
  g["pi0"] = group_json(d.pi0);
  g["pi1"] = group_json(d.pi1);
  g["action"] = json::object();
  for (std::size_t i = 0; i < d.action.size(); ++i) {
    const std::string key = "g" + std::to_string(i);
    if (const auto* t = std::get_if<ElementTable>(&d.action[i])) {
      json images = json::array();
      for (const auto& e : t->images) {
        json coords = json::array();
        for (const auto& v : e.coords) coords.push_back(integer_json(v));
        images.push_back(coords);
      }
      g["action"][key] = {{"table", images}};
      continue;
    }
    const IntMatrix& m = std::get<IntMatrix>(d.action[i]);
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(r, k)));
      rows.push_back(row);
    }
    g["action"][key] = rows;
  }
  root["group"] = g;

  if (spec.mu1) {
    json mu = json::array();
    for (const auto& e : *spec.mu1) {
      json coords = json::array();
      for (const auto& v : e.coords) coords.push_back(integer_json(v));
      mu.push_back(coords);
    }
    root["mu1"] = mu;
  }
  root["options"] = {{"max_reps", spec.max_reps},
                     {"format", spec.format == OutputFormat::Table ? "table" : "machine"}};
  return root.dump(2) + "\n";
}

} // namespace pbclass::cli
