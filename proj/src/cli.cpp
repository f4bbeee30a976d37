#include "k3cover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "k3cover/covers.hpp"
#include "k3cover/errors.hpp"
#include "k3cover/evensets.hpp"
#include "k3cover/json_io.hpp"
#include "k3cover/k3lattices.hpp"

namespace k3cover::cli {

namespace {

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  Format format = Format::Text;
  std::string out_path;
  std::string id;
  std::string file;
  std::string glue;
  std::string genera;
  std::string code;
  std::string alternative;
  std::optional<long> n;
  std::optional<long> h;
  std::optional<long> m;
};

// Text rendering of a report document: scalars inline, nested values indented.

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

std::string flat_text(const Json& j, const char* sep) {
  std::string s;
  for (const auto& x : j) s += (s.empty() ? "" : sep) + scalar_text(x);
  return s;
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!is_flat_array(row)) return false;
  return true;
}

void render_text(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto line = [&](const std::string& key, const Json& v) {
    if (is_scalar(v)) {
      os << pad << key << ": " << scalar_text(v) << '\n';
    } else if (is_flat_array(v)) {
      os << pad << key << ": [" << flat_text(v, ", ") << "]\n";
    } else if (is_matrix(v)) {
      os << pad << key << ":\n";
      for (const auto& row : v) os << pad << "  " << flat_text(row, " ") << '\n';
    } else {
      os << pad << key << ":\n";
      render_text(v, indent + 2, os);
    }
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) line(k, v);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) line("[" + std::to_string(i++) + "]", v);
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void flatten_csv(const Json& j, const std::string& path, std::ostream& os) {
  if (is_scalar(j)) {
    os << csv_field(path) << ',' << csv_field(scalar_text(j)) << '\n';
  } else if (is_flat_array(j)) {
    os << csv_field(path) << ',' << csv_field(flat_text(j, ";")) << '\n';
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_csv(v, path.empty() ? k : path + "." + k, os);
  } else {
    std::size_t i = 0;
    for (const auto& v : j) flatten_csv(v, path + "[" + std::to_string(i++) + "]", os);
  }
}

std::string render(const Json& j, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << j.dump(2) << '\n';
      break;
    case Format::Csv:
      os << "key,value\n";
      flatten_csv(j, "", os);
      break;
    case Format::Text:
      render_text(j, 0, os);
      break;
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidInputError("invalid " + what + ": \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

LnId parse_ln_id(const std::string& s) {
  const auto parts = split(s, '_');
  if (parts.size() != 3 || parts[0] != "L") throw InvalidInputError("expected L_<n>_<r>, got \"" + s + "\"");
  return {static_cast<int>(parse_long(parts[1], "n")), static_cast<int>(parse_long(parts[2], "r"))};
}

Lattice load_lattice(const Options& o) {
  if (o.id.empty() == o.file.empty()) throw UsageError("give exactly one of a lattice id or --file");
  if (!o.file.empty()) return lattice_from_json(read_json_file(o.file));
  return named_lattice(o.id);
}

Json lattice_info(const Options& o) { return lattice_info_json(load_lattice(o)); }

Json lattice_build(const Options& o) {
  Lattice l = load_lattice(o);
  Integer index = 1;
  if (!o.glue.empty()) {
    RatMatrix glue;
    for (const auto& vec : split(o.glue, ';')) {
      RatVector v;
      for (const auto& x : split(vec, ',')) v.push_back(parse_rational(trim(x)));
      if (v.size() != l.root_gram().rows())
        throw InvalidInputError("glue vector has " + std::to_string(v.size()) + " entries, lattice has " +
                                std::to_string(l.root_gram().rows()) + " root vectors");
      glue.push_back(std::move(v));
    }
    const GlueResult g = glue_overlattice_root(l, glue);
    l = g.lattice;
    index = g.index;
  }
  Json j = lattice_to_json(l);
  j["rank"] = l.rank();
  j["det"] = to_json(l.det());
  j["index"] = to_json(index);
  return j;
}

Json classify(const Options& o) {
  if (o.genera.empty()) throw UsageError("classify needs --genera");
  BranchConfig cfg;
  for (const auto& g : split(o.genera, ',')) cfg.genera.push_back(parse_long(trim(g), "genus"));
  return classification_to_json(classify_branch(cfg));
}

Json candidates(const Options& o, bool derive) {
  if (!o.n) throw UsageError("--n is required");
  const int n = static_cast<int>(*o.n);
  if (!derive) return candidates_to_json(ns_candidates(n));
  const CandidateList got = derive_candidate_list(n);
  Json j = candidates_to_json(got);
  j["matches_closed_list"] = got.same_lattices(ns_candidates(n));
  return j;
}

Json code_report(const std::string& name, const BinaryCode& code) {
  const EvenSetVerdict v = validate_even_code(code);
  Json violations = Json::array();
  for (const auto& x : v.violations) {
    Json e{{"word", positions_of(x.word)}, {"rule", x.rule}};
    if (x.other) e["other"] = positions_of(x.other);
    violations.push_back(std::move(e));
  }
  Json dist = Json::object();
  for (const auto& [w, count] : weight_distribution(code)) dist[std::to_string(w)] = count;
  Json j{{"name", name}, {"dimension", code.dimension()}};
  j.update(code_to_json(code));
  j["valid"] = v.valid;
  j["weight_distribution"] = std::move(dist);
  j["violations"] = std::move(violations);
  return j;
}

Json even_sets(const Options& o) {
  const int given = !o.code.empty() + !o.file.empty() + o.m.has_value() + !o.alternative.empty();
  if (given != 1) throw UsageError("give exactly one of --code, --file, --m, --alternative");
  if (!o.code.empty()) return code_report(o.code, code_of(parse_even_set_id(o.code)));
  if (!o.file.empty()) return code_report(o.file, code_from_json(read_json_file(o.file)));
  if (o.m) {
    if (*o.m < 0) throw InvalidInputError("--m must be non-negative");
    Json opts = Json::array();
    for (const auto& p : minimal_primitive_options(static_cast<std::size_t>(*o.m))) {
      Json e{{"name", p.name}};
      e.update(code_to_json(p.code));
      opts.push_back(std::move(e));
    }
    return Json{{"m", *o.m}, {"options", std::move(opts)}};
  }
  const LnId id = parse_ln_id(o.alternative);
  Json sets = Json::array();
  for (const auto& d : alternative_even_sets(id.n, id.r)) {
    Json cls = Json::array();
    for (const auto& q : d.curve_class) cls.push_back(to_string(q));
    Json e{{"genus", d.genus},
           {"rationals", d.rationals},
           {"expression", d.expression},
           {"curve_class", std::move(cls)},
           {"class_norm_ok", d.class_norm_ok},
           {"half_sum_in_lattice", d.half_sum_in_lattice}};
    e["half_class_in_lattice"] = d.half_class_in_lattice ? Json(*d.half_class_in_lattice) : Json(nullptr);
    sets.push_back(std::move(e));
  }
  return Json{{"lattice", to_string(id)}, {"even_sets", std::move(sets)}};
}

Json existence_report(const Options& o) {
  if (!o.n || !o.h) throw UsageError("existence needs --n and --h");
  const ExistenceVerdict v = existence(*o.n, *o.h);
  return Json{{"n", *o.n},
              {"h", *o.h},
              {"exists", v.exists},
              {"construction", v.construction},
              {"d", v.d ? Json(*v.d) : Json(nullptr)}};
}

std::string verification_output(const VerificationReport& r, Format f, std::ostream& err) {
  std::ostringstream os;
  const std::size_t failed = r.failures();
  switch (f) {
    case Format::Json: {
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"pass", c.pass},
                              {"basis", c.basis}});
      Json j{{"checks", std::move(checks)},
             {"warnings", r.warnings},
             {"summary", Json{{"checks", r.checks.size()},
                              {"passed", r.checks.size() - failed},
                              {"failed", failed},
                              {"warnings", r.warnings.size()}}}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "name,expected,actual,result,basis\n";
      for (const auto& c : r.checks)
        os << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.actual) << ','
           << (c.pass ? "PASS" : "FAIL") << ',' << csv_field(c.basis) << '\n';
      for (const auto& w : r.warnings) err << "warning: " << w << '\n';
      break;
    case Format::Text:
      for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.actual;
        if (!c.pass) os << " (expected " << c.expected << ")";
        os << '\n';
      }
      for (const auto& w : r.warnings) os << "WARN " << w << '\n';
      os << r.checks.size() << " checks, " << r.checks.size() - failed << " passed, " << failed << " failed, "
         << r.warnings.size() << " warnings\n";
      break;
  }
  return os.str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const VerifyOptions& verify) {
  CLI::App app{"Exact lattice and invariant computations for double covers of K3 surfaces", "k3cover"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", o.out_path, "Write the report to PATH instead of standard output");

  auto* info = app.add_subcommand("lattice-info", "Invariants of a named lattice or a lattice JSON file");
  info->add_option("id", o.id, "Lattice id, e.g. L_9_2, M_2e3, K, U, R2d:6+K");
  info->add_option("--file", o.file, "Lattice JSON document");

  auto* build = app.add_subcommand("lattice-build", "Glue an overlattice and emit the lattice document");
  build->add_option("--id", o.id, "Lattice id");
  build->add_option("--file", o.file, "Lattice JSON document");
  build->add_option("--glue", o.glue, "Glue vectors in root coordinates, e.g. \"1/2,1/2,0;0,1/2,1/2\"");

  auto* cls = app.add_subcommand("classify", "Classify a branch locus given the genera of its curves");
  cls->add_option("--genera", o.genera, "Comma-separated genera, e.g. 2,0,0,0,0,0")->required();

  auto* nsc = app.add_subcommand("ns-candidates", "Closed list of candidate Neron-Severi lattices");
  nsc->add_option("--n", o.n, "Number of branch curves")->required();

  auto* der = app.add_subcommand("derive-candidates", "Candidate list by exhaustive glue enumeration");
  der->add_option("--n", o.n, "Number of branch curves")->required();

  auto* evs = app.add_subcommand("even-sets", "Even-set codes, minimal primitive lattices, alternative even sets");
  evs->add_option("--code", o.code, "Code id: M_2e1 .. M_2e4, K");
  evs->add_option("--file", o.file, "Code JSON document");
  evs->add_option("--m", o.m, "List minimal primitive lattices for m curves");
  evs->add_option("--alternative", o.alternative, "Alternative even sets in L_<n>_<r>");

  auto* ex = app.add_subcommand("existence", "Existence of a K3 with the given branch data");
  ex->add_option("--n", o.n, "Number of branch curves")->required();
  ex->add_option("--h", o.h, "Genus parameter h")->required();

  auto* ver = app.add_subcommand("verify-paper", "Run the full verification suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::string output;
  int code = kOk;
  try {
    Json doc;
    if (info->parsed()) {
      doc = lattice_info(o);
    } else if (build->parsed()) {
      doc = lattice_build(o);
    } else if (cls->parsed()) {
      doc = classify(o);
    } else if (nsc->parsed()) {
      doc = candidates(o, false);
    } else if (der->parsed()) {
      doc = candidates(o, true);
    } else if (evs->parsed()) {
      doc = even_sets(o);
    } else if (ex->parsed()) {
      doc = existence_report(o);
    }
    if (ver->parsed()) {
      const VerificationReport r = verify_paper(verify);
      output = verification_output(r, o.format, err);
      if (!r.ok()) code = kVerificationFailed;
    } else {
      output = render(doc, o.format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (o.out_path.empty()) {
    out << output;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f || !(f << output)) {
      err << "error: cannot write " << o.out_path << '\n';
      return kInvalidInput;
    }
  }
  return code;
}

}  // namespace k3cover::cli
