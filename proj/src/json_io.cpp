#include "k3cover/json_io.hpp"

#include <limits>

#include "k3cover/errors.hpp"

namespace k3cover {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw InvalidInputError("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw InvalidInputError("expected an integer");
}

Json optional_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json surface_json(const SurfaceInvariants& x) {
  return Json{{"chi", x.chi}, {"pg", optional_json(x.pg)}, {"q", optional_json(x.q)}, {"c1sq", x.c1sq}, {"c2", x.c2}};
}

}  // namespace

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw InvalidInputError("matrix object needs \"entries\"");
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw InvalidInputError("matrix entries must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : *entries) {
    if (!r.is_array()) throw InvalidInputError("matrix row must be an array");
    IntVector row;
    for (const auto& v : r) row.push_back(integer_from_json(v));
    rows.push_back(std::move(row));
  }
  IntMatrix m;
  try {
    m = IntMatrix::from_rows(rows);
  } catch (const ShapeError& e) {
    throw InvalidInputError(e.what());
  }
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
      throw InvalidInputError("\"rows\" does not match entries");
    if (j.contains("cols") && !rows.empty() && j.at("cols").get<std::size_t>() != m.cols())
      throw InvalidInputError("\"cols\" does not match entries");
  }
  return m;
}

Json lattice_to_json(const Lattice& l) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < l.root_gram().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < l.root_gram().cols(); ++j) row.push_back(to_json(l.root_gram()(i, j)));
    gram.push_back(std::move(row));
  }
  Json glue = Json::array();
  for (const auto& v : l.glue()) {
    Json row = Json::array();
    for (const auto& q : v) row.push_back(to_string(q));
    glue.push_back(std::move(row));
  }
  return Json{{"name", l.name()}, {"labels", l.labels()}, {"gram", std::move(gram)}, {"glue", std::move(glue)}};
}

Lattice lattice_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("gram")) throw InvalidInputError("lattice document needs \"gram\"");
    const IntMatrix g = matrix_from_json(j.at("gram"));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    Lattice l = from_gram(g, labels);
    if (j.contains("glue")) {
      RatMatrix glue;
      for (const auto& row : j.at("glue")) {
        RatVector v;
        for (const auto& q : row) v.push_back(q.is_string() ? parse_rational(q.get<std::string>()) : Rational(q.get<long>()));
        if (v.size() != g.rows()) throw InvalidInputError("glue vector length differs from rank");
        glue.push_back(std::move(v));
      }
      if (!glue.empty()) l = glue_overlattice_root(l, glue).lattice;
    }
    if (j.contains("name")) l.set_name(j.at("name").get<std::string>());
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed lattice document: ") + e.what());
  } catch (const ShapeError& e) {
    throw InvalidInputError(e.what());
  }
}

Json lattice_info_json(const Lattice& l) {
  Json j = lattice_to_json(l);
  j["rank"] = l.rank();
  j["basis_gram"] = to_json(l.gram());
  j["even"] = l.is_even();
  j["signature"] = Json{{"positive", l.signature().positive},
                        {"negative", l.signature().negative},
                        {"zero", l.signature().zero}};
  j["det"] = to_json(l.det());
  if (l.is_degenerate()) {
    j["degenerate"] = true;
    return j;
  }
  const DiscriminantGroup g = discriminant_group(l);
  Json divisors = Json::array(), qvals = Json::array(), gens = Json::array();
  for (const auto& d : g.elementary_divisors) divisors.push_back(to_json(d));
  for (const auto& q : g.qvalues) qvals.push_back(to_string(q));
  for (const auto& x : g.generators) {
    Json row = Json::array();
    for (const auto& q : x) row.push_back(to_string(q));
    gens.push_back(std::move(row));
  }
  j["discriminant_group"] = Json{{"elementary_divisors", divisors}, {"qvalues", qvals}, {"generators", gens}};
  j["length"] = g.length();
  if (auto inv = two_elementary_invariants(l))
    j["two_elementary"] = Json{{"r", inv->r}, {"a", inv->a}, {"delta", inv->delta}};
  else
    j["two_elementary"] = nullptr;
  if (l.is_even() && l.signature().positive == 1 && l.signature().zero == 0) {
    const EmbeddingStatus e = embedding_status(l);
    j["embedding"] = Json{{"verdict", to_string(e.verdict)}, {"reason", e.reason}};
  }
  return j;
}

Json code_to_json(const BinaryCode& c) {
  Json gens = Json::array();
  for (Word w : c.generators) {
    Json row = Json::array();
    for (std::size_t i = 0; i < c.m; ++i) row.push_back((w >> i) & 1);
    gens.push_back(std::move(row));
  }
  return Json{{"m", c.m}, {"generators", std::move(gens)}};
}

BinaryCode code_from_json(const Json& j) {
  try {
    BinaryCode c;
    c.m = j.at("m").get<std::size_t>();
    if (c.m == 0 || c.m > 32) throw InvalidInputError("code length must be between 1 and 32");
    for (const auto& row : j.at("generators")) {
      if (row.size() != c.m) throw InvalidInputError("generator length differs from m");
      Word w = 0;
      for (std::size_t i = 0; i < c.m; ++i) {
        const int bit = row.at(i).get<int>();
        if (bit != 0 && bit != 1) throw InvalidInputError("generator entries must be 0 or 1");
        if (bit) w |= Word{1} << i;
      }
      c.generators.push_back(w);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("malformed code document: ") + e.what());
  }
}

Json report_to_json(const CoverReport& r) {
  Json j{{"case", to_string(r.kind)},
         {"n", r.n},
         {"k", r.k},
         {"h", optional_json(r.h)},
         {"gC", r.gC},
         {"L2", r.L2},
         {"h0", optional_json(r.h0)},
         {"X", surface_json(r.X)},
         {"Xmin", Json{{"chi", r.Xmin.chi}, {"c1sq", r.Xmin.c1sq}, {"c2", r.Xmin.c2}}},
         {"kodaira", r.kodaira},
         {"b", optional_json(r.b)},
         {"gA", optional_json(r.gA)},
         {"minimal_model", r.minimal_model}};
  if (r.printed_X) j["X_alternative"] = surface_json(*r.printed_X);
  j["notes"] = r.notes;
  return j;
}

Json classification_to_json(const Classification& c) {
  if (const auto* rep = std::get_if<CoverReport>(&c)) {
    Json j{{"admissible", true}};
    j.update(report_to_json(*rep));
    return j;
  }
  const auto& bad = std::get<Inadmissible>(c);
  return Json{{"admissible", false}, {"reason", to_string(bad.reason)}, {"detail", bad.text}};
}

Json candidates_to_json(const CandidateList& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) entries.push_back(Json{{"id", to_string(e)}, {"n", e.n}, {"r", e.r}});
  Json j{{"n", c.n}, {"entries", std::move(entries)}};
  if (!c.unmatched.empty()) j["unmatched"] = c.unmatched;
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

}  // namespace k3cover
