// Acceptance criteria 1-11: one PASS/FAIL line each, non-zero exit on failure.

#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "k3cover/cli.hpp"
#include "k3cover/covers.hpp"
#include "k3cover/evensets.hpp"
#include "k3cover/k3lattices.hpp"
#include "k3cover/verify.hpp"
#include "oracles.hpp"

using namespace k3cover;

namespace {

std::vector<LnId> family() {
  std::vector<LnId> all;
  for (int n = 6; n <= 17; ++n)
    for (const auto& id : ns_candidates(n).entries) all.push_back(id);
  return all;
}

int log2_of(int r) {
  int k = 0;
  while ((1 << k) < r) ++k;
  return k;
}

Integer pow2(long e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

bool criterion_1(std::string& detail) {
  const auto all = family();
  for (const auto& id : all) {
    const Integer want = abs(pow2(id.n - 2 - 2 * log2_of(id.r)) * (id.n - 5));
    const Integer got = abs(determinant(build_Ln(id.n, id.r).gram()));
    if (want != got) {
      detail = to_string(id) + ": |det| " + got.get_str() + " vs " + want.get_str();
      return false;
    }
  }
  detail = std::to_string(all.size()) + " lattices";
  return all.size() == 16;
}

bool criterion_2(std::string& detail) {
  for (const auto& id : family()) {
    IntVector want;
    if (id.n == 9 && id.r == 2) {
      want.assign(7, Integer(2));
    } else {
      want.assign(static_cast<std::size_t>(id.n - 3 - 2 * log2_of(id.r)), Integer(2));
      want.push_back(2 * id.n - 10);
    }
    IntVector got;
    for (const auto& d : smith_normal_form(build_Ln(id.n, id.r).gram()).diagonal())
      if (d != 1) got.push_back(d);
    if (got != want) {
      detail = to_string(id);
      return false;
    }
  }
  detail = "16 groups";
  return true;
}

bool criterion_3(std::string& detail) {
  for (int n = 6; n <= 17; ++n)
    if (!derive_candidate_list(n).same_lattices(ns_candidates(n))) {
      detail = "n = " + std::to_string(n);
      return false;
    }
  detail = "n = 6..17";
  return true;
}

bool criterion_4(std::string& detail) {
  const bool a = embedding_status(build_Ln(13, 1)).verdict == Verdict::NotEmbeddable;
  const bool b = embedding_status(build_Ln(10, 1)).verdict == Verdict::Embeddable;
  const Lattice k6 = named_lattice("R2d:6+K");
  const bool c = embedding_status(k6).verdict == Verdict::NotEmbeddable && length(k6) == 7;
  detail = std::string("L_13_1 ") + (a ? "ok" : "wrong") + ", L_10_1 " + (b ? "ok" : "wrong") + ", <6>+K " +
           (c ? "ok" : "wrong");
  return a && b && c;
}

MinimalInvariants xmin(const std::vector<long>& genera) {
  return std::get<CoverReport>(classify_branch({genera})).Xmin;
}

bool criterion_5(std::string& detail) {
  const MinimalInvariants gt = xmin({2, 0, 0, 0, 0, 0});
  bool ok = gt.chi == 3 && gt.c1sq == 1 && gt.c2 == 35;
  ok = ok && xmin({1, 1}).c2 == 48 && xmin({1, 0, 0, 0, 0}).c2 == 36 &&
       xmin({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}).c2 == 24;
  const auto k3 = std::get<CoverReport>(classify_branch({std::vector<long>(8, 0)}));
  const auto ab = std::get<CoverReport>(classify_branch({std::vector<long>(16, 0)}));
  ok = ok && k3.minimal_model == "K3" && ab.minimal_model == "Abelian";
  detail = "Xmin(2,0^5) = (" + std::to_string(gt.chi) + "," + std::to_string(gt.c1sq) + "," + std::to_string(gt.c2) + ")";
  return ok;
}

bool criterion_6(std::string& detail) {
  const NoetherSweep s = noether_sweep(17, 20);
  detail = std::to_string(s.configurations) + " configurations, " + std::to_string(s.admissible) + " admissible, " +
           std::to_string(s.violations) + " violations";
  return s.violations == 0 && s.admissible > 0;
}

bool criterion_7(std::string& detail) {
  const EvenSetId ids[] = {EvenSetId::M1, EvenSetId::M2, EvenSetId::M3, EvenSetId::M4, EvenSetId::Kummer};
  std::size_t words = 0;
  for (EvenSetId id : ids) {
    const BinaryCode c = code_of(id);
    if (!validate_even_code(c).valid) {
      detail = to_string(id) + " invalid";
      return false;
    }
    const auto all = codewords(c);
    for (Word a : all) {
      if (!a) continue;
      ++words;
      if (weight(a) != 8 && weight(a) != 16) return false;
      for (Word b : all)
        if (a != b && weight(a) == 8 && weight(b) == 8 && weight(a & b) != 0 && weight(a & b) != 4) return false;
    }
  }
  detail = "5 codes, " + std::to_string(words) + " nonzero codewords";
  return true;
}

bool criterion_8(std::string& detail) {
  for (long h = -3; h <= 6; ++h) {
    if (existence(17, h).exists != (h % 2 == 0)) return false;
    const ExistenceVerdict v = existence(16, h);
    if (!v.exists || !v.d || *v.d != 15 + 4 * h || ((*v.d % 4) + 4) % 4 != 3) return false;
  }
  detail = "h = -3..6";
  return true;
}

bool criterion_9(std::string& detail) {
  const long a = bidouble_pg(1, 1, 5), b = bidouble_pg(2, 2, 4), c = bidouble_pg(3, 3, 3);
  detail = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
  return a == 2 && b == 2 && c == 3;
}

bool criterion_10(std::string& detail) {
  std::mt19937_64 rng(10);
  std::size_t dets = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix a = oracle::random_matrix(rng, r, c, 1 + static_cast<long>(rng() % 15));
    IntVector snf;
    for (const auto& d : smith_normal_form(a).diagonal())
      if (d != 0) snf.push_back(d);
    if (snf != oracle::reduction_invariant_factors(a) || snf != oracle::determinantal_invariant_factors(a)) {
      detail = "SNF mismatch on " + a.to_string();
      return false;
    }
    const IntMatrix sq = oracle::random_matrix(rng, r, r, 1 + static_cast<long>(rng() % 15));
    if (determinant(sq) != oracle::cofactor_det(sq)) {
      detail = "determinant mismatch on " + sq.to_string();
      return false;
    }
    ++dets;
  }
  detail = "200 SNF, " + std::to_string(dets) + " determinants";
  return true;
}

bool criterion_11(std::string& detail) {
  std::ostringstream out, err;
  const std::vector<std::string> args{"verify-paper", "--format", "json"};
  const int code = cli::run(args, out, err);
  const auto j = nlohmann::json::parse(out.str());
  const auto& w = j["warnings"];
  auto has = [&](const std::string& needle) {
    for (const auto& x : w)
      if (x.get<std::string>().find(needle) != std::string::npos) return true;
    return false;
  };
  detail = "exit " + std::to_string(code) + ", " + std::to_string(w.size()) + " warnings, " +
           j["summary"]["checks"].dump() + " checks";
  return code == 0 && w.size() == 3 && has("r = 6") && has("n = 1") && has("n > 13");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"discriminant closed forms", criterion_1},  {"discriminant groups", criterion_2},
      {"candidate-list equivalence", criterion_3}, {"embedding verdicts", criterion_4},
      {"cover-invariant instances", criterion_5},  {"Noether sweep", criterion_6},
      {"even-code laws", criterion_7},             {"existence table", criterion_8},
      {"bidouble p_g", criterion_9},               {"oracle equivalence", criterion_10},
      {"verify-paper", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first;
    if (!detail.empty()) std::cout << " (" << detail << ')';
    std::cout << '\n';
  }
  return failed ? 1 : 0;
}
