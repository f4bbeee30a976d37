#include "k3cover/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "k3cover/covers.hpp"
#include "k3cover/errors.hpp"
#include "k3cover/evensets.hpp"

namespace k3cover {

namespace {

std::string join(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ']';
  return os.str();
}

std::string join(const std::vector<LnId>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << '}';
  return os.str();
}

class Collector {
 public:
  explicit Collector(VerificationReport& r) : r_(r) {}

  void expect(std::string name, const std::string& expected, const std::string& actual, std::string basis) {
    r_.checks.push_back({std::move(name), expected, actual, expected == actual, std::move(basis)});
  }

  template <typename F>
  void guarded(const std::string& name, const std::string& expected, std::string basis, F&& f) {
    std::string actual;
    try {
      actual = f();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    expect(name, expected, actual, std::move(basis));
  }

 private:
  VerificationReport& r_;
};

Integer pow2(long e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

int log2_of(int r) {
  int k = 0;
  while ((1 << k) < r) ++k;
  return k;
}

// Stated closed forms for the candidate lattices.
Integer closed_det(int n, int r) {
  Integer d = pow2(n - 2 - 2 * log2_of(r)) * (n - 5);
  return (n - 1) % 2 ? Integer(-d) : d;
}

IntVector closed_group(int n, int r) {
  if (n == 9 && r == 2) return IntVector(7, Integer(2));
  const int twos = n - 3 - 2 * log2_of(r);
  IntVector v(static_cast<std::size_t>(twos), Integer(2));
  v.push_back(2 * n - 10);
  return v;
}

long closed_length(int n, int r) {
  if (n == 9 && r == 2) return 7;
  return n - 2 - 2 * log2_of(r);
}

std::string minimal_triple(const MinimalInvariants& m) {
  return "(" + std::to_string(m.chi) + "," + std::to_string(m.c1sq) + "," + std::to_string(m.c2) + ")";
}

std::string classify_summary(const std::vector<long>& genera) {
  const Classification c = classify_branch({genera});
  if (const auto* bad = std::get_if<Inadmissible>(&c)) return "inadmissible:" + to_string(bad->reason);
  const auto& rep = std::get<CoverReport>(c);
  return to_string(rep.kind) + " Xmin=" + minimal_triple(rep.Xmin) + " model=" + rep.minimal_model;
}

std::vector<long> genera_of(long g, long a, long b, long c) {
  std::vector<long> v(static_cast<std::size_t>(a), g);
  v.insert(v.end(), static_cast<std::size_t>(b), 1);
  v.insert(v.end(), static_cast<std::size_t>(c), 0);
  return v;
}

}  // namespace

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

NoetherSweep noether_sweep(long max_n, long max_genus) {
  NoetherSweep s;
  auto visit = [&](const std::vector<long>& genera) {
    ++s.configurations;
    const Classification c = classify_branch({genera});
    const auto* rep = std::get_if<CoverReport>(&c);
    if (!rep) return;
    ++s.admissible;
    bool ok = rep->X.c1sq + rep->X.c2 == 12 * rep->X.chi && rep->Xmin.c1sq + rep->Xmin.c2 == 12 * rep->Xmin.chi;
    if (rep->X.pg && rep->X.q && *rep->X.pg - *rep->X.q + 1 != rep->X.chi) ok = false;
    if (!ok) ++s.violations;
  };
  for (long n = 1; n <= max_n; ++n)
    for (long b = 0; b <= n; ++b) visit(genera_of(0, 0, b, n - b));
  for (long g = 2; g <= max_genus; ++g)
    for (long n = 1; n <= max_n; ++n)
      for (long a = 1; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b) visit(genera_of(g, a, b, n - a - b));
  return s;
}

VerificationReport verify_paper(const VerifyOptions& opts) {
  VerificationReport report;
  Collector col(report);

  // Candidate lattices: determinants, discriminant groups, lengths.
  std::vector<LnId> family;
  for (int n = 6; n <= 17; ++n)
    for (const auto& id : ns_candidates(n).entries) family.push_back(id);
  col.expect("candidate family size", "16", std::to_string(family.size()), "list of candidate lattices");
  for (const auto& id : family) {
    Lattice l = build_Ln(id.n, id.r);
    if (opts.lattice_hook) l = opts.lattice_hook(l, id);
    const std::string tag = to_string(id);
    col.guarded(tag + " det", closed_det(id.n, id.r).get_str(), "determinant closed form",
                [&] { return discriminant(l).get_str(); });
    col.guarded(tag + " discriminant group", join(closed_group(id.n, id.r)), "discriminant group closed form",
                [&] { return join(discriminant_group(l).elementary_divisors); });
    col.guarded(tag + " length", std::to_string(closed_length(id.n, id.r)), "length closed form",
                [&] { return std::to_string(length(l)); });
    col.guarded(tag + " even, signature", "even (1," + std::to_string(id.n - 1) + ")", "hyperbolic even lattice", [&] {
      return std::string(l.is_even() ? "even" : "odd") + " (" + std::to_string(l.signature().positive) + "," +
             std::to_string(l.signature().negative) + ")";
    });
  }

  // Chain of index-2 overlattices.
  for (const auto& id : family) {
    for (int r2 = id.r * 2; r2 <= 16; r2 *= 2) {
      if (!ln_defined(id.n, r2)) break;
      col.guarded(to_string(id) + " -> " + to_string(LnId{id.n, r2}) + " index", "2", "overlattice chain", [&] {
        const Lattice a = build_Ln(id.n, r2 / 2), b = build_Ln(id.n, r2);
        Rational ratio = Rational(a.det()) / Rational(b.det());
        return ratio.get_str() == "4" ? std::string("2") : "det ratio " + ratio.get_str();
      });
      break;
    }
  }

  // Brute-force derivation against the closed list.
  for (int n = 6; n <= 17; ++n) {
    const CandidateList want = ns_candidates(n);
    col.guarded("derived candidates n=" + std::to_string(n), join(want.entries), "classification of possible NS",
                [&] {
                  const CandidateList got = derive_candidate_list(n);
                  std::string s = join(got.entries);
                  for (const auto& u : got.unmatched) s += " +" + u;
                  return s;
                });
  }

  // Named lattices.
  col.guarded("D4 det", "4", "negated Cartan matrix", [] { return discriminant(build_standard(StandardId::D4)).get_str(); });
  col.guarded("M_2e1 det", "64", "index law", [] { return discriminant(build_even_set_lattice(EvenSetId::M1)).get_str(); });
  col.guarded("M_2e4 rank", "15", "even-set lattice definition",
              [] { return std::to_string(build_even_set_lattice(EvenSetId::M4).rank()); });
  col.guarded("K det", "64", "index law", [] { return discriminant(build_even_set_lattice(EvenSetId::Kummer)).get_str(); });
  col.guarded("<6>+K rank, length", "17,7", "n = 17 exclusion", [] {
    const Lattice l = named_lattice("R2d:6+K");
    return std::to_string(l.rank()) + "," + std::to_string(length(l));
  });

  // Embedding verdicts.
  col.guarded("L_13_1 embedding", "NotEmbeddable", "length bound",
              [] { return to_string(embedding_status(build_Ln(13, 1)).verdict); });
  col.guarded("L_10_1 embedding", "Embeddable", "sufficient length bound",
              [] { return to_string(embedding_status(build_Ln(10, 1)).verdict); });
  col.guarded("<6>+K embedding", "NotEmbeddable", "length bound",
              [] { return to_string(embedding_status(named_lattice("R2d:6+K")).verdict); });
  col.guarded("L_12_1 embedding", "Embeddable", "U(2) splitting of the discriminant form",
              [] { return to_string(embedding_status(build_Ln(12, 1)).verdict); });

  // 2-elementary invariants and fixed loci.
  col.guarded("L_6_1 (r,a)", "(6,4)", "2-elementary invariants", [] {
    const auto inv = two_elementary_invariants(build_Ln(6, 1));
    return inv ? "(" + std::to_string(inv->r) + "," + std::to_string(inv->a) + ")" : std::string("not 2-elementary");
  });
  col.guarded("rank 10 two-cubics lattice", "(10,8,0)", "2-elementary invariants", [] {
    IntMatrix g(10, 10);
    g(0, 0) = 2;
    for (std::size_t i = 1; i < 10; ++i) g(i, i) = -2;
    RatVector glue(10, Rational(1, 2));
    const Lattice l = glue_overlattice_root(from_gram(g), {glue}).lattice;
    const auto inv = two_elementary_invariants(l);
    return inv ? "(" + std::to_string(inv->r) + "," + std::to_string(inv->a) + "," + std::to_string(inv->delta) + ")"
               : std::string("not 2-elementary");
  });
  col.guarded("L_12_1 2-elementary", "no", "discriminant group contains Z/14",
              [] { return two_elementary_invariants(build_Ln(12, 1)) ? std::string("yes") : std::string("no"); });
  auto locus = [](std::size_t r, std::size_t a, int delta) {
    const FixedLocus f = fixed_locus_nonsymplectic({r, a, delta});
    if (!f.genus) return std::to_string(f.elliptic_curves) + " genus-1";
    return "genus " + std::to_string(*f.genus) + " + " + std::to_string(f.rational_curves) + " rational";
  };
  col.guarded("fixed locus (6,4)", "genus 6 + 1 rational", "fixed locus of a non-symplectic involution",
              [&] { return locus(6, 4, 0); });
  col.guarded("fixed locus (9,7)", "genus 3 + 1 rational", "fixed locus of a non-symplectic involution",
              [&] { return locus(9, 7, 1); });
  col.guarded("fixed locus (10,8,0)", "2 genus-1", "two cubics", [&] { return locus(10, 8, 0); });

  // Even codes.
  const EvenSetId ids[] = {EvenSetId::M1, EvenSetId::M2, EvenSetId::M3, EvenSetId::M4, EvenSetId::Kummer};
  for (std::size_t i = 0; i < 5; ++i) {
    const BinaryCode code = code_of(ids[i]);
    col.guarded(to_string(ids[i]) + " code", "valid dim " + std::to_string(i + 1), "even-set laws", [&] {
      return std::string(validate_even_code(code).valid ? "valid" : "invalid") + " dim " +
             std::to_string(code.dimension());
    });
    col.guarded(to_string(ids[i]) + " index", std::to_string(1 << (i + 1)), "index 2^dim", [&] {
      const Lattice base = build_minus_two(code.m);
      const Lattice glued = build_even_set_lattice(ids[i]);
      const Integer idx = sqrt(Integer(base.det() / glued.det()));
      return idx.get_str();
    });
  }
  for (std::size_t m : {7UL, 12UL, 14UL, 16UL, 17UL}) {
    static const std::map<std::size_t, std::string> want{
        {7, "<-2>^7"}, {12, "M_2e1+<-2>^4,M_2e2"}, {14, "M_2e3"}, {16, "K"}, {17, ""}};
    col.guarded("minimal primitive options m=" + std::to_string(m), want.at(m), "minimal primitive lattice table",
                [&] {
                  std::string s;
                  for (const auto& o : minimal_primitive_options(m)) s += (s.empty() ? "" : ",") + o.name;
                  return s;
                });
  }

  // Cover invariants.
  col.guarded("invariants_of_X(-2,1)", "chi 3 pg 2 q 0 c1sq -4 c2 40", "invariants of X", [] {
    const auto x = invariants_of_X(-2, 1);
    return "chi " + std::to_string(x.chi) + " pg " + std::to_string(*x.pg) + " q " + std::to_string(*x.q) + " c1sq " +
           std::to_string(x.c1sq) + " c2 " + std::to_string(x.c2);
  });
  const std::vector<std::pair<std::vector<long>, std::string>> instances{
      {genera_of(2, 1, 0, 5), "GeneralType Xmin=(3,1,35) model=general type"},
      {genera_of(0, 0, 2, 0), "GenusOne Xmin=(4,0,48) model=elliptic over a curve of genus 0"},
      {genera_of(0, 0, 1, 4), "GenusOne Xmin=(3,0,36) model=elliptic over a curve of genus 0"},
      {genera_of(0, 0, 2, 8), "GenusOne Xmin=(2,0,24) model=elliptic over a curve of genus 1"},
      {genera_of(0, 0, 0, 8), "GenusZero Xmin=(2,0,24) model=K3"},
      {genera_of(0, 0, 0, 16), "GenusZero Xmin=(0,0,0) model=Abelian"},
      {genera_of(0, 0, 0, 12), "inadmissible:genus-zero-count"},
      {genera_of(0, 0, 1, 2), "inadmissible:congruence"},
  };
  for (const auto& [genera, want] : instances) {
    std::string name = "classify {";
    for (std::size_t i = 0; i < genera.size(); ++i) name += (i ? "," : "") + std::to_string(genera[i]);
    name += "}";
    col.guarded(name, want, "classification of branch loci", [&] { return classify_summary(genera); });
  }
  for (const auto& [n, k, b, gA] : std::vector<std::tuple<long, long, long, long>>{{2, 2, 2, 0}, {5, 1, 2, 0}, {10, 2, 4, 1}}) {
    col.guarded("branch points (" + std::to_string(n) + "," + std::to_string(k) + ")",
                "b=" + std::to_string(b) + " gA=" + std::to_string(gA), "base change of the fibration", [&] {
                  const auto v = genus1_branch_points(n, k);
                  const auto& p = std::get<BranchPoints>(v);
                  return "b=" + std::to_string(p.b) + " gA=" + std::to_string(p.gA);
                });
  }
  col.guarded("unstable fiber types", "I0*:6:4 I1*:7:4 I2*:8:4 I3*:9:4 I4*:10:4 IV*:8:4 III*:9:4 II*:10:4",
              "Kodaira fibers with four odd components", [] {
                std::string s;
                for (const auto& f : unstable_fiber_types(4))
                  s += (s.empty() ? "" : " ") + f.name + ":" + std::to_string(f.euler) + ":" +
                       std::to_string(f.odd_mult_components);
                return s;
              });
  const NoetherSweep sweep = noether_sweep(17, 20);
  col.expect("Noether sweep violations", "0", std::to_string(sweep.violations), "Noether's formula");

  // Existence.
  for (long h = -3; h <= 6; ++h) {
    col.guarded("existence n=17 h=" + std::to_string(h), h % 2 == 0 ? "exists" : "none", "Kummer parity",
                [&] { return existence(17, h).exists ? std::string("exists") : std::string("none"); });
    col.guarded("existence n=16 h=" + std::to_string(h), "exists d=" + std::to_string(15 + 4 * h) + " d%4=3",
                "overlattice of <2d> + M_2e4", [&] {
                  const auto v = existence(16, h);
                  return std::string(v.exists ? "exists" : "none") + " d=" + std::to_string(*v.d) +
                         " d%4=" + std::to_string(((*v.d % 4) + 4) % 4);
                });
    if (h >= 1)
      col.guarded("existence n=1 h=" + std::to_string(h), "exists", "NS = Z D",
                  [&] { return existence(1, h).exists ? std::string("exists") : std::string("none"); });
  }

  // Bidouble covers and projections.
  for (const auto& [d, want] : std::vector<std::pair<std::array<long, 3>, long>>{
           {{1, 1, 5}, 2}, {{2, 2, 4}, 2}, {{3, 3, 3}, 3}}) {
    col.guarded("bidouble p_g (" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")",
                std::to_string(want), "bidouble cover of the plane",
                [&] { return std::to_string(bidouble_pg(d[0], d[1], d[2])); });
  }
  for (long n = 7; n <= 16; ++n)
    col.guarded("projection residual n=" + std::to_string(n), "2", "degree of the projection",
                [&] { return std::to_string(projection_residual(n)); });

  // Alternative even sets.
  auto summary = [](int n, int r) {
    std::string s;
    for (const auto& e : alternative_even_sets(n, r)) {
      const bool ok = e.class_norm_ok && e.half_sum_in_lattice && e.half_class_in_lattice.value_or(true);
      s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(e.genus) + "," +
           std::to_string(e.rationals.size()) + (ok ? ")" : ")!");
    }
    return s;
  };
  col.guarded("alternative even sets (6,1)", "(2,5) (1,4)", "alternative even sets", [&] { return summary(6, 1); });
  col.guarded("alternative even sets (12,1)", "(8,11) (2,5) (1,4)", "alternative even sets", [&] { return summary(12, 1); });
  col.guarded("alternative even sets (13,2)", "(9,12) (2,5) (1,4) (5,8)", "alternative even sets",
              [&] { return summary(13, 2); });

  // Stated values that disagree with what the definitions give.
  {
    const std::set<int> stated{1, 2, 4, 6, 8, 16};
    std::vector<int> undefined;
    for (int r : stated) {
      bool any = false;
      for (int n = 6; n <= 17; ++n) any = any || ln_defined(n, r);
      if (!any) undefined.push_back(r);
    }
    for (int r : undefined)
      report.warnings.push_back("candidate list is stated for r = 1,2,4,6,8,16 but L_n^(" + std::to_string(r) +
                                ") is never defined; r = " + std::to_string(r) + " is treated as a typo");
  }
  {
    const Classification c = classify_branch({{5}});
    const auto& rep = std::get<CoverReport>(c);
    if (rep.printed_X && (rep.printed_X->pg != rep.X.pg || rep.printed_X->q != rep.X.q))
      report.warnings.push_back("n = 1: stated h^{1,0} = 3h, h^{2,0} = 3 + 4h disagree with q = 0, p_g = 3 + h from "
                                "h^0(L) = 2 + h; both are reported");
  }
  {
    int first_fail = 0;
    for (int n = 6; n <= 22 && !first_fail; ++n)
      if (n - 2 > std::min(n, 22 - n)) first_fail = n;
    const int stated_first = 14;  // "if n > 13"
    if (first_fail != stated_first)
      report.warnings.push_back("L_n^(1) is stated to be excluded for n > 13, but the length bound n - 2 <= min(n, 22 - n) "
                                "already fails at n = " + std::to_string(first_fail));
  }
  return report;
}

}  // namespace k3cover
