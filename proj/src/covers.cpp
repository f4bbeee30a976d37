#include "k3cover/covers.hpp"

#include <algorithm>

#include "k3cover/errors.hpp"
#include "k3cover/k3lattices.hpp"

namespace k3cover {

namespace {

constexpr long kMaxGenus = 1000000;

SurfaceInvariants unconditional(long L2) {
  SurfaceInvariants x;
  x.chi = 4 + L2 / 2;
  x.c1sq = 2 * L2;
  x.c2 = 48 + 4 * L2;
  return x;
}

// Contracting e disjoint (-1)-curves raises c1^2 and lowers c2 by e.
MinimalInvariants contract(const SurfaceInvariants& x, long e) { return {x.chi, x.c1sq + e, x.c2 - e}; }

Inadmissible reject(InadmissibleReason r, std::string text) { return {r, std::move(text)}; }

std::string ls(long v) { return std::to_string(v); }

int odd_components(const std::vector<int>& mult) {
  return static_cast<int>(std::count_if(mult.begin(), mult.end(), [](int v) { return v % 2 != 0; }));
}

}  // namespace

std::string to_string(CoverCase c) {
  switch (c) {
    case CoverCase::GenusZero:
      return "GenusZero";
    case CoverCase::GenusOne:
      return "GenusOne";
    case CoverCase::GeneralType:
      return "GeneralType";
  }
  return "?";
}

std::string to_string(InadmissibleReason r) {
  switch (r) {
    case InadmissibleReason::Congruence:
      return "congruence";
    case InadmissibleReason::Bound:
      return "bound";
    case InadmissibleReason::Parity:
      return "parity";
    case InadmissibleReason::GenusZeroCount:
      return "genus-zero-count";
    case InadmissibleReason::Genus:
      return "genus";
  }
  return "?";
}

SurfaceInvariants invariants_of_X(long L2, long h0) {
  if (L2 % 2 != 0) throw InvalidInputError("L^2 must be even");
  if (h0 < 0) throw InvalidInputError("h^0(L) must be non-negative");
  SurfaceInvariants x = unconditional(L2);
  x.pg = 1 + h0;
  x.q = -2 - L2 / 2 + h0;
  return x;
}

std::variant<BranchPoints, Inadmissible> genus1_branch_points(long n, long k) {
  if (k < 1 || n < k) throw DomainError("need k >= 1 genus-1 curves and n >= k");
  const long rational = n - k;
  if (rational % 4 != 0)
    return reject(InadmissibleReason::Congruence, "n - k = " + ls(rational) + " is not divisible by 4");
  if (rational / 4 > 4)
    return reject(InadmissibleReason::Bound, "(n - k)/4 = " + ls(rational / 4) + " exceeds 4 unstable fibers");
  const long b = k + rational / 4;
  if (b % 2 != 0) return reject(InadmissibleReason::Parity, "b = k + (n - k)/4 = " + ls(b) + " is odd");
  return BranchPoints{b, b / 2 - 1};
}

Classification classify_branch(const BranchConfig& cfg) {
  if (cfg.genera.empty()) throw InvalidInputError("at least one branch curve is needed");
  for (long g : cfg.genera)
    if (g < 0 || g > kMaxGenus) throw InvalidInputError("genus out of range: " + ls(g));
  const long n = static_cast<long>(cfg.n());
  const long gC = *std::max_element(cfg.genera.begin(), cfg.genera.end());
  const long k = std::count(cfg.genera.begin(), cfg.genera.end(), 1L);

  CoverReport rep;
  rep.n = n;
  rep.gC = gC;
  rep.k = k;

  if (gC == 0) {
    if (n != 8 && n != 16)
      return reject(InadmissibleReason::GenusZeroCount, "all curves rational needs n = 8 or n = 16, got " + ls(n));
    rep.kind = CoverCase::GenusZero;
    rep.L2 = -n / 2;
    // L = (sum R_i)/2 has L.R_i = -1 < 0, so it has no sections.
    rep.h0 = 0;
    rep.X = invariants_of_X(rep.L2, 0);
    rep.Xmin = contract(rep.X, n);
    rep.minimal_model = n == 8 ? "K3" : "Abelian";
    rep.kodaira = "0 (" + rep.minimal_model + ")";
    rep.notes.push_back("minimal model obtained by contracting " + ls(n) + " (-1)-curves");
    return rep;
  }

  if (gC == 1) {
    auto bp = genus1_branch_points(n, k);
    if (auto* bad = std::get_if<Inadmissible>(&bp)) return *bad;
    const auto [b, gA] = std::get<BranchPoints>(bp);
    rep.kind = CoverCase::GenusOne;
    rep.L2 = (k - n) / 2;
    rep.b = b;
    rep.gA = gA;
    rep.X = unconditional(rep.L2);
    if (n == k) {
      rep.h0 = 1 + k / 2;
      rep.notes.push_back("all branch curves are fibers: L = (k/2)F, h^1(L) = k/2, h^0(L) = 1 + k/2");
    } else if ((n == 5 && k == 1) || (n == 10 && k == 2)) {
      rep.h0 = 1;
      rep.notes.push_back("h^0(L) = 1 for this configuration");
    } else {
      rep.notes.push_back("h^0(L) not determined by the branch data; p_g and q omitted");
    }
    if (rep.h0) rep.X = invariants_of_X(rep.L2, *rep.h0);
    rep.Xmin = contract(rep.X, n - k);
    rep.minimal_model = "elliptic over a curve of genus " + ls(gA);
    // Kodaira dimension 0 would force c2(Xmin) in {0, 12, 24}; each is ruled
    // out by the genus of the base curve.
    bool kodaira_one = true;
    const long c2 = rep.Xmin.c2;
    if (c2 == 0) {
      kodaira_one = gA >= 2;
      rep.notes.push_back("c2(Xmin) = 0 needs n - k = 16, then b = " + ls(b) + " and g(A) = " + ls(gA) +
                          " >= 2, not Kodaira dimension 0");
    } else if (c2 == 24) {
      kodaira_one = gA >= 1;
      rep.notes.push_back("c2(Xmin) = 24 needs n - k = 8, then b = " + ls(b) + " and g(A) = " + ls(gA) +
                          " >= 1, not a K3 fibration");
    } else if (c2 == 12) {
      kodaira_one = gA >= 1;
      rep.notes.push_back("c2(Xmin) = 12 needs n - k = 12, then b = " + ls(b) + " and g(A) = " + ls(gA) +
                          " >= 1, not an Enriques fibration");
    }
    rep.kodaira = kodaira_one ? "1" : "undetermined";
    return rep;
  }

  for (long g : cfg.genera)
    if (g != gC && g != 0)
      return reject(InadmissibleReason::Genus,
                    "g(C) = " + ls(gC) + " > 1 needs every other curve rational, found genus " + ls(g));
  if (std::count(cfg.genera.begin(), cfg.genera.end(), gC) > 1)
    return reject(InadmissibleReason::Genus,
                  "g(C) = " + ls(gC) + " > 1 needs every other curve rational, found genus " + ls(gC));
  if (n > 17) return reject(InadmissibleReason::Bound, "at most 16 disjoint rational curves, so n <= 17; got " + ls(n));
  if ((gC - n) % 4 != 0)
    return reject(InadmissibleReason::Congruence, "g(C) - n = " + ls(gC - n) + " is not divisible by 4");
  const long h = (gC - n) / 4;
  if (h < -3) return reject(InadmissibleReason::Bound, "h = " + ls(h) + " < -3");

  rep.kind = CoverCase::GeneralType;
  rep.h = h;
  rep.L2 = 2 * h;
  rep.X = unconditional(rep.L2);
  if (h == -1) {
    rep.h0 = 1;
    rep.notes.push_back("L^2 = -2 and L.C > 0, so L is effective with h^0(L) = 1");
  } else if (n == 1) {
    rep.h0 = 2 + h;
    rep.notes.push_back("L = D ample with D^2 = 2h, so h^0(L) = 2 + h by Riemann-Roch");
    SurfaceInvariants printed = unconditional(rep.L2);
    printed.q = 3 * h;
    printed.pg = 3 + 4 * h;
    rep.printed_X = printed;
    rep.notes.push_back("discrepancy: alternative values q = 3h = " + ls(3 * h) + ", p_g = 3 + 4h = " +
                        ls(3 + 4 * h) + " are recorded alongside the Riemann-Roch values");
  } else {
    rep.notes.push_back("h^0(L) not determined by the branch data; p_g and q omitted");
  }
  if (rep.h0) rep.X = invariants_of_X(rep.L2, *rep.h0);
  rep.Xmin = contract(rep.X, n - 1);
  rep.minimal_model = "general type";
  rep.kodaira = "2";
  return rep;
}

KodairaFiberType i_m_star(int m) {
  if (m < 0) throw DomainError("I_m^* needs m >= 0");
  KodairaFiberType f;
  f.name = "I" + std::to_string(m) + "*";
  f.multiplicities = {1, 1, 1, 1};
  f.multiplicities.insert(f.multiplicities.end(), static_cast<std::size_t>(m + 1), 2);
  f.euler = 6 + m;
  f.odd_mult_components = odd_components(f.multiplicities);
  return f;
}

std::vector<KodairaFiberType> unstable_fiber_types(int max_m) {
  std::vector<KodairaFiberType> out;
  for (int m = 0; m <= max_m; ++m) out.push_back(i_m_star(m));
  out.push_back({"IV*", {1, 1, 1, 2, 2, 2, 3}, 8, 0});
  out.push_back({"III*", {1, 1, 2, 2, 2, 3, 3, 4}, 9, 0});
  out.push_back({"II*", {1, 2, 2, 3, 3, 4, 4, 5, 6}, 10, 0});
  for (auto& f : out) f.odd_mult_components = odd_components(f.multiplicities);
  return out;
}

ExistenceVerdict existence(long n, long h) {
  if (n != 1 && n != 16 && n != 17) throw DomainError("existence is only settled for n = 1, 16, 17");
  if (h < -3) throw DomainError("h must be at least -3");
  if (n + 4 * h < 2) throw DomainError("g(C) = n + 4h must be at least 2");
  ExistenceVerdict v;
  if (n == 17) {
    // C/2 is orthogonal to the Kummer lattice, whose complement is NS(A)(2).
    const long half_sq = 8 + 2 * h;
    v.exists = half_sq % 4 == 0;
    v.construction = v.exists ? "Kummer surface of an abelian surface with a polarization of degree " + ls(4 + h)
                              : "(C/2)^2 = " + ls(half_sq) + " is not divisible by 4";
    return v;
  }
  if (n == 16) {
    const long d = 15 + 4 * h;
    v.d = d;
    if (((d % 4) + 4) % 4 != 3) throw Error("d = 15 + 4h is not 3 mod 4");
    // <2d> + M_{(Z/2)^4} glued by (C + sum R_i)/2.
    const Lattice base = direct_sum(build_standard(StandardId::RankOne, Integer(2 * d)),
                                    build_even_set_lattice(EvenSetId::M4));
    RatVector glue(base.root_gram().rows(), Rational(1, 2));
    const GlueResult g = glue_overlattice_root(base, {glue});
    v.exists = true;
    v.construction = "index-" + g.index.get_str() + " overlattice of <" + ls(2 * d) +
                     "> + M_2e4 by (C + sum R_i)/2, d = " + ls(d) + " = 3 mod 4";
    return v;
  }
  v.exists = true;
  v.construction = "NS = Z D with D^2 = " + ls(2 * h) + ", C in |2D|";
  return v;
}

long bidouble_pg(long d1, long d2, long d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1) throw DomainError("branch degrees must be positive");
  const long pairs[3] = {d2 + d3, d1 + d3, d1 + d2};
  long pg = 0;
  for (long s : pairs) {
    if (s % 2 != 0) throw InvalidInputError("L_i = (d_j + d_k)/2 is not integral");
    const long L = s / 2;
    // h^0 of plane curves of degree L - 3.
    if (L >= 3) pg += (L - 1) * (L - 2) / 2;
  }
  return pg;
}

long projection_residual(long n) {
  if (n <= 6) throw DomainError("projection needs n > 6");
  return (2 * n - 10) - 2 * (n - 6);
}

std::vector<EvenSetDescriptor> alternative_even_sets(int n, int r) {
  const auto list = ns_candidates(n);
  if (std::find(list.entries.begin(), list.entries.end(), LnId{n, r}) == list.entries.end())
    throw DomainError("(" + std::to_string(n) + ", " + std::to_string(r) + ") is not a candidate lattice");
  const Lattice lat = build_Ln(n, r);
  const auto rank = static_cast<std::size_t>(n);
  const IntMatrix& g = lat.root_gram();
  RatVector c(rank, Rational(1));
  c[0] = 2;
  auto r_vec = [&](int i) {
    RatVector v(rank, Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto in_lattice = [&](const RatVector& v) { return is_integral(lat.from_root(v)); };

  std::vector<EvenSetDescriptor> out;
  auto add = [&](long genus, RatVector cls, std::vector<int> rats, std::string expr) {
    for (const auto& e : out)
      if (e.genus == genus && e.rationals.size() == rats.size()) return;
    EvenSetDescriptor e;
    e.genus = genus;
    e.expression = std::move(expr);
    e.class_norm_ok = bilinear(g, cls, cls) == 2 * genus - 2;
    RatVector sum = cls;
    for (int i : rats) {
      const RatVector ri = r_vec(i);
      if (bilinear(g, cls, ri) != 0) e.class_norm_ok = false;
      for (std::size_t j = 0; j < rank; ++j) sum[j] += ri[j];
    }
    for (auto& v : sum) v /= 2;
    e.half_sum_in_lattice = in_lattice(sum);
    e.curve_class = std::move(cls);
    e.rationals = std::move(rats);
    out.push_back(std::move(e));
  };
  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  };

  add(n - 4, c, range(1, n - 1), "c");

  RatVector m = c;
  for (int i = 1; i <= n - 6; ++i) m[static_cast<std::size_t>(i)] -= 1;
  add(2, m, range(n - 5, n - 1), n > 6 ? "c - (r1 + ... + r" + std::to_string(n - 6) + ")" : "c");

  RatVector e = m;
  e[static_cast<std::size_t>(n - 1)] -= 1;
  add(1, e, range(n - 5, n - 2), (n > 6 ? "c - (r1 + ... + r" + std::to_string(n - 6) + ")" : "c") + " - r" +
                                     std::to_string(n - 1));

  if (r >= 2) {
    RatVector m5 = c;
    for (int j = 9; j <= n - 1; ++j) m5[static_cast<std::size_t>(j)] -= 1;
    add(5, m5, range(1, 8), n > 9 ? "c - (r9 + ... + r" + std::to_string(n - 1) + ")" : "c");
    auto it = std::find_if(out.begin(), out.end(), [](const EvenSetDescriptor& d) { return d.genus == 5 && d.rationals.size() == 8; });
    if (it != out.end()) {
      RatVector half = m5;
      for (auto& v : half) v /= 2;
      it->half_class_in_lattice = in_lattice(half);
    }
  }
  return out;
}

}  // namespace k3cover
