#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "k3cover/errors.hpp"
#include "k3cover/lattice.hpp"

using namespace k3cover;

namespace {

IntMatrix minus_two(std::size_t m) {
  IntMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) g(i, i) = -2;
  return g;
}

const IntMatrix kU{{0, 1}, {1, 0}};
const IntMatrix kA2{{2, -1}, {-1, 2}};
const IntMatrix kD4neg{{-2, 0, 1, 0}, {0, -2, 1, 0}, {1, 1, -2, 1}, {0, 0, 1, -2}};

IntMatrix e8_negative() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  auto bond = [&](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = 1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) bond(i, i + 1);
  bond(2, 7);
  return g;
}

// Element of L*/L written in basis coordinates, reduced to a canonical
// representative: L*/L is a quotient of G^{-1} Z^n, and x ~ y iff x - y is
// integral, so reducing each coordinate mod 1 picks the representative.
std::vector<std::string> canonical(const RatVector& x) {
  std::vector<std::string> key;
  for (const auto& q : x) key.push_back(to_string(reduce_mod(q, 1)));
  return key;
}

// Brute-force check that the generators span a group of order |det| with the
// stated orders, that every generator lies in L*, and that q matches x.x.
void check_group_by_enumeration(const Lattice& l) {
  const DiscriminantGroup g = discriminant_group(l);
  CHECK(g.order() == abs(l.det()));
  std::set<std::vector<std::string>> seen;
  std::vector<std::size_t> counter(g.length(), 0);
  for (;;) {
    RatVector x(l.rank(), Rational(0));
    for (std::size_t i = 0; i < g.length(); ++i)
      for (std::size_t k = 0; k < l.rank(); ++k) x[k] += Rational(static_cast<long>(counter[i])) * g.generators[i][k];
    seen.insert(canonical(x));
    std::size_t i = 0;
    while (i < g.length() && ++counter[i] == g.elementary_divisors[i].get_ui()) counter[i++] = 0;
    if (i == g.length()) break;
  }
  CHECK(Integer(seen.size()) == g.order());
  for (std::size_t i = 0; i < g.length(); ++i) {
    const RatVector gx = mat_vec(l.gram(), g.generators[i]);
    CHECK(is_integral(gx));
    RatVector multiple = g.generators[i];
    for (auto& q : multiple) q *= Rational(g.elementary_divisors[i]);
    CHECK(is_integral(multiple));
    CHECK(g.qvalues[i] == reduce_mod(bilinear(l.gram(), g.generators[i], g.generators[i]), 2));
  }
}

}  // namespace

TEST_CASE("basic invariants of standard lattices") {
  const Lattice u = from_gram(kU);
  CHECK(u.det() == -1);
  CHECK(u.is_even());
  CHECK(u.signature() == Inertia{1, 1, 0});
  CHECK(length(u) == 0);

  const Lattice e8 = from_gram(e8_negative());
  CHECK(e8.det() == 1);
  CHECK(e8.signature() == Inertia{0, 8, 0});
  CHECK(discriminant_group(e8).order() == 1);

  const Lattice a2 = from_gram(kA2);
  const DiscriminantGroup g = discriminant_group(a2);
  CHECK(g.elementary_divisors == IntVector{3});
  CHECK((g.qvalues[0] == Rational(2, 3) || g.qvalues[0] == Rational(8, 3) - 2));
  CHECK(g.pairings[0][0] == reduce_mod(g.qvalues[0], 1));

  const Lattice d4 = from_gram(kD4neg);
  CHECK(d4.det() == 4);
  CHECK(discriminant_group(d4).elementary_divisors == IntVector{2, 2});
  CHECK(two_elementary_invariants(d4) == TwoElementaryInvariants{4, 2, 0});
}

TEST_CASE("odd and degenerate lattices") {
  const Lattice odd = from_gram(IntMatrix{{1, 0}, {0, -1}});
  CHECK_FALSE(odd.is_even());
  const Lattice deg = from_gram(IntMatrix{{2, 2}, {2, 2}});
  CHECK(deg.is_degenerate());
  CHECK(deg.signature() == Inertia{1, 0, 1});
  CHECK_THROWS_AS(discriminant(deg), DegenerateLatticeError);
  CHECK_THROWS_AS(discriminant_group(deg), DegenerateLatticeError);
  CHECK_THROWS_AS(from_gram(IntMatrix{{0, 1}, {2, 0}}), ShapeError);
}

TEST_CASE("direct sums and rescaling") {
  const Lattice s = direct_sum(from_gram(kU), from_gram(kA2));
  CHECK(s.rank() == 4);
  CHECK(s.det() == -3);
  CHECK(s.signature() == Inertia{3, 1, 0});

  const Lattice u2 = rescale(from_gram(kU), 2);
  CHECK(u2.det() == -4);
  CHECK(two_elementary_invariants(u2) == TwoElementaryInvariants{2, 2, 0});
  CHECK(splits_u2_form(discriminant_group(u2)));
  CHECK_THROWS_AS(rescale(from_gram(kU), 0), InvalidInputError);

  const Lattice mixed = from_gram(IntMatrix{{2, 0}, {0, -2}});
  CHECK(two_elementary_invariants(mixed) == TwoElementaryInvariants{2, 2, 1});
  CHECK_FALSE(splits_u2_form(discriminant_group(mixed)));
  CHECK_FALSE(splits_u2_form(discriminant_group(from_gram(kD4neg))));
  CHECK(splits_u2_form(discriminant_group(direct_sum(u2, from_gram(kD4neg)))));
  CHECK_FALSE(two_elementary_invariants(from_gram(kA2)).has_value());
}

TEST_CASE("gluing by half vectors") {
  const Lattice base = from_gram(minus_two(4));
  const GlueResult d4 = glue_overlattice(base, {RatVector(4, Rational(1, 2))});
  CHECK(d4.index == 2);
  CHECK(d4.lattice.det() == 4);
  CHECK(discriminant_group(d4.lattice).elementary_divisors == discriminant_group(from_gram(kD4neg)).elementary_divisors);
  CHECK(d4.lattice.is_even());

  const GlueResult m8 = glue_overlattice_root(from_gram(minus_two(8)), {RatVector(8, Rational(1, 2))});
  CHECK(m8.index == 2);
  CHECK(m8.lattice.det() == 64);
  CHECK(m8.lattice.rank() == 8);
  check_group_by_enumeration(m8.lattice);
}

TEST_CASE("invalid glue is rejected") {
  const Lattice base = from_gram(minus_two(4));
  RatVector odd_norm{Rational(1, 2), Rational(1, 2), 0, 0};
  CHECK(glue_defect(base, odd_norm).has_value());
  CHECK_THROWS_AS(glue_overlattice(base, {odd_norm}), InvalidGlueError);

  RatVector fractional_pairing{Rational(1, 4), 0, 0, 0};
  CHECK_THROWS_AS(glue_overlattice(base, {fractional_pairing}), InvalidGlueError);

  RatVector inside{1, 0, 0, 0};
  CHECK_THROWS_AS(glue_overlattice(base, {inside}), InvalidGlueError);

  CHECK_THROWS_AS(glue_overlattice(base, {RatVector(3, Rational(1, 2))}), InvalidGlueError);
  CHECK_FALSE(glue_defect(base, RatVector(4, Rational(1, 2))).has_value());
}

TEST_CASE("coordinates round-trip through the root presentation") {
  const GlueResult g = glue_overlattice_root(from_gram(minus_two(8)), {RatVector(8, Rational(1, 2))});
  const Lattice& l = g.lattice;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    RatVector e(l.rank(), Rational(0));
    e[i] = 1;
    CHECK(l.from_root(l.to_root(e)) == e);
    CHECK(l.pair(e, e) == Rational(l.gram()(i, i)));
  }
}

TEST_CASE("discriminant groups of random even lattices match enumeration") {
  std::mt19937_64 rng(99);
  int tested = 0;
  while (tested < 60) {
    const std::size_t n = 1 + rng() % 4;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = 2 * (static_cast<long>(rng() % 7) - 3);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = static_cast<long>(rng() % 5) - 2;
    }
    const Lattice l = from_gram(g);
    if (l.is_degenerate() || abs(l.det()) > 400) continue;
    ++tested;
    CHECK(l.is_even());
    check_group_by_enumeration(l);
    const Inertia s = l.signature();
    CHECK(s.positive + s.negative == n);
  }
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(Rational(-1, 2), 2) == Rational(3, 2));
  CHECK(reduce_mod(Rational(7, 3), 1) == Rational(1, 3));
  CHECK(reduce_mod(Rational(4), 2) == 0);
}
