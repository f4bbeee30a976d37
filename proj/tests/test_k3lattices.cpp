#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3cover/errors.hpp"
#include "k3cover/k3lattices.hpp"

using namespace k3cover;

namespace {

// Root Gram written out directly: d^2 = r_i^2 = -2, d.r_i = 1, r_i.r_j = 0.
IntMatrix ln_root_gram(int n) {
  IntMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (int i = 1; i < n; ++i) g(0, i) = g(i, 0) = 1;
  return g;
}

Integer closed_form_det(int n, int r) {
  int k = 0;
  while ((1 << k) < r) ++k;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 - 2 * k));
  Integer d = p * (n - 5);
  return (n - 1) % 2 ? Integer(-d) : d;
}

const std::vector<LnId> kFamily{{6, 1},  {7, 1},  {8, 1},  {9, 1},  {9, 2},  {10, 1}, {10, 2},  {11, 1},
                                {11, 2}, {12, 1}, {12, 2}, {13, 2}, {13, 4}, {14, 4}, {15, 8}, {16, 16}};

}  // namespace

TEST_CASE("closed candidate lists") {
  std::vector<LnId> all;
  for (int n = 6; n <= 17; ++n)
    for (const auto& id : ns_candidates(n).entries) all.push_back(id);
  CHECK(all == kFamily);
  CHECK(ns_candidates(17).entries.empty());
}

TEST_CASE("L_n^(r) Gram, determinant, evenness and signature") {
  for (const auto& id : kFamily) {
    CAPTURE(to_string(id));
    const Lattice l = build_Ln(id.n, id.r);
    CHECK(l.root_gram() == ln_root_gram(id.n));
    CHECK(l.rank() == static_cast<std::size_t>(id.n));
    CHECK(l.is_even());
    CHECK(l.signature() == Inertia{1, static_cast<std::size_t>(id.n - 1), 0});
    CHECK(l.det() == closed_form_det(id.n, id.r));
    CHECK(determinant(l.gram()) == l.det());
    CHECK(l.name() == to_string(id));
    CHECK((1 << ln_code(id.n, id.r).dimension()) == id.r);
  }
  CHECK_THROWS_AS(build_Ln(6, 2), DomainError);
  CHECK_FALSE(ln_defined(9, 6));
}

TEST_CASE("special discriminant group at (9,2)") {
  CHECK(discriminant_group(build_Ln(9, 2)).elementary_divisors == IntVector(7, Integer(2)));
  CHECK(two_elementary_invariants(build_Ln(9, 2)) == TwoElementaryInvariants{9, 7, 1});
}

TEST_CASE("derived candidate lists agree with the closed lists for small n") {
  for (int n = 6; n <= 12; ++n) {
    CAPTURE(n);
    const CandidateList derived = derive_candidate_list(n);
    CHECK(derived.same_lattices(ns_candidates(n)));
    CHECK(derived.unmatched.empty());
  }
  CHECK_THROWS_AS(derive_candidate_list(5), DomainError);
  CHECK_THROWS_AS(derive_candidate_list(18), DomainError);
}

TEST_CASE("embedding verdicts") {
  CHECK(embedding_status(build_Ln(13, 1)).verdict == Verdict::NotEmbeddable);
  CHECK(embedding_status(build_Ln(10, 1)).verdict == Verdict::Embeddable);
  CHECK(embedding_status(build_Ln(12, 1)).verdict == Verdict::Embeddable);
  CHECK(embedding_status(named_lattice("R2d:6+K")).verdict == Verdict::NotEmbeddable);
  CHECK(length(named_lattice("R2d:6+K")) == 7);
  CHECK_THROWS_AS(embedding_status(build_standard(StandardId::D4)), DomainError);
}

TEST_CASE("named lattices") {
  CHECK(named_lattice("U").det() == -1);
  CHECK(named_lattice("U2").det() == -4);
  CHECK(named_lattice("D4").det() == 4);
  CHECK(named_lattice("A1:3").det() == -8);
  CHECK(named_lattice("R2d:4").det() == 4);
  CHECK(named_lattice("U+U").rank() == 4);
  CHECK(named_lattice("M_2e1").det() == 64);
  CHECK(named_lattice("M_2e4").rank() == 15);
  CHECK(named_lattice("K").det() == 64);
  CHECK(named_lattice("L_9_2").det() == 128);
  for (const char* bad : {"NO_SUCH", "L_x_1", "", "R2d:", "A1:0"})
    CHECK_THROWS_AS(named_lattice(bad), Error);
}

TEST_CASE("Kummer lattice has index 32 over <-2>^16") {
  const Lattice base = build_minus_two(16);
  const Lattice k = build_even_set_lattice(EvenSetId::Kummer);
  CHECK(base.det() / k.det() == 32 * 32);
  CHECK(k.is_even());
}

TEST_CASE("code lattices") {
  const Lattice m3 = build_code_lattice(code_of(EvenSetId::M3));
  CHECK(m3.det() == build_minus_two(14).det() / 64);
}

TEST_CASE("2-elementary data and fixed loci") {
  CHECK(two_elementary_invariants(build_Ln(6, 1)) == TwoElementaryInvariants{6, 4, 0});
  CHECK(excluded_two_elementary({14, 8, 0}));
  CHECK_FALSE(excluded_two_elementary({14, 8, 1}));
  const FixedLocus f = fixed_locus_nonsymplectic({6, 4, 1});
  CHECK(f.genus == 6);
  CHECK(f.rational_curves == 1);
  const FixedLocus e = fixed_locus_nonsymplectic({10, 8, 0});
  CHECK_FALSE(e.genus.has_value());
  CHECK(e.elliptic_curves == 2);
  CHECK_THROWS_AS(fixed_locus_nonsymplectic({10, 10, 0}), DomainError);
  CHECK_THROWS_AS(fixed_locus_nonsymplectic({9, 4, 1}), DomainError);
}
