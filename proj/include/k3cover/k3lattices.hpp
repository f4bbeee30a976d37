#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cover/evensets.hpp"
#include "k3cover/lattice.hpp"

namespace k3cover {

struct LnId {
  int n = 0;
  int r = 1;

  friend bool operator==(const LnId&, const LnId&) = default;
  friend auto operator<=>(const LnId&, const LnId&) = default;
};

std::string to_string(const LnId& id);

struct CandidateList {
  int n = 0;
  std::vector<LnId> entries;
  // Surviving lattices that are not of the form L_n^(r); empty when the
  // derivation agrees with the closed list.
  std::vector<std::string> unmatched;
  // Human-readable trace of the derivation (empty for ns_candidates).
  std::vector<std::string> notes;

  bool same_lattices(const CandidateList& other) const {
    return n == other.n && entries == other.entries && unmatched == other.unmatched;
  }
};

enum class Verdict { Embeddable, NotEmbeddable, Undetermined };
std::string to_string(Verdict v);

struct EmbeddingStatus {
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
};

enum class StandardId { U, U2, D4, RankOne };

struct FixedLocus {
  // Genus of the non-rational component, absent when there is none.
  std::optional<int> genus;
  int rational_curves = 0;
  int elliptic_curves = 0;
  std::string note;
};

bool ln_defined(int n, int r);
// Basis (d, r1, ..., r_{n-1}), glued cumulatively for r = 2, 4, 8, 16.
// Throws DomainError outside the definitional domain.
Lattice build_Ln(int n, int r);
// Glue words of L_n^(r) on the n - 1 positions r1..r_{n-1}.
BinaryCode ln_code(int n, int r);

Lattice build_minus_two(std::size_t m);
Lattice build_even_set_lattice(EvenSetId id);
// <-2>^m glued by the code's words halved.
Lattice build_code_lattice(const BinaryCode& code);
// twod is used only for RankOne and must be nonzero.
Lattice build_standard(StandardId id, const Integer& twod = 0);

// Ids: L_<n>_<r>, M_2e1..M_2e4, K, U, U2, D4, R2d:<2d>, A1:<m> for <-2>^m,
// and direct sums joined by '+'. Throws InvalidInputError for unknown ids
// and DomainError for out-of-range parameters.
Lattice named_lattice(const std::string& id);

CandidateList ns_candidates(int n);
// Throws DomainError outside 6 <= n <= 17.
CandidateList derive_candidate_list(int n);

// Throws DomainError unless l is even with signature (1, rank - 1).
EmbeddingStatus embedding_status(const Lattice& l);

// 2-elementary invariants recorded as not occurring as a Neron-Severi
// lattice of a K3 surface.
bool excluded_two_elementary(const TwoElementaryInvariants& inv);

FixedLocus fixed_locus_nonsymplectic(const TwoElementaryInvariants& inv);

}  // namespace k3cover
