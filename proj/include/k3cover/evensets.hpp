#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace k3cover {

// Bit i of a word is position i + 1.
using Word = std::uint32_t;

struct BinaryCode {
  std::size_t m = 0;
  std::vector<Word> generators;

  // Dimension of the span (generators may be dependent on input).
  std::size_t dimension() const;
};

enum class EvenSetId { M1, M2, M3, M4, Kummer };

struct EvenSetViolation {
  Word word = 0;
  Word other = 0;  // second word of a pair violation, 0 otherwise
  std::string rule;
};

struct EvenSetVerdict {
  bool valid = true;
  std::vector<EvenSetViolation> violations;
};

// A lattice from the minimal-primitive table: the code glued onto <-2>^m.
struct PrimitiveOption {
  std::string name;
  BinaryCode code;
};

Word word_of(std::initializer_list<int> positions);
std::vector<int> positions_of(Word w);
int weight(Word w);

// All 2^dim codewords, sorted. Throws ResourceError above dimension 20 and
// InvalidInputError if a generator has bits beyond position m.
std::vector<Word> codewords(const BinaryCode& code);

EvenSetVerdict validate_even_code(const BinaryCode& code);

// Options whose stated range contains m; overlapping ranges are kept.
// Throws DomainError for m == 0.
std::vector<PrimitiveOption> minimal_primitive_options(std::size_t m);

BinaryCode code_of(EvenSetId id);
std::string to_string(EvenSetId id);
// Accepts M_2e1..M_2e4 and K. Throws InvalidInputError otherwise.
EvenSetId parse_even_set_id(const std::string& text);

// weight -> count over all codewords.
std::map<int, std::size_t> weight_distribution(const BinaryCode& code);

// Two valid even codes of the same length are equivalent under a coordinate
// permutation iff their weight distributions agree: the weight function
// u -> wt(uG) is constant 8 off at most one weight-16 word, so any linear
// bijection matching that word matches all column incidences.
bool equivalent_even_codes(const BinaryCode& a, const BinaryCode& b);

}  // namespace k3cover
