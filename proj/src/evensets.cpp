#include "k3cover/evensets.hpp"

#include <algorithm>
#include <bit>

#include "k3cover/errors.hpp"

namespace k3cover {

Word word_of(std::initializer_list<int> positions) {
  Word w = 0;
  for (int p : positions) w |= Word{1} << (p - 1);
  return w;
}

std::vector<int> positions_of(Word w) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (w >> i & 1) out.push_back(i + 1);
  return out;
}

int weight(Word w) { return std::popcount(w); }

std::size_t BinaryCode::dimension() const {
  // Gaussian elimination on the leading bit.
  std::vector<Word> basis;
  for (Word g : generators) {
    for (Word b : basis) g = std::min(g, g ^ b);
    if (g) {
      basis.push_back(g);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return basis.size();
}

std::vector<Word> codewords(const BinaryCode& code) {
  const Word allowed = code.m >= 32 ? ~Word{0} : (Word{1} << code.m) - 1;
  for (Word g : code.generators)
    if (g & ~allowed) throw InvalidInputError("generator has bits beyond the code length");
  if (code.dimension() > 20) throw ResourceError("code dimension above 20");

  std::vector<Word> words{0};
  for (Word g : code.generators) {
    if (std::find(words.begin(), words.end(), g) != words.end()) continue;
    const std::size_t n = words.size();
    for (std::size_t i = 0; i < n; ++i) words.push_back(words[i] ^ g);
  }
  std::sort(words.begin(), words.end());
  return words;
}

EvenSetVerdict validate_even_code(const BinaryCode& code) {
  EvenSetVerdict v;
  const std::vector<Word> words = codewords(code);
  std::vector<Word> eights;
  for (Word w : words) {
    if (w == 0) continue;
    const int wt = weight(w);
    if (wt == 8) eights.push_back(w);
    if (wt != 8 && wt != 16)
      v.violations.push_back({w, 0, "weight " + std::to_string(wt) + " is neither 8 nor 16"});
  }
  for (std::size_t i = 0; i < eights.size(); ++i)
    for (std::size_t j = i + 1; j < eights.size(); ++j) {
      const int meet = weight(eights[i] & eights[j]);
      if (meet != 0 && meet != 4)
        v.violations.push_back(
            {eights[i], eights[j], "weight-8 words share " + std::to_string(meet) + " positions"});
    }
  v.valid = v.violations.empty();
  return v;
}

BinaryCode code_of(EvenSetId id) {
  const Word a = word_of({1, 2, 3, 4, 5, 6, 7, 8});
  const Word b = word_of({5, 6, 7, 8, 9, 10, 11, 12});
  const Word c = word_of({1, 2, 5, 6, 9, 10, 13, 14});
  const Word d = word_of({1, 3, 5, 7, 9, 11, 13, 15});
  switch (id) {
    case EvenSetId::M1:
      return {8, {a}};
    case EvenSetId::M2:
      return {12, {a, b}};
    case EvenSetId::M3:
      return {14, {a, b, c}};
    case EvenSetId::M4:
      return {15, {a, b, c, d}};
    case EvenSetId::Kummer:
      return {16, {a, b, c, d, 0xFFFFu}};
  }
  throw InvalidInputError("unknown even-set lattice");
}

std::string to_string(EvenSetId id) {
  switch (id) {
    case EvenSetId::M1:
      return "M_2e1";
    case EvenSetId::M2:
      return "M_2e2";
    case EvenSetId::M3:
      return "M_2e3";
    case EvenSetId::M4:
      return "M_2e4";
    case EvenSetId::Kummer:
      return "K";
  }
  return "?";
}

EvenSetId parse_even_set_id(const std::string& text) {
  for (EvenSetId id : {EvenSetId::M1, EvenSetId::M2, EvenSetId::M3, EvenSetId::M4, EvenSetId::Kummer})
    if (to_string(id) == text) return id;
  throw InvalidInputError("unknown even-set lattice '" + text + "'");
}

std::vector<PrimitiveOption> minimal_primitive_options(std::size_t m) {
  if (m == 0) throw DomainError("an even set needs at least one curve");
  auto minus_two = [](std::size_t k) { return "<-2>^" + std::to_string(k); };
  auto widen = [m](BinaryCode c) {
    c.m = m;
    return c;
  };
  std::vector<PrimitiveOption> out;
  if (m <= 11) out.push_back({minus_two(m), BinaryCode{m, {}}});
  if (m >= 8 && m <= 12) {
    std::string name = "M_2e1";
    if (m > 8) name += "+" + minus_two(m - 8);
    out.push_back({name, widen(code_of(EvenSetId::M1))});
  }
  if (m >= 12 && m <= 13) {
    std::string name = "M_2e2";
    if (m > 12) name += "+" + minus_two(m - 12);
    out.push_back({name, widen(code_of(EvenSetId::M2))});
  }
  if (m == 14) out.push_back({"M_2e3", code_of(EvenSetId::M3)});
  if (m == 15) out.push_back({"M_2e4", code_of(EvenSetId::M4)});
  if (m == 16) out.push_back({"K", code_of(EvenSetId::Kummer)});
  return out;
}

std::map<int, std::size_t> weight_distribution(const BinaryCode& code) {
  std::map<int, std::size_t> dist;
  for (Word w : codewords(code)) ++dist[weight(w)];
  return dist;
}

bool equivalent_even_codes(const BinaryCode& a, const BinaryCode& b) {
  if (!validate_even_code(a).valid || !validate_even_code(b).valid)
    throw DomainError("equivalence test is only complete for valid even codes");
  return a.m == b.m && weight_distribution(a) == weight_distribution(b);
}

}  // namespace k3cover
