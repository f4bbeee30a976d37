#include "k3cover/k3lattices.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "k3cover/errors.hpp"

namespace k3cover {

namespace {

const Word kGlue2 = word_of({1, 2, 3, 4, 5, 6, 7, 8});
const Word kGlue4 = word_of({5, 6, 7, 8, 9, 10, 11, 12});
const Word kGlue8 = word_of({1, 2, 5, 6, 9, 10, 13, 14});
const Word kGlue16 = word_of({1, 3, 5, 7, 9, 11, 13, 15});

int log2_exact(int r) {
  switch (r) {
    case 1:
      return 0;
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    case 16:
      return 4;
  }
  return -1;
}

// (sum of r_i over w) / 2 in root coordinates (d, r1, ...).
RatVector half_word(Word w, std::size_t rank, std::size_t offset) {
  RatVector v(rank, Rational(0));
  for (int p : positions_of(w)) v[offset + static_cast<std::size_t>(p) - 1] = Rational(1, 2);
  return v;
}

std::string describe(const BinaryCode& code) {
  std::ostringstream os;
  os << "dim " << code.dimension() << " weights {";
  bool first = true;
  for (const auto& [w, count] : weight_distribution(code)) {
    if (w == 0) continue;
    os << (first ? "" : ", ") << w << ":" << count;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string to_string(const LnId& id) { return "L_" + std::to_string(id.n) + "_" + std::to_string(id.r); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Embeddable:
      return "Embeddable";
    case Verdict::NotEmbeddable:
      return "NotEmbeddable";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "?";
}

bool ln_defined(int n, int r) {
  switch (r) {
    case 1:
      return n >= 6;
    case 2:
      return n >= 9;
    case 4:
      return n >= 13;
    case 8:
      return n >= 15;
    case 16:
      return n >= 16;
  }
  return false;
}

BinaryCode ln_code(int n, int r) {
  if (!ln_defined(n, r)) throw DomainError("L_" + std::to_string(n) + "^(" + std::to_string(r) + ") is not defined");
  BinaryCode code{static_cast<std::size_t>(n - 1), {}};
  const Word all[] = {kGlue2, kGlue4, kGlue8, kGlue16};
  for (int k = 0; k < log2_exact(r); ++k) code.generators.push_back(all[k]);
  return code;
}

Lattice build_Ln(int n, int r) {
  if (!ln_defined(n, r)) throw DomainError("L_" + std::to_string(n) + "^(" + std::to_string(r) + ") is not defined");
  const auto rank = static_cast<std::size_t>(n);
  IntMatrix g(rank, rank);
  std::vector<std::string> labels{"d"};
  g(0, 0) = -2;
  for (std::size_t i = 1; i < rank; ++i) {
    g(i, i) = -2;
    g(0, i) = 1;
    g(i, 0) = 1;
    labels.push_back("r" + std::to_string(i));
  }
  Lattice l = from_gram(g, labels);
  RatMatrix glue;
  for (Word w : ln_code(n, r).generators) glue.push_back(half_word(w, rank, 1));
  if (!glue.empty()) l = glue_overlattice_root(l, glue).lattice;
  l.set_name(to_string(LnId{n, r}));
  return l;
}

Lattice build_minus_two(std::size_t m) {
  IntMatrix g(m, m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    g(i, i) = -2;
    labels.push_back("R" + std::to_string(i + 1));
  }
  Lattice l = from_gram(g, labels);
  l.set_name("A1:" + std::to_string(m));
  return l;
}

Lattice build_code_lattice(const BinaryCode& code) {
  Lattice l = build_minus_two(code.m);
  RatMatrix glue;
  for (Word w : code.generators) glue.push_back(half_word(w, code.m, 0));
  if (!glue.empty()) l = glue_overlattice_root(l, glue).lattice;
  return l;
}

Lattice build_even_set_lattice(EvenSetId id) {
  Lattice l = build_code_lattice(code_of(id));
  l.set_name(to_string(id));
  return l;
}

Lattice build_standard(StandardId id, const Integer& twod) {
  switch (id) {
    case StandardId::U: {
      Lattice l = from_gram(IntMatrix{{0, 1}, {1, 0}}, {"e", "f"});
      l.set_name("U");
      return l;
    }
    case StandardId::U2: {
      Lattice l = rescale(build_standard(StandardId::U), 2);
      l.set_name("U2");
      return l;
    }
    case StandardId::D4: {
      Lattice l = from_gram(IntMatrix{{-2, 1, 0, 0}, {1, -2, 1, 1}, {0, 1, -2, 0}, {0, 1, 0, -2}},
                            {"a1", "a2", "a3", "a4"});
      l.set_name("D4");
      return l;
    }
    case StandardId::RankOne: {
      if (twod == 0) throw DomainError("rank-one lattice needs a nonzero norm");
      IntMatrix g(1, 1);
      g(0, 0) = twod;
      Lattice l = from_gram(g, {"h"});
      l.set_name("R2d:" + twod.get_str());
      return l;
    }
  }
  throw InvalidInputError("unknown standard lattice");
}

namespace {

int parse_int(const std::string& s, const std::string& id) {
  if (s.empty() || s.size() > 9) throw InvalidInputError("bad number in lattice id '" + id + "'");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw InvalidInputError("bad number in lattice id '" + id + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw InvalidInputError("bad number in lattice id '" + id + "'");
  return std::stoi(s);
}

Lattice single_named(const std::string& id) {
  if (id == "U") return build_standard(StandardId::U);
  if (id == "U2") return build_standard(StandardId::U2);
  if (id == "D4") return build_standard(StandardId::D4);
  if (id == "M_2e1" || id == "M_2e2" || id == "M_2e3" || id == "M_2e4" || id == "K")
    return build_even_set_lattice(parse_even_set_id(id));
  if (id.rfind("R2d:", 0) == 0) return build_standard(StandardId::RankOne, parse_int(id.substr(4), id));
  if (id.rfind("A1:", 0) == 0) {
    const int m = parse_int(id.substr(3), id);
    if (m < 1 || m > 64) throw DomainError("A1:<m> needs 1 <= m <= 64");
    return build_minus_two(static_cast<std::size_t>(m));
  }
  if (id.rfind("L_", 0) == 0) {
    const std::string rest = id.substr(2);
    const auto us = rest.find('_');
    if (us == std::string::npos) throw InvalidInputError("expected L_<n>_<r>, got '" + id + "'");
    const int n = parse_int(rest.substr(0, us), id);
    const int r = parse_int(rest.substr(us + 1), id);
    if (n > 64) throw DomainError("L_n needs n <= 64");
    return build_Ln(n, r);
  }
  throw InvalidInputError("unknown lattice id '" + id + "'");
}

}  // namespace

Lattice named_lattice(const std::string& id) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto plus = id.find('+', start);
    parts.push_back(id.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  Lattice l = single_named(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) l = direct_sum(l, single_named(parts[i]));
  l.set_name(id);
  return l;
}

CandidateList ns_candidates(int n) {
  CandidateList list{n, {}, {}, {}};
  auto add = [&](int r) { list.entries.push_back({n, r}); };
  if (n >= 6 && n <= 8) add(1);
  if (n >= 9 && n <= 12) {
    add(1);
    add(2);
  }
  if (n == 13) {
    add(2);
    add(4);
  }
  if (n == 14) add(4);
  if (n == 15) add(8);
  if (n == 16) add(16);
  return list;
}

bool excluded_two_elementary(const TwoElementaryInvariants& inv) {
  return inv.r == 14 && inv.a == 8 && inv.delta == 0;
}

EmbeddingStatus embedding_status(const Lattice& l) {
  if (l.is_degenerate() || !l.is_even() || l.signature().positive != 1 || l.signature().zero != 0)
    throw DomainError("embedding test needs an even lattice of signature (1, rank-1)");
  const DiscriminantGroup g = discriminant_group(l);
  const long rank = static_cast<long>(l.rank());
  const long len = static_cast<long>(g.length());
  std::ostringstream os;
  os << "length " << len << ", rank " << rank;
  if (len > std::min(rank, 22 - rank)) {
    os << ": length exceeds min(rank, 22 - rank) = " << std::min(rank, 22 - rank);
    return {Verdict::NotEmbeddable, os.str()};
  }
  if (len <= 20 - rank) {
    os << ": length <= 20 - rank = " << 20 - rank;
    return {Verdict::Embeddable, os.str()};
  }
  // Recorded refinement for the rank-12 case Z/14 x (Z/2)^9: the form of U(2)
  // splits off the discriminant form, which is checked here.
  IntVector expect(9, Integer(2));
  expect.push_back(14);
  if (rank == 12 && g.elementary_divisors == expect && splits_u2_form(g)) {
    os << ": discriminant form splits off the form of U(2), so the lattice is U(2) + (rank 10) "
          "with a sufficient-bound embedding of the complement";
    return {Verdict::Embeddable, os.str()};
  }
  os << ": between the sufficient and necessary bounds";
  return {Verdict::Undetermined, os.str()};
}

CandidateList derive_candidate_list(int n) {
  if (n < 6 || n > 17) throw DomainError("candidate derivation needs 6 <= n <= 17");
  CandidateList out{n, {}, {}, {}};
  const auto rank = static_cast<std::size_t>(n);
  const std::size_t m = rank - 1;
  const Lattice base = build_Ln(n, 1);

  // Step 1: the classes (b0 c + sum b_i r_i)/2, tested as glue in machine
  // integers on twice the vector. Modulo L the class with b0 = 1 equals the
  // one with the r-part complemented, so each class is keyed by its r-word.
  std::vector<long> g(rank * rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) g[i * rank + j] = base.root_gram()(i, j).get_si();
  std::set<Word> glue_words, admissible;
  std::vector<long> v(rank), gv(rank);
  for (std::uint32_t beta = 1; beta < (std::uint32_t{1} << rank); ++beta) {
    const long b0 = beta & 1;
    v[0] = 2 * b0;
    for (std::size_t i = 1; i < rank; ++i) v[i] = b0 + ((beta >> i) & 1);
    Word w = 0;
    for (std::size_t i = 1; i < rank; ++i)
      if (v[i] & 1) w |= Word{1} << (i - 1);
    if (w == 0) continue;
    bool integral = true;
    long norm = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < rank; ++j) s += g[i * rank + j] * v[j];
      if (s % 2 != 0) integral = false;
      norm += v[i] * s;
    }
    if (!integral || norm % 8 != 0) continue;
    glue_words.insert(w);
    if (validate_even_code(BinaryCode{m, {w}}).valid) admissible.insert(w);
  }
  out.notes.push_back(std::to_string(glue_words.size()) + " nonzero glue classes, " +
                      std::to_string(admissible.size()) + " of weight 8 or 16");

  // Step 2: even codes spanned by admissible words, up to permutation.
  struct CodeClass {
    BinaryCode code;
    std::map<int, std::size_t> dist;
  };
  std::vector<CodeClass> classes{{BinaryCode{m, {}}, weight_distribution(BinaryCode{m, {}})}};
  std::vector<CodeClass> frontier = classes;
  while (!frontier.empty()) {
    std::vector<CodeClass> next;
    for (const auto& cls : frontier) {
      const std::vector<Word> words = codewords(cls.code);
      for (Word s : admissible) {
        if (std::binary_search(words.begin(), words.end(), s)) continue;
        BinaryCode c2 = cls.code;
        c2.generators.push_back(s);
        if (!validate_even_code(c2).valid) continue;
        auto dist = weight_distribution(c2);
        bool seen = std::any_of(next.begin(), next.end(), [&](const CodeClass& o) { return o.dist == dist; });
        if (!seen) next.push_back({std::move(c2), std::move(dist)});
      }
    }
    classes.insert(classes.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  // Step 3: mandatory divisibility forced by the n - 1 disjoint curves.
  std::size_t min_dim = 0;
  if (n >= 14) {
    min_dim = 99;
    for (const auto& opt : minimal_primitive_options(m)) min_dim = std::min(min_dim, opt.code.dimension());
  }
  const long bound = std::min<long>(n, 22 - n);

  // c is divisible by a only if 2a^2 divides c^2 = 2n - 10.
  std::vector<int> divisors;
  for (int a = 2; 2 * a * a <= 2 * n - 10; ++a)
    if ((2 * n - 10) % (2 * a * a) == 0) divisors.push_back(a);

  for (const auto& cls : classes) {
    const std::size_t dim = cls.code.dimension();
    const std::string tag = "code " + describe(cls.code);
    if (dim < min_dim) {
      out.notes.push_back(tag + ": excluded, overlattice index must be at least 2^" + std::to_string(min_dim));
      continue;
    }
    RatMatrix glue;
    for (Word w : cls.code.generators) glue.push_back(half_word(w, rank, 1));
    const Lattice lat = glue.empty() ? base : glue_overlattice_root(base, glue).lattice;

    for (int a : divisors) {
      if (a % 2 == 0) {
        // c/2 = d + (all r)/2, so adjoining it adds the all-ones word.
        BinaryCode with_all = cls.code;
        with_all.generators.push_back((Word{1} << m) - 1);
        if (a == 2 && validate_even_code(with_all).valid)
          out.notes.push_back(tag + " + c/2: same as adjoining the all-ones word, covered by the code enumeration");
        else if (a == 2)
          out.notes.push_back(tag + " + c/2: excluded, all-ones word of weight " + std::to_string(m) +
                              " breaks the even-set law");
        else
          out.notes.push_back(tag + " + c/" + std::to_string(a) + ": excluded, contains c/2 case");
        continue;
      }
      RatVector c_over_a(rank);
      c_over_a[0] = Rational(2, a);
      for (std::size_t i = 1; i < rank; ++i) c_over_a[i] = Rational(1, a);
      const std::string ctag = tag + " + c/" + std::to_string(a);
      if (auto why = glue_defect(lat, lat.from_root(c_over_a))) {
        out.notes.push_back(ctag + ": excluded, " + *why);
        continue;
      }
      const Lattice div = glue_overlattice_root(lat, {c_over_a}).lattice;
      const long len = static_cast<long>(length(div));
      if (len > bound) {
        out.notes.push_back(ctag + ": excluded, length " + std::to_string(len) + " > " + std::to_string(bound));
        continue;
      }
      const auto inv = two_elementary_invariants(div);
      if (inv && excluded_two_elementary(*inv)) {
        out.notes.push_back(ctag + ": excluded, 2-elementary (" + std::to_string(inv->r) + "," +
                            std::to_string(inv->a) + "," + std::to_string(inv->delta) +
                            ") is not a K3 Neron-Severi lattice");
        continue;
      }
      out.unmatched.push_back(ctag);
      out.notes.push_back(ctag + ": survives");
    }

    const long len = static_cast<long>(length(lat));
    if (len > bound) {
      out.notes.push_back(tag + ": excluded, length " + std::to_string(len) + " > " + std::to_string(bound));
      continue;
    }
    const int r = 1 << dim;
    if (ln_defined(n, r) && equivalent_even_codes(cls.code, ln_code(n, r))) {
      out.entries.push_back({n, r});
      out.notes.push_back(tag + ": survives as " + to_string(LnId{n, r}));
    } else {
      out.unmatched.push_back(tag);
      out.notes.push_back(tag + ": survives, not of the form L_n^(r)");
    }
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

FixedLocus fixed_locus_nonsymplectic(const TwoElementaryInvariants& inv) {
  const long r = static_cast<long>(inv.r), a = static_cast<long>(inv.a);
  if (r < 1 || r > 20 || a > r || (inv.delta != 0 && inv.delta != 1))
    throw DomainError("not a valid 2-elementary triple of rank at most 20");
  if (r == 10 && a == 10) throw DomainError("(10,10) is outside the supported range");
  if (r == 10 && a == 8 && inv.delta == 0) return {std::nullopt, 0, 2, "two curves of genus 1"};
  const long twice_g = 22 - r - a;
  if (twice_g < 0 || twice_g % 2 != 0) throw DomainError("22 - r - a must be even and non-negative");
  FixedLocus f;
  f.genus = static_cast<int>(twice_g / 2);
  f.rational_curves = static_cast<int>((r - a) / 2);
  f.note = "a curve of genus " + std::to_string(*f.genus) + " and " + std::to_string(f.rational_curves) +
           " rational curves";
  return f;
}

}  // namespace k3cover
