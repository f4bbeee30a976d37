#include "k3cover/lattice.hpp"

#include <cstdint>
#include <utility>

#include "k3cover/errors.hpp"

namespace k3cover {

namespace {

IntMatrix regram(const IntMatrix& root_gram, const RatMatrix& basis) {
  const std::size_t n = basis.size();
  IntMatrix g(n, n);
  std::vector<RatVector> gb;
  gb.reserve(n);
  for (const auto& b : basis) gb.push_back(mat_vec(root_gram, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v = dot(basis[i], gb[j]);
      if (v.get_den() != 1) throw InvalidGlueError("non-integral pairing in overlattice basis");
      g(i, j) = v.get_num();
      g(j, i) = v.get_num();
    }
  return g;
}

RatMatrix identity_rows(std::size_t n) {
  RatMatrix m(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

void Lattice::finish() {
  even_ = true;
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) even_ = false;
  det_ = determinant(gram_);
  signature_ = inertia(gram_);
}

Lattice from_gram(const IntMatrix& gram, std::vector<std::string> labels) {
  if (!gram.is_symmetric()) throw ShapeError("Gram matrix must be square and symmetric");
  if (labels.empty())
    for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != gram.rows()) throw ShapeError("label count differs from rank");
  Lattice l;
  l.gram_ = gram;
  l.root_gram_ = gram;
  l.labels_ = std::move(labels);
  l.basis_ = identity_rows(gram.rows());
  l.finish();
  return l;
}

Lattice make_presented(IntMatrix root_gram, RatMatrix basis, std::vector<std::string> labels,
                       RatMatrix glue) {
  if (!root_gram.is_symmetric()) throw ShapeError("Gram matrix must be square and symmetric");
  if (labels.size() != root_gram.rows()) throw ShapeError("label count differs from rank");
  for (const auto& b : basis)
    if (b.size() != root_gram.rows()) throw ShapeError("basis row length differs from rank");
  Lattice l;
  l.gram_ = regram(root_gram, basis);
  l.root_gram_ = std::move(root_gram);
  l.labels_ = std::move(labels);
  l.basis_ = std::move(basis);
  l.glue_ = std::move(glue);
  l.finish();
  return l;
}

RatVector Lattice::to_root(const RatVector& x) const {
  if (x.size() != rank()) throw DimensionError("vector length differs from rank");
  RatVector out(root_gram_.rows(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * basis_[i][j];
  }
  return out;
}

RatVector Lattice::from_root(const RatVector& v) const {
  if (v.size() != root_gram_.rows()) throw DimensionError("vector length differs from root rank");
  // Solve x B = v, i.e. B^T x = v.
  RatMatrix bt(rank(), RatVector(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) bt[i][j] = basis_[j][i];
  RatMatrix inv = rational_inverse(bt);
  RatVector x(rank(), Rational(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) x[i] += inv[i][j] * v[j];
  return x;
}

Rational Lattice::pair(const RatVector& x, const RatVector& y) const { return bilinear(gram_, x, y); }

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : elementary_divisors) o *= d;
  return o;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t ra = a.root_gram().rows(), rb = b.root_gram().rows();
  IntMatrix g(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) g(i, j) = a.root_gram()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b.root_gram()(i, j);

  auto pad = [&](const RatVector& v, bool first) {
    RatVector out(ra + rb, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[(first ? 0 : ra) + i] = v[i];
    return out;
  };
  RatMatrix basis, glue;
  for (const auto& v : a.basis()) basis.push_back(pad(v, true));
  for (const auto& v : b.basis()) basis.push_back(pad(v, false));
  for (const auto& v : a.glue()) glue.push_back(pad(v, true));
  for (const auto& v : b.glue()) glue.push_back(pad(v, false));
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());

  Lattice s = make_presented(std::move(g), std::move(basis), std::move(labels), std::move(glue));
  if (!a.name().empty() && !b.name().empty()) s.set_name(a.name() + "+" + b.name());
  return s;
}

Lattice rescale(const Lattice& l, const Integer& k) {
  if (k == 0) throw InvalidInputError("rescale factor must be nonzero");
  Lattice s = make_presented(l.root_gram().scaled(k), l.basis(), l.labels(), l.glue());
  if (!l.name().empty()) s.set_name(l.name() + "(" + k.get_str() + ")");
  return s;
}

Integer discriminant(const Lattice& l) {
  if (l.is_degenerate()) throw DegenerateLatticeError("degenerate lattice has no discriminant");
  return l.det();
}

Rational reduce_mod(const Rational& q, long m) {
  Rational t = q / m;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  Rational r = q - Rational(fl * m);
  r.canonicalize();
  return r;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  if (l.is_degenerate()) throw DegenerateLatticeError("degenerate lattice has no discriminant group");
  const SmithDecomposition s = smith_normal_form(l.gram());
  DiscriminantGroup g;
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.D(i, i);
    if (d == 1) continue;
    RatVector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = Rational(s.V(k, i), d);
    for (auto& v : x) v.canonicalize();
    g.elementary_divisors.push_back(d);
    g.generators.push_back(std::move(x));
  }
  for (const auto& x : g.generators) g.qvalues.push_back(reduce_mod(l.pair(x, x), 2));
  for (const auto& x : g.generators) {
    RatVector row;
    for (const auto& y : g.generators) row.push_back(reduce_mod(l.pair(x, y), 1));
    g.pairings.push_back(std::move(row));
  }
  return g;
}

std::size_t length(const Lattice& l) { return discriminant_group(l).length(); }

std::optional<TwoElementaryInvariants> two_elementary_invariants(const Lattice& l) {
  const DiscriminantGroup g = discriminant_group(l);
  TwoElementaryInvariants inv;
  inv.r = l.rank();
  inv.a = g.length();
  for (const auto& d : g.elementary_divisors)
    if (d != 2) return std::nullopt;
  // q(x + y) = q(x) + q(y) + 2b(x, y) and 2b is integral here, so integrality
  // of q on generators decides it for the whole group.
  for (const auto& q : g.qvalues)
    if (q.get_den() != 1) inv.delta = 1;
  return inv;
}

std::optional<std::string> glue_defect(const Lattice& l, const RatVector& v) {
  if (v.size() != l.rank()) return "glue vector length differs from rank";
  if (is_integral(v)) return "glue vector already lies in the lattice";
  RatVector gv = mat_vec(l.gram(), v);
  if (!is_integral(gv)) return "glue vector pairs non-integrally with the lattice";
  Rational norm = dot(v, gv);
  if (norm.get_den() != 1 || !mpz_even_p(norm.get_num_mpz_t()))
    return "glue vector has norm " + to_string(norm) + ", not an even integer";
  return std::nullopt;
}

GlueResult glue_overlattice(const Lattice& l, const RatMatrix& glue) {
  RatMatrix root;
  for (const auto& v : glue) {
    if (v.size() != l.rank()) throw InvalidGlueError("glue vector length differs from rank");
    root.push_back(l.to_root(v));
  }
  return glue_overlattice_root(l, root);
}

GlueResult glue_overlattice_root(const Lattice& l, const RatMatrix& glue) {
  if (l.is_degenerate()) throw DegenerateLatticeError("cannot glue onto a degenerate lattice");
  Lattice cur = l;
  Integer index = 1;
  for (const auto& root_v : glue) {
    if (root_v.size() != l.root_gram().rows()) throw InvalidGlueError("glue vector length differs from the root rank");
    const RatVector v = cur.from_root(root_v);
    if (auto why = glue_defect(cur, v)) throw InvalidGlueError(*why);

    RatMatrix rows = cur.basis();
    rows.push_back(root_v);
    Integer den = 1;
    for (const auto& r : rows) {
      Integer d = common_denominator(r);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    IntMatrix scaled(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        Rational t = rows[i][j] * den;
        scaled(i, j) = t.get_num();
      }
    const IntMatrix h = hermite_normal_form(scaled);
    RatMatrix basis(h.rows(), RatVector(h.cols()));
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) {
        basis[i][j] = Rational(h(i, j), den);
        basis[i][j].canonicalize();
      }
    RatMatrix all_glue = cur.glue();
    all_glue.push_back(root_v);
    Lattice next = make_presented(cur.root_gram(), std::move(basis), cur.labels(), std::move(all_glue));
    Rational ratio = Rational(cur.det()) / Rational(next.det());
    if (ratio.get_den() != 1 || !mpz_perfect_square_p(ratio.get_num_mpz_t()))
      throw InvalidGlueError("overlattice determinant ratio is not a square");
    Integer step = sqrt(ratio.get_num());
    index *= step;
    if (!next.is_even()) throw InvalidGlueError("overlattice is not even");
    next.set_name(l.name());
    cur = std::move(next);
  }
  return {std::move(cur), std::move(index)};
}

bool splits_u2_form(const DiscriminantGroup& g) {
  // Generators of the 2-torsion subgroup: (d/2) g_i for even d.
  std::vector<std::size_t> src;
  for (std::size_t i = 0; i < g.length(); ++i)
    if (mpz_even_p(g.elementary_divisors[i].get_mpz_t())) src.push_back(i);
  const std::size_t t = src.size();
  if (t < 2 || t > 24) return false;

  // q on 2-torsion lies in (1/2)Z / 2Z; store 2q mod 4. b lies in (1/2)Z / Z;
  // store 2b mod 2 as a bit.
  std::vector<int> q2(t);
  std::vector<std::uint32_t> bmask(t, 0);
  for (std::size_t a = 0; a < t; ++a) {
    const std::size_t i = src[a];
    Integer half = g.elementary_divisors[i] / 2;
    Rational qa = reduce_mod(Rational(half * half) * g.qvalues[i], 2) * 2;
    q2[a] = static_cast<int>(qa.get_num().get_si());
    for (std::size_t b = 0; b < t; ++b) {
      const std::size_t j = src[b];
      Integer hj = g.elementary_divisors[j] / 2;
      Rational bv = reduce_mod(Rational(half * hj) * g.pairings[i][j], 1) * 2;
      if (bv != 0) bmask[a] |= std::uint32_t{1} << b;
    }
  }
  const std::uint32_t count = std::uint32_t{1} << t;
  std::vector<int> qval(count, 0);
  for (std::uint32_t m = 1; m < count; ++m) {
    const int low = __builtin_ctz(m);
    const std::uint32_t rest = m & (m - 1);
    // q(x + y) = q(x) + q(y) + 2b(x, y), in units of 1/2 modulo 4.
    const int cross = __builtin_popcount(bmask[low] & rest) & 1;
    qval[m] = (qval[rest] + q2[low] + 2 * cross) % 4;
  }
  auto pairing = [&](std::uint32_t x, std::uint32_t y) {
    int s = 0;
    for (std::size_t a = 0; a < t; ++a)
      if (x >> a & 1) s ^= __builtin_popcount(bmask[a] & y) & 1;
    return s;
  };
  std::vector<std::uint32_t> isotropic;
  for (std::uint32_t m = 1; m < count; ++m)
    if (qval[m] == 0) isotropic.push_back(m);
  for (std::size_t i = 0; i < isotropic.size(); ++i)
    for (std::size_t j = i + 1; j < isotropic.size(); ++j)
      if (pairing(isotropic[i], isotropic[j])) return true;
  return false;
}

}  // namespace k3cover
