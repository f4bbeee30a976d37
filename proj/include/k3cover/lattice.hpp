#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cover/exactlin.hpp"

namespace k3cover {

// An integral lattice given by a Gram matrix on a Z-basis.
//
// Every lattice also remembers a "root" presentation: the Gram matrix of the
// sublattice it was glued from (for example <-2>^8 for M_{Z/2}) together with
// the Z-basis rows expressed in root coordinates. Labels name the root
// vectors. For a lattice built directly from a Gram matrix the two
// presentations coincide.
class Lattice {
 public:
  Lattice() = default;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const IntMatrix& gram() const { return gram_; }
  const IntMatrix& root_gram() const { return root_gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Z-basis rows in root coordinates.
  const RatMatrix& basis() const { return basis_; }
  // Glue vectors absorbed so far, in root coordinates.
  const RatMatrix& glue() const { return glue_; }

  std::size_t rank() const { return gram_.rows(); }
  bool is_even() const { return even_; }
  bool is_degenerate() const { return det_ == 0; }
  const Integer& det() const { return det_; }
  const Inertia& signature() const { return signature_; }

  // Coordinate changes between the Z-basis and the root presentation.
  RatVector to_root(const RatVector& basis_coords) const;
  RatVector from_root(const RatVector& root_coords) const;

  // Pairing of two vectors given in Z-basis coordinates.
  Rational pair(const RatVector& x, const RatVector& y) const;

 private:
  friend Lattice from_gram(const IntMatrix&, std::vector<std::string>);
  friend Lattice make_presented(IntMatrix, RatMatrix, std::vector<std::string>, RatMatrix);
  void finish();

  std::string name_;
  IntMatrix gram_;
  IntMatrix root_gram_;
  std::vector<std::string> labels_;
  RatMatrix basis_;
  RatMatrix glue_;
  bool even_ = true;
  Integer det_ = 1;
  Inertia signature_;
};

// L*/L with the discriminant form. Generators are dual vectors in Z-basis
// coordinates; qvalues are in [0,2) and pairings are in [0,1).
struct DiscriminantGroup {
  IntVector elementary_divisors;
  RatMatrix generators;
  RatVector qvalues;
  RatMatrix pairings;

  Integer order() const;
  std::size_t length() const { return elementary_divisors.size(); }
};

struct TwoElementaryInvariants {
  std::size_t r = 0;
  std::size_t a = 0;
  int delta = 0;

  friend bool operator==(const TwoElementaryInvariants&, const TwoElementaryInvariants&) = default;
};

struct GlueResult {
  Lattice lattice;
  Integer index;
};

// Labels default to e1, e2, ... Throws ShapeError for a non-symmetric Gram.
Lattice from_gram(const IntMatrix& gram, std::vector<std::string> labels = {});
// Lattice whose Z-basis is `basis` (rows, root coordinates) inside the root
// lattice. No integrality checks are done here.
Lattice make_presented(IntMatrix root_gram, RatMatrix basis, std::vector<std::string> labels,
                       RatMatrix glue);

Lattice direct_sum(const Lattice& a, const Lattice& b);
// Throws InvalidInputError for k == 0.
Lattice rescale(const Lattice& l, const Integer& k);

// Throws DegenerateLatticeError when det == 0.
Integer discriminant(const Lattice& l);
DiscriminantGroup discriminant_group(const Lattice& l);
std::size_t length(const Lattice& l);
std::optional<TwoElementaryInvariants> two_elementary_invariants(const Lattice& l);

// Glue vectors in Z-basis coordinates of l, absorbed one at a time. Each must
// pair integrally with the current lattice, have even norm and lie outside it;
// otherwise InvalidGlueError.
GlueResult glue_overlattice(const Lattice& l, const RatMatrix& glue);
// Same, with glue vectors in root coordinates.
GlueResult glue_overlattice_root(const Lattice& l, const RatMatrix& glue);

// Reason the vector v (Z-basis coordinates) is not admissible glue, or empty.
std::optional<std::string> glue_defect(const Lattice& l, const RatVector& v);

// True when the discriminant form has a pair x, y of order 2 with
// q(x) = q(y) = 0 and b(x, y) = 1/2, i.e. the form of U(2) splits off.
bool splits_u2_form(const DiscriminantGroup& g);

// Normalize into [0, m).
Rational reduce_mod(const Rational& q, long m);

}  // namespace k3cover
