#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3cover/exactlin.hpp"

namespace k3cover {

// Genera of the n disjoint branch curves; the largest one is C.
struct BranchConfig {
  std::vector<long> genera;

  std::size_t n() const { return genera.size(); }
};

enum class CoverCase { GenusZero, GenusOne, GeneralType };
std::string to_string(CoverCase c);

struct SurfaceInvariants {
  long chi = 0;
  std::optional<long> pg;
  std::optional<long> q;
  long c1sq = 0;
  long c2 = 0;
};

struct MinimalInvariants {
  long chi = 0;
  long c1sq = 0;
  long c2 = 0;
};

struct CoverReport {
  CoverCase kind = CoverCase::GeneralType;
  long n = 0;
  long k = 0;
  std::optional<long> h;
  long gC = 0;
  long L2 = 0;
  std::optional<long> h0;
  SurfaceInvariants X;
  MinimalInvariants Xmin;
  std::string kodaira;
  std::optional<long> b;
  std::optional<long> gA;
  std::string minimal_model;
  // Alternative Hodge numbers recorded for the one-curve case; differs from X.
  std::optional<SurfaceInvariants> printed_X;
  std::vector<std::string> notes;
};

enum class InadmissibleReason { Congruence, Bound, Parity, GenusZeroCount, Genus };
std::string to_string(InadmissibleReason r);

struct Inadmissible {
  InadmissibleReason reason;
  std::string text;
};

using Classification = std::variant<CoverReport, Inadmissible>;

struct KodairaFiberType {
  std::string name;
  std::vector<int> multiplicities;
  int euler = 0;
  int odd_mult_components = 0;
};

struct BranchPoints {
  long b = 0;
  long gA = 0;
};

struct ExistenceVerdict {
  bool exists = false;
  std::string construction;
  // d = 15 + 4h for n = 16.
  std::optional<long> d;
};

struct EvenSetDescriptor {
  long genus = 0;
  std::vector<int> rationals;  // indices i of r_i
  RatVector curve_class;       // root coordinates (d, r1, ...)
  std::string expression;
  bool class_norm_ok = false;     // class^2 = 2g - 2 and orthogonal to the r_i used
  bool half_sum_in_lattice = false;
  std::optional<bool> half_class_in_lattice;  // checked for the genus-5 set
};

// Throws InvalidInputError for odd L2 or negative h0.
SurfaceInvariants invariants_of_X(long L2, long h0);

// Throws InvalidInputError for an empty or negative genus list.
Classification classify_branch(const BranchConfig& cfg);

// Throws DomainError when k < 1 or n < k.
std::variant<BranchPoints, Inadmissible> genus1_branch_points(long n, long k);

// I_0^* .. I_{max_m}^*, then IV^*, III^*, II^*.
std::vector<KodairaFiberType> unstable_fiber_types(int max_m = 4);
KodairaFiberType i_m_star(int m);

// Supported n: 1, 16, 17. Throws DomainError otherwise or when h < -3 or
// n + 4h < 2.
ExistenceVerdict existence(long n, long h);

// Throws DomainError for d_i < 1 and InvalidInputError for non-integral L_i.
long bidouble_pg(long d1, long d2, long d3);

// Throws DomainError for n <= 6.
long projection_residual(long n);

// Throws DomainError unless (n, r) is one of the candidate lattices.
std::vector<EvenSetDescriptor> alternative_even_sets(int n, int r);

}  // namespace k3cover
