#pragma once

#include <functional>
#include <string>
#include <vector>

#include "k3cover/k3lattices.hpp"

namespace k3cover {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string basis;  // which closed form or statement the expectation encodes
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

struct VerifyOptions {
  // Applied to every candidate lattice before it is checked; lets tests feed
  // in a corrupted lattice.
  std::function<Lattice(const Lattice&, const LnId&)> lattice_hook;
};

struct NoetherSweep {
  std::size_t configurations = 0;
  std::size_t admissible = 0;
  std::size_t violations = 0;
};

// Every multiset {g^a, 1^b, 0^c} with n = a + b + c <= max_n and
// 2 <= g <= max_genus, plus the all-{0,1} ones, checked for
// c1^2 + c2 = 12 chi on X and Xmin and p_g - q + 1 = chi when known.
NoetherSweep noether_sweep(long max_n, long max_genus);

VerificationReport verify_paper(const VerifyOptions& opts = {});

}  // namespace k3cover
