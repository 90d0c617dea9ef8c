#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcomb.hpp"

namespace diagalg {

// One verified claim.  `anchor` is a short human-readable tag of the
// mathematical statement the claim instantiates.
struct Claim {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
  long millis = 0;
};

struct Report {
  std::vector<Claim> claims;
  bool all_pass() const;
  // claims sorted by id; stable field order
  std::string json() const;
  std::string pretty() const;
  void merge(const Report& o);
};

struct VerifyOptions {
  uint64_t seed = 0;
  bool exact = false;  // force exact ranks/closures where supported
  int trials = 2;
};

// Lambda^0 by the boxes-in-the-first-two-columns description, independent of
// the explicit-family enumeration in symcomb.
std::vector<Partition> lambda_zero_twocol(int r);

// Checks of the kernel-generation statement for B_r(3).  method is one of
// "ideal-closure", "cell-criterion", "both".
Report verify_classical(int r, const std::string& method,
                        const VerifyOptions& opt = {});

// BMW_r(q) side: identity suite, Gram ranks, radical, ideal dimensions for
// r <= 5; at r = 6 the verdict is transferred from the classical result.
Report verify_quantum(int r, const VerifyOptions& opt = {});

// Structural cross-checks: the two Lambda^0 descriptions, |Lambda^0| = r+1,
// and dim End = sum of squared simple dimensions over Lambda^0.
Report verify_structure(const VerifyOptions& opt = {});

}  // namespace diagalg
