#pragma once

#include <utility>
#include <vector>

#include "lbext/braid.hpp"

namespace lbext {

class NotClosable : public Error {
 public:
  using Error::Error;
};

class NotDestabilizable : public Error {
 public:
  using Error::Error;
};

/// (cycle length, product of the signs along the cycle)
using CycleData = std::pair<int, int>;

/// Conjugacy-class data of a closable braid's tube closure.
struct ClosureInvariant {
  int n = 0;
  int components = 0;
  std::vector<CycleData> cycles;  // sorted descending
  int sigma_parity = 0;

  friend bool operator==(const ClosureInvariant&, const ClosureInvariant&) = default;
};

/// Cycle type of a signed permutation refined by per-cycle sign products,
/// sorted descending. Class function on the hyperoctahedral group.
std::vector<CycleData> signed_cycle_type(const SignedPerm& p);

/// Every cycle of the permutation carries an even number of wens.
bool is_closable(const BraidWord& b);
ClosureInvariant closure_invariants(const BraidWord& b);

/// g b g^-1, syntactically.
BraidWord conjugate(const BraidWord& b, const BraidWord& g);

enum class StabKind { SigmaPlus, SigmaMinus, RhoType };

inline constexpr StabKind kAllStabKinds[] = {StabKind::SigmaPlus, StabKind::SigmaMinus, StabKind::RhoType};

const char* stab_kind_name(StabKind k);

/// Lifts b to n+1 strands and appends sigma_n, sigma_n^-1 or rho_n.
BraidWord stabilize(const BraidWord& b, StabKind kind);

/// Drops a trailing stabilizing letter on the last strand. Only words in
/// which no other letter touches strand n qualify.
BraidWord destabilize(const BraidWord& b);

}  // namespace lbext
