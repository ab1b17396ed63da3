#include "lbext/markov.hpp"

#include <algorithm>
#include <functional>

namespace lbext {

std::vector<CycleData> signed_cycle_type(const SignedPerm& p) {
  std::vector<CycleData> out;
  for (const auto& cycle : p.cycles()) {
    int sign = 1;
    for (int i : cycle) sign *= p.signs[static_cast<std::size_t>(i - 1)];
    out.emplace_back(static_cast<int>(cycle.size()), sign);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool is_closable(const BraidWord& b) {
  for (const auto& [len, sign] : signed_cycle_type(permutation(b))) {
    if (sign != 1) return false;
  }
  return true;
}

ClosureInvariant closure_invariants(const BraidWord& b) {
  ClosureInvariant inv;
  inv.n = b.n();
  inv.cycles = signed_cycle_type(permutation(b));
  for (const auto& [len, sign] : inv.cycles) {
    if (sign != 1) {
      throw NotClosable("a component of length " + std::to_string(len) + " carries an odd number of wens");
    }
  }
  inv.components = static_cast<int>(inv.cycles.size());
  inv.sigma_parity = sigma_parity(b);
  return inv;
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) { return g * b * invert_word(g); }

const char* stab_kind_name(StabKind k) {
  switch (k) {
    case StabKind::SigmaPlus:
      return "positive";
    case StabKind::SigmaMinus:
      return "negative";
    case StabKind::RhoType:
      return "welded";
  }
  return "?";
}

BraidWord stabilize(const BraidWord& b, StabKind kind) {
  const int n = b.n();
  BraidWord out(n + 1, b.letters());
  switch (kind) {
    case StabKind::SigmaPlus:
      out.push_back(GenLetter::sigma(n, 1));
      break;
    case StabKind::SigmaMinus:
      out.push_back(GenLetter::sigma(n, -1));
      break;
    case StabKind::RhoType:
      out.push_back(GenLetter::rho(n));
      break;
  }
  return out;
}

BraidWord destabilize(const BraidWord& b) {
  const int n = b.n();
  if (n < 2) throw NotDestabilizable("need at least 2 strands");
  if (b.empty()) throw NotDestabilizable("empty word has no stabilizing letter");
  auto touches_last_strand = [n](const GenLetter& g) {
    return g.kind == GenKind::Tau ? g.index == n : g.index == n - 1;
  };
  const GenLetter& last = b.letters().back();
  if (last.kind == GenKind::Tau || last.index != n - 1) {
    throw NotDestabilizable("last letter " + format_letter(last) + " is not s" + std::to_string(n - 1) +
                            "^{+-1} or r" + std::to_string(n - 1));
  }
  std::vector<GenLetter> rest(b.letters().begin(), b.letters().end() - 1);
  for (const auto& g : rest) {
    if (touches_last_strand(g)) {
      throw NotDestabilizable("letter " + format_letter(g) + " also touches strand " + std::to_string(n));
    }
  }
  return BraidWord(n - 1, std::move(rest));
}

}  // namespace lbext
