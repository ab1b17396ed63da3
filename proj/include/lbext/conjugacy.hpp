#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lbext/markov.hpp"

namespace lbext {

/// A class function on which the two braids disagree. Values are rendered
/// as JSON text (`1`, `[[2,1]]`, `true`).
struct Distinguished {
  std::string invariant;
  std::string first_value;
  std::string second_value;
};

struct Conjugate {
  BraidWord witness;  // witness * b1 * witness^-1 == b2
  int radius = 0;     // letter length of the witness
};

struct Unknown {
  int radius = 0;  // every conjugator of at most this length was tried
  std::size_t visited = 0;
};

using ConjugacyVerdict = std::variant<Conjugate, Distinguished, Unknown>;

struct SearchConfig {
  int radius = 3;
  std::size_t node_budget = 1'000'000;
};

/// Generators tried by the search, in their fixed order:
/// s1, s1^-1, ..., s_{n-1}^-1, r1, ..., r_{n-1}, t1, ..., t_n.
std::vector<GenLetter> search_alphabet(int n);

/// First class function (in a fixed order) that separates b1 from b2.
std::optional<Distinguished> refute(const BraidWord& b1, const BraidWord& b2);

/// Breadth-first search for gamma with gamma b1 gamma^-1 == b2, over
/// conjugators of length <= cfg.radius. Runs refute first.
ConjugacyVerdict search_witness(const BraidWord& b1, const BraidWord& b2, const SearchConfig& cfg = {});

bool check_certificate(const BraidWord& b1, const BraidWord& b2, const BraidWord& gamma);

/// gamma == pi_tau * alpha with pi_tau a product of distinct tau letters and
/// alpha wen-free, so conjugating by gamma is conjugating by alpha and then by pi_tau.
TauNormalForm normal_form_conjugator(const BraidWord& gamma);

}  // namespace lbext
