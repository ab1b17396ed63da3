#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lbext/free_group.hpp"

namespace lbext {

enum class GenKind { Sigma, Rho, Tau };

/// One generator of the extended loop braid group: sigma_i^{+-1}, rho_i or tau_i.
/// rho and tau are involutions and always carry exponent +1.
struct GenLetter {
  GenKind kind = GenKind::Sigma;
  int index = 1;
  int exponent = 1;

  static constexpr GenLetter sigma(int i, int e = 1) { return {GenKind::Sigma, i, e}; }
  static constexpr GenLetter rho(int i) { return {GenKind::Rho, i, 1}; }
  static constexpr GenLetter tau(int i) { return {GenKind::Tau, i, 1}; }

  constexpr GenLetter inverse() const {
    return kind == GenKind::Sigma ? GenLetter{kind, index, -exponent} : *this;
  }
  bool valid_for(int n) const;

  friend constexpr bool operator==(const GenLetter&, const GenLetter&) = default;
  friend constexpr auto operator<=>(const GenLetter&, const GenLetter&) = default;
};

std::string format_letter(const GenLetter& g);

/// A word in the generators on n strands. Words are free-monoid syntax:
/// nothing is cancelled when letters are appended.
class BraidWord {
 public:
  explicit BraidWord(int n);
  /// Throws IndexError if a letter does not fit on n strands.
  BraidWord(int n, std::vector<GenLetter> letters);

  int n() const { return n_; }
  const std::vector<GenLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(const GenLetter& g);

  /// Syntactic concatenation; both words must have the same n.
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<GenLetter> letters_;
};

/// Tokens `s<i>`, `s<i>^-1`, `r<i>`, `t<i>` separated by whitespace; `1` is the empty word.
BraidWord parse_word(const std::string& text, int n);
std::string format_word(const BraidWord& b);

/// Image of a single generator in Aut(F_n).
FreeAut generator_aut(int n, const GenLetter& g);

/// The faithful representation into Aut(F_n); nu(u v) = compose(nu(u), nu(v)).
FreeAut nu(const BraidWord& b);

/// Right-multiplies phi by a generator: compose(phi, generator_aut(n, g)).
/// Only the images touched by g are rewritten.
FreeAut times_generator(const FreeAut& phi, const GenLetter& g);
/// Left-multiplies phi by a generator: compose(generator_aut(n, g), phi).
FreeAut generator_times(const GenLetter& g, const FreeAut& phi);

bool word_equal(const BraidWord& u, const BraidWord& v);
BraidWord invert_word(const BraidWord& b);

SignedPerm permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
/// Sum of sigma exponents mod 2.
int sigma_parity(const BraidWord& b);

struct TauNormalForm {
  BraidWord tau_prefix;  // ascending squarefree product of tau letters
  BraidWord tau_free;    // no tau letters
};

/// Rewrites b as tau_prefix * tau_free, moving every tau to the left with the
/// defining relations and their consequences.
TauNormalForm tau_normal_form(const BraidWord& b);

/// One step of the tau-pushing rewrite: x * tau_j = tau_{j'} * (replacement).
/// x must not be a tau letter.
struct TauSwap {
  int tau_index;
  std::vector<GenLetter> replacement;
};
TauSwap push_tau_left(const GenLetter& x, int tau_index);

struct RelationFamily {
  int id;
  std::string text;
};

/// The fifteen relation families of the standard presentation, in order.
const std::vector<RelationFamily>& relation_families();

struct RelationCheck {
  int family;
  std::vector<int> indices;
  BraidWord lhs;
  BraidWord rhs;
  bool pass;
};

struct RelationReport {
  int n;
  std::vector<RelationCheck> entries;

  bool all_pass() const;
};

/// Every valid instantiation of every relation family for n strands, in
/// family order and then lexicographic index order.
std::vector<RelationCheck> relation_instances(int n);

RelationReport relation_suite(int n);

}  // namespace lbext
