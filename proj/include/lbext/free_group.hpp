#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbext {

/// Base of every error raised by the library. Carries a one-line message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Some image is not of the form w^-1 x^{+-1} w.
class ImageNotConjugateOfGenerator : public Error {
 public:
  using Error::Error;
};

/// The core letters of the images do not form a permutation.
class NotAPermutation : public Error {
 public:
  using Error::Error;
};

/// A letter x_i^{+-1} of F_n, stored as the signed integer +-i.
class FreeLetter {
 public:
  constexpr FreeLetter(int index, int exponent) : value_(exponent < 0 ? -index : index) {}

  static constexpr FreeLetter from_signed(int value) { return FreeLetter(value, 1); }

  constexpr int index() const { return value_ < 0 ? -value_ : value_; }
  constexpr int exponent() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr FreeLetter inverse() const { return from_signed(-value_); }

  friend constexpr bool operator==(FreeLetter, FreeLetter) = default;
  friend constexpr auto operator<=>(FreeLetter, FreeLetter) = default;

 private:
  int value_;
};

class FreeAut;

/// A freely reduced word in the free group on x_1..x_n.
///
/// The only way to build one is through reduce() (or the helpers that call
/// it), so every instance satisfies the reduced-word invariant.
class FreeWord {
 public:
  explicit FreeWord(int n) : n_(n) {}

  static FreeWord generator(int n, int index, int exponent = 1);

  int n() const { return n_; }
  std::span<const FreeLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const FreeLetter& operator[](std::size_t k) const { return letters_[k]; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  friend FreeWord reduce(std::span<const FreeLetter> raw, int n);
  friend FreeWord concat(const FreeWord& u, const FreeWord& v);
  friend FreeWord invert(const FreeWord& u);
  friend FreeWord apply(const FreeAut& phi, const FreeWord& u);
  friend class FreeAut;

  int n_;
  std::vector<FreeLetter> letters_;
};

/// Stack-based free reduction. Throws IndexError when an index is outside [1, n].
FreeWord reduce(std::span<const FreeLetter> raw, int n);
FreeWord reduce(std::span<const std::pair<int, int>> raw, int n);

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);

/// Text form: `x1 x2^-1 x3`, `1` for the empty word.
std::string format_free_word(const FreeWord& w);
FreeWord parse_free_word(const std::string& text, int n);

/// An endomorphism of F_n given by the images of x_1..x_n.
class FreeAut {
 public:
  static FreeAut identity(int n);
  /// Images are reduced on entry; all must share n.
  FreeAut(int n, std::vector<FreeWord> images);

  int n() const { return n_; }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int index) const { return images_[static_cast<std::size_t>(index - 1)]; }

  /// Total letter count over all images.
  std::size_t weight() const;

  friend bool operator==(const FreeAut&, const FreeAut&) = default;

 private:
  int n_;
  std::vector<FreeWord> images_;
};

FreeWord apply(const FreeAut& phi, const FreeWord& u);

/// Substitution product: compose(phi, psi) sends x_i to apply(phi, psi(x_i)).
///
/// With this orientation the braid representation satisfies
/// nu(u v) = compose(nu(u), nu(v)) for left-to-right braid words; the opposite
/// orientation breaks the mixed wen relations (see the relation suite tests).
FreeAut compose(const FreeAut& phi, const FreeAut& psi);

bool aut_equal(const FreeAut& phi, const FreeAut& psi);

/// Byte string that identifies an automorphism exactly (reduced images are unique).
std::string canonical_key(const FreeAut& phi);

/// A permutation of [1, n] with one sign per point: the image of x_i is
/// conjugate to x_{pi(i)}^{sign(i)}.
struct SignedPerm {
  int n = 0;
  std::vector<int> pi;     // pi[i-1] = pi(i), values in [1, n]
  std::vector<int> signs;  // +1 or -1

  static SignedPerm identity(int n);
  bool is_identity_permutation() const;

  /// Cycles of pi, each listed from its smallest point; cycles ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

/// Signed permutation of compose(phi, psi) given those of phi and psi.
SignedPerm compose(const SignedPerm& phi, const SignedPerm& psi);

struct PCForm {
  int n = 0;
  std::vector<int> pi;
  std::vector<int> signs;
  std::vector<FreeWord> conjugators;

  /// The automorphism x_i -> w_i^-1 x_{pi(i)}^{signs[i]} w_i.
  FreeAut reconstruct() const;
};

PCForm extract_pc_form(const FreeAut& phi);
SignedPerm abelianize(const FreeAut& phi);

}  // namespace lbext
