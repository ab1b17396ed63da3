#include "lbext/free_group.hpp"

#include <sstream>

namespace lbext {

namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": generator counts differ (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

// Appends a letter to an already reduced stack, cancelling against the top.
inline void push_reduced(std::vector<FreeLetter>& stack, FreeLetter a) {
  if (!stack.empty() && stack.back() == a.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(a);
  }
}

}  // namespace

FreeWord FreeWord::generator(int n, int index, int exponent) {
  FreeLetter a(index, exponent);
  return reduce(std::span<const FreeLetter>(&a, 1), n);
}

FreeWord reduce(std::span<const FreeLetter> raw, int n) {
  if (n < 1) {
    throw IndexError("generator count must be positive, got " + std::to_string(n));
  }
  FreeWord w(n);
  w.letters_.reserve(raw.size());
  for (FreeLetter a : raw) {
    if (a.index() < 1 || a.index() > n) {
      throw IndexError("free generator index " + std::to_string(a.index()) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    push_reduced(w.letters_, a);
  }
  return w;
}

FreeWord reduce(std::span<const std::pair<int, int>> raw, int n) {
  std::vector<FreeLetter> letters;
  letters.reserve(raw.size());
  for (auto [index, exponent] : raw) {
    if (exponent != 1 && exponent != -1) {
      throw SyntaxError("free letter exponent must be +1 or -1, got " + std::to_string(exponent));
    }
    if (index < 1) {
      throw IndexError("free generator index " + std::to_string(index) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    letters.emplace_back(index, exponent);
  }
  return reduce(letters, n);
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  check_same_n(u.n(), v.n(), "concat");
  FreeWord w = u;
  w.letters_.reserve(u.size() + v.size());
  for (FreeLetter a : v.letters_) push_reduced(w.letters_, a);
  return w;
}

FreeWord invert(const FreeWord& u) {
  FreeWord w(u.n());
  w.letters_.reserve(u.size());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::string format_free_word(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += 'x';
    out += std::to_string(w[k].index());
    if (w[k].exponent() < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<FreeLetter> letters;
  std::string token;
  bool saw_one = false;
  while (in >> token) {
    if (token == "1") {
      saw_one = true;
      continue;
    }
    int exponent = 1;
    std::string body = token;
    if (body.size() > 3 && body.ends_with("^-1")) {
      exponent = -1;
      body.resize(body.size() - 3);
    }
    if (body.size() < 2 || body[0] != 'x' ||
        body.find_first_not_of("0123456789", 1) != std::string::npos || body[1] == '0') {
      throw SyntaxError("bad free-group token '" + token + "'");
    }
    int index = 0;
    try {
      index = std::stoi(body.substr(1));
    } catch (const std::out_of_range&) {
      throw IndexError("index out of range in token '" + token + "'");
    }
    if (index > n) {
      throw IndexError("index out of range in token '" + token + "' for n=" + std::to_string(n));
    }
    letters.emplace_back(index, exponent);
  }
  if (saw_one && !letters.empty()) {
    throw SyntaxError("'1' denotes the empty word and cannot be mixed with letters");
  }
  return reduce(letters, n);
}

FreeAut FreeAut::identity(int n) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(FreeWord::generator(n, i));
  return FreeAut(n, std::move(images));
}

FreeAut::FreeAut(int n, std::vector<FreeWord> images) : n_(n), images_(std::move(images)) {
  if (n < 1) throw IndexError("generator count must be positive");
  if (images_.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("automorphism needs " + std::to_string(n) + " images, got " +
                            std::to_string(images_.size()));
  }
  for (const auto& w : images_) check_same_n(n, w.n(), "FreeAut");
}

std::size_t FreeAut::weight() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.size();
  return total;
}

FreeWord apply(const FreeAut& phi, const FreeWord& u) {
  check_same_n(phi.n(), u.n(), "apply");
  FreeWord w(u.n());
  auto& out = w.letters_;
  for (FreeLetter a : u.letters()) {
    const auto& img = phi.image(a.index()).letters();
    if (a.exponent() > 0) {
      for (FreeLetter b : img) push_reduced(out, b);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, it->inverse());
    }
  }
  return w;
}

FreeAut compose(const FreeAut& phi, const FreeAut& psi) {
  check_same_n(phi.n(), psi.n(), "compose");
  std::vector<FreeWord> images;
  images.reserve(psi.images().size());
  for (const auto& w : psi.images()) images.push_back(apply(phi, w));
  return FreeAut(phi.n(), std::move(images));
}

bool aut_equal(const FreeAut& phi, const FreeAut& psi) {
  check_same_n(phi.n(), psi.n(), "aut_equal");
  return phi == psi;
}

std::string canonical_key(const FreeAut& phi) {
  std::string key;
  key.reserve(phi.weight() * 2 + phi.images().size() * 2);
  auto put = [&key](int v) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  for (const auto& w : phi.images()) {
    for (FreeLetter a : w.letters()) put(a.signed_value());
    put(0);
  }
  return key;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.n = n;
  p.pi.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.pi[static_cast<std::size_t>(i)] = i + 1;
  p.signs.assign(static_cast<std::size_t>(n), 1);
  return p;
}

bool SignedPerm::is_identity_permutation() const {
  for (int i = 0; i < n; ++i) {
    if (pi[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> SignedPerm::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = pi[static_cast<std::size_t>(i - 1)]) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

SignedPerm compose(const SignedPerm& phi, const SignedPerm& psi) {
  check_same_n(phi.n, psi.n, "compose");
  // psi sends x_i to a conjugate of x_j^e (j = psi.pi(i)); phi then sends
  // x_j to a conjugate of x_{phi.pi(j)}^{phi.sign(j)}.
  SignedPerm out;
  out.n = phi.n;
  out.pi.resize(psi.pi.size());
  out.signs.resize(psi.signs.size());
  for (std::size_t i = 0; i < psi.pi.size(); ++i) {
    auto j = static_cast<std::size_t>(psi.pi[i] - 1);
    out.pi[i] = phi.pi[j];
    out.signs[i] = psi.signs[i] * phi.signs[j];
  }
  return out;
}

FreeAut PCForm::reconstruct() const {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    FreeWord core = FreeWord::generator(n, pi[i], signs[i]);
    images.push_back(concat(concat(invert(conjugators[i]), core), conjugators[i]));
  }
  return FreeAut(n, std::move(images));
}

PCForm extract_pc_form(const FreeAut& phi) {
  PCForm form;
  form.n = phi.n();
  std::vector<bool> hit(static_cast<std::size_t>(phi.n()) + 1, false);
  for (int i = 1; i <= phi.n(); ++i) {
    const FreeWord& img = phi.image(i);
    if (img.size() % 2 == 0) {
      throw ImageNotConjugateOfGenerator("image of x" + std::to_string(i) + " has even length " +
                                         std::to_string(img.size()));
    }
    std::size_t k = img.size() / 2;
    for (std::size_t t = 0; t < k; ++t) {
      if (img[t] != img[img.size() - 1 - t].inverse()) {
        throw ImageNotConjugateOfGenerator("image of x" + std::to_string(i) +
                                           " is not a conjugate of a generator: " + format_free_word(img));
      }
    }
    FreeLetter core = img[k];
    if (hit[static_cast<std::size_t>(core.index())]) {
      throw NotAPermutation("core generator x" + std::to_string(core.index()) + " appears twice");
    }
    hit[static_cast<std::size_t>(core.index())] = true;
    form.pi.push_back(core.index());
    form.signs.push_back(core.exponent());
    std::vector<FreeLetter> suffix(img.letters().begin() + static_cast<std::ptrdiff_t>(k + 1),
                                   img.letters().end());
    form.conjugators.push_back(reduce(suffix, phi.n()));
  }
  return form;
}

SignedPerm abelianize(const FreeAut& phi) {
  PCForm form = extract_pc_form(phi);
  return SignedPerm{form.n, std::move(form.pi), std::move(form.signs)};
}

}  // namespace lbext
