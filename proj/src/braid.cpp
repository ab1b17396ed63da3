#include "lbext/braid.hpp"

#include <sstream>

namespace lbext {

namespace {

const char* kind_prefix(GenKind k) {
  switch (k) {
    case GenKind::Sigma:
      return "s";
    case GenKind::Rho:
      return "r";
    case GenKind::Tau:
      return "t";
  }
  return "?";
}

void check_same_n(const BraidWord& u, const BraidWord& v, const char* what) {
  if (u.n() != v.n()) {
    throw DimensionMismatch(std::string(what) + ": strand counts differ (" + std::to_string(u.n()) +
                            " vs " + std::to_string(v.n()) + ")");
  }
}

}  // namespace

bool GenLetter::valid_for(int n) const {
  if (exponent != 1 && exponent != -1) return false;
  if (kind == GenKind::Tau) return exponent == 1 && index >= 1 && index <= n;
  if (kind == GenKind::Rho && exponent != 1) return false;
  return index >= 1 && index <= n - 1;
}

std::string format_letter(const GenLetter& g) {
  std::string s = kind_prefix(g.kind) + std::to_string(g.index);
  if (g.exponent < 0) s += "^-1";
  return s;
}

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw IndexError("strand count must be at least 1, got " + std::to_string(n));
}

BraidWord::BraidWord(int n, std::vector<GenLetter> letters) : BraidWord(n) {
  letters_ = std::move(letters);
  for (const auto& g : letters_) {
    if (!g.valid_for(n)) {
      throw IndexError("letter " + format_letter(g) + " is not valid on " + std::to_string(n) + " strands");
    }
  }
}

void BraidWord::push_back(const GenLetter& g) {
  if (!g.valid_for(n_)) {
    throw IndexError("letter " + format_letter(g) + " is not valid on " + std::to_string(n_) + " strands");
  }
  letters_.push_back(g);
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  check_same_n(u, v, "concatenation");
  BraidWord w = u;
  w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
  return w;
}

BraidWord parse_word(const std::string& text, int n) {
  BraidWord b(n);
  std::istringstream in(text);
  std::string token;
  bool saw_one = false;
  while (in >> token) {
    if (token == "1") {
      saw_one = true;
      continue;
    }
    GenLetter g;
    switch (token[0]) {
      case 's':
        g.kind = GenKind::Sigma;
        break;
      case 'r':
        g.kind = GenKind::Rho;
        break;
      case 't':
        g.kind = GenKind::Tau;
        break;
      default:
        throw SyntaxError("bad token '" + token + "'");
    }
    std::string digits = token.substr(1);
    if (digits.ends_with("^-1")) {
      if (g.kind != GenKind::Sigma) {
        throw SyntaxError("bad token '" + token + "': only sigma letters take ^-1");
      }
      g.exponent = -1;
      digits.resize(digits.size() - 3);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits[0] == '0') {
      throw SyntaxError("bad token '" + token + "'");
    }
    if (digits.size() > 9) throw IndexError("index out of range in token '" + token + "'");
    g.index = std::stoi(digits);
    if (!g.valid_for(n)) {
      throw IndexError("index out of range in token '" + token + "' for n=" + std::to_string(n));
    }
    b.push_back(g);
  }
  if (saw_one && !b.empty()) {
    throw SyntaxError("'1' denotes the empty word and cannot be mixed with letters");
  }
  return b;
}

std::string format_word(const BraidWord& b) {
  if (b.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) out += ' ';
    out += format_letter(b.letters()[k]);
  }
  return out;
}

FreeAut generator_aut(int n, const GenLetter& g) {
  return times_generator(FreeAut::identity(n), g);
}

// Images of x_i under a single generator, as short letter lists.
//   sigma_i      : x_i -> x_{i+1},           x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//   sigma_i^-1   : x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
//   rho_i        : x_i <-> x_{i+1}
//   tau_i        : x_i -> x_i^-1
FreeAut times_generator(const FreeAut& phi, const GenLetter& g) {
  const int n = phi.n();
  if (!g.valid_for(n)) {
    throw IndexError("letter " + format_letter(g) + " is not valid on " + std::to_string(n) + " strands");
  }
  std::vector<FreeWord> images = phi.images();
  const int i = g.index;
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i);
  // compose(phi, gen) sends x_k to phi(gen(x_k)).
  switch (g.kind) {
    case GenKind::Tau:
      images[a] = invert(phi.images()[a]);
      break;
    case GenKind::Rho:
      std::swap(images[a], images[b]);
      break;
    case GenKind::Sigma: {
      const FreeWord& pa = phi.images()[a];
      const FreeWord& pb = phi.images()[b];
      if (g.exponent > 0) {
        images[a] = pb;
        images[b] = concat(concat(invert(pb), pa), pb);
      } else {
        images[a] = concat(concat(pa, pb), invert(pa));
        images[b] = pa;
      }
      break;
    }
  }
  return FreeAut(n, std::move(images));
}

FreeAut generator_times(const GenLetter& g, const FreeAut& phi) {
  return compose(generator_aut(phi.n(), g), phi);
}

FreeAut nu(const BraidWord& b) {
  FreeAut phi = FreeAut::identity(b.n());
  for (const auto& g : b.letters()) phi = times_generator(phi, g);
  return phi;
}

bool word_equal(const BraidWord& u, const BraidWord& v) {
  check_same_n(u, v, "word_equal");
  return aut_equal(nu(u), nu(v));
}

BraidWord invert_word(const BraidWord& b) {
  std::vector<GenLetter> letters;
  letters.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(b.n(), std::move(letters));
}

SignedPerm permutation(const BraidWord& b) { return abelianize(nu(b)); }

bool is_pure(const BraidWord& b) { return permutation(b).is_identity_permutation(); }

int sigma_parity(const BraidWord& b) {
  int parity = 0;
  for (const auto& g : b.letters()) {
    if (g.kind == GenKind::Sigma) parity ^= 1;
  }
  return parity;
}

// Derived from the relations
//   tau_i rho_i = rho_i tau_{i+1},  tau_i sigma_i = sigma_i tau_{i+1},
//   tau_{i+1} sigma_i = rho_i sigma_i^-1 rho_i tau_i,  tau_i^2 = 1
// and the far commutations. Each rule has the shape x tau_j = tau_{j'} y.
TauSwap push_tau_left(const GenLetter& x, int j) {
  const int i = x.index;
  if (x.kind == GenKind::Tau) throw Error("push_tau_left: letter is a tau");
  if (j != i && j != i + 1) return {j, {x}};
  if (x.kind == GenKind::Rho) {
    // rho_i tau_{i+1} = tau_i rho_i ; rho_i tau_i = tau_{i+1} rho_i
    return {j == i ? i + 1 : i, {x}};
  }
  if (x.exponent > 0) {
    if (j == i + 1) return {i, {x}};  // sigma_i tau_{i+1} = tau_i sigma_i
    // sigma_i tau_i = tau_{i+1} rho_i sigma_i^-1 rho_i
    return {i + 1, {GenLetter::rho(i), GenLetter::sigma(i, -1), GenLetter::rho(i)}};
  }
  if (j == i) return {i + 1, {x}};  // sigma_i^-1 tau_i = tau_{i+1} sigma_i^-1
  // sigma_i^-1 tau_{i+1} = tau_i rho_i sigma_i rho_i
  return {i, {GenLetter::rho(i), GenLetter::sigma(i, 1), GenLetter::rho(i)}};
}

TauNormalForm tau_normal_form(const BraidWord& b) {
  const int n = b.n();
  std::vector<bool> prefix(static_cast<std::size_t>(n) + 1, false);
  std::vector<GenLetter> alpha;
  for (const auto& g : b.letters()) {
    if (g.kind != GenKind::Tau) {
      alpha.push_back(g);
      continue;
    }
    // alpha * tau_j: walk tau_j leftwards through alpha, rewriting as it goes.
    int j = g.index;
    std::vector<GenLetter> rewritten;
    rewritten.reserve(alpha.size() + 4);
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
      TauSwap step = push_tau_left(*it, j);
      j = step.tau_index;
      for (auto r = step.replacement.rbegin(); r != step.replacement.rend(); ++r) rewritten.push_back(*r);
    }
    alpha.assign(rewritten.rbegin(), rewritten.rend());
    prefix[static_cast<std::size_t>(j)] = !prefix[static_cast<std::size_t>(j)];
  }

  // rho_i^2 = 1 and sigma_i sigma_i^-1 = 1 tidy up what the swaps leave behind.
  std::vector<GenLetter> cancelled;
  cancelled.reserve(alpha.size());
  for (const auto& g : alpha) {
    if (!cancelled.empty() && cancelled.back() == g.inverse()) {
      cancelled.pop_back();
    } else {
      cancelled.push_back(g);
    }
  }

  TauNormalForm nf{BraidWord(n), BraidWord(n, std::move(cancelled))};
  for (int i = 1; i <= n; ++i) {
    if (prefix[static_cast<std::size_t>(i)]) nf.tau_prefix.push_back(GenLetter::tau(i));
  }
  return nf;
}

const std::vector<RelationFamily>& relation_families() {
  static const std::vector<RelationFamily> families = {
      {1, "s_i s_j = s_j s_i, |i-j| > 1"},
      {2, "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}"},
      {3, "r_i r_j = r_j r_i, |i-j| > 1"},
      {4, "r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}"},
      {5, "r_i^2 = 1"},
      {6, "r_i s_j = s_j r_i, |i-j| > 1"},
      {7, "r_{i+1} r_i s_{i+1} = s_i r_{i+1} r_i"},
      {8, "s_{i+1} s_i r_{i+1} = r_i s_{i+1} s_i"},
      {9, "t_i t_j = t_j t_i, i != j"},
      {10, "t_i^2 = 1"},
      {11, "s_i t_j = t_j s_i, |i-j| > 1"},
      {12, "r_i t_j = t_j r_i, |i-j| > 1"},
      {13, "t_i r_i = r_i t_{i+1}"},
      {14, "t_i s_i = s_i t_{i+1}"},
      {15, "t_{i+1} s_i = r_i s_i^-1 r_i t_i"},
  };
  return families;
}

bool RelationReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

std::vector<RelationCheck> relation_instances(int n) {
  using G = GenLetter;
  std::vector<RelationCheck> out;
  auto add = [&](int family, std::vector<int> idx, std::vector<G> lhs, std::vector<G> rhs) {
    out.push_back({family, std::move(idx), BraidWord(n, std::move(lhs)), BraidWord(n, std::move(rhs)), false});
  };
  auto far = [](int i, int j) { return i - j > 1 || j - i > 1; };
  const int m = n - 1;  // sigma/rho index range is [1, m]

  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (far(i, j)) add(1, {i, j}, {G::sigma(i), G::sigma(j)}, {G::sigma(j), G::sigma(i)});
  for (int i = 1; i <= n - 2; ++i)
    add(2, {i}, {G::sigma(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (far(i, j)) add(3, {i, j}, {G::rho(i), G::rho(j)}, {G::rho(j), G::rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add(4, {i}, {G::rho(i), G::rho(i + 1), G::rho(i)}, {G::rho(i + 1), G::rho(i), G::rho(i + 1)});
  for (int i = 1; i <= m; ++i) add(5, {i}, {G::rho(i), G::rho(i)}, {});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (far(i, j)) add(6, {i, j}, {G::rho(i), G::sigma(j)}, {G::sigma(j), G::rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add(7, {i}, {G::rho(i + 1), G::rho(i), G::sigma(i + 1)}, {G::sigma(i), G::rho(i + 1), G::rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add(8, {i}, {G::sigma(i + 1), G::sigma(i), G::rho(i + 1)}, {G::rho(i), G::sigma(i + 1), G::sigma(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) add(9, {i, j}, {G::tau(i), G::tau(j)}, {G::tau(j), G::tau(i)});
  for (int i = 1; i <= n; ++i) add(10, {i}, {G::tau(i), G::tau(i)}, {});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (far(i, j)) add(11, {i, j}, {G::sigma(i), G::tau(j)}, {G::tau(j), G::sigma(i)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (far(i, j)) add(12, {i, j}, {G::rho(i), G::tau(j)}, {G::tau(j), G::rho(i)});
  for (int i = 1; i <= m; ++i) add(13, {i}, {G::tau(i), G::rho(i)}, {G::rho(i), G::tau(i + 1)});
  for (int i = 1; i <= m; ++i) add(14, {i}, {G::tau(i), G::sigma(i)}, {G::sigma(i), G::tau(i + 1)});
  for (int i = 1; i <= m; ++i)
    add(15, {i}, {G::tau(i + 1), G::sigma(i)}, {G::rho(i), G::sigma(i, -1), G::rho(i), G::tau(i)});
  return out;
}

RelationReport relation_suite(int n) {
  RelationReport report{n, relation_instances(n)};
  for (auto& e : report.entries) e.pass = word_equal(e.lhs, e.rhs);
  return report;
}

}  // namespace lbext
