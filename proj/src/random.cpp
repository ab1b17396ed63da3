#include "lbext/random.hpp"

namespace lbext {

GenLetter random_letter(int n, Rng& rng) {
  const auto sigma_count = static_cast<std::uint64_t>(2 * (n - 1));
  const auto rho_count = static_cast<std::uint64_t>(n - 1);
  const auto total = sigma_count + rho_count + static_cast<std::uint64_t>(n);
  // Modulo bias is below 2^-55 for any realistic n.
  std::uint64_t k = rng() % total;
  if (k < sigma_count) return GenLetter::sigma(static_cast<int>(k / 2) + 1, k % 2 == 0 ? 1 : -1);
  k -= sigma_count;
  if (k < rho_count) return GenLetter::rho(static_cast<int>(k) + 1);
  k -= rho_count;
  return GenLetter::tau(static_cast<int>(k) + 1);
}

BraidWord random_word(int n, std::size_t length, Rng& rng) {
  BraidWord b(n);
  for (std::size_t k = 0; k < length; ++k) b.push_back(random_letter(n, rng));
  return b;
}

}  // namespace lbext
