#include "lbext/conjugacy.hpp"

#include <deque>
#include <unordered_set>

namespace lbext {

namespace {

std::string render(const std::vector<CycleData>& cycles) {
  std::string s = "[";
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (k) s += ",";
    s += "[" + std::to_string(cycles[k].first) + "," + std::to_string(cycles[k].second) + "]";
  }
  return s + "]";
}

std::string render(const ClosureInvariant& inv) {
  return "{\"components\":" + std::to_string(inv.components) + ",\"cycles\":" + render(inv.cycles) +
         ",\"sigma_parity\":" + std::to_string(inv.sigma_parity) + "}";
}

void check_same_n(const BraidWord& u, const BraidWord& v, const char* what) {
  if (u.n() != v.n()) {
    throw DimensionMismatch(std::string(what) + ": strand counts differ (" + std::to_string(u.n()) +
                            " vs " + std::to_string(v.n()) + ")");
  }
}

}  // namespace

std::vector<GenLetter> search_alphabet(int n) {
  std::vector<GenLetter> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back(GenLetter::sigma(i, 1));
    gens.push_back(GenLetter::sigma(i, -1));
  }
  for (int i = 1; i < n; ++i) gens.push_back(GenLetter::rho(i));
  for (int i = 1; i <= n; ++i) gens.push_back(GenLetter::tau(i));
  return gens;
}

std::optional<Distinguished> refute(const BraidWord& b1, const BraidWord& b2) {
  check_same_n(b1, b2, "refute");

  int p1 = sigma_parity(b1);
  int p2 = sigma_parity(b2);
  if (p1 != p2) return Distinguished{"sigma_parity", std::to_string(p1), std::to_string(p2)};

  auto t1 = signed_cycle_type(permutation(b1));
  auto t2 = signed_cycle_type(permutation(b2));
  if (t1 != t2) return Distinguished{"signed_cycle_type", render(t1), render(t2)};

  bool c1 = is_closable(b1);
  bool c2 = is_closable(b2);
  if (c1 && c2) {
    auto i1 = closure_invariants(b1);
    auto i2 = closure_invariants(b2);
    if (!(i1 == i2)) return Distinguished{"closure_invariants", render(i1), render(i2)};
  }
  if (c1 != c2) return Distinguished{"closable", c1 ? "true" : "false", c2 ? "true" : "false"};
  return std::nullopt;
}

ConjugacyVerdict search_witness(const BraidWord& b1, const BraidWord& b2, const SearchConfig& cfg) {
  check_same_n(b1, b2, "search_witness");
  if (cfg.radius < 0) throw Error("search radius must be non-negative");
  if (cfg.node_budget < 1) throw Error("search node budget must be at least 1");

  if (auto reason = refute(b1, b2)) return *reason;

  const int n = b1.n();
  const std::string target = canonical_key(nu(b2));
  const auto gens = search_alphabet(n);

  struct Node {
    FreeAut state;  // nu(gamma b1 gamma^-1)
    BraidWord gamma;
  };

  FreeAut start = nu(b1);
  std::unordered_set<std::string> seen{canonical_key(start)};
  if (*seen.begin() == target) return Conjugate{BraidWord(n), 0};

  std::size_t visited = 1;
  std::deque<Node> frontier;
  frontier.push_back({std::move(start), BraidWord(n)});

  for (int layer = 1; layer <= cfg.radius; ++layer) {
    std::deque<Node> next;
    for (const Node& node : frontier) {
      for (const GenLetter& g : gens) {
        // g (gamma b1 gamma^-1) g^-1
        FreeAut state = generator_times(g, times_generator(node.state, g.inverse()));
        std::string key = canonical_key(state);
        if (!seen.insert(key).second) continue;

        std::vector<GenLetter> letters;
        letters.reserve(node.gamma.size() + 1);
        letters.push_back(g);
        letters.insert(letters.end(), node.gamma.letters().begin(), node.gamma.letters().end());
        BraidWord gamma(n, std::move(letters));
        if (key == target) return Conjugate{std::move(gamma), layer};

        if (++visited >= cfg.node_budget) return Unknown{layer - 1, visited};
        next.push_back({std::move(state), std::move(gamma)});
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;  // the whole conjugacy class has been enumerated
  }
  return Unknown{cfg.radius, visited};
}

bool check_certificate(const BraidWord& b1, const BraidWord& b2, const BraidWord& gamma) {
  check_same_n(b1, b2, "check_certificate");
  check_same_n(b1, gamma, "check_certificate");
  return aut_equal(nu(conjugate(b1, gamma)), nu(b2));
}

TauNormalForm normal_form_conjugator(const BraidWord& gamma) { return tau_normal_form(gamma); }

}  // namespace lbext
