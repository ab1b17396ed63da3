#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbext/braid.hpp"
#include "lbext/export.hpp"
#include "test_support.hpp"

using namespace lbext;
using testing::F;
using testing::W;

namespace {

FreeWord from_pairs(std::vector<std::pair<int, int>> raw, int n) { return reduce(raw, n); }

FreeWord random_free_word(Rng& rng, int n, int max_len) {
  std::vector<FreeLetter> letters;
  auto len = rng() % static_cast<std::uint64_t>(max_len + 1);
  for (std::uint64_t k = 0; k < len; ++k) {
    int index = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    letters.emplace_back(index, rng() % 2 ? 1 : -1);
  }
  return reduce(letters, n);
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(from_pairs({{1, 1}, {1, -1}}, 2).empty());
  CHECK(oracle::raw(from_pairs({{2, 1}, {1, 1}, {1, -1}, {2, 1}}, 2)) == oracle::Raw{2, 2});

  // Cascade: x1 x2 x2^-1 x1^-1 x3. Oracle first, then the implementation.
  oracle::Raw cascade{1, 2, -2, -1, 3};
  REQUIRE(oracle::fixpoint_reduce(cascade) == oracle::Raw{3});
  CHECK(oracle::raw(from_pairs({{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}}, 3)) == oracle::Raw{3});
}

TEST_CASE("reduce rejects out-of-range indices") {
  CHECK_THROWS_AS(from_pairs({{3, 1}}, 2), IndexError);
  CHECK_THROWS_AS(from_pairs({{0, 1}}, 2), IndexError);
  CHECK_THROWS_AS(from_pairs({{1, 2}}, 2), SyntaxError);
}

TEST_CASE("reduce agrees with fixpoint cancellation and is idempotent") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<FreeLetter> letters;
    oracle::Raw raw;
    auto len = rng() % 25;
    for (std::uint64_t k = 0; k < len; ++k) {
      int v = (1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n))) * (rng() % 2 ? 1 : -1);
      letters.push_back(FreeLetter::from_signed(v));
      raw.push_back(v);
    }
    FreeWord w = reduce(letters, n);
    CHECK(oracle::raw(w) == oracle::fixpoint_reduce(raw));
    CHECK(reduce(w.letters(), n) == w);
  }
}

TEST_CASE("concat") {
  CHECK(concat(F("x1", 2), F("x1^-1", 2)).empty());
  CHECK(concat(F("x1 x2", 3), F("x2^-1 x3", 3)) == F("x1 x3", 3));
  CHECK(concat(FreeWord(3), F("x2 x1^-1", 3)) == F("x2 x1^-1", 3));
  CHECK_THROWS_AS(concat(F("x1", 2), F("x1", 3)), DimensionMismatch);
}

TEST_CASE("invert") {
  CHECK(invert(F("x1 x2", 2)) == F("x2^-1 x1^-1", 2));
  CHECK(invert(FreeWord(2)).empty());
  CHECK(invert(F("x2^-1 x1 x2", 2)) == F("x2^-1 x1^-1 x2", 2));

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    FreeWord u = random_free_word(rng, 4, 20);
    CHECK(concat(u, invert(u)).empty());
    CHECK(concat(invert(u), u).empty());
  }
}

TEST_CASE("text form") {
  CHECK(format_free_word(FreeWord(3)) == "1");
  CHECK(format_free_word(F("x3 x1^-1", 3)) == "x3 x1^-1");
  CHECK(F("1", 2).empty());
  CHECK(F("x1 x1^-1 x2", 2) == F("x2", 2));
  CHECK_THROWS_AS(F("x4", 3), IndexError);
  CHECK_THROWS_AS(F("y1", 3), SyntaxError);
  CHECK_THROWS_AS(F("x1^2", 3), SyntaxError);
  CHECK_THROWS_AS(F("x0", 3), SyntaxError);
  CHECK_THROWS_AS(F("1 x1", 3), SyntaxError);
}

TEST_CASE("apply substitutes images") {
  CHECK(apply(nu(W("s1", 2)), F("x1", 2)) == F("x2", 2));
  CHECK(apply(nu(W("t1", 2)), F("x1 x2", 2)) == F("x1^-1 x2", 2));
  FreeWord u = F("x2 x1^-1 x3 x3", 3);
  CHECK(apply(FreeAut::identity(3), u) == u);
  CHECK_THROWS_AS(apply(FreeAut::identity(2), u), DimensionMismatch);
}

TEST_CASE("compose") {
  CHECK(compose(nu(W("r1", 2)), nu(W("r1", 2))) == FreeAut::identity(2));
  CHECK(compose(nu(W("t1", 2)), nu(W("t1", 2))) == FreeAut::identity(2));
  FreeAut phi = nu(W("s1 t2 r1 s1^-1", 2));
  CHECK(compose(phi, FreeAut::identity(2)) == phi);
  CHECK(compose(FreeAut::identity(2), phi) == phi);
  CHECK_THROWS_AS(compose(phi, FreeAut::identity(3)), DimensionMismatch);
}

TEST_CASE("compose is substitution of psi's images through phi") {
  // Frozen orientation: apply(compose(phi, psi), u) == apply(phi, apply(psi, u)).
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    FreeAut phi = nu(testing::random_word_on(rng, n, 8));
    FreeAut psi = nu(testing::random_word_on(rng, n, 8));
    FreeAut chi = nu(testing::random_word_on(rng, n, 8));
    FreeWord u = random_free_word(rng, n, 20);
    CHECK(apply(compose(phi, psi), u) == apply(phi, apply(psi, u)));
    CHECK(compose(compose(phi, psi), chi) == compose(phi, compose(psi, chi)));
  }
}

TEST_CASE("aut_equal") {
  CHECK(aut_equal(nu(W("s1 s2 s1", 3)), nu(W("s2 s1 s2", 3))));
  // Oracle: substitution by hand gives x2 -> x2^-1 x1 x2 under s1, x2 -> x1 under r1.
  REQUIRE(oracle::images(W("s1", 2))[1] == oracle::Raw{-2, 1, 2});
  REQUIRE(oracle::images(W("r1", 2))[1] == oracle::Raw{1});
  CHECK_FALSE(aut_equal(nu(W("s1", 2)), nu(W("r1", 2))));
  FreeAut phi = nu(W("t1 s1 r1", 2));
  CHECK(aut_equal(phi, phi));
  CHECK_THROWS_AS(aut_equal(phi, FreeAut::identity(3)), DimensionMismatch);
}

TEST_CASE("extract_pc_form") {
  PCForm s = extract_pc_form(nu(W("s1", 2)));
  CHECK(s.pi == std::vector<int>{2, 1});
  CHECK(s.signs == std::vector<int>{1, 1});
  CHECK(s.conjugators[0].empty());
  CHECK(s.conjugators[1] == F("x2", 2));

  PCForm t = extract_pc_form(nu(W("t2", 2)));
  CHECK(t.pi == std::vector<int>{1, 2});
  CHECK(t.signs == std::vector<int>{1, -1});
  CHECK(t.conjugators[0].empty());
  CHECK(t.conjugators[1].empty());

  FreeAut not_pc(2, {F("x1 x2", 2), F("x2", 2)});
  CHECK_THROWS_AS(extract_pc_form(not_pc), ImageNotConjugateOfGenerator);
  FreeAut lopsided(2, {F("x2 x1 x2", 2), F("x2", 2)});
  CHECK_THROWS_AS(extract_pc_form(lopsided), ImageNotConjugateOfGenerator);
  FreeAut collide(2, {F("x1", 2), F("x2 x1 x2^-1", 2)});
  CHECK_THROWS_AS(extract_pc_form(collide), NotAPermutation);
}

TEST_CASE("PC-form reconstruction round trip") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    FreeAut phi = nu(testing::random_word(rng, 1, 6, 20));
    PCForm form = extract_pc_form(phi);
    CHECK(form.reconstruct() == phi);
    // |w_i| = k for an image of length 2k+1.
    for (int i = 1; i <= phi.n(); ++i) {
      CHECK(2 * form.conjugators[static_cast<std::size_t>(i - 1)].size() + 1 == phi.image(i).size());
    }
  }
}

TEST_CASE("abelianize") {
  SignedPerm r = abelianize(nu(W("r1", 3)));
  CHECK(r.pi == std::vector<int>{2, 1, 3});
  CHECK(r.signs == std::vector<int>{1, 1, 1});

  // Oracle: x1 -> x1^-1, x2 -> x2^-1 by substitution.
  REQUIRE(oracle::images(W("t1 t2", 2)) == std::vector<oracle::Raw>{{-1}, {-2}});
  SignedPerm tt = abelianize(nu(W("t1 t2", 2)));
  CHECK(tt.pi == std::vector<int>{1, 2});
  CHECK(tt.signs == std::vector<int>{-1, -1});

  CHECK(abelianize(FreeAut::identity(4)) == SignedPerm::identity(4));
}

TEST_CASE("abelianize is a homomorphism to signed permutations") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    FreeAut phi = nu(testing::random_word_on(rng, n, 12));
    FreeAut psi = nu(testing::random_word_on(rng, n, 12));
    CHECK(abelianize(compose(phi, psi)) == compose(abelianize(phi), abelianize(psi)));
  }
}

TEST_CASE("signed permutation cycles") {
  SignedPerm p{5, {3, 1, 2, 5, 4}, {1, -1, 1, 1, 1}};
  auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<int>{1, 3, 2});
  CHECK(cycles[1] == std::vector<int>{4, 5});
  CHECK_FALSE(p.is_identity_permutation());
}

TEST_CASE("key-value documents") {
  FreeAut phi = nu(W("s1 t2", 2));
  Document doc = to_document(phi);
  CHECK(doc.dump() == R"({"n":2,"images":["x2","x2^-1 x1^-1 x2"]})");
  CHECK(free_aut_from_document(Document::parse(doc.dump())) == phi);

  PCForm form = extract_pc_form(nu(W("s1", 2)));
  CHECK(to_document(form).dump() == R"({"n":2,"pi":[2,1],"signs":[1,1],"conjugators":["1","x2"]})");
  PCForm back = pc_form_from_document(to_document(form));
  CHECK(back.reconstruct() == nu(W("s1", 2)));

  CHECK_THROWS_AS(free_aut_from_document(Document::parse(R"({"n":2,"images":["x1"]})")), DimensionMismatch);
  CHECK_THROWS_AS(pc_form_from_document(Document::parse(R"({"n":2,"pi":[1,1],"signs":[1,1],"conjugators":["1","1"]})")),
                  NotAPermutation);
  CHECK_THROWS_AS(free_aut_from_document(Document::parse(R"({"images":[]})")), Error);
}

TEST_CASE("canonical key separates images") {
  FreeAut a(2, {F("x1 x2", 2), F("x2", 2)});
  FreeAut b(2, {F("x1", 2), F("x2 x2", 2)});
  CHECK(canonical_key(a) != canonical_key(b));
  CHECK(canonical_key(a) == canonical_key(FreeAut(2, {F("x1 x2", 2), F("x2", 2)})));
}
