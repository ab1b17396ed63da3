#include "lbext/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include <CLI11.hpp>

#include "lbext/export.hpp"
#include "lbext/random.hpp"

namespace lbext::cli {

namespace {

int print_bool(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << '\n';
  return value ? kTrue : kFalse;
}

Document closure_document(const BraidWord& b) {
  SignedPerm p = permutation(b);
  Document doc;
  doc["n"] = b.n();
  doc["closable"] = is_closable(b);
  doc["components"] = Document::array();
  for (const auto& cycle : p.cycles()) {
    int parity = 0;
    for (int i : cycle) parity ^= p.signs[static_cast<std::size_t>(i - 1)] < 0 ? 1 : 0;
    Document c;
    c["strands"] = cycle;
    c["wen_parity"] = parity;
    doc["components"].push_back(std::move(c));
  }
  return doc;
}

StabKind parse_stab_kind(const std::string& s) {
  if (s == "positive") return StabKind::SigmaPlus;
  if (s == "negative") return StabKind::SigmaMinus;
  if (s == "welded") return StabKind::RhoType;
  throw SyntaxError("bad stabilization kind '" + s + "' (expected positive, negative or welded)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in extended loop braid groups", "lbext"};
  app.require_subcommand(1);

  int n = 0;
  std::string w1, w2, w3;
  int radius = 3;
  std::size_t budget = 1'000'000;
  int max_n = 6;
  bool verbose = false;
  std::size_t length = 10;
  std::uint64_t seed = 1;
  std::string kind = "positive";

  auto strands = [&n](CLI::App* sub) {
    sub->add_option("-n", n, "Strand count")->required()->check(CLI::PositiveNumber);
  };

  auto* eq = app.add_subcommand("eq", "Decide whether two words are the same braid");
  strands(eq);
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();

  auto* invariants = app.add_subcommand("invariants", "Closure invariants of a closable braid");
  strands(invariants);
  invariants->add_option("word", w1)->required();

  auto* close = app.add_subcommand("close", "Components of the closure with their wen parity");
  strands(close);
  close->add_option("word", w1)->required();

  auto* closable = app.add_subcommand("closable", "Whether every closed component carries an even number of wens");
  strands(closable);
  closable->add_option("word", w1)->required();

  auto* conj = app.add_subcommand("conj", "Refute or search for a conjugating witness");
  strands(conj);
  conj->add_option("--radius", radius, "Maximum conjugator length")->check(CLI::NonNegativeNumber);
  conj->add_option("--budget", budget, "Maximum automorphisms visited")->check(CLI::PositiveNumber);
  conj->add_option("w1", w1)->required();
  conj->add_option("w2", w2)->required();

  auto* certify = app.add_subcommand("certify", "Check that G W1 G^-1 equals W2");
  strands(certify);
  certify->add_option("w1", w1)->required();
  certify->add_option("w2", w2)->required();
  certify->add_option("gamma", w3)->required();

  auto* nf = app.add_subcommand("nf", "Split a word as (tau prefix) * (tau-free word)");
  strands(nf);
  nf->add_option("word", w1)->required();

  auto* selftest = app.add_subcommand("selftest", "Verify every defining relation through the representation");
  selftest->add_option("--max-n", max_n, "Largest strand count to check")->check(CLI::PositiveNumber);
  selftest->add_flag("--verbose,-v", verbose, "Print the full relation table");

  auto* random = app.add_subcommand("random", "Print a seeded pseudorandom word");
  strands(random);
  random->add_option("--len", length, "Word length");
  random->add_option("--seed", seed, "Generator seed");

  auto* nu_cmd = app.add_subcommand("nu", "Image of a word in Aut(F_n)");
  strands(nu_cmd);
  nu_cmd->add_option("word", w1)->required();

  auto* pc = app.add_subcommand("pc", "PC-form (permutation, signs, conjugators) of a word's image");
  strands(pc);
  pc->add_option("word", w1)->required();

  auto* stab = app.add_subcommand("stabilize", "Right stabilization onto n+1 strands");
  strands(stab);
  stab->add_option("--kind", kind, "positive, negative or welded");
  stab->add_option("word", w1)->required();

  auto* destab = app.add_subcommand("destabilize", "Remove a trailing right stabilization");
  strands(destab);
  destab->add_option("word", w1)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    if (eq->parsed()) return print_bool(out, word_equal(parse_word(w1, n), parse_word(w2, n)));
    if (invariants->parsed()) {
      out << to_document(closure_invariants(parse_word(w1, n))).dump() << '\n';
      return kTrue;
    }
    if (close->parsed()) {
      BraidWord b = parse_word(w1, n);
      out << closure_document(b).dump() << '\n';
      return is_closable(b) ? kTrue : kFalse;
    }
    if (closable->parsed()) return print_bool(out, is_closable(parse_word(w1, n)));
    if (conj->parsed()) {
      SearchConfig cfg{radius, budget};
      ConjugacyVerdict v = search_witness(parse_word(w1, n), parse_word(w2, n), cfg);
      out << to_document(v).dump() << '\n';
      if (std::holds_alternative<Conjugate>(v)) return kTrue;
      if (std::holds_alternative<Distinguished>(v)) return kFalse;
      return kUnknown;
    }
    if (certify->parsed()) {
      return print_bool(out, check_certificate(parse_word(w1, n), parse_word(w2, n), parse_word(w3, n)));
    }
    if (nf->parsed()) {
      out << to_document(normal_form_conjugator(parse_word(w1, n))).dump() << '\n';
      return kTrue;
    }
    if (selftest->parsed()) {
      bool ok = true;
      for (int k = 1; k <= max_n; ++k) {
        RelationReport report = relation_suite(k);
        auto passed = std::count_if(report.entries.begin(), report.entries.end(),
                                    [](const RelationCheck& c) { return c.pass; });
        out << "n=" << k << ": " << passed << "/" << report.entries.size() << " relations pass\n";
        if (verbose) out << relation_table(report);
        ok = ok && report.all_pass();
      }
      return ok ? kTrue : kFalse;
    }
    if (random->parsed()) {
      Rng rng(seed);
      out << format_word(random_word(n, length, rng)) << '\n' << "seed " << seed << '\n';
      return kTrue;
    }
    if (nu_cmd->parsed()) {
      out << to_document(nu(parse_word(w1, n))).dump() << '\n';
      return kTrue;
    }
    if (pc->parsed()) {
      out << to_document(extract_pc_form(nu(parse_word(w1, n)))).dump() << '\n';
      return kTrue;
    }
    if (stab->parsed()) {
      StabKind k = parse_stab_kind(kind);
      BraidWord s = stabilize(parse_word(w1, n), k);
      out << format_word(s) << '\n' << "n " << s.n() << '\n';
      return kTrue;
    }
    if (destab->parsed()) {
      BraidWord d = destabilize(parse_word(w1, n));
      out << format_word(d) << '\n' << "n " << d.n() << '\n';
      return kTrue;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace lbext::cli
