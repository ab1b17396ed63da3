#include "lbext/export.hpp"

#include <sstream>

namespace lbext {

Document to_document(const FreeAut& phi) {
  Document doc;
  doc["n"] = phi.n();
  doc["images"] = Document::array();
  for (const auto& w : phi.images()) doc["images"].push_back(format_free_word(w));
  return doc;
}

Document to_document(const PCForm& form) {
  Document doc;
  doc["n"] = form.n;
  doc["pi"] = form.pi;
  doc["signs"] = form.signs;
  doc["conjugators"] = Document::array();
  for (const auto& w : form.conjugators) doc["conjugators"].push_back(format_free_word(w));
  return doc;
}

Document to_document(const ClosureInvariant& inv) {
  Document doc;
  doc["n"] = inv.n;
  doc["components"] = inv.components;
  doc["cycles"] = Document::array();
  for (const auto& [len, sign] : inv.cycles) doc["cycles"].push_back({len, sign});
  doc["sigma_parity"] = inv.sigma_parity;
  return doc;
}

Document to_document(const ConjugacyVerdict& verdict) {
  Document doc;
  if (const auto* c = std::get_if<Conjugate>(&verdict)) {
    doc["verdict"] = "conjugate";
    doc["witness"] = format_word(c->witness);
    doc["radius"] = c->radius;
  } else if (const auto* d = std::get_if<Distinguished>(&verdict)) {
    doc["verdict"] = "distinguished";
    doc["invariant"] = d->invariant;
    doc["values"] = {Document::parse(d->first_value), Document::parse(d->second_value)};
    doc["radius"] = 0;
  } else {
    const auto& u = std::get<Unknown>(verdict);
    doc["verdict"] = "unknown";
    doc["radius"] = u.radius;
  }
  return doc;
}

Document to_document(const TauNormalForm& nf) {
  Document doc;
  doc["pi_tau"] = format_word(nf.tau_prefix);
  doc["alpha"] = format_word(nf.tau_free);
  return doc;
}

std::string relation_table(const RelationReport& report) {
  const auto& families = relation_families();
  std::ostringstream out;
  out << "family\trelation\tindices\tstatus\n";
  for (const auto& e : report.entries) {
    out << e.family << '\t' << families[static_cast<std::size_t>(e.family - 1)].text << '\t';
    for (std::size_t k = 0; k < e.indices.size(); ++k) out << (k ? "," : "") << e.indices[k];
    out << '\t' << (e.pass ? "pass" : "FAIL") << '\n';
  }
  return out.str();
}

namespace {

int read_n(const Document& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error("document needs an integer field \"n\"");
  }
  return doc["n"].get<int>();
}

std::vector<FreeWord> read_words(const Document& doc, const char* key, int n) {
  if (!doc.contains(key) || !doc[key].is_array()) throw Error(std::string("document needs an array \"") + key + "\"");
  std::vector<FreeWord> words;
  for (const auto& item : doc[key]) {
    if (!item.is_string()) throw Error(std::string("\"") + key + "\" entries must be word strings");
    words.push_back(parse_free_word(item.get<std::string>(), n));
  }
  return words;
}

std::vector<int> read_ints(const Document& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw Error(std::string("document needs an array \"") + key + "\"");
  std::vector<int> out;
  for (const auto& item : doc[key]) {
    if (!item.is_number_integer()) throw Error(std::string("\"") + key + "\" entries must be integers");
    out.push_back(item.get<int>());
  }
  return out;
}

}  // namespace

FreeAut free_aut_from_document(const Document& doc) {
  int n = read_n(doc);
  return FreeAut(n, read_words(doc, "images", n));
}

PCForm pc_form_from_document(const Document& doc) {
  PCForm form;
  form.n = read_n(doc);
  form.pi = read_ints(doc, "pi");
  form.signs = read_ints(doc, "signs");
  form.conjugators = read_words(doc, "conjugators", form.n);
  const auto n = static_cast<std::size_t>(form.n);
  if (form.pi.size() != n || form.signs.size() != n || form.conjugators.size() != n) {
    throw DimensionMismatch("PC-form arrays must all have length n");
  }
  std::vector<bool> hit(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    int p = form.pi[i];
    if (p < 1 || p > form.n || hit[static_cast<std::size_t>(p)]) throw NotAPermutation("\"pi\" is not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
    if (form.signs[i] != 1 && form.signs[i] != -1) throw Error("\"signs\" entries must be +1 or -1");
  }
  return form;
}

}  // namespace lbext
