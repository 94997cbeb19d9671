#include "toulmin/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "toulmin/dsl.hpp"

#ifndef TOULMIN_SOURCE_DIR
#define TOULMIN_SOURCE_DIR "."
#endif

namespace toulmin {

namespace {

CorpusEntry entry(std::string name, bool golden) {
  CorpusEntry e{name, "corpus/" + name + ".tlm", {}};
  if (golden) {
    e.golden_paths = {"corpus/golden/" + name + ".dot", "corpus/golden/" + name + ".json"};
  }
  return e;
}

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> all = {
      entry("zermelo", false),      entry("theaetetus", true),   entry("sqrt2", true),
      entry("ivt", false),          entry("fct_alcolea", false), entry("fct_aberdein", false),
      entry("carroll_frag", true),  entry("vitrac_frag", false), entry("euclid_i4", false),
  };
  return all;
}

}  // namespace

std::span<const CorpusEntry> corpus_entries() { return entries(); }

const CorpusEntry* find_corpus_entry(std::string_view name) {
  const auto& all = entries();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

std::filesystem::path default_repository_root() { return TOULMIN_SOURCE_DIR; }

Document load_corpus_entry(std::string_view name, const std::filesystem::path& root) {
  const auto* e = find_corpus_entry(name);
  if (!e) {
    throw Error(codes::unknown_reference, "no corpus entry named '" + std::string(name) + "'");
  }
  std::ifstream in(root / e->source_path, std::ios::binary);
  if (!in) {
    throw Error(codes::unknown_reference,
                "cannot read corpus file '" + (root / e->source_path).string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto parsed = parse_document(text.str());
  if (!parsed.ok()) throw Error(std::move(parsed.diagnostics));
  return std::move(*parsed.value);
}

}  // namespace toulmin
