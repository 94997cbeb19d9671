#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toulmin/document.hpp"

namespace toulmin {

struct CorpusEntry {
  std::string name;
  // Relative to the repository root.
  std::string source_path;
  std::vector<std::string> golden_paths;
};

std::span<const CorpusEntry> corpus_entries();
const CorpusEntry* find_corpus_entry(std::string_view name);

/// Repository root the corpus paths are relative to (fixed at build time).
std::filesystem::path default_repository_root();

/// Parses the named entry. Throws Error(unknown-reference) for an unknown
/// name and Error with the parse diagnostics if the file does not parse.
Document load_corpus_entry(std::string_view name,
                           const std::filesystem::path& root = default_repository_root());

}  // namespace toulmin
