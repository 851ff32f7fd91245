#pragma once

#include <optional>

#include "arrzeta/arrangement.hpp"

#include <nlohmann/json.hpp>

namespace arrzeta {

struct LiteratureNote {
  Rat candidate;
  std::string note;
};

struct CorpusEntry {
  std::string name;
  std::string title;
  std::string source_text;
  Arrangement arrangement;
  nlohmann::json expect;  // annotation block, possibly empty
  std::vector<LiteratureNote> literature;
};

// Locates the corpus directory: $ARRZETA_CORPUS_DIR if set, then ./corpus,
// then the build-time source path.
std::string corpus_dir();

std::vector<CorpusEntry> load_corpus();
CorpusEntry load_corpus_entry(const std::string& name);

// Input resolution for CLI-style references: "corpus:<name>", "-" (stdin
// content passed by caller), or a file path.
Arrangement resolve_input(const std::string& ref);

}  // namespace arrzeta
