#pragma once

#include <cstddef>

namespace khexp::detail {

struct EmbeddedFile {
  const char* name;
  const char* content;
};

// Defined in the generated corpus_embedded.cpp (see cmake/embed_corpus.cmake);
// mirrors the data/ directory shipped with the sources.
extern const EmbeddedFile kEmbeddedCorpus[];
extern const std::size_t kEmbeddedCorpusCount;

}  // namespace khexp::detail
