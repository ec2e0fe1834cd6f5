#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wbck/classify.hpp"
#include "wbck/op_table.hpp"
#include "wbck/verdict.hpp"

namespace wbck {

// An embedded algebra with its expected classification.
struct CorpusEntry {
  std::string name;
  OpTable table;
  std::vector<std::pair<std::string, Tri>> expected;  // class name -> verdict
  std::string note;
};

const std::vector<CorpusEntry>& corpus_entries();
const CorpusEntry* find_corpus_entry(const std::string& name);

// The five-element sectioned poset whose reconstruction fails exactly at the
// two incomparable maximal elements.
const std::string& corpus_unreconstructible_sections();

// Validates every entry and checks every expectation; logs one line per
// entry when a stream is supplied.
Verdict corpus_self_test(std::ostream* log = nullptr);

}  // namespace wbck
