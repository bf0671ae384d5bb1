#pragma once

#include "biasgraph/corpus.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace biasgraph {

struct TokenizedSentence {
    std::vector<std::string> tokens;
    std::vector<bool> is_capitalized;
    std::vector<bool> is_sentence_initial;
};

/// Lowercase marker phrases, possibly multi-word ("in addition").
class MarkerLexicon {
public:
    MarkerLexicon();                                         // built-in default set
    explicit MarkerLexicon(std::vector<std::string> phrases); // validated + lowercased
    static MarkerLexicon from_file(const std::string& path);  // one phrase per line, # comments

    const std::vector<std::vector<std::string>>& phrases() const { return phrases_; }
    std::size_t size() const { return phrases_.size(); }

private:
    // tokenized phrases, longest (in tokens) first
    std::vector<std::vector<std::string>> phrases_;
};

// Splits on whitespace and punctuation; punctuation characters become
// single-character tokens, apostrophes stay inside words.
TokenizedSentence tokenize_sentence(const std::string& text);

// Longest lexicon phrase matching the sentence-initial word tokens,
// case-insensitively. Leading punctuation (quotes etc.) is skipped; a comma
// after the marker is permitted but not required.
std::optional<std::string> detect_discourse_opener(const TokenizedSentence& sentence,
                                                   const MarkerLexicon& lexicon);

// True iff a verb-form token of `earlier` and a noun-form token of `later`
// share a stem under the deverbal suffix rules. Asymmetric in its arguments.
bool deverbal_link(const TokenizedSentence& earlier, const TokenizedSentence& later);

// Annotated entities take precedence; otherwise capitalized-run heuristic.
// `article_caps` holds casefolded words seen capitalized mid-sentence anywhere
// in the containing article (empty set = sentence-local evidence only).
std::set<std::string> extract_entities(const SentenceRecord& sentence);
std::set<std::string> extract_entities(const SentenceRecord& sentence,
                                       const std::set<std::string>& article_caps);

// Casefolded words capitalized at a non-initial position, for the
// sentence-initial exclusion rule.
std::set<std::string> midsentence_capitalized_words(const TokenizedSentence& sentence);

std::string casefold(const std::string& s);

} // namespace biasgraph
