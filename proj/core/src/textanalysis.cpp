#include "biasgraph/textanalysis.hpp"

#include "biasgraph/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

namespace biasgraph {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '\''; }

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_word_token(const std::string& t) {
    return !t.empty() && is_word_char(static_cast<unsigned char>(t[0]));
}

std::vector<std::string> split_words(const std::string& phrase) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : phrase) {
        if (is_word_char(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

const std::array<const char*, 20> kDefaultMarkers = {
    "however",       "meanwhile",   "furthermore",       "moreover",
    "nevertheless",  "nonetheless", "therefore",         "thus",
    "consequently",  "instead",     "still",             "yet",
    "additionally",  "in addition", "on the other hand", "in contrast",
    "as a result",   "similarly",   "likewise",          "besides"};

// longest first so the longest stem survives stripping
const std::array<const char*, 9> kDeverbalSuffixes = {
    "ation", "tion", "sion", "ment", "ance", "ence", "ure", "ing", "al"};

const std::array<const char*, 4> kHonorifics = {"mr", "ms", "mrs", "dr"};

bool is_honorific(const std::string& folded) {
    for (const char* h : kHonorifics)
        if (folded == h) return true;
    return false;
}

// drop a trailing 'e' so announce/announc compare equal
std::string normalize_stem(std::string stem) {
    if (!stem.empty() && stem.back() == 'e') stem.pop_back();
    return stem;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

std::string casefold(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

TokenizedSentence tokenize_sentence(const std::string& text) {
    if (trim_copy(text).empty()) throw ArgumentError("cannot tokenize empty text");
    TokenizedSentence ts;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            ts.tokens.push_back(cur);
            cur.clear();
        }
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            flush();
        } else if (is_word_char(c)) {
            cur += ch;
        } else {
            flush();
            ts.tokens.push_back(std::string(1, ch));
        }
    }
    flush();
    for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
        const std::string& t = ts.tokens[i];
        ts.is_capitalized.push_back(!t.empty() &&
                                    std::isupper(static_cast<unsigned char>(t[0])));
        ts.is_sentence_initial.push_back(i == 0);
    }
    return ts;
}

MarkerLexicon::MarkerLexicon() {
    std::vector<std::string> defaults(kDefaultMarkers.begin(), kDefaultMarkers.end());
    *this = MarkerLexicon(std::move(defaults));
}

MarkerLexicon::MarkerLexicon(std::vector<std::string> raw) {
    for (auto& phrase : raw) {
        std::string folded = casefold(trim_copy(phrase));
        if (folded.empty()) continue;
        auto words = split_words(folded);
        if (words.empty()) continue;
        phrases_.push_back(std::move(words));
    }
    if (phrases_.empty()) throw ValidationError("marker lexicon is empty");
    std::sort(phrases_.begin(), phrases_.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    phrases_.erase(std::unique(phrases_.begin(), phrases_.end()), phrases_.end());
}

MarkerLexicon MarkerLexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open marker lexicon: " + path);
    std::vector<std::string> phrases;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_copy(line);
        if (!line.empty()) phrases.push_back(line);
    }
    return MarkerLexicon(std::move(phrases));
}

std::optional<std::string> detect_discourse_opener(const TokenizedSentence& sentence,
                                                   const MarkerLexicon& lexicon) {
    // word tokens from the front, skipping opening quotes/brackets
    std::vector<std::string> lead;
    for (const auto& t : sentence.tokens) {
        if (is_word_token(t)) {
            lead.push_back(casefold(t));
            if (lead.size() >= 8) break;
        } else if (!lead.empty()) {
            break; // punctuation after the first word ends the candidate span
        }
    }
    for (const auto& phrase : lexicon.phrases()) { // longest first
        if (phrase.size() > lead.size()) continue;
        if (std::equal(phrase.begin(), phrase.end(), lead.begin())) {
            std::string joined;
            for (const auto& w : phrase) {
                if (!joined.empty()) joined += " ";
                joined += w;
            }
            return joined;
        }
    }
    return std::nullopt;
}

namespace {

// candidate lexical stems for a verb-form token (token itself plus
// inflection-stripped variants), all normalized
void verb_stem_candidates(const std::string& folded, std::set<std::string>& out) {
    static const std::array<const char*, 5> kInflections = {"ing", "ed", "es", "s", "d"};
    auto add = [&](const std::string& s) {
        std::string n = normalize_stem(s);
        if (n.size() >= 3) out.insert(n);
    };
    add(folded);
    for (const char* inf : kInflections) {
        std::string suffix(inf);
        if (folded.size() > suffix.size() && ends_with(folded, suffix))
            add(folded.substr(0, folded.size() - suffix.size()));
    }
}

bool plausible_common_word(const TokenizedSentence& ts, std::size_t i) {
    // skip capitalized mid-sentence tokens (proper nouns) and non-words
    const std::string& t = ts.tokens[i];
    if (!is_word_token(t) || t.size() < 3) return false;
    if (ts.is_capitalized[i] && !ts.is_sentence_initial[i]) return false;
    return true;
}

} // namespace

bool deverbal_link(const TokenizedSentence& earlier, const TokenizedSentence& later) {
    std::set<std::string> verb_stems;
    for (std::size_t i = 0; i < earlier.tokens.size(); ++i) {
        if (!plausible_common_word(earlier, i)) continue;
        verb_stem_candidates(casefold(earlier.tokens[i]), verb_stems);
    }
    if (verb_stems.empty()) return false;

    for (std::size_t i = 0; i < later.tokens.size(); ++i) {
        if (!plausible_common_word(later, i)) continue;
        std::string folded = casefold(later.tokens[i]);
        for (const char* suf : kDeverbalSuffixes) {
            std::string suffix(suf);
            if (folded.size() <= suffix.size() || !ends_with(folded, suffix)) continue;
            std::string stem = normalize_stem(folded.substr(0, folded.size() - suffix.size()));
            if (stem.size() >= 3 && verb_stems.count(stem)) return true;
        }
    }
    return false;
}

std::set<std::string> midsentence_capitalized_words(const TokenizedSentence& sentence) {
    std::set<std::string> out;
    for (std::size_t i = 1; i < sentence.tokens.size(); ++i) {
        if (sentence.is_capitalized[i] && is_word_token(sentence.tokens[i]))
            out.insert(casefold(sentence.tokens[i]));
    }
    return out;
}

namespace {

// strip honorific tokens and casefold; empty result means "drop this entity"
std::string normalize_entity_phrase(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        std::string folded = casefold(w);
        if (is_honorific(folded)) continue;
        if (!out.empty()) out += " ";
        out += folded;
    }
    return out;
}

} // namespace

std::set<std::string> extract_entities(const SentenceRecord& sentence) {
    return extract_entities(sentence, {});
}

std::set<std::string> extract_entities(const SentenceRecord& sentence,
                                       const std::set<std::string>& article_caps) {
    std::set<std::string> out;
    if (sentence.entities) {
        for (const auto& e : *sentence.entities) {
            std::string norm = normalize_entity_phrase(split_words(e));
            if (!norm.empty()) out.insert(norm);
        }
        return out;
    }

    TokenizedSentence ts = tokenize_sentence(sentence.text);
    std::set<std::string> caps = article_caps;
    for (const auto& w : midsentence_capitalized_words(ts)) caps.insert(w);

    std::size_t i = 0;
    while (i < ts.tokens.size()) {
        if (!(ts.is_capitalized[i] && is_word_token(ts.tokens[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::vector<std::string> run;
        while (j < ts.tokens.size() && ts.is_capitalized[j] && is_word_token(ts.tokens[j])) {
            run.push_back(ts.tokens[j]);
            ++j;
        }
        bool keep = true;
        if (i == 0 && run.size() < 2) {
            // a lone sentence-initial capital counts only with corroboration
            keep = caps.count(casefold(run[0])) > 0;
        }
        if (keep) {
            std::string norm = normalize_entity_phrase(run);
            if (!norm.empty()) out.insert(norm);
        }
        i = j;
    }
    return out;
}

} // namespace biasgraph
