#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace biasgraph {

/// One news sentence with its event/article/source coordinates and label.
struct SentenceRecord {
    std::int64_t sentence_id = 0;
    std::int64_t event_id = 0;
    std::int64_t article_id = 0;
    std::string source;
    std::int64_t sent_index = 0; // 0-based position within article
    std::string text;
    int label = 0; // 0 = non-biased, 1 = biased
    std::optional<std::vector<std::string>> entities; // externally annotated
};

/// Immutable, validated sentence collection. Iteration order is canonical:
/// sorted by (event_id, article_id, sent_index).
class Corpus {
public:
    Corpus() = default;
    // Validates all record invariants; throws ValidationError on violation.
    explicit Corpus(std::vector<SentenceRecord> records);

    const std::vector<SentenceRecord>& sentences() const { return sentences_; }
    std::size_t size() const { return sentences_.size(); }
    bool empty() const { return sentences_.empty(); }

    const SentenceRecord& by_id(std::int64_t sentence_id) const;
    bool has_id(std::int64_t sentence_id) const { return by_id_.count(sentence_id) > 0; }
    // Index into sentences() for a sentence id.
    std::size_t index_of(std::int64_t sentence_id) const;

    const std::vector<std::int64_t>& event_ids() const { return event_ids_; }
    const std::vector<std::size_t>& event_sentences(std::int64_t event_id) const;
    const std::vector<std::size_t>& article_sentences(std::int64_t article_id) const;
    const std::vector<std::int64_t>& article_ids() const { return article_ids_; }
    const std::vector<std::string>& sources() const { return sources_; }

private:
    void build_indexes();
    void validate() const;

    std::vector<SentenceRecord> sentences_;
    std::unordered_map<std::int64_t, std::size_t> by_id_;
    std::map<std::int64_t, std::vector<std::size_t>> by_event_;
    std::map<std::int64_t, std::vector<std::size_t>> by_article_;
    std::vector<std::int64_t> event_ids_;   // sorted
    std::vector<std::int64_t> article_ids_; // sorted
    std::vector<std::string> sources_;      // sorted unique
};

struct StatsSummary {
    std::size_t sentences = 0;
    std::size_t biased = 0;
    std::size_t events = 0;
    std::size_t articles = 0;
    std::size_t sources = 0;
    std::map<std::int64_t, std::size_t> per_event_sentences;
};

/// Event-wise cross-validation plan. Every event lands in exactly one test
/// set across the k folds.
struct FoldPlan {
    struct Fold {
        std::set<std::int64_t> train_events;
        std::set<std::int64_t> val_events;
        std::set<std::int64_t> test_events;
    };
    std::vector<Fold> folds;
    int k = 0;
    std::uint64_t seed = 0;
};

struct SynthConfig {
    int n_events = 120;
    int articles_per_event = 3;
    int sentences_per_article = 12;
    double bias_rate = 0.15;
    int n_cue_tokens = 16;        // global pool of ambiguous cue words
    int n_filler_tokens = 400;    // global filler vocabulary
    int entities_per_event = 5;   // one contested + rest background
    int active_cues_per_event = 3;
    int event_filler_pool = 10;   // per-event filler subset (paraphrase clusters)
    std::uint64_t seed = 1;
};

// Line-delimited record files (one JSON object per line; field names are part
// of the format contract).
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);
std::string serialize_corpus(const Corpus& corpus);
Corpus parse_corpus(const std::string& text); // same format, from memory

StatsSummary corpus_stats(const Corpus& corpus);

// Seeded event permutation split into k contiguous blocks; block i is test
// for fold i, block i+1 (mod k) is val, the rest train.
FoldPlan event_folds(const Corpus& corpus, int k, std::uint64_t seed);

std::string serialize_fold_plan(const FoldPlan& plan);
void save_fold_plan(const FoldPlan& plan, const std::string& path);
FoldPlan load_fold_plan(const std::string& path);

// Synthetic corpus with planted context-dependent bias signal. Deterministic
// per config.seed.
Corpus generate_synthetic_corpus(const SynthConfig& config);

} // namespace biasgraph
