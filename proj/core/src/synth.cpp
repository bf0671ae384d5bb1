#include "biasgraph/corpus.hpp"
#include "biasgraph/errors.hpp"
#include "biasgraph/rng.hpp"

#include <array>
#include <string>
#include <vector>

namespace biasgraph {

namespace {

constexpr std::array<const char*, 50> kSyllables = {
    "ba", "be", "bi", "bo", "bu", "da", "de", "di", "do", "du", "ka", "ke", "ki",
    "ko", "ku", "la", "le", "li", "lo", "lu", "ma", "me", "mi", "mo", "mu", "na",
    "ne", "ni", "no", "nu", "ra", "re", "ri", "ro", "ru", "sa", "se", "si", "so",
    "su", "ta", "te", "ti", "to", "tu", "va", "ve", "vi", "vo", "vu"};

// Index ranges keep the three vocabularies disjoint.
constexpr std::size_t kCueBase = 60000;
constexpr std::size_t kEntityBase = 70000;

std::string pseudo_word(std::size_t idx) {
    std::string w;
    w += kSyllables[(idx / 2500) % 50];
    w += kSyllables[(idx / 50) % 50];
    w += kSyllables[idx % 50];
    return w;
}

std::string capitalized(std::string w) {
    if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
    return w;
}

const std::vector<std::pair<std::string, std::string>> kVerbNounPairs = {
    {"announce", "announcement"}, {"resign", "resignation"},
    {"reject", "rejection"},      {"approve", "approval"},
    {"depart", "departure"},      {"investigate", "investigation"},
    {"agree", "agreement"},       {"appear", "appearance"}};

const std::vector<std::string> kContinuationMarkers = {
    "however", "meanwhile", "furthermore", "moreover", "therefore", "instead"};

const std::vector<std::string> kPseudoSources = {
    "herald", "courier", "tribune", "gazette", "sentinel", "beacon", "register"};

std::string past_tense(const std::string& verb) {
    return verb.back() == 'e' ? verb + "d" : verb + "ed";
}

struct EventSetup {
    std::string contested;                  // entity phrase driving the bias signal
    std::vector<std::string> background;    // remaining entity phrases
    std::vector<std::string> active_cues;   // cues that mark bias in this event
    std::vector<std::string> inactive_cues; // same cue pool, neutral here
    std::vector<std::string> pool_fillers;  // per-event paraphrase vocabulary
};

} // namespace

Corpus generate_synthetic_corpus(const SynthConfig& cfg) {
    if (cfg.n_events <= 0 || cfg.articles_per_event <= 0 || cfg.sentences_per_article <= 0)
        throw ArgumentError("synthetic corpus counts must be positive");
    if (!(cfg.bias_rate > 0.0 && cfg.bias_rate < 1.0))
        throw ArgumentError("bias_rate must lie strictly between 0 and 1");
    if (cfg.active_cues_per_event < 2)
        throw ArgumentError("need at least 2 active cues per event");
    if (cfg.n_cue_tokens < cfg.active_cues_per_event + 2)
        throw ArgumentError("cue vocabulary too small to leave ambiguous cues");
    if (cfg.entities_per_event < 2)
        throw ArgumentError("need at least 2 entities per event");
    if (cfg.event_filler_pool < 3 || cfg.n_filler_tokens < cfg.event_filler_pool ||
        cfg.n_filler_tokens < 8)
        throw ArgumentError("filler vocabulary too small");
    if (cfg.n_filler_tokens > 50000) throw ArgumentError("filler vocabulary too large");

    std::vector<std::string> cue_words;
    for (int i = 0; i < cfg.n_cue_tokens; ++i)
        cue_words.push_back(pseudo_word(kCueBase + static_cast<std::size_t>(i)));

    Rng rng = Rng::derive(cfg.seed, "synth");
    std::vector<SentenceRecord> records;
    std::int64_t sentence_id = 0;
    std::int64_t article_id = 0;

    for (int e = 0; e < cfg.n_events; ++e) {
        EventSetup ev;
        for (int j = 0; j < cfg.entities_per_event; ++j) {
            std::size_t base = kEntityBase +
                               2 * (static_cast<std::size_t>(e) * cfg.entities_per_event +
                                    static_cast<std::size_t>(j));
            std::string phrase = capitalized(pseudo_word(base)) + " " +
                                 capitalized(pseudo_word(base + 1));
            if (j == 0)
                ev.contested = phrase;
            else
                ev.background.push_back(phrase);
        }
        std::vector<int> cue_order(cue_words.size());
        for (std::size_t i = 0; i < cue_order.size(); ++i) cue_order[i] = static_cast<int>(i);
        rng.shuffle(cue_order);
        for (std::size_t i = 0; i < cue_order.size(); ++i) {
            if (i < static_cast<std::size_t>(cfg.active_cues_per_event))
                ev.active_cues.push_back(cue_words[cue_order[i]]);
            else
                ev.inactive_cues.push_back(cue_words[cue_order[i]]);
        }
        for (int i = 0; i < cfg.event_filler_pool; ++i)
            ev.pool_fillers.push_back(
                pseudo_word(static_cast<std::size_t>(rng.below(cfg.n_filler_tokens))));

        std::size_t background_rr = 0; // round-robin so no background entity is a singleton

        for (int a = 0; a < cfg.articles_per_event; ++a) {
            std::string source = kPseudoSources[a % kPseudoSources.size()];
            int prev_label = 0;
            int prev_pair = -1; // verb planted in previous sentence, -1 if none

            for (int s = 0; s < cfg.sentences_per_article; ++s) {
                const int label = rng.bernoulli(cfg.bias_rate) ? 1 : 0;
                std::vector<std::string> words;
                std::vector<std::string> mentioned;
                std::string marker;
                int planted_pair = -1;

                auto draw_global_filler = [&] {
                    return pseudo_word(static_cast<std::size_t>(rng.below(cfg.n_filler_tokens)));
                };
                auto draw_two_cues = [&](const std::vector<std::string>& pool) {
                    std::size_t i1 = rng.below(pool.size());
                    std::size_t i2 = rng.below(pool.size() - 1);
                    if (i2 >= i1) ++i2;
                    words.push_back(pool[i1]);
                    words.push_back(pool[i2]);
                };

                if (label == 1) {
                    draw_two_cues(ev.active_cues);
                    if (prev_label == 1 && prev_pair >= 0) {
                        // marked continuation: nominalizes the previous action
                        marker = rng.pick(kContinuationMarkers);
                        words.push_back(kVerbNounPairs[prev_pair].second);
                    } else {
                        planted_pair = static_cast<int>(rng.below(kVerbNounPairs.size()));
                        words.push_back(past_tense(kVerbNounPairs[planted_pair].first));
                    }
                    for (int i = 0; i < 3; ++i) words.push_back(rng.pick(ev.pool_fillers));
                    words.push_back(draw_global_filler());
                    mentioned.push_back(ev.contested);
                } else {
                    const double flavor = rng.real01();
                    if (flavor < 0.25) {
                        // ambiguous: cue words without the contested entity
                        draw_two_cues(ev.inactive_cues);
                        mentioned.push_back(ev.background[background_rr++ % ev.background.size()]);
                        for (int i = 0; i < 3; ++i) words.push_back(draw_global_filler());
                    } else if (flavor < 0.60) {
                        mentioned.push_back(ev.background[background_rr++ % ev.background.size()]);
                        for (int i = 0; i < 4; ++i) words.push_back(draw_global_filler());
                    } else {
                        for (int i = 0; i < 5; ++i) words.push_back(draw_global_filler());
                    }
                    if (prev_label == 0) {
                        if (prev_pair >= 0 && rng.bernoulli(0.3))
                            words.push_back(kVerbNounPairs[prev_pair].second);
                        if (rng.bernoulli(0.15)) marker = rng.pick(kContinuationMarkers);
                    }
                    if (rng.bernoulli(0.15)) {
                        planted_pair = static_cast<int>(rng.below(kVerbNounPairs.size()));
                        words.push_back(past_tense(kVerbNounPairs[planted_pair].first));
                    }
                }

                rng.shuffle(words);
                // entity phrase inserted as a unit, anywhere but position 0 so the
                // capitalized run is unambiguous
                if (!mentioned.empty()) {
                    std::size_t pos = 1 + rng.below(words.size());
                    std::vector<std::string> with_entity;
                    for (std::size_t i = 0; i < words.size(); ++i) {
                        if (i == pos) {
                            with_entity.push_back(mentioned.front());
                        }
                        with_entity.push_back(words[i]);
                    }
                    if (pos >= words.size()) with_entity.push_back(mentioned.front());
                    words = std::move(with_entity);
                }

                std::string text;
                if (!marker.empty()) text = capitalized(marker) + ",";
                for (const auto& w : words) {
                    if (!text.empty()) text += " ";
                    text += w;
                }
                if (marker.empty()) text = capitalized(text);
                text += ".";

                SentenceRecord rec;
                rec.sentence_id = sentence_id++;
                rec.event_id = e;
                rec.article_id = article_id;
                rec.source = source;
                rec.sent_index = s;
                rec.text = text;
                rec.label = label;
                rec.entities = mentioned;
                records.push_back(std::move(rec));

                prev_label = label;
                prev_pair = planted_pair;
            }
            ++article_id;
        }
    }
    return Corpus(std::move(records));
}

} // namespace biasgraph
