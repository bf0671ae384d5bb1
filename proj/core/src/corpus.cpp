#include "biasgraph/corpus.hpp"

#include "biasgraph/errors.hpp"
#include "biasgraph/rng.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace biasgraph {

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Corpus::Corpus(std::vector<SentenceRecord> records) : sentences_(std::move(records)) {
    std::stable_sort(sentences_.begin(), sentences_.end(),
                     [](const SentenceRecord& a, const SentenceRecord& b) {
                         if (a.event_id != b.event_id) return a.event_id < b.event_id;
                         if (a.article_id != b.article_id) return a.article_id < b.article_id;
                         return a.sent_index < b.sent_index;
                     });
    validate();
    build_indexes();
}

void Corpus::validate() const {
    std::unordered_map<std::int64_t, int> seen_ids;
    std::unordered_map<std::int64_t, std::pair<std::int64_t, std::string>> article_owner;
    std::map<std::int64_t, std::vector<std::int64_t>> article_indices;

    for (const auto& r : sentences_) {
        if (!seen_ids.emplace(r.sentence_id, 1).second)
            throw ValidationError("duplicate sentence_id " + std::to_string(r.sentence_id));
        if (r.label != 0 && r.label != 1)
            throw ValidationError("label outside {0,1} for sentence_id " +
                                  std::to_string(r.sentence_id));
        if (trim_copy(r.text).empty())
            throw ValidationError("empty text for sentence_id " + std::to_string(r.sentence_id));
        auto it = article_owner.find(r.article_id);
        if (it == article_owner.end()) {
            article_owner.emplace(r.article_id, std::make_pair(r.event_id, r.source));
        } else if (it->second.first != r.event_id || it->second.second != r.source) {
            throw ValidationError("article " + std::to_string(r.article_id) +
                                  " maps to more than one event or source");
        }
        article_indices[r.article_id].push_back(r.sent_index);
    }
    for (auto& [aid, idx] : article_indices) {
        std::sort(idx.begin(), idx.end());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] != static_cast<std::int64_t>(i)) {
                if (i > 0 && idx[i] == idx[i - 1])
                    throw ValidationError("duplicate sent_index " + std::to_string(idx[i]) +
                                          " in article " + std::to_string(aid));
                throw ValidationError("non-contiguous sent_index in article " +
                                      std::to_string(aid) + " (expected " + std::to_string(i) +
                                      ", got " + std::to_string(idx[i]) + ")");
            }
        }
    }
}

void Corpus::build_indexes() {
    std::set<std::string> srcs;
    for (std::size_t i = 0; i < sentences_.size(); ++i) {
        const auto& r = sentences_[i];
        by_id_.emplace(r.sentence_id, i);
        by_event_[r.event_id].push_back(i);
        by_article_[r.article_id].push_back(i);
        srcs.insert(r.source);
    }
    for (const auto& [eid, _] : by_event_) event_ids_.push_back(eid);
    for (const auto& [aid, _] : by_article_) article_ids_.push_back(aid);
    sources_.assign(srcs.begin(), srcs.end());
}

const SentenceRecord& Corpus::by_id(std::int64_t sentence_id) const {
    return sentences_[index_of(sentence_id)];
}

std::size_t Corpus::index_of(std::int64_t sentence_id) const {
    auto it = by_id_.find(sentence_id);
    if (it == by_id_.end())
        throw ValidationError("unknown sentence_id " + std::to_string(sentence_id));
    return it->second;
}

const std::vector<std::size_t>& Corpus::event_sentences(std::int64_t event_id) const {
    auto it = by_event_.find(event_id);
    if (it == by_event_.end())
        throw ValidationError("unknown event_id " + std::to_string(event_id));
    return it->second;
}

const std::vector<std::size_t>& Corpus::article_sentences(std::int64_t article_id) const {
    auto it = by_article_.find(article_id);
    if (it == by_article_.end())
        throw ValidationError("unknown article_id " + std::to_string(article_id));
    return it->second;
}

namespace {

SentenceRecord record_from_json(const nlohmann::json& j, long line_no) {
    auto need = [&](const char* field) -> const nlohmann::json& {
        auto it = j.find(field);
        if (it == j.end())
            throw ParseError(std::string("missing field '") + field + "'", line_no);
        return *it;
    };
    SentenceRecord r;
    try {
        r.sentence_id = need("sentence_id").get<std::int64_t>();
        r.event_id = need("event_id").get<std::int64_t>();
        r.article_id = need("article_id").get<std::int64_t>();
        r.source = need("source").get<std::string>();
        r.sent_index = need("sent_index").get<std::int64_t>();
        r.text = need("text").get<std::string>();
        r.label = need("label").get<int>();
        if (j.contains("entities")) {
            r.entities = j.at("entities").get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field type: ") + e.what(), line_no);
    }
    return r;
}

std::vector<SentenceRecord> parse_records(std::istream& in) {
    std::vector<SentenceRecord> records;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim_copy(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw ParseError("malformed record", line_no);
        records.push_back(record_from_json(j, line_no));
    }
    return records;
}

} // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open corpus file: " + path);
    return Corpus(parse_records(in));
}

Corpus parse_corpus(const std::string& text) {
    std::istringstream in(text);
    return Corpus(parse_records(in));
}

std::string serialize_corpus(const Corpus& corpus) {
    std::string out;
    for (const auto& r : corpus.sentences()) {
        nlohmann::ordered_json j;
        j["sentence_id"] = r.sentence_id;
        j["event_id"] = r.event_id;
        j["article_id"] = r.article_id;
        j["source"] = r.source;
        j["sent_index"] = r.sent_index;
        j["text"] = r.text;
        j["label"] = r.label;
        if (r.entities) j["entities"] = *r.entities;
        out += j.dump();
        out += '\n';
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeFailure("cannot write corpus file: " + path);
    out << serialize_corpus(corpus);
}

StatsSummary corpus_stats(const Corpus& corpus) {
    StatsSummary s;
    std::set<std::int64_t> events, articles;
    std::set<std::string> sources;
    for (const auto& r : corpus.sentences()) {
        ++s.sentences;
        if (r.label == 1) ++s.biased;
        events.insert(r.event_id);
        articles.insert(r.article_id);
        sources.insert(r.source);
        ++s.per_event_sentences[r.event_id];
    }
    s.events = events.size();
    s.articles = articles.size();
    s.sources = sources.size();
    return s;
}

FoldPlan event_folds(const Corpus& corpus, int k, std::uint64_t seed) {
    const auto& events = corpus.event_ids();
    if (k < 3) throw ArgumentError("k must be >= 3 (need disjoint train/val/test)");
    if (static_cast<std::size_t>(k) > events.size())
        throw ArgumentError("k = " + std::to_string(k) + " exceeds event count " +
                            std::to_string(events.size()));

    std::vector<std::int64_t> order = events;
    Rng rng = Rng::derive(seed, "event-folds");
    rng.shuffle(order);

    // Contiguous blocks over the shuffled order; first (n % k) blocks get one
    // extra event.
    const std::size_t n = order.size();
    const std::size_t base = n / static_cast<std::size_t>(k);
    const std::size_t rem = n % static_cast<std::size_t>(k);
    std::vector<std::vector<std::int64_t>> blocks;
    std::size_t pos = 0;
    for (int b = 0; b < k; ++b) {
        std::size_t len = base + (static_cast<std::size_t>(b) < rem ? 1 : 0);
        blocks.emplace_back(order.begin() + pos, order.begin() + pos + len);
        pos += len;
    }

    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    for (int i = 0; i < k; ++i) {
        FoldPlan::Fold fold;
        fold.test_events.insert(blocks[i].begin(), blocks[i].end());
        const auto& val_block = blocks[(i + 1) % k];
        fold.val_events.insert(val_block.begin(), val_block.end());
        for (std::int64_t e : order) {
            if (!fold.test_events.count(e) && !fold.val_events.count(e))
                fold.train_events.insert(e);
        }
        plan.folds.push_back(std::move(fold));
    }
    return plan;
}

std::string serialize_fold_plan(const FoldPlan& plan) {
    nlohmann::ordered_json j;
    j["k"] = plan.k;
    j["seed"] = plan.seed;
    j["folds"] = nlohmann::json::array();
    for (const auto& f : plan.folds) {
        nlohmann::ordered_json jf;
        jf["train"] = f.train_events;
        jf["val"] = f.val_events;
        jf["test"] = f.test_events;
        j["folds"].push_back(jf);
    }
    return j.dump(2) + "\n";
}

void save_fold_plan(const FoldPlan& plan, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeFailure("cannot write fold plan: " + path);
    out << serialize_fold_plan(plan);
}

FoldPlan load_fold_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open fold plan: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed fold plan: " + path);
    FoldPlan plan;
    try {
        plan.k = j.at("k").get<int>();
        plan.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& jf : j.at("folds")) {
            FoldPlan::Fold f;
            for (auto e : jf.at("train")) f.train_events.insert(e.get<std::int64_t>());
            for (auto e : jf.at("val")) f.val_events.insert(e.get<std::int64_t>());
            for (auto e : jf.at("test")) f.test_events.insert(e.get<std::int64_t>());
            plan.folds.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad fold plan: ") + e.what());
    }
    return plan;
}

} // namespace biasgraph
