#pragma once

#include "biasgraph/corpus.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biasgraph {

/// Contrastive training triple. All three sentences share one event; the
/// positive shares the anchor's label from a different article, the negative
/// differs in label within the anchor's article.
struct Triplet {
    std::int64_t anchor_id = 0;
    std::int64_t positive_id = 0;
    std::int64_t negative_id = 0;

    bool operator==(const Triplet&) const = default;
    auto operator<=>(const Triplet&) const = default;
};

struct TripletStats {
    std::size_t total = 0;
    std::size_t anchors_covered = 0;
    // fraction of label-0 / label-1 sentences that anchor at least one triplet
    double coverage_label0 = 0.0;
    double coverage_label1 = 0.0;
};

// Enumerates every valid (anchor, positive, negative) combination, in
// canonical corpus order. With cap_per_anchor set, a seeded uniform subsample
// of at most that many triplets per anchor is kept.
std::vector<Triplet> mine_triplets(const Corpus& corpus,
                                   std::optional<std::size_t> cap_per_anchor,
                                   std::uint64_t seed);

TripletStats triplet_stats(const std::vector<Triplet>& triplets, const Corpus& corpus);

void save_triplets(const std::vector<Triplet>& triplets, const std::string& path);
std::vector<Triplet> load_triplets(const std::string& path);

} // namespace biasgraph
