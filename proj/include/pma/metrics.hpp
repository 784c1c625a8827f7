/*
   Copyright 2026 The pma-sanitize Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

// Effectiveness and efficiency measures of a sanitization run.
//
//   HF   restrictive patterns still frequent in D' / those frequent in D
//   MC   non-restrictive frequent patterns of D lost in D' / all of them
//   SR   removed items / total source support of the restrictive patterns
//   AP   patterns frequent in D' but not in D / patterns frequent in D'
//   dif  total drop in item occurrences / total item occurrences of D
//
// Every measure is kept as an exact numerator/denominator pair; a zero
// denominator reads as 0.

#ifndef PMA_METRICS_HPP
#define PMA_METRICS_HPP

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pma/core_model.hpp"
#include "pma/errors.hpp"
#include "pma/miner.hpp"
#include "pma/sanitizer.hpp"

namespace pma {

struct Fraction {
    std::size_t numerator = 0;
    std::size_t denominator = 0;

    double value() const noexcept {
        return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    bool undefined() const noexcept { return denominator == 0; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Miner policies accepted by the metric templates.
struct AprioriMiner {
    FrequentPatternSet operator()(const TransactionDatabase& db, std::size_t sigma_abs) const {
        return mine_frequent(db, sigma_abs);
    }
};

struct BruteForceMiner {
    FrequentPatternSet operator()(const TransactionDatabase& db, std::size_t sigma_abs) const {
        return brute_force_frequent(db, sigma_abs);
    }
};

using ItemFrequencyVector = std::map<Item, std::size_t>;

inline ItemFrequencyVector item_frequencies(const TransactionDatabase& db) {
    ItemFrequencyVector f;
    for (const auto& t : db)
        for (auto item : t.items()) ++f[item];
    return f;
}

inline Fraction hiding_failure(const TransactionDatabase& source, const TransactionDatabase& sanitized,
                               const RestrictivePatternSet& rp, std::size_t sigma_abs) {
    Fraction hf;
    for (const auto& p : rp) {
        if (support_count(source, p) >= sigma_abs) ++hf.denominator;
        if (support_count(sanitized, p) >= sigma_abs) ++hf.numerator;
    }
    return hf;
}

/// Restrictive patterns below `sigma_abs` in the source (never discoverable).
inline std::size_t undiscoverable_restrictive(const TransactionDatabase& source, const RestrictivePatternSet& rp,
                                              std::size_t sigma_abs) {
    std::size_t n = 0;
    for (const auto& p : rp)
        if (support_count(source, p) < sigma_abs) ++n;
    return n;
}

/// Lost non-restrictive patterns, from already mined frequent sets.
inline Fraction misses_cost(const FrequentPatternSet& source, const FrequentPatternSet& sanitized,
                            const RestrictivePatternSet& rp) {
    Fraction mc;
    for (const auto& [pattern, support] : source) {
        if (rp.contains_pattern(pattern)) continue;
        ++mc.denominator;
        if (!sanitized.contains(pattern)) ++mc.numerator;
    }
    return mc;
}

template <typename Miner = AprioriMiner>
Fraction misses_cost(const TransactionDatabase& source, const TransactionDatabase& sanitized,
                     const RestrictivePatternSet& rp, std::size_t sigma_abs, Miner mine = {}) {
    if (sigma_abs < 1) throw InvalidThreshold("absolute support threshold must be >= 1");
    return misses_cost(mine(source, sigma_abs), mine(sanitized, sigma_abs), rp);
}

inline Fraction sanitization_rate(std::size_t removed_items, const RestrictivePatternSet& rp,
                                  const TransactionDatabase& source) {
    Fraction sr{removed_items, 0};
    for (const auto& p : rp) sr.denominator += support_count(source, p);
    return sr;
}

inline Fraction sanitization_rate(const SanitizationLog& log, const RestrictivePatternSet& rp,
                                  const TransactionDatabase& source) {
    return sanitization_rate(log.total_removed(), rp, source);
}

inline Fraction artifactual_patterns(const FrequentPatternSet& source, const FrequentPatternSet& sanitized) {
    Fraction ap{0, sanitized.size()};
    for (const auto& [pattern, support] : sanitized)
        if (!source.contains(pattern)) ++ap.numerator;
    return ap;
}

template <typename Miner = AprioriMiner>
Fraction artifactual_patterns(const TransactionDatabase& source, const TransactionDatabase& sanitized,
                              std::size_t sigma_abs, Miner mine = {}) {
    if (sigma_abs < 1) throw InvalidThreshold("absolute support threshold must be >= 1");
    return artifactual_patterns(mine(source, sigma_abs), mine(sanitized, sigma_abs));
}

/// Throws InvalidPairError when some item occurs more often in `sanitized`.
inline Fraction dissimilarity(const TransactionDatabase& source, const TransactionDatabase& sanitized) {
    const auto f_src = item_frequencies(source);
    const auto f_san = item_frequencies(sanitized);
    Fraction dif;
    for (const auto& [item, count] : f_san) {
        auto it = f_src.find(item);
        if (it == f_src.end() || it->second < count)
            throw InvalidPairError("item " + std::to_string(item.id) +
                                   " occurs more often in the sanitized database than in the source");
    }
    for (const auto& [item, count] : f_src) {
        dif.denominator += count;
        auto it = f_san.find(item);
        dif.numerator += count - (it == f_san.end() ? 0 : it->second);
    }
    return dif;
}

struct MetricsReport {
    Fraction hf;
    Fraction mc;
    Fraction sr;
    Fraction ap;
    Fraction dif;
    std::size_t removed_items = 0;
    std::size_t sigma_abs = 1;
    std::size_t transactions = 0;
    std::size_t restrictive_patterns = 0;
    std::size_t frequent_source = 0;
    std::size_t frequent_sanitized = 0;
    double elapsed_sanitize_ms = 0.0;
    double elapsed_mine_ms = 0.0;
    std::vector<std::string> notes;

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Computes all five measures at one threshold. `removed_items` is the
/// sanitization log's count; it must agree with the occurrence drop.
template <typename Miner = AprioriMiner>
MetricsReport evaluate(const TransactionDatabase& source, const TransactionDatabase& sanitized,
                       const RestrictivePatternSet& rp, std::size_t sigma_abs, std::size_t removed_items,
                       Miner mine = {}) {
    if (sigma_abs < 1) throw InvalidThreshold("absolute support threshold must be >= 1");
    MetricsReport r;
    r.sigma_abs = sigma_abs;
    r.removed_items = removed_items;
    r.transactions = source.size();
    r.restrictive_patterns = rp.size();

    r.dif = dissimilarity(source, sanitized);
    if (r.dif.numerator != removed_items)
        throw InvalidPairError("removed item count " + std::to_string(removed_items) +
                               " does not match the occurrence drop " + std::to_string(r.dif.numerator));

    const auto start = std::chrono::steady_clock::now();
    const auto f_src = mine(source, sigma_abs);
    const auto f_san = mine(sanitized, sigma_abs);
    r.elapsed_mine_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.frequent_source = f_src.size();
    r.frequent_sanitized = f_san.size();

    r.hf = hiding_failure(source, sanitized, rp, sigma_abs);
    r.mc = misses_cost(f_src, f_san, rp);
    r.sr = sanitization_rate(removed_items, rp, source);
    r.ap = artifactual_patterns(f_src, f_san);

    if (auto n = undiscoverable_restrictive(source, rp, sigma_abs); n != 0)
        r.notes.push_back("hf: " + std::to_string(n) + " restrictive pattern(s) below sigma in the source");
    auto note_zero = [&r](const char* name, const Fraction& f) {
        if (f.undefined()) r.notes.push_back(std::string(name) + ": zero denominator, reported as 0");
    };
    note_zero("hf", r.hf);
    note_zero("mc", r.mc);
    note_zero("sr", r.sr);
    note_zero("ap", r.ap);
    note_zero("dif", r.dif);
    return r;
}

}  // namespace pma

#endif  // PMA_METRICS_HPP
