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

// Scaling benchmark over (prefix size N, restrictive pattern count n) cells.
//
// Each cell takes the first N transactions, mines them at the configured
// threshold, draws n restrictive patterns from the frequent patterns of
// length 2..6, sanitizes and evaluates. The draw for a cell is the first n
// entries of a seeded shuffle of the candidates, so larger n extends smaller
// n at the same N.

#ifndef PMA_BENCH_HPP
#define PMA_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pma/core_model.hpp"
#include "pma/metrics.hpp"
#include "pma/miner.hpp"
#include "pma/pattern_index.hpp"
#include "pma/sanitizer.hpp"

namespace pma {

/// Either a fraction of N or an absolute transaction count.
struct SupportThreshold {
    std::optional<double> relative;
    std::size_t absolute = 1;

    std::size_t resolve(std::size_t n) const { return relative ? absolute_threshold(*relative, n) : absolute; }
};

inline SupportThreshold parse_support_threshold(const std::string& text) {
    const std::string suffix = "abs";
    SupportThreshold s;
    try {
        std::size_t used = 0;
        if (text.size() > suffix.size() && text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
            const auto digits = text.substr(0, text.size() - suffix.size());
            const auto v = std::stoull(digits, &used);
            if (used != digits.size() || digits.front() == '-') throw std::invalid_argument(text);
            if (v < 1) throw InvalidThreshold("absolute support must be >= 1");
            s.absolute = static_cast<std::size_t>(v);
            return s;
        }
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        if (!(v > 0.0 && v <= 1.0))
            throw InvalidThreshold("relative support must lie in (0, 1] (use e.g. '3abs' for absolute)");
        s.relative = v;
        return s;
    } catch (const std::logic_error&) {
        throw InvalidThreshold("unrecognised support threshold '" + text + "' (expected e.g. 0.006 or 3abs)");
    }
}

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> pattern_counts;
    SupportThreshold sigma;
    std::uint64_t seed = 0;
    std::size_t min_length = 2;
    std::size_t max_length = 6;
    /// Timing samples per cell; the median is reported.
    std::size_t repeats = 5;
};

struct BenchRow {
    std::size_t transactions = 0;
    std::size_t patterns = 0;
    std::size_t sigma_abs = 0;
    std::size_t sensitive = 0;
    MetricsReport metrics;
    double elapsed_ms = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
};

/// Ordinary least squares y = slope * x + intercept.
inline LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit fit;
    fit.points = x.size();
    if (x.size() != y.size() || x.size() < 2) return fit;
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) return fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res += e * e;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

/// Seeded draw of `count` patterns with length in [min_len, max_len].
/// Returns nullopt when fewer candidates exist.
inline std::optional<RestrictivePatternSet> draw_restrictive_patterns(const FrequentPatternSet& frequent,
                                                                      std::size_t count, std::size_t min_len,
                                                                      std::size_t max_len, std::uint64_t seed) {
    std::vector<Pattern> candidates;
    for (const auto& [pattern, support] : frequent)
        if (pattern.size() >= min_len && pattern.size() <= max_len) candidates.push_back(pattern);
    if (candidates.size() < count) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(count), candidates.end());
    return RestrictivePatternSet(std::move(candidates));
}

/// Median wall time of sanitize_indexed in milliseconds. Each sample repeats
/// the call until at least 10 ms have elapsed and reports the per-call mean.
inline double time_sanitize(const TransactionDatabase& db, const RestrictivePatternSet& rp,
                            const PatternIndex& ix, std::size_t repeats) {
    using clock = std::chrono::steady_clock;
    std::vector<double> samples;
    for (std::size_t s = 0; s < std::max<std::size_t>(repeats, 1); ++s) {
        std::size_t calls = 0;
        const auto start = clock::now();
        auto elapsed = clock::duration::zero();
        do {
            auto result = sanitize_indexed(db, rp, ix);
            ++calls;
            elapsed = clock::now() - start;
        } while (elapsed < std::chrono::milliseconds(10));
        samples.push_back(std::chrono::duration<double, std::milli>(elapsed).count() / static_cast<double>(calls));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<std::string> warnings;
};

/// Runs every (N, n) cell, ordered by N then n.
inline BenchResult run_bench(const TransactionDatabase& source, const BenchConfig& cfg) {
    BenchResult out;
    auto sizes = cfg.sizes;
    auto counts = cfg.pattern_counts;
    std::sort(sizes.begin(), sizes.end());
    std::sort(counts.begin(), counts.end());
    for (auto n_txn : sizes) {
        if (n_txn > source.size())
            throw InvalidThreshold("prefix of " + std::to_string(n_txn) + " transactions requested but input has " +
                                   std::to_string(source.size()));
        const auto db = source.prefix(n_txn);
        const auto sigma_abs = cfg.sigma.resolve(db.size());
        const auto frequent = mine_frequent(db, sigma_abs);
        for (auto n_pat : counts) {
            auto rp = draw_restrictive_patterns(frequent, n_pat, cfg.min_length, cfg.max_length, cfg.seed);
            if (!rp) {
                out.warnings.push_back("N=" + std::to_string(n_txn) + " n=" + std::to_string(n_pat) +
                                       ": not enough frequent patterns of length " + std::to_string(cfg.min_length) +
                                       ".." + std::to_string(cfg.max_length) + ", row skipped");
                continue;
            }
            const auto ix = build_index(db, *rp);
            const auto result = sanitize_indexed(db, *rp, ix);

            BenchRow row;
            row.transactions = n_txn;
            row.patterns = n_pat;
            row.sigma_abs = sigma_abs;
            row.sensitive = ix.degrees.size();
            row.elapsed_ms = time_sanitize(db, *rp, ix, cfg.repeats);
            const auto f_san = mine_frequent(result.sanitized, sigma_abs);
            auto& m = row.metrics;
            m = {};
            m.sigma_abs = sigma_abs;
            m.removed_items = result.log.total_removed();
            m.transactions = db.size();
            m.restrictive_patterns = rp->size();
            m.frequent_source = frequent.size();
            m.frequent_sanitized = f_san.size();
            m.hf = hiding_failure(db, result.sanitized, *rp, sigma_abs);
            m.mc = misses_cost(frequent, f_san, *rp);
            m.sr = sanitization_rate(result.log, *rp, db);
            m.ap = artifactual_patterns(frequent, f_san);
            m.dif = dissimilarity(db, result.sanitized);
            m.elapsed_sanitize_ms = row.elapsed_ms;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

/// Deterministic CSV: every column is a pure function of input and seed.
inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "transactions,patterns,sigma_abs,sensitive,removed,hf,mc,sr,ap,dif\n";
    std::ostringstream line;
    line << std::setprecision(8);
    for (const auto& r : rows) {
        line.str("");
        const auto& m = r.metrics;
        line << r.transactions << ',' << r.patterns << ',' << r.sigma_abs << ',' << r.sensitive << ','
             << m.removed_items << ',' << m.hf.value() << ',' << m.mc.value() << ',' << m.sr.value() << ','
             << m.ap.value() << ',' << m.dif.value() << '\n';
        os << line.str();
    }
}

/// Least-squares fits of elapsed time against N (per fixed n) and against n
/// (per fixed N), for every series with at least two points.
struct BenchSummary {
    struct Series {
        std::string axis;  // "transactions" or "patterns"
        std::size_t fixed = 0;
        LinearFit fit;
    };
    std::vector<Series> series;
};

inline BenchSummary summarize_bench(const std::vector<BenchRow>& rows) {
    BenchSummary summary;
    std::vector<std::size_t> sizes, counts;
    for (const auto& r : rows) {
        sizes.push_back(r.transactions);
        counts.push_back(r.patterns);
    }
    for (auto* v : {&sizes, &counts}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    for (auto n_pat : counts) {
        std::vector<double> x, y;
        for (const auto& r : rows)
            if (r.patterns == n_pat) {
                x.push_back(static_cast<double>(r.transactions));
                y.push_back(r.elapsed_ms);
            }
        if (x.size() >= 2) summary.series.push_back({"transactions", n_pat, fit_linear(x, y)});
    }
    for (auto n_txn : sizes) {
        std::vector<double> x, y;
        for (const auto& r : rows)
            if (r.transactions == n_txn) {
                x.push_back(static_cast<double>(r.patterns));
                y.push_back(r.elapsed_ms);
            }
        if (x.size() >= 2) summary.series.push_back({"patterns", n_txn, fit_linear(x, y)});
    }
    return summary;
}

}  // namespace pma

#endif  // PMA_BENCH_HPP
