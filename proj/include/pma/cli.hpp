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

// Subcommand bodies of the `pma` tool. Argument parsing lives in
// tools/pma.cpp; everything here takes a filled RunConfig and returns the
// process exit status, writing one-line diagnostics to `err`.

#ifndef PMA_CLI_HPP
#define PMA_CLI_HPP

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pma/bench.hpp"
#include "pma/dataset_io.hpp"
#include "pma/metrics.hpp"
#include "pma/miner.hpp"
#include "pma/sanitizer.hpp"
#include "pma/synthetic.hpp"

namespace pma::cli {

struct RunConfig {
    std::string input;
    std::string sanitized;
    std::string patterns;
    std::string min_sup;
    std::optional<std::size_t> prefix;
    std::string out;
    std::string log;
    std::string report;
    std::uint64_t seed = 0;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> num_patterns;
    std::size_t repeats = 5;
    std::size_t generate_transactions = 100000;
    bool allow_empty = false;
    bool no_log = false;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline TransactionDatabase load_database(const std::string& path, bool allow_empty,
                                         std::optional<std::size_t> prefix, std::ostream& err) {
    if (path.empty()) throw Error("--input is required");
    std::vector<std::string> warnings;
    auto db = parse_fimi(read_file(path), FimiOptions{allow_empty, &warnings});
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
    if (prefix) {
        if (*prefix > db.size())
            throw Error("--prefix " + std::to_string(*prefix) + " exceeds the " + std::to_string(db.size()) +
                        " transactions of '" + path + "'");
        db = db.prefix(*prefix);
    }
    return db;
}

inline RestrictivePatternSet load_patterns(const std::string& path) {
    if (path.empty()) throw Error("--patterns is required");
    return parse_patterns(read_file(path));
}

/// Writes via `fn(stream)` to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    fn(os);
    os.flush();
    if (!os) throw Error("failed writing '" + path + "'");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace detail

inline int cmd_mine(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const auto db = detail::load_database(cfg.input, cfg.allow_empty, cfg.prefix, err);
        const auto sigma = parse_support_threshold(cfg.min_sup.empty() ? "1abs" : cfg.min_sup);
        const auto start = detail::Clock::now();
        auto frequent = mine_frequent(db, sigma.resolve(db.size()));
        frequent.set_sigma_rel(sigma.relative);
        const double elapsed = detail::ms_since(start);
        detail::emit(cfg.out, out, [&](std::ostream& os) { write_frequent_dump(os, frequent); });
        std::ostream& summary = cfg.out.empty() ? err : out;
        summary << "frequent patterns: " << frequent.size() << " (sigma_abs " << frequent.sigma_abs()
                << ", " << elapsed << " ms)\n";
        return 0;
    });
}

inline int cmd_sanitize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const auto db = detail::load_database(cfg.input, cfg.allow_empty, cfg.prefix, err);
        const auto rp = detail::load_patterns(cfg.patterns);
        const auto ix = build_index(db, rp);
        const auto start = detail::Clock::now();
        const auto result = sanitize_indexed(db, rp, ix);
        const double elapsed = detail::ms_since(start);

        for (const auto& p : rp)
            if (support_count(result.sanitized, p) != 0)
                throw Error("internal error: pattern {" + to_string(p) + "} still supported after sanitization");

        detail::emit(cfg.out, out, [&](std::ostream& os) { write_fimi(os, result.sanitized); });
        if (!cfg.no_log && !cfg.log.empty())
            detail::emit(cfg.log, out, [&](std::ostream& os) { os << write_log(result.log).dump(2) << '\n'; });
        std::ostream& summary = cfg.out.empty() ? err : out;
        summary << "removed items: " << result.log.total_removed() << " (" << elapsed << " ms)\n";
        return 0;
    });
}

inline int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (cfg.sanitized.empty()) throw Error("--sanitized is required");
        if (cfg.min_sup.empty()) throw Error("--min-sup is required");
        const auto source = detail::load_database(cfg.input, cfg.allow_empty, cfg.prefix, err);
        const auto sanitized = detail::load_database(cfg.sanitized, true, std::nullopt, err);
        const auto rp = detail::load_patterns(cfg.patterns);
        if (sanitized.size() != source.size())
            throw InvalidPairError("sanitized database has " + std::to_string(sanitized.size()) +
                                   " transactions, source has " + std::to_string(source.size()));
        const auto sigma = parse_support_threshold(cfg.min_sup);

        std::optional<SanitizationLog> log;
        if (!cfg.log.empty()) log = parse_log(read_file(cfg.log));
        const auto removed = log ? log->total_removed() : dissimilarity(source, sanitized).numerator;
        const auto report = evaluate(source, sanitized, rp, sigma.resolve(source.size()), removed);

        RunParameters params{cfg.input, cfg.sanitized, cfg.patterns, cfg.prefix,
                             sigma.relative, report.sigma_abs, cfg.seed};
        detail::emit(cfg.report, out, [&](std::ostream& os) { os << write_report(report, params).dump(2) << '\n'; });
        for (const auto& note : report.notes) err << "note: " << note << '\n';
        return 0;
    });
}

inline nlohmann::ordered_json bench_summary_json(const BenchResult& result, const BenchConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["seed"] = cfg.seed;
    doc["sigma_rel"] = cfg.sigma.relative ? nlohmann::ordered_json(*cfg.sigma.relative) : nullptr;
    doc["repeats"] = cfg.repeats;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& r : result.rows)
        cells.push_back({{"transactions", r.transactions}, {"patterns", r.patterns}, {"elapsed_ms", r.elapsed_ms}});
    doc["cells"] = std::move(cells);
    auto fits = nlohmann::ordered_json::array();
    for (const auto& s : summarize_bench(result.rows).series)
        fits.push_back({{"axis", s.axis}, {"fixed", s.fixed}, {"slope_ms", s.fit.slope},
                        {"intercept_ms", s.fit.intercept}, {"r2", s.fit.r2}, {"points", s.fit.points}});
    doc["fits"] = std::move(fits);
    doc["warnings"] = result.warnings;
    return doc;
}

/// CSV rows go to --out (deterministic); timings and fits go to --report.
inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (cfg.sizes.empty()) throw Error("--sizes is required");
        if (cfg.num_patterns.empty()) throw Error("--num-patterns is required");
        const auto source = detail::load_database(cfg.input, cfg.allow_empty, cfg.prefix, err);
        BenchConfig bc;
        bc.sizes = cfg.sizes;
        bc.pattern_counts = cfg.num_patterns;
        bc.sigma = parse_support_threshold(cfg.min_sup.empty() ? "0.006" : cfg.min_sup);
        bc.seed = cfg.seed;
        bc.repeats = cfg.repeats;
        const auto result = run_bench(source, bc);
        for (const auto& w : result.warnings) err << "warning: " << w << '\n';
        detail::emit(cfg.out, out, [&](std::ostream& os) { write_bench_csv(os, result.rows); });
        if (!cfg.report.empty())
            detail::emit(cfg.report, out,
                         [&](std::ostream& os) { os << bench_summary_json(result, bc).dump(2) << '\n'; });
        return 0;
    });
}

/// Writes a T10I4-style synthetic database.
inline int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        QuestParameters params;
        params.transactions = cfg.generate_transactions;
        params.seed = cfg.seed;
        const auto db = generate_quest(params);
        detail::emit(cfg.out, out, [&](std::ostream& os) { write_fimi(os, db); });
        return 0;
    });
}

}  // namespace pma::cli

#endif  // PMA_CLI_HPP
