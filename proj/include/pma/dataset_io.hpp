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

// Text formats.
//
// FIMI transactions: one transaction per line, whitespace separated positive
// integer item ids. Written lines list items in ascending order; an empty
// transaction is an empty line.
//
// Pattern files: one restrictive pattern per non-blank line, same syntax.
//
// Reports and sanitization logs are JSON documents with a fixed key order.

#ifndef PMA_DATASET_IO_HPP
#define PMA_DATASET_IO_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "pma/core_model.hpp"
#include "pma/errors.hpp"
#include "pma/metrics.hpp"
#include "pma/sanitizer.hpp"

namespace pma {

struct FimiOptions {
    /// Blank lines become empty transactions instead of a parse error.
    bool allow_empty = false;
    /// Receives one message per line with repeated items, when set.
    std::vector<std::string>* warnings = nullptr;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Splits `line` into item ids; throws ParseError tagged with `line_no`.
inline ItemList parse_item_line(std::string_view line, std::size_t line_no) {
    ItemList items;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_blank(line[pos])) ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && !is_blank(line[end])) ++end;
        const std::string_view token = line.substr(pos, end - pos);

        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range ||
            (ec == std::errc{} && ptr == token.data() + token.size() &&
             value > std::numeric_limits<std::uint32_t>::max()))
            throw ParseError(line_no, "item id out of range: '" + std::string(token) + "'");
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line_no, "not a non-negative integer: '" + std::string(token) + "'");
        if (value < 1) throw ParseError(line_no, "item ids must be >= 1");
        items.push_back(Item{static_cast<std::uint32_t>(value)});
        pos = end;
    }
    return items;
}

inline bool blank_line(std::string_view line) {
    for (char c : line)
        if (!is_blank(c)) return false;
    return true;
}

inline std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// Calls fn(line, line_no) for every newline-terminated or final line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        fn(text.substr(start, nl - start), ++line_no);
        start = nl + 1;
    }
}

}  // namespace detail

inline TransactionDatabase parse_fimi(std::string_view text, const FimiOptions& opts = {}) {
    std::vector<ItemList> rows;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (detail::blank_line(line) && !opts.allow_empty)
            throw ParseError(line_no, "blank line in source database (use allow-empty for sanitized files)");
        auto items = detail::parse_item_line(line, line_no);
        const auto raw = items.size();
        detail::normalize(items);
        if (items.size() != raw && opts.warnings)
            opts.warnings->push_back("line " + std::to_string(line_no) + ": repeated items collapsed");
        rows.push_back(std::move(items));
    });
    return TransactionDatabase(std::move(rows));
}

inline TransactionDatabase parse_fimi(std::istream& in, const FimiOptions& opts = {}) {
    return parse_fimi(detail::slurp(in), opts);
}

inline void write_fimi(std::ostream& os, const TransactionDatabase& db) {
    std::string line;
    for (const auto& t : db) {
        line.clear();
        for (auto item : t.items()) {
            if (!line.empty()) line += ' ';
            line += std::to_string(item.id);
        }
        line += '\n';
        os << line;
    }
}

inline std::string write_fimi(const TransactionDatabase& db) {
    std::ostringstream os;
    write_fimi(os, db);
    return os.str();
}

inline RestrictivePatternSet parse_patterns(std::string_view text) {
    std::vector<Pattern> patterns;
    detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (detail::blank_line(line)) return;
        patterns.emplace_back(detail::parse_item_line(line, line_no));
    });
    return RestrictivePatternSet(std::move(patterns));
}

inline RestrictivePatternSet parse_patterns(std::istream& in) { return parse_patterns(detail::slurp(in)); }

inline void write_patterns(std::ostream& os, const RestrictivePatternSet& rp) {
    for (const auto& p : rp) os << to_string(p) << '\n';
}

/// Reads a whole file; throws Error when it cannot be opened.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    return detail::slurp(in);
}

/// Inputs of a run, echoed into reports.
struct RunParameters {
    std::string input;
    std::string sanitized;
    std::string patterns;
    std::optional<std::size_t> prefix;
    std::optional<double> sigma_rel;
    std::size_t sigma_abs = 1;
    std::uint64_t seed = 0;

    friend bool operator==(const RunParameters&, const RunParameters&) = default;
};

using ReportDocument = nlohmann::ordered_json;

namespace detail {

inline nlohmann::ordered_json fraction_json(const Fraction& f) {
    return nlohmann::ordered_json::array({f.numerator, f.denominator});
}

inline Fraction fraction_from(const nlohmann::ordered_json& j) {
    return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

}  // namespace detail

inline ReportDocument write_report(const MetricsReport& r, const RunParameters& params) {
    ReportDocument doc;
    doc["params"] = {
        {"input", params.input},
        {"sanitized", params.sanitized},
        {"patterns", params.patterns},
        {"prefix", detail::optional_json(params.prefix)},
        {"sigma_abs", params.sigma_abs},
        {"sigma_rel", detail::optional_json(params.sigma_rel)},
        {"seed", params.seed},
    };
    doc["metrics"] = {
        {"hf", r.hf.value()}, {"mc", r.mc.value()}, {"sr", r.sr.value()},
        {"ap", r.ap.value()}, {"dif", r.dif.value()},
    };
    doc["ratios"] = {
        {"hf", detail::fraction_json(r.hf)}, {"mc", detail::fraction_json(r.mc)},
        {"sr", detail::fraction_json(r.sr)}, {"ap", detail::fraction_json(r.ap)},
        {"dif", detail::fraction_json(r.dif)},
    };
    doc["counts"] = {
        {"removed_items", r.removed_items},
        {"sigma_abs", r.sigma_abs},
        {"transactions", r.transactions},
        {"restrictive_patterns", r.restrictive_patterns},
        {"frequent_source", r.frequent_source},
        {"frequent_sanitized", r.frequent_sanitized},
    };
    doc["timings_ms"] = {{"sanitize", r.elapsed_sanitize_ms}, {"mine", r.elapsed_mine_ms}};
    doc["notes"] = r.notes;
    return doc;
}

struct ParsedReport {
    MetricsReport report;
    RunParameters params;
};

inline ParsedReport parse_report_document(const ReportDocument& doc) {
    try {
        ParsedReport out;
        const auto& p = doc.at("params");
        out.params.input = p.at("input").get<std::string>();
        out.params.sanitized = p.at("sanitized").get<std::string>();
        out.params.patterns = p.at("patterns").get<std::string>();
        out.params.prefix = detail::optional_from<std::size_t>(p.at("prefix"));
        out.params.sigma_abs = p.at("sigma_abs").get<std::size_t>();
        out.params.sigma_rel = detail::optional_from<double>(p.at("sigma_rel"));
        out.params.seed = p.at("seed").get<std::uint64_t>();

        auto& r = out.report;
        const auto& ratios = doc.at("ratios");
        r.hf = detail::fraction_from(ratios.at("hf"));
        r.mc = detail::fraction_from(ratios.at("mc"));
        r.sr = detail::fraction_from(ratios.at("sr"));
        r.ap = detail::fraction_from(ratios.at("ap"));
        r.dif = detail::fraction_from(ratios.at("dif"));
        const auto& c = doc.at("counts");
        r.removed_items = c.at("removed_items").get<std::size_t>();
        r.sigma_abs = c.at("sigma_abs").get<std::size_t>();
        r.transactions = c.at("transactions").get<std::size_t>();
        r.restrictive_patterns = c.at("restrictive_patterns").get<std::size_t>();
        r.frequent_source = c.at("frequent_source").get<std::size_t>();
        r.frequent_sanitized = c.at("frequent_sanitized").get<std::size_t>();
        r.elapsed_sanitize_ms = doc.at("timings_ms").at("sanitize").get<double>();
        r.elapsed_mine_ms = doc.at("timings_ms").at("mine").get<double>();
        r.notes = doc.at("notes").get<std::vector<std::string>>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed report: ") + e.what());
    }
}

inline ParsedReport parse_report(std::string_view text) {
    try {
        return parse_report_document(ReportDocument::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("malformed report: ") + e.what());
    }
}

/// Removals in order with phase tags. Pattern numbers are 1-based (r1..rn).
inline nlohmann::ordered_json write_log(const SanitizationLog& log) {
    nlohmann::ordered_json doc;
    doc["total_removed"] = log.total_removed();
    auto removals = nlohmann::ordered_json::array();
    for (const auto& r : log.removals) {
        auto patterns = nlohmann::ordered_json::array();
        for (auto i : r.patterns) patterns.push_back(i + 1);
        removals.push_back({{"tid", r.tid}, {"item", r.item.id}, {"phase", to_string(r.phase)},
                            {"patterns", std::move(patterns)}});
    }
    doc["removals"] = std::move(removals);
    auto marks = nlohmann::ordered_json::array();
    for (const auto& m : log.victim_marks) marks.push_back(m);
    doc["victim_marks"] = std::move(marks);
    auto traj = nlohmann::ordered_json::array();
    for (const auto& points : log.support_trajectory) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& pt : points) row.push_back({pt.step, pt.remaining});
        traj.push_back(std::move(row));
    }
    doc["support_trajectory"] = std::move(traj);
    doc["notes"] = log.notes;
    return doc;
}

inline SanitizationLog parse_log(std::string_view text) {
    try {
        const auto doc = nlohmann::ordered_json::parse(text);
        SanitizationLog log;
        for (const auto& r : doc.at("removals")) {
            const auto phase_name = r.at("phase").get<std::string>();
            if (phase_name != "module-i" && phase_name != "module-ii")
                throw ParseError(0, "unknown phase '" + phase_name + "'");
            Removal rem{r.at("tid").get<Tid>(), Item{r.at("item").get<std::uint32_t>()},
                        phase_name == "module-i" ? Phase::module_i : Phase::module_ii, {}};
            for (const auto& p : r.at("patterns")) {
                const auto k = p.get<std::size_t>();
                if (k < 1) throw ParseError(0, "pattern numbers are 1-based");
                rem.patterns.push_back(k - 1);
            }
            log.removals.push_back(std::move(rem));
        }
        for (const auto& m : doc.at("victim_marks")) log.victim_marks.push_back(m.get<std::set<Tid>>());
        for (const auto& row : doc.at("support_trajectory")) {
            auto& points = log.support_trajectory.emplace_back();
            for (const auto& pt : row) points.push_back({pt.at(0).get<std::size_t>(), pt.at(1).get<std::size_t>()});
        }
        log.notes = doc.at("notes").get<std::vector<std::string>>();
        if (doc.at("total_removed").get<std::size_t>() != log.removals.size())
            throw ParseError(0, "total_removed does not match the removal list");
        return log;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("malformed log: ") + e.what());
    }
}

}  // namespace pma

#endif  // PMA_DATASET_IO_HPP
