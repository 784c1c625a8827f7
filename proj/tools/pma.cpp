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

#include <iostream>

#include "CLI11.hpp"
#include "pma/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Pattern hiding by maximal-cover item deletion"};
    app.require_subcommand(1);

    pma::cli::RunConfig cfg;
    std::size_t prefix = 0;

    auto add_input = [&](CLI::App* cmd, bool with_prefix) {
        cmd->add_option("--input", cfg.input, "FIMI transaction file")->required();
        cmd->add_flag("--allow-empty", cfg.allow_empty, "Accept blank lines as empty transactions");
        if (with_prefix) cmd->add_option("--prefix", prefix, "Use only the first N transactions");
    };

    auto* mine = app.add_subcommand("mine", "Enumerate frequent itemsets");
    add_input(mine, true);
    mine->add_option("--min-sup", cfg.min_sup, "Support threshold: 0.006 (relative) or 3abs (absolute)")
        ->required();
    mine->add_option("--out", cfg.out, "Frequent-set dump (default: stdout)");

    auto* sanitize = app.add_subcommand("sanitize", "Hide restrictive patterns");
    add_input(sanitize, true);
    sanitize->add_option("--patterns", cfg.patterns, "Restrictive pattern file")->required();
    sanitize->add_option("--out", cfg.out, "Sanitized FIMI file (default: stdout)");
    sanitize->add_option("--log", cfg.log, "Sanitization log (JSON)");
    sanitize->add_flag("--no-log", cfg.no_log, "Do not write the sanitization log");

    auto* evaluate = app.add_subcommand("evaluate", "Compute HF, MC, SR, AP and dif");
    add_input(evaluate, true);
    evaluate->add_option("--sanitized", cfg.sanitized, "Sanitized FIMI file")->required();
    evaluate->add_option("--patterns", cfg.patterns, "Restrictive pattern file")->required();
    evaluate->add_option("--min-sup", cfg.min_sup, "Support threshold for HF, MC and AP")->required();
    evaluate->add_option("--log", cfg.log, "Sanitization log; its removal count is used for SR");
    evaluate->add_option("--report", cfg.report, "Report document (default: stdout)");
    evaluate->add_option("--seed", cfg.seed, "Seed recorded in the report");

    auto* bench = app.add_subcommand("bench", "Scaling benchmark over prefixes and pattern counts");
    add_input(bench, false);
    bench->add_option("--min-sup", cfg.min_sup, "Support threshold for drawing patterns")->default_val("0.006");
    bench->add_option("--sizes", cfg.sizes, "Prefix sizes, e.g. 1000,2000")->delimiter(',')->required();
    bench->add_option("--num-patterns", cfg.num_patterns, "Pattern counts, e.g. 5,10")->delimiter(',')->required();
    bench->add_option("--seed", cfg.seed, "Pattern draw seed");
    bench->add_option("--repeats", cfg.repeats, "Timing samples per cell")->default_val(5);
    bench->add_option("--out", cfg.out, "CSV rows (default: stdout)");
    bench->add_option("--report", cfg.report, "Timings and linear fits (JSON)");

    auto* generate = app.add_subcommand("generate", "Write a synthetic T10I4-style database");
    generate->add_option("--transactions", cfg.generate_transactions, "Transaction count")->default_val(100000);
    generate->add_option("--seed", cfg.seed, "Generator seed")->default_val(1);
    generate->add_option("--out", cfg.out, "FIMI output (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    for (auto* cmd : {mine, sanitize, evaluate})
        if (cmd->parsed() && cmd->count("--prefix")) cfg.prefix = prefix;

    if (mine->parsed()) return pma::cli::cmd_mine(cfg, std::cout, std::cerr);
    if (sanitize->parsed()) return pma::cli::cmd_sanitize(cfg, std::cout, std::cerr);
    if (evaluate->parsed()) return pma::cli::cmd_evaluate(cfg, std::cout, std::cerr);
    if (bench->parsed()) return pma::cli::cmd_bench(cfg, std::cout, std::cerr);
    return pma::cli::cmd_generate(cfg, std::cout, std::cerr);
}
