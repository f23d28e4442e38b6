/*
   Copyright 2026 The qsync Authors

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
#include <string>

#include <CLI11.hpp>

#include "qsync/cli.hpp"
#include "qsync/errors.hpp"

int main(int argc, char** argv) {
    using namespace qsync::cli;

    CLI::App app{"qsync: quantum synchronizable code parameters from order-two cyclotomy over Z_2q"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string inner_remove, outer_remove, remove;
    std::optional<std::uint64_t> z;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "Emit JSON instead of a table");
    };
    const auto add_q = [&](CLI::App* sub) { sub->add_option("--q", cfg.q, "Odd prime q")->required(); };
    const auto add_r = [&](CLI::App* sub) { sub->add_option("--r", cfg.r, "Odd prime r in D0 of Z_2q")->required(); };
    const auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Distance search budget in elementary operations");
        sub->add_flag("!--no-distances", cfg.distances, "Skip minimum-distance computation");
    };

    auto* classes = app.add_subcommand("classes", "Cyclotomic classes D0, D1, E0, E1 of Z_2q");
    add_q(classes);
    add_common(classes);

    auto* cosets = app.add_subcommand("cosets", "r-cyclotomic cosets modulo 2q");
    add_q(cosets);
    add_r(cosets);
    add_common(cosets);

    auto* factor = app.add_subcommand("factor", "Minimal-polynomial factorization of x^2q - 1 over F_r");
    add_q(factor);
    add_r(factor);
    add_common(factor);

    auto* code = app.add_subcommand("code", "Cyclic code from a class generator");
    add_q(code);
    add_r(code);
    code->add_option("--classes", cfg.classes, "D0 D1 E0 E1 or DiEj")->required();
    code->add_option("--remove", remove, "Coset representatives to divide out");
    code->add_flag("--dual", cfg.dual, "Report the dual code");
    add_budget(code);
    add_common(code);

    auto* chain = app.add_subcommand("chain", "Nested code pair and its synchronizable-code parameters");
    add_q(chain);
    add_r(chain);
    chain->add_option("--classes", cfg.classes, "D0 D1 E0 E1 or DiEj")->required();
    chain->add_option("--inner-remove", inner_remove, "Representatives removed for the inner code");
    chain->add_option("--outer-remove", outer_remove, "Representatives removed for the outer code")->required();
    add_budget(chain);
    add_common(chain);

    auto* enumerate = app.add_subcommand("enumerate", "All chains of one construction family");
    add_q(enumerate);
    add_r(enumerate);
    enumerate->add_option("--classes", cfg.classes, "Di for --theorem 1, DiEj for --theorem 2")->required();
    enumerate->add_option("--theorem", cfg.theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
    enumerate->add_option("--z", z, "Size of the inner removal set")->required();
    add_budget(enumerate);
    add_common(enumerate);

    auto* regress = app.add_subcommand("regress", "Run the built-in regression scenarios and report pass/fail");
    add_common(regress);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: invalid-argument: " << e.what() << "\n";
        return kExitInvalidArgument;
    }

    try {
        cfg.command = parse_command(app.get_subcommands().front()->get_name());
        cfg.inner_remove = parse_residue_list(inner_remove);
        cfg.outer_remove = parse_residue_list(outer_remove);
        cfg.remove = parse_residue_list(remove);
        cfg.z = z;
    } catch (const qsync::InvalidArgument& e) {
        std::cerr << "error: invalid-argument: " << e.what() << "\n";
        return kExitInvalidArgument;
    }
    return run(cfg, std::cout, std::cerr);
}
