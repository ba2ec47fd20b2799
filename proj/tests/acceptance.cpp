/*
 * Copyright 2026 The omegajump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes. Criteria 1, 2 and 8 are also checked end to end
// through the command-line tool.

#include <chrono>
#include <iostream>
#include <set>

#include <json.hpp>

#include "cli_runner.hpp"
#include "omega/expansion.hpp"
#include "omega/fixtures.hpp"
#include "omega/oracle/oracle.hpp"
#include "omega/oracle/suites.hpp"

using namespace omega;
using namespace omega::oracle;
using omega::testing::fixture_path;
using omega::testing::run_cli;
using Json = nlohmann::json;

namespace {

/// Parses the tool's JSON output; records a failure on a bad exit code.
Json
cli_json(SuiteResult& r, const std::string& args, int expected_code = 0)
{
    const auto run = run_cli("--format json " + args, false);
    ++r.checked;
    if (run.code != expected_code) {
        r.fail("'" + args + "' exited with " + std::to_string(run.code));
        return Json();
    }
    try {
        return Json::parse(run.out);
    } catch (const Json::exception& e) {
        r.fail("'" + args + "' printed invalid JSON: " + e.what());
        return Json();
    }
}

void
cli_table(SuiteResult& r)
{
    const auto t = cli_json(r, "table 4");
    if (t.is_null()) return;
    const auto want_arrows = Json::parse(R"([["Sigma1","Sigma2"],["Sigma3","Sigma4"],["Pi2","Pi3"]])");
    const std::set<std::string> want_loops{"Sigma2", "Sigma4", "SigmaOmega", "SigmaOmegaPlus1", "SigmaOmega1",
                                           "Pi1",    "Pi3",    "PiOmega",    "PiOmegaPlus1",    "PiOmega1"};
    if (t["arrows"] != want_arrows) r.fail("CLI table arrows: " + t["arrows"].dump());
    if (t["self_loops"].get<std::set<std::string>>() != want_loops || t["self_loops"].size() != want_loops.size()) {
        r.fail("CLI table self-loops: " + t["self_loops"].dump());
    }
}

void
cli_games(SuiteResult& r)
{
    const auto gm = cli_json(r, "solve " + fixture_path("gm.game"));
    if (!gm.is_null()) {
        const auto win0 = gm["win0"].get<std::set<std::string>>();
        if (!win0.count("v0")) r.fail("CLI: v0 not in player 0's region of gm.game");
        if (gm["verified"] != true) r.fail("CLI: gm.game strategy not verified");
        if (!gm["strategy0"].contains("v0")) r.fail("CLI: no positional move at v0");
    }
    const auto gp = cli_json(r, "solve " + fixture_path("gm_prime.game"));
    if (!gp.is_null()) {
        const auto win1 = gp["win1"].get<std::set<std::string>>();
        if (!win1.count("v0")) r.fail("CLI: v0 not in player 1's region of gm_prime.game");
        if (gp["verified"] != true) r.fail("CLI: gm_prime.game strategies not verified");
    }
    const auto lifted = cli_json(r, "lift " + fixture_path("gm.game") + " " + fixture_path("gm_prime.game")
                                        + " --reach v3 --convention paper");
    if (!lifted.is_null() && lifted["initial_winner"] != 1) r.fail("CLI: literal lift not won by player 1 at v0");
}

void
cli_claim(SuiteResult& r)
{
    const auto j = cli_json(r, "jump " + fixture_path("ab_prefixes.aut") + " --alphabet a,b,c");
    if (j.is_null()) return;
    const auto pinned = to_string(oracle::classify(embed(fixtures::alternating_prefix_open_set(), Alphabet::of_chars("abc"))));
    if (j["consistent"] != true) r.fail("CLI: report not consistent");
    if (!j["paper_claim_note"].is_string()
        || j["paper_claim_note"].get<std::string>().find("complete for Sigma2") == std::string::npos) {
        r.fail("CLI: claim note missing or not quoting the Sigma2 claim");
    }
    if (j["after"] != pinned) r.fail("CLI: computed label " + j["after"].dump() + " differs from oracle " + pinned);
    if (j["claim_disagreement"] != (pinned != "SIGMA2_PROPER")) r.fail("CLI: disagreement flag wrong");
}

} // namespace

int
main()
{
    SuiteOptions options;  // seed 0
    bool all = true;
    for (auto r : all_suites(options)) {
        if (r.criterion == 1) cli_table(r);
        if (r.criterion == 2) cli_games(r);
        if (r.criterion == 8) cli_claim(r);
        all = all && r.passed();
        std::cout << format(r) << std::endl;
    }
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}
