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


// omegajump: command-line front end.
//
// Exit status: 0 success, 1 inconsistent report, failed check or exceeded
// guard, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "omega/automaton_io.hpp"
#include "omega/classifier.hpp"
#include "omega/error.hpp"
#include "omega/expansion.hpp"
#include "omega/game_io.hpp"
#include "omega/oracle/suites.hpp"
#include "omega/report.hpp"

namespace {

using namespace omega;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config
{
    std::string format = "text";
    std::size_t max_states = Limits{}.max_scc_states;
    std::string convention = "paper";
    std::uint64_t seed = 0;

    bool json() const { return format == "json"; }
    Limits limits() const
    {
        Limits l;
        l.max_scc_states = max_states;
        return l;
    }
};

void
emit(const Config& cfg, const Json& doc, const std::string& text)
{
    if (cfg.json()) std::cout << doc.dump(2) << '\n';
    else std::cout << text;
}

int
cmd_classify(const Config& cfg, const std::vector<std::string>& paths)
{
    Json docs = Json::array();
    std::string text;
    for (const auto& path : paths) {
        const auto c = classify(load_automaton(path), cfg.limits());
        auto doc = to_json(c);
        if (paths.size() > 1) {
            doc["file"] = path;
            text += "== " + path + "\n";
        }
        docs.push_back(doc);
        text += to_text(c);
    }
    emit(cfg, paths.size() == 1 ? docs[0] : docs, text);
    return kOk;
}

int
cmd_jump(const Config& cfg, const std::string& path, const std::string& alphabet)
{
    const auto a = load_automaton(path);
    const auto big = alphabet.empty() ? a.alphabet : Alphabet::parse_csv(alphabet);
    const auto r = jump_report(a, big, cfg.limits());
    emit(cfg, to_json(r), to_text(r));
    return r.consistent ? kOk : kFailed;
}

int
cmd_predict(const Config& cfg, const std::string& side_text, const std::string& level_text)
{
    const auto side = parse_side(side_text);
    if (!side) throw ValidationError("unknown side '" + side_text + "' (expected Sigma, Pi or Delta)");
    const ClassRef c{*side, Level::parse(level_text)};
    const auto p = predict_jump(c);
    Json names = Json::array();
    std::string text = c.name() + " ->";
    for (const auto& x : p) {
        names.push_back(x.name());
        text += " " + x.name();
    }
    emit(cfg, Json{{"class", c.name()}, {"predicted", names}}, text + "\n");
    return kOk;
}

int
cmd_table(const Config& cfg, unsigned max_level)
{
    const auto t = hierarchy_table(max_level);
    emit(cfg, to_json(t), to_text(t));
    return kOk;
}

int
report_solve(const Config& cfg, const GameGraph& g, const Objective& o, std::optional<LiftConvention> convention)
{
    const auto result = solve(g, o, cfg.limits());
    const bool verified = verify_strategy(g, o, result);
    const SolveReport rep{g, o, result, verified, convention};
    emit(cfg, to_json(rep), to_text(rep));
    return verified ? kOk : kFailed;
}

int
cmd_solve(const Config& cfg, const std::string& path)
{
    auto spec = load_game(path);
    if (!spec.objective) throw ValidationError("game file '" + path + "' has no objective line");
    return report_solve(cfg, spec.graph, *spec.objective, std::nullopt);
}

LiftConvention
parse_convention(const std::string& s)
{
    if (s == "paper") return LiftConvention::PaperExact;
    if (s == "meets-r") return LiftConvention::MeetsR;
    throw ValidationError("unknown convention '" + s + "' (expected paper or meets-r)");
}

/// Ids or names, comma separated.
VertexSet
parse_vertices(const GameGraph& g, const std::string& csv)
{
    VertexSet out;
    std::stringstream ss(csv);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        std::optional<Vertex> found;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (g.name(v) == tok) found = v;
        }
        if (!found && tok.find_first_not_of("0123456789") == std::string::npos) found = static_cast<Vertex>(std::stoul(tok));
        if (!found || *found >= g.size()) throw ValidationError("'" + tok + "' is not a vertex of the original arena");
        out.push_back(*found);
    }
    return make_index_set(std::move(out));
}

int
cmd_lift(const Config& cfg, const std::string& base_path, const std::string& expanded_path, const std::string& reach)
{
    const auto base = load_game(base_path).graph;
    const auto expanded = load_game(expanded_path).graph;
    const auto lifted = lift_objective(base, expanded, parse_vertices(base, reach), parse_convention(cfg.convention));
    return report_solve(cfg, expanded, lifted.objective, lifted.convention);
}

int
cmd_member(const Config& cfg, const std::string& path, const std::string& word)
{
    const auto a = load_automaton(path);
    const auto w = parse_up_word(a.alphabet, word);
    const bool yes = accepts(a, w);
    emit(cfg, Json{{"word", w.to_string()}, {"accepted", yes}}, w.to_string() + (yes ? " accepted\n" : " rejected\n"));
    return kOk;
}

int
cmd_show(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto text = buf.str();
    const bool game = path.size() > 5 && (path.ends_with(".game") || path.ends_with(".gm"));
    if (game) {
        const auto spec = parse_game(text);
        std::cout << write_game(spec.graph, spec.objective);
    } else {
        std::cout << write_automaton(parse_automaton(text));
    }
    return kOk;
}

int
cmd_selftest(const Config& cfg, bool quick)
{
    oracle::SuiteOptions o;
    o.seed = cfg.seed;
    o.limits = cfg.limits();
    o.exhaustive_four = !quick;
    const auto results = oracle::all_suites(o);
    bool ok = true;
    Json docs = Json::array();
    std::string text;
    for (const auto& r : results) {
        ok = ok && r.passed();
        docs.push_back({{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed()}, {"checked", r.checked},
                        {"failures", r.failures}, {"failure_examples", r.failure_examples}, {"notes", r.notes}});
        text += oracle::format(r) + "\n";
    }
    emit(cfg, Json{{"seed", cfg.seed}, {"passed", ok}, {"suites", docs}}, text);
    return ok ? kOk : kFailed;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Borel classification of omega-regular languages, alphabet expansion and games on graphs"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-states", cfg.max_states, "Largest strongly connected component to enumerate")
        ->check(CLI::PositiveNumber);
    app.add_option("--convention", cfg.convention, "Objective lift convention")->check(CLI::IsMember({"paper", "meets-r"}));
    app.add_option("--seed", cfg.seed, "Generator seed for selftest");

    std::vector<std::string> paths;
    std::string path, path2, alphabet, side, level, reach, word;
    unsigned max_level = 4;
    bool quick = false;

    auto* classify_cmd = app.add_subcommand("classify", "Exact Borel label of one or more automata");
    classify_cmd->add_option("files", paths, "Automaton files")->required();
    auto* jump_cmd = app.add_subcommand("jump", "Classes before and after growing the alphabet");
    jump_cmd->add_option("file", path, "Automaton file")->required();
    jump_cmd->add_option("--alphabet", alphabet, "Expanded alphabet, comma separated");
    auto* predict_cmd = app.add_subcommand("predict", "Predicted class after expansion");
    predict_cmd->add_option("side", side, "Sigma, Pi or Delta")->required();
    predict_cmd->add_option("level", level, "1, 2, ..., omega, omega+k, omega1")->required();
    auto* table_cmd = app.add_subcommand("table", "Jump table up to a finite level");
    table_cmd->add_option("max", max_level, "Largest finite level")->check(CLI::PositiveNumber);
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game file");
    solve_cmd->add_option("file", path, "Game file")->required();
    auto* lift_cmd = app.add_subcommand("lift", "Lift a reachability objective to the expanded arena and solve");
    lift_cmd->add_option("base", path, "Original game file")->required();
    lift_cmd->add_option("expanded", path2, "Expanded game file")->required();
    lift_cmd->add_option("--reach", reach, "Target vertices (ids or names, comma separated)");
    lift_cmd->add_option("--convention", cfg.convention, "paper or meets-r")->check(CLI::IsMember({"paper", "meets-r"}));
    auto* member_cmd = app.add_subcommand("member", "Membership of an ultimately periodic word");
    member_cmd->add_option("file", path, "Automaton file")->required();
    member_cmd->add_option("word", word, "Word as u(v)^w")->required();
    auto* show_cmd = app.add_subcommand("show", "Re-emit an automaton or game file in normal form");
    show_cmd->add_option("file", path, "Automaton or .game file")->required();
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the oracle suites");
    selftest_cmd->add_flag("--quick", quick, "Skip the exhaustive four-vertex parity sweep");
    selftest_cmd->add_option("--seed", cfg.seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(cfg, paths);
        if (*jump_cmd) return cmd_jump(cfg, path, alphabet);
        if (*predict_cmd) return cmd_predict(cfg, side, level);
        if (*table_cmd) return cmd_table(cfg, max_level);
        if (*solve_cmd) return cmd_solve(cfg, path);
        if (*lift_cmd) return cmd_lift(cfg, path, path2, reach);
        if (*member_cmd) return cmd_member(cfg, path, word);
        if (*show_cmd) return cmd_show(path);
        if (*selftest_cmd) return cmd_selftest(cfg, quick);
    } catch (const GuardExceeded& e) {
        std::cerr << "omegajump: guard exceeded: " << e.what() << '\n';
        return kFailed;
    } catch (const ParseError& e) {
        std::cerr << "omegajump: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "omegajump: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "omegajump: internal error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
