// coopgame: command-line front end for boycott games on TU characteristic
// functions. Exit codes: 0 success, 1 malformed input, 2 property violation
// found, 3 size limits exceeded.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coop/boycott.hpp"
#include "coop/errors.hpp"
#include "coop/game.hpp"
#include "coop/generators.hpp"
#include "coop/harness.hpp"
#include "coop/io.hpp"
#include "coop/sampling.hpp"
#include "coop/shapley.hpp"

namespace {

using namespace coop;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitTooLarge = 3;

Game load_game(const std::string& path) {
    if (path == "-") {
        return read_game_document(std::cin, "<stdin>");
    }
    return load_game_file(path);
}

Graph load_graph(const std::string& path) {
    if (path == "-") {
        return read_graph_document(std::cin, "<stdin>");
    }
    return load_graph_file(path);
}

Coalition parse_coalition(const std::string& text, const Game& g, const char* flag) {
    try {
        return g.coalition(parse_mask(text, g.player_count()));
    } catch (const Error& e) {
        throw Error(std::string(flag) + ": " + e.what());
    }
}

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

void emit_rows(const std::vector<std::vector<std::string>>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << format_csv(rows);
    } else {
        std::cout << format_table(rows);
    }
}

// --- shapley ---------------------------------------------------------------

struct ShapleyArgs {
    std::string game_path = "-";
    std::string format = "table";
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    bool sampled = false;
};

int run_shapley(const ShapleyArgs& args) {
    const Game g = load_game(args.game_path);
    if (!args.sampled) {
        const ValueVector values = shapley_exact(g);
        if (args.format == "json") {
            nlohmann::json doc;
            doc["format"] = "values/1";
            doc["mode"] = "exact";
            nlohmann::json rows = nlohmann::json::array();
            for (PlayerId p = 0; p < g.player_count(); ++p) {
                rows.push_back({{"player", p},
                                {"label", g.player_label(p)},
                                {"value", to_fraction_string(values[static_cast<std::size_t>(p)])}});
            }
            doc["values"] = std::move(rows);
            std::cout << doc.dump(2) << "\n";
            return kExitOk;
        }
        std::vector<std::vector<std::string>> rows{{"player", "label", "shapley"}};
        for (PlayerId p = 0; p < g.player_count(); ++p) {
            rows.push_back({std::to_string(p), g.player_label(p),
                            to_fraction_string(values[static_cast<std::size_t>(p)])});
        }
        emit_rows(rows, args.format);
        return kExitOk;
    }

    const SampledValueVector sampled = shapley_sampled(g, args.sample, args.seed);
    if (args.format == "json") {
        nlohmann::json doc;
        doc["format"] = "values/1";
        doc["mode"] = "sampled";
        doc["permutations"] = sampled.permutations;
        doc["seed"] = sampled.seed;
        nlohmann::json rows = nlohmann::json::array();
        for (PlayerId p = 0; p < g.player_count(); ++p) {
            rows.push_back({{"player", p},
                            {"label", g.player_label(p)},
                            {"estimate", sampled.estimate[static_cast<std::size_t>(p)]},
                            {"std_error", sampled.std_error[static_cast<std::size_t>(p)]}});
        }
        doc["values"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows{{"player", "label", "estimate", "std_error"}};
    for (PlayerId p = 0; p < g.player_count(); ++p) {
        rows.push_back({std::to_string(p), g.player_label(p),
                        format_double(sampled.estimate[static_cast<std::size_t>(p)]),
                        format_double(sampled.std_error[static_cast<std::size_t>(p)])});
    }
    emit_rows(rows, args.format);
    return kExitOk;
}

// --- boycott / myerson -----------------------------------------------------

struct BoycottArgs {
    std::string game_path = "-";
    std::string boycotters;
    std::string boycotted;
};

int run_boycott(const BoycottArgs& args) {
    const Game g = load_game(args.game_path);
    const BoycottSpec spec(parse_coalition(args.boycotters, g, "--boycotters"),
                           parse_coalition(args.boycotted, g, "--boycotted"));
    std::cout << write_game_document(boycott(g, spec));
    return kExitOk;
}

struct MyersonArgs {
    std::string base_path;
    std::string graph_path;
};

int run_myerson(const MyersonArgs& args) {
    if (args.base_path == "-" && args.graph_path == "-") {
        throw Error("--base and --graph cannot both read stdin");
    }
    const Game base = load_game(args.base_path);
    const Graph graph = load_graph(args.graph_path);
    std::cout << write_game_document(myerson_restriction(base, graph));
    return kExitOk;
}

// --- impact ----------------------------------------------------------------

int run_impact(const BoycottArgs& args, const std::string& format) {
    const Game g = load_game(args.game_path);
    const BoycottSpec spec(parse_coalition(args.boycotters, g, "--boycotters"),
                           parse_coalition(args.boycotted, g, "--boycotted"));
    const ImpactVector result = impact(g, spec);
    if (format == "json") {
        nlohmann::json doc;
        doc["format"] = "impact/1";
        doc["total"] = to_fraction_string(result.total());
        nlohmann::json rows = nlohmann::json::array();
        for (PlayerId p = 0; p < g.player_count(); ++p) {
            const std::size_t i = static_cast<std::size_t>(p);
            rows.push_back({{"player", p},
                            {"label", g.player_label(p)},
                            {"role", role_name(result.roles[i])},
                            {"pre", to_fraction_string(result.pre[i])},
                            {"post", to_fraction_string(result.post[i])},
                            {"impact", to_fraction_string(result.impact[i])}});
        }
        doc["players"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows{{"player", "label", "role", "pre", "post", "impact"}};
    for (PlayerId p = 0; p < g.player_count(); ++p) {
        const std::size_t i = static_cast<std::size_t>(p);
        rows.push_back({std::to_string(p), g.player_label(p), role_name(result.roles[i]),
                        to_fraction_string(result.pre[i]), to_fraction_string(result.post[i]),
                        to_fraction_string(result.impact[i])});
    }
    emit_rows(rows, format);
    return kExitOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
    std::string game_path = "-";
    std::string kind;
    std::string boycotters;
    std::string boycotted;
    PlayerId player = 0;
};

int run_check(const CheckArgs& args) {
    const Game g = load_game(args.game_path);
    if (args.kind == "convex") {
        if (auto w = supermodularity_witness(g)) {
            std::cout << "not supermodular: " << w->to_string() << "\n";
            return kExitViolation;
        }
        std::cout << "supermodular\n";
        return kExitOk;
    }
    const Coalition a = parse_coalition(args.boycotters, g, "--boycotters");
    const Coalition b = parse_coalition(args.boycotted, g, "--boycotted");
    if (args.kind == "disjoint") {
        if (auto w = disjoint_productivity_witness(g, a, b)) {
            std::cout << "not disjointly productive: " << w->to_string() << "\n";
            return kExitViolation;
        }
        std::cout << "disjointly productive\n";
        return kExitOk;
    }
    // invariant: does the (A, B) boycott leave player k's coalitions alone?
    if (args.player < 0 || args.player >= g.player_count()) {
        throw Error("--player out of range");
    }
    const BoycottSpec spec(a, b);
    const Game after = boycott(g, spec);
    const Mask bit = player_bit(args.player);
    for (Mask s = 0; s <= g.full_mask(); ++s) {
        if ((s & bit) && g.value(s) != after.value(s)) {
            std::cout << "not invariant: v(" << mask_to_string(s) << ") = "
                      << to_fraction_string(g.value(s)) << " but v^AB gives "
                      << to_fraction_string(after.value(s)) << "\n";
            return kExitViolation;
        }
    }
    std::cout << "invariant\n";
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string game_path;
    std::string family;
    int n = 0;
    PlayerId special = 0;
    std::uint64_t seed = 0;
    std::string theorem = "all";
    std::uint64_t trials = 0;
    std::uint64_t spec_seed = 0;
    bool exhaustive = false;
    std::string boycotters;
    std::string boycotted;
};

Game verify_instance(const VerifyArgs& args) {
    if (args.family.empty()) {
        return load_game(args.game_path.empty() ? "-" : args.game_path);
    }
    const auto family = family_from_name(args.family);
    if (!family) {
        throw Error("unknown family \"" + args.family + "\"");
    }
    ScenarioSpec spec;
    spec.family = *family;
    spec.n = args.n;
    spec.special = args.special;
    spec.seed = args.seed;
    return instantiate(spec);
}

int run_verify(const VerifyArgs& args) {
    const Game g = verify_instance(args);
    EnumerationPlan plan = EnumerationPlan::all();
    if (args.trials > 0) {
        plan = EnumerationPlan::sampled(args.trials, args.spec_seed);
    } else if (!args.exhaustive && g.player_count() > 5) {
        plan = EnumerationPlan::sampled(200, args.spec_seed);
    }

    std::vector<TheoremReport> reports;
    const bool all = args.theorem == "all";
    const bool supermodular = is_supermodular(g);
    const bool has_pair = !args.boycotters.empty() || !args.boycotted.empty();

    if (all || args.theorem == "convexity") {
        if (all && g.player_count() > 10) {
            std::cout << "[skipped]  convexity-biconditional: exhaustive enumeration needs n <= 10\n";
        } else {
            reports.push_back(verify_convexity_theorem(g));
        }
    }
    auto run_supermodular = [&](const char* id, auto&& fn) {
        if (all && !supermodular) {
            std::cout << "[skipped]  " << id << ": game is not supermodular\n";
            return;
        }
        reports.push_back(fn());
    };
    if (all || args.theorem == "nested") {
        run_supermodular("nested-monotonicity", [&] { return verify_nested_monotonicity(g, plan); });
    }
    if (all || args.theorem == "many-on-one") {
        run_supermodular("many-on-one-maximal-impact", [&] { return verify_many_on_one(g, plan); });
    }
    if (all || args.theorem == "sign") {
        run_supermodular("impact-signs", [&] { return verify_sign_theorem(g, plan); });
    }
    if (args.theorem == "lemma1" || (all && has_pair)) {
        const Coalition a = parse_coalition(args.boycotters, g, "--boycotters");
        const Coalition b = parse_coalition(args.boycotted, g, "--boycotted");
        reports.push_back(verify_lemma1(g, a, b));
    }
    if (reports.empty() && !all) {
        throw Error("unknown theorem \"" + args.theorem +
                    "\" (expected convexity, nested, many-on-one, sign, lemma1 or all)");
    }

    bool ok = true;
    for (const TheoremReport& report : reports) {
        std::cout << report.to_string() << "\n";
        ok = ok && report.holds;
    }
    return ok ? kExitOk : kExitViolation;
}

// --- scenario --------------------------------------------------------------

struct ScenarioArgs {
    std::string id;
    int n = 0;
    int a = 1;
    int b = 1;
    std::string variant = "blocks";
    std::string format = "table";
};

int run_scenario_cmd(const ScenarioArgs& args) {
    ScenarioReport report = [&] {
        if (args.id == "triangle") {
            return scenario_triangle();
        }
        if (args.id == "homogeneous") {
            return scenario_homogeneous(args.n, args.a, args.b);
        }
        if (args.id == "heterogeneous") {
            return scenario_heterogeneous(args.n, args.a);
        }
        if (args.id == "three-block") {
            if (args.variant == "blocks") {
                return scenario_three_block_blocks(args.n);
            }
            if (args.variant == "dropout") {
                return scenario_three_block_dropout(args.n);
            }
            throw Error("unknown variant \"" + args.variant + "\" (expected blocks or dropout)");
        }
        throw Error("unknown scenario \"" + args.id +
                    "\" (expected triangle, homogeneous, heterogeneous or three-block)");
    }();

    auto expectation_text = [](const std::optional<Rational>& e) {
        return e ? to_fraction_string(*e) : std::string("-");
    };
    if (args.format == "json") {
        nlohmann::json doc;
        doc["format"] = "scenario/1";
        doc["scenario"] = report.scenario_id;
        doc["boycott"] = report.spec.to_string();
        nlohmann::json rows = nlohmann::json::array();
        for (const ScenarioRow& row : report.rows) {
            nlohmann::json cell{{"player", row.player},
                                {"label", row.label},
                                {"role", role_name(row.role)},
                                {"pre", to_fraction_string(row.pre)},
                                {"post", to_fraction_string(row.post)},
                                {"impact", to_fraction_string(row.impact)},
                                {"verdict", row.match ? "MATCH"
                                            : row.advisory ? "ADVISORY"
                                                           : "MISMATCH"}};
            if (row.expected_pre) {
                cell["expected_pre"] = to_fraction_string(*row.expected_pre);
            }
            if (row.expected_post) {
                cell["expected_post"] = to_fraction_string(*row.expected_post);
            }
            rows.push_back(std::move(cell));
        }
        doc["players"] = std::move(rows);
        doc["notes"] = report.notes;
        doc["all_match"] = report.all_match;
        std::cout << doc.dump(2) << "\n";
        return report.all_match ? kExitOk : kExitViolation;
    }

    std::cout << report.scenario_id << "  boycott " << report.spec.to_string() << "\n";
    std::vector<std::vector<std::string>> rows{
        {"player", "label", "role", "pre", "expected", "post", "expected", "impact", "verdict"}};
    for (const ScenarioRow& row : report.rows) {
        rows.push_back({std::to_string(row.player), row.label, role_name(row.role),
                        to_fraction_string(row.pre), expectation_text(row.expected_pre),
                        to_fraction_string(row.post), expectation_text(row.expected_post),
                        to_fraction_string(row.impact),
                        row.match ? "MATCH"
                        : row.advisory ? "ADVISORY"
                                       : "MISMATCH"});
    }
    emit_rows(rows, args.format);
    for (const std::string& note : report.notes) {
        std::cout << "note: " << note << "\n";
    }
    std::cout << (report.all_match ? "all expectations match" : "EXPECTATION MISMATCH") << "\n";
    return report.all_match ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boycott games on transferable-utility characteristic functions"};
    app.require_subcommand(1);

    ShapleyArgs shapley_args;
    CLI::App* cmd_shapley = app.add_subcommand("shapley", "Exact or sampled Shapley values");
    cmd_shapley->add_option("--game", shapley_args.game_path, "Game document path, - for stdin");
    cmd_shapley->add_option("--format", shapley_args.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    CLI::Option* sample_opt =
        cmd_shapley->add_option("--sample", shapley_args.sample, "Permutation count (sampled mode)")
            ->check(CLI::PositiveNumber);
    cmd_shapley->add_option("--seed", shapley_args.seed, "Sampling seed")->needs(sample_opt);

    BoycottArgs boycott_args;
    CLI::App* cmd_boycott = app.add_subcommand("boycott", "Emit the boycott game document");
    cmd_boycott->add_option("--game", boycott_args.game_path, "Game document path, - for stdin");
    cmd_boycott->add_option("-A,--boycotters", boycott_args.boycotters, "Coalition, e.g. {0,2}")
        ->required();
    cmd_boycott->add_option("-B,--boycotted", boycott_args.boycotted, "Coalition, e.g. {1}")
        ->required();

    BoycottArgs impact_args;
    std::string impact_format = "table";
    CLI::App* cmd_impact = app.add_subcommand("impact", "Per-player pre/post/impact table");
    cmd_impact->add_option("--game", impact_args.game_path, "Game document path, - for stdin");
    cmd_impact->add_option("-A,--boycotters", impact_args.boycotters, "Coalition")->required();
    cmd_impact->add_option("-B,--boycotted", impact_args.boycotted, "Coalition")->required();
    cmd_impact->add_option("--format", impact_format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CheckArgs check_args;
    CLI::App* cmd_check = app.add_subcommand("check", "Structural property checks");
    cmd_check->add_option("kind", check_args.kind, "convex, disjoint or invariant")
        ->required()
        ->check(CLI::IsMember({"convex", "disjoint", "invariant"}));
    cmd_check->add_option("--game", check_args.game_path, "Game document path, - for stdin");
    cmd_check->add_option("-A,--boycotters", check_args.boycotters, "Coalition");
    cmd_check->add_option("-B,--boycotted", check_args.boycotted, "Coalition");
    cmd_check->add_option("-k,--player", check_args.player, "Player index (invariant check)");

    VerifyArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Machine-check theorems on an instance");
    CLI::Option* verify_game =
        cmd_verify->add_option("--game", verify_args.game_path, "Game document path, - for stdin");
    CLI::Option* verify_family =
        cmd_verify->add_option("--family", verify_args.family,
                               "Generate the instance: homogeneous, heterogeneous, three_block, "
                               "triangle, random_convex, random_any");
    verify_family->excludes(verify_game);
    cmd_verify->add_option("--n", verify_args.n, "Player count (or block size)");
    cmd_verify->add_option("--special", verify_args.special, "Special player (heterogeneous)");
    cmd_verify->add_option("--seed", verify_args.seed, "Generator seed");
    cmd_verify->add_option("--theorem", verify_args.theorem,
                           "convexity, nested, many-on-one, sign, lemma1 or all");
    cmd_verify->add_option("--trials", verify_args.trials,
                           "Random (A,B) specs instead of exhaustive enumeration");
    cmd_verify->add_option("--spec-seed", verify_args.spec_seed, "Seed for random specs");
    cmd_verify->add_flag("--exhaustive", verify_args.exhaustive, "Force exhaustive enumeration");
    cmd_verify->add_option("-A,--boycotters", verify_args.boycotters, "Coalition (lemma1)");
    cmd_verify->add_option("-B,--boycotted", verify_args.boycotted, "Coalition (lemma1)");

    ScenarioArgs scenario_args;
    CLI::App* cmd_scenario = app.add_subcommand("scenario", "Reproduce a worked example");
    cmd_scenario
        ->add_option("id", scenario_args.id,
                     "triangle, homogeneous, heterogeneous or three-block")
        ->required();
    cmd_scenario->add_option("--n", scenario_args.n, "Player count (or block size)");
    cmd_scenario->add_option("--a", scenario_args.a, "Boycotter count");
    cmd_scenario->add_option("--b", scenario_args.b, "Boycotted count");
    cmd_scenario->add_option("--variant", scenario_args.variant, "blocks or dropout");
    cmd_scenario->add_option("--format", scenario_args.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    MyersonArgs myerson_args;
    CLI::App* cmd_myerson = app.add_subcommand("myerson", "Myerson restriction of a game by a graph");
    cmd_myerson->add_option("--base", myerson_args.base_path, "Base game document")->required();
    cmd_myerson->add_option("--graph", myerson_args.graph_path, "Graph document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        shapley_args.sampled = sample_opt->count() > 0;
        if (app.got_subcommand(cmd_shapley)) {
            return run_shapley(shapley_args);
        }
        if (app.got_subcommand(cmd_boycott)) {
            return run_boycott(boycott_args);
        }
        if (app.got_subcommand(cmd_impact)) {
            return run_impact(impact_args, impact_format);
        }
        if (app.got_subcommand(cmd_check)) {
            return run_check(check_args);
        }
        if (app.got_subcommand(cmd_verify)) {
            return run_verify(verify_args);
        }
        if (app.got_subcommand(cmd_scenario)) {
            return run_scenario_cmd(scenario_args);
        }
        if (app.got_subcommand(cmd_myerson)) {
            return run_myerson(myerson_args);
        }
        std::cerr << "no subcommand\n";
        return kExitBadInput;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
