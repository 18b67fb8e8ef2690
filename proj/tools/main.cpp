#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "duality/duality.h"

namespace {

struct Args {
    std::string problem_file;
    std::string order = "grevlex";
    std::string phi, split, section;
    std::string json_out;
    std::uint64_t seed = 2026;
    int trials = 100;
};

const char* kCommands[] = {"resolve",  "dualize",    "be-check", "ext",
                           "purity",   "cm-check",   "noetherian",
                           "membership", "residue",  "bezoutian",
                           "oracle-xcheck"};

std::string build_options(const Args& a) {
    nlohmann::json j;
    j["order"] = a.order;
    j["seed"] = a.seed;
    j["trials"] = a.trials;
    if (!a.phi.empty()) j["phi"] = a.phi;
    if (!a.split.empty()) j["split"] = a.split;
    if (!a.section.empty()) j["section"] = a.section;
    return j.dump();
}

int exit_code(int status) {
    switch (status) {
    case DUA_OK: return 0;
    case DUA_PARSE_ERROR: return 1;
    case DUA_REJECTED: return 2;
    default: return 3;
    }
}

int run(const std::string& command, const Args& args) {
    std::ifstream in(args.problem_file);
    if (!in) {
        std::cerr << "cannot open " << args.problem_file << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    dua_problem* prob = nullptr;
    char* err = nullptr;
    int rc = dua_problem_parse(text.c_str(), &prob, &err);
    if (rc != DUA_OK) {
        std::cerr << (err ? err : "parse error") << "\n";
        dua_string_free(err);
        return exit_code(rc);
    }

    char* report = nullptr;
    std::string opts = build_options(args);
    rc = dua_run(prob, command.c_str(), opts.c_str(), &report, &err);
    dua_problem_free(prob);
    if (rc != DUA_OK) {
        std::cerr << (err ? err : "error") << "\n";
        dua_string_free(err);
        return exit_code(rc);
    }

    std::cout << report << "\n";
    if (!args.json_out.empty()) {
        std::ofstream out(args.json_out);
        out << report << "\n";
    }
    dua_string_free(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exactness, purity, and duality analysis for polynomial "
                 "ideals and free complexes"};
    app.set_version_flag("--version", dua_version());
    app.require_subcommand(1);

    Args args;
    std::string chosen;
    for (const char* name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("problem", args.problem_file, "problem description file")
            ->required();
        sub->add_option("--order", args.order, "monomial order: grevlex | lex");
        sub->add_option("--phi", args.phi, "query polynomial");
        sub->add_option("--split", args.split,
                        "variable split, e.g. \"free=x dependent=y\"");
        sub->add_option("--section", args.section,
                        "section assignments, e.g. \"y = x^2\"");
        sub->add_option("--seed", args.seed, "RNG seed for cross-checks");
        sub->add_option("--trials", args.trials, "number of cross-check trials");
        sub->add_option("--json", args.json_out, "also write the report here");
        sub->callback([&chosen, name] { chosen = name; });
    }

    CLI11_PARSE(app, argc, argv);
    return run(chosen, args);
}
