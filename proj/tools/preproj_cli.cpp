#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "preproj/preproj.h"

namespace {

struct Options {
    std::string config;
    bool json = false;
    bool dot = false;
    bool basis = false;
    std::string field;
    uint64_t seed = 0;
    uint64_t cap = 0;
    bool seed_set = false;
};

int fail_input(const std::string& what) {
    std::fprintf(stderr, "%s\n", what.c_str());
    return 2;
}

int run(const std::string& command, const Options& o) {
    pp_config* cfg = nullptr;
    int st = pp_config_from_file(o.config.c_str(), &cfg);
    if (st != PP_OK) return fail_input(std::string(pp_status_name(st)) + ": " + pp_last_error());
    if (!o.field.empty() && (st = pp_config_set_field(cfg, o.field.c_str())) != PP_OK) {
        pp_config_free(cfg);
        return fail_input(std::string(pp_status_name(st)) + ": " + pp_last_error());
    }
    if (o.cap) pp_config_set_cap(cfg, o.cap);
    if (o.seed_set) pp_config_set_seed(cfg, o.seed);

    unsigned flags = (o.json ? PP_OUT_JSON : 0) | (o.dot ? PP_OUT_DOT : 0) | (o.basis ? PP_OUT_BASIS : 0);
    char* out = nullptr;
    char* err = nullptr;
    int code = 0;
    st = pp_run_command(cfg, command.c_str(), flags, &out, &err, &code);
    pp_config_free(cfg);
    if (st != PP_OK) return fail_input(std::string(pp_status_name(st)) + ": " + pp_last_error());
    std::fputs(out, stdout);
    std::fputs(err, stderr);
    pp_string_free(out);
    pp_string_free(err);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized preprojective algebras, Weyl groups and support tau-tilting modules"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"check", "validate the Cartan datum and report its type"},
        {"algebra", "build Pi(C, D) and report dimensions and radical layers"},
        {"weyl", "enumerate the Weyl group (a truncated ball when infinite)"},
        {"stt", "list the support tau-tilting pairs (I_w, P_w)"},
        {"mutation-graph", "the mutation quiver of support tau-tilting modules"},
        {"verify", "run every consistency check; exit 1 on failure"},
    };
    std::string chosen;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", o.config, "JSON config file")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->add_flag("--dot", o.dot, "Graphviz output (mutation-graph)");
        sub->add_flag("--basis", o.basis, "list the basis paths (algebra)");
        sub->add_option("--seed", o.seed, "seed for randomized checks")->each([&](const std::string&) {
            o.seed_set = true;
        });
        sub->add_option("--field", o.field, "rational or fp:<p>");
        sub->add_option("--cap", o.cap, "Weyl group enumeration cap")->check(CLI::PositiveNumber);
        sub->callback([&chosen, n = name] { chosen = n; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return run(chosen, o);
}
