#include "ramfilt/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"ramfilt: ramification filtrations of elementary abelian p-extensions"};
    app.require_subcommand(1);

    bool json = false;
    std::int64_t bound = 0;
    std::vector<CLI::Option*> bound_options;
    std::string file;

    const std::pair<const char*, const char*> commands[] = {
        {"lower", "upper breaks -> lower breaks, index table, different and discriminant exponents"},
        {"upper", "lower breaks -> upper breaks"},
        {"admissible", "admissible break values over the field, and the profile verdict"},
        {"group-check", "intersection property vs elementary abelian for a finite p-group"},
        {"as-break", "reduce and classify an Artin-Schreier right-hand side over F_p((T))"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", json, "machine-readable output");
        bound_options.push_back(
            sub->add_option("--bound", bound, "largest break to list (required in characteristic p)")
                ->check(CLI::PositiveNumber));
        sub->add_option("FILE", file, "input document (JSON)")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ramfilt::kExitValidation;
    }

    const auto command = ramfilt::command_from_name(app.get_subcommands().front()->get_name());
    ramfilt::CommandOptions options;
    options.json = json;
    for (const auto* opt : bound_options) {
        if (opt->count() > 0) options.bound = bound;
    }
    return ramfilt::run_command_on_file(*command, file, options, std::cout, std::cerr);
}
