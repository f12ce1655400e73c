// bigeo CLI: run parameter sweeps, execute the validation suite, manage presets.
//
// Exit codes: 0 success, 1 validation failure, 2 config error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bigeo/presets.hpp"
#include "bigeo/sweep.hpp"
#include "bigeo/validation.hpp"

namespace {

int write_table(const bigeo::sweep::Table& table, const std::string& out_path,
                const std::string& format) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return 2;
        }
        os = &file;
    }
    if (format == "json")
        bigeo::sweep::write_json(table, *os);
    else
        bigeo::sweep::write_csv(table, *os);
    return 0;
}

int run_config_text(const std::string& text, const std::string& out_path,
                    const std::string& format, unsigned workers) {
    const auto cfg = bigeo::sweep::parse_config(text);
    const auto table = bigeo::sweep::run_sweep(cfg, workers);
    return write_table(table, out_path, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite two-level system: geometric phase, decoherence and entanglement"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", filter, preset_name;
    unsigned workers = 0;

    auto* run = app.add_subcommand("run", "execute a sweep described by a config file");
    run->add_option("config", config_path, "path to the experiment config")->required();
    run->add_option("--out", out_path, "output file (default: stdout)");
    run->add_option("--workers", workers, "worker threads (default: config / hardware)");
    run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* validate = app.add_subcommand("validate", "run the acceptance-criteria suite");
    validate->add_option("--filter", filter, "run only checks whose name contains this");

    auto* presets = app.add_subcommand("presets", "list or run shipped figure presets");
    auto* plist = presets->add_subcommand("list", "list available presets");
    auto* prun = presets->add_subcommand("run", "run a preset by name");
    prun->add_option("name", preset_name, "preset name (see 'presets list')")->required();
    prun->add_option("--out", out_path, "output file (default: stdout)");
    prun->add_option("--workers", workers, "worker threads");
    prun->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    presets->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open config '" << config_path << "'\n";
                return 2;
            }
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            return run_config_text(text, out_path, format, workers);
        }
        if (*validate) {
            const auto results = bigeo::validation::run_all(filter);
            bigeo::validation::print_report(results, std::cout);
            return bigeo::validation::all_passed(results) ? 0 : 1;
        }
        if (*plist) {
            for (const auto& p : bigeo::presets::all())
                std::cout << p.name << "\t" << p.summary << "\n";
            return 0;
        }
        if (*prun) {
            const auto& preset = bigeo::presets::by_name(preset_name);
            return run_config_text(preset.config_text, out_path, format, workers);
        }
    } catch (const bigeo::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bigeo::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
