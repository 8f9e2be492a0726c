#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ewalk/runconfig.hpp"
#include "ewalk/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ewalk: discrete-time quantum walks under superposed static "
                 "and harmonic phase drives"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    int jobs = 0;

    CLI::App* run = app.add_subcommand("run", "run an experiment config");
    run->add_option("config", config_path, "key=value config file")->required();
    run->add_option("--out", out_dir, "output directory (default: out)");
    run->add_option("--jobs", jobs,
                    "parallel sweep width (default: all cores)");

    CLI::App* validate =
        app.add_subcommand("validate", "parse a config and print it resolved");
    validate->add_option("config", config_path, "key=value config file")
        ->required();

    app.add_subcommand("list-experiments", "list available experiment names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list-experiments")) {
            for (const std::string& name : ewalk::experiment_names())
                std::cout << name << '\n';
            return 0;
        }
        const ewalk::ExperimentConfig config =
            ewalk::parse_config(read_file(config_path));
        if (app.got_subcommand("validate")) {
            std::cout << ewalk::serialize_config(config);
            return 0;
        }
        const ewalk::RunResult result =
            ewalk::run_experiment(config, out_dir, jobs);
        for (const std::string& err : result.errors)
            std::cerr << "error: " << err << '\n';
        if (result.exit_code == 0)
            std::cout << "ok: outputs in " << out_dir << '\n';
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
