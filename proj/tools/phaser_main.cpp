#include "phaser/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Many-emitter phonon laser steady-state simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path = "out.csv";
    int workers = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "configuration file (key = value)")
            ->required();
        sub->add_option("-o,--output", output_path, "output CSV path");
        sub->add_option("-w,--workers", workers, "sweep worker count (0 = all cores)");
    };

    for (const char* name : {"steady", "sweep-detuning", "sweep-pump", "witness",
                             "validate-effective", "predict"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    try {
        phaser::RunConfig cfg = phaser::parse_config_file(config_path);
        if (workers > 0)
            cfg.workers = workers;
        return phaser::dispatch(phaser::parse_command(sub->get_name()), cfg,
                                output_path, std::cout);
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
}
