#ifndef PHASER_CLI_HPP
#define PHASER_CLI_HPP

#include "phaser/config.hpp"

#include <iosfwd>
#include <string>

namespace phaser {

enum class Command { steady, sweep_detuning, sweep_pump, witness, validate_effective, predict };

Command parse_command(const std::string& name);

// Fixed 17-significant-digit scientific notation, '\n' endings; every file
// starts with '#' comment lines echoing the resolved config and version.
void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const SweepSeries& series);
void write_witness_csv(std::ostream& os, const RunConfig& cfg,
                       const WitnessSeries& single_res, const WitnessSeries& collective_res);
void write_three_series_csv(std::ostream& os, const RunConfig& cfg,
                            const SweepSeries& full, const SweepSeries& eff,
                            const SweepSeries& eff_no_qdqd);

// Runs one subcommand; CSV (when produced) goes to the output path, human
// readable status to `log`.  Returns the process exit status.
int dispatch(Command cmd, const RunConfig& cfg, const std::string& output_path,
             std::ostream& log);

} // namespace phaser

#endif
