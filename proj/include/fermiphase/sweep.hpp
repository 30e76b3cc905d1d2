#pragma once

#include <string>
#include <vector>

namespace fermiphase {

/// Grid emitters behind the CLI `sweep` and `fermi-dirac` subcommands.
/// Output is RFC-4180-style CSV (comma, LF) with a header row, numbers
/// rendered with 15 significant digits, infinities as "inf". Byte-identical
/// across runs for fixed options.
struct SweepOptions {
    double from = 0.0;
    double to = 1.0;
    double step = 1.0 / 512.0;
    std::vector<double> orders = {0.25, 0.5, 1.0, 2.0, 4.0};
};

std::string sweep_csv(const SweepOptions& options);

std::string fermi_dirac_csv(double ratio_from, double ratio_to, double step);

} // namespace fermiphase
