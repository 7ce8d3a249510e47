#pragma once

#include <ostream>
#include <string>

#include "ruled/rational.hpp"

namespace ruled {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitExhausted = 2,
    kExitInputError = 3,
    kExitUncoverable = 4,
};

/// Flags shared by all subcommands.  Everything is deterministic; there is
/// no seed.
struct RunConfig {
    Rational delta{1, 2};
    std::size_t t = 2;
    std::size_t count = 10;
    std::size_t nmax = 100000;
    std::string family;
    std::string lines;
    std::string out;  // file (or directory for export-plot); empty = stdout
    bool verify = false;
    int precision = 12;
    std::size_t samples = 64;
    std::size_t grid = 21;

    /// Throws InputError when a flag is out of range.
    void validate() const;
};

/// Each command writes its artifact to cfg.out (stdout when empty), prints
/// diagnostics to `log`, and returns an ExitCode.
int cmd_construct(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);
int cmd_witness(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);
int cmd_refute(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);
int cmd_cover(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);
int cmd_export_plot(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& log);

}  // namespace ruled
