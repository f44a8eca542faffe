#pragma once

#include "hulthen/exec.hpp"
#include "hulthen/hulthen_model.hpp"
#include "hulthen/io.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/sweep.hpp"

#include <string>
#include <vector>

namespace hulthen {

enum class Command { Spectrum, Table1, Sweep, Wavefunction, Verify };
enum class OutFormat { Csv, Json };

/// Everything a command run needs; the CLI fills this from flags and an
/// optional key=value config file (flags win).
struct RunConfig {
    Command command = Command::Spectrum;
    PhysicalParams params;  // mu=5, delta=0.25, strength=3.4, C=-4.9, pseudospin

    std::vector<std::string> state_labels;
    bool states_given = false;
    bool delta_given = false;

    SweepAxis axis;
    bool axis_given = false;

    OutFormat format = OutFormat::Csv;
    std::string out_path;  // empty: stdout

    bool oracle = true;
    bool nonrel = false;
    CentrifugalMode centrifugal = CentrifugalMode::HulthenSquare;

    double verify_tol = 1e-5;
};

/// Closed-form spectrum rows (state, momentum, both roots, decay exponents,
/// validity, selected root); solver errors are reported per row.
/// With no states and no explicit delta it reproduces the 32-row reference
/// layout (8 doublets at the four reference screening values).
OutputTable cmd_spectrum(const RunConfig& config);

/// The 32-entry published-spectrum regression at tolerance 5e-7.
OutputTable cmd_table1(const RunConfig& config, bool* all_pass = nullptr);

/// Closed-form series over a parameter axis; per-point failures become null
/// cells.  Emits both raw roots, validity flags and both signed theta^2.
OutputTable cmd_sweep(const RunConfig& config, ExecPolicy policy = ExecPolicy::Parallel);

/// Sampled radial components (r, G, F) or (r, R) for one state; metadata
/// header carries energy, decay exponent and node counts.
OutputTable cmd_wavefunction(const RunConfig& config);

/// Closed form vs shooting oracle per state: energies, differences,
/// per-state bracket-miss reports, optional exact-centrifugal deltas.
OutputTable cmd_verify(const RunConfig& config, bool* all_pass = nullptr,
                       std::string* human_summary = nullptr);

/// Runs the configured command, writes the output, and maps failures to the
/// stable exit-code contract: 0 success, 2 config error, 3 solver/oracle
/// failure (including a failed table1/verify gate).
int run_command(const RunConfig& config);

/// Comma-separated labels -> label-faithful states (no solver-index mapping).
std::vector<QuantumState> parse_state_list(const std::vector<std::string>& labels);

} // namespace hulthen
