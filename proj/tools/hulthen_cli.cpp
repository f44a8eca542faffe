#include "hulthen/commands.hpp"

#include <CLI11.hpp>

#include <map>
#include <string>

namespace {

void add_param_flags(CLI::App* cmd, hulthen::RunConfig& cfg)
{
    cmd->add_option("--mu", cfg.params.mu, "Mass mu (fm^-1)")->capture_default_str();
    auto* d = cmd->add_option("--delta", cfg.params.delta, "Screening parameter delta (fm^-1)")
                  ->capture_default_str();
    d->each([&cfg](const std::string&) { cfg.delta_given = true; });
    cmd->add_option("--strength", cfg.params.strength,
                    "Potential intensity (Delta_0 or Sigma_0, fm^-1)")
        ->capture_default_str();
    cmd->add_option("--c-const", cfg.params.c_const, "Symmetry constant C (fm^-1)")
        ->capture_default_str();
    const std::map<std::string, hulthen::SymmetryKind> symmetries{
        {"pseudospin", hulthen::SymmetryKind::Pseudospin},
        {"spin", hulthen::SymmetryKind::Spin}};
    cmd->add_option("--symmetry", cfg.params.symmetry, "Symmetry limit")
        ->transform(CLI::CheckedTransformer(symmetries, CLI::ignore_case))
        ->default_str("pseudospin");
    auto* s = cmd->add_option("--states", cfg.state_labels,
                              "Comma-separated spectroscopic labels, e.g. 1s_1/2,0d_3/2");
    s->each([&cfg](const std::string&) { cfg.states_given = true; });
    const std::map<std::string, hulthen::OutFormat> formats{
        {"csv", hulthen::OutFormat::Csv}, {"json", hulthen::OutFormat::Json}};
    cmd->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("csv");
    cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    const std::map<std::string, hulthen::CentrifugalMode> modes{
        {"hulthen-square", hulthen::CentrifugalMode::HulthenSquare},
        {"exact", hulthen::CentrifugalMode::ExactInverseSquare}};
    cmd->add_option("--centrifugal", cfg.centrifugal, "Centrifugal term handling")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("hulthen-square");
}

void add_axis_flags(CLI::App* cmd, hulthen::RunConfig& cfg, bool required)
{
    const std::map<std::string, hulthen::SweepAxisKind> axes{
        {"delta", hulthen::SweepAxisKind::Delta},
        {"mu", hulthen::SweepAxisKind::Mu},
        {"c-const", hulthen::SweepAxisKind::CConst}};
    auto* a = cmd->add_option("--axis", cfg.axis.kind, "Sweep axis")
                  ->transform(CLI::CheckedTransformer(axes, CLI::ignore_case));
    auto* r = cmd->add_option_function<std::string>(
        "--range",
        [&cfg](const std::string& spec) {
            const auto c1 = spec.find(':');
            const auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw CLI::ValidationError("--range", "expected a:b:n");
            cfg.axis.start = std::stod(spec.substr(0, c1));
            cfg.axis.stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
            cfg.axis.steps = std::stoi(spec.substr(c2 + 1));
            cfg.axis_given = true;
        },
        "Axis range a:b:n (n grid points)");
    if (required) {
        a->required();
        r->required();
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Relativistic Hulthen bound states: closed-form spectra, radial spinor "
                 "components and an independent shooting-method check"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value config file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    hulthen::RunConfig cfg;

    auto* spectrum = app.add_subcommand(
        "spectrum", "Closed-form energy roots for a list of states");
    add_param_flags(spectrum, cfg);

    auto* table1 = app.add_subcommand(
        "table1", "Regression against the 32 published reference energies");
    add_param_flags(table1, cfg);

    auto* sweep = app.add_subcommand(
        "sweep", "Energy roots along a parameter axis (CSV/JSON series)");
    add_param_flags(sweep, cfg);
    add_axis_flags(sweep, cfg, /*required=*/true);

    auto* wavefunction = app.add_subcommand(
        "wavefunction", "Sampled radial components for one state");
    add_param_flags(wavefunction, cfg);
    wavefunction->add_flag("--nonrel", cfg.nonrel,
                           "Non-relativistic radial function R(r) instead of (G, F)");

    auto* verify = app.add_subcommand(
        "verify", "Closed form vs shooting-method oracle report");
    add_param_flags(verify, cfg);
    verify->add_flag("!--no-oracle", cfg.oracle, "Disable the oracle (rejected)");
    verify->add_option("--tolerance", cfg.verify_tol, "Verification gate (fm^-1)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (spectrum->parsed()) cfg.command = hulthen::Command::Spectrum;
    if (table1->parsed()) cfg.command = hulthen::Command::Table1;
    if (sweep->parsed()) cfg.command = hulthen::Command::Sweep;
    if (wavefunction->parsed()) cfg.command = hulthen::Command::Wavefunction;
    if (verify->parsed()) cfg.command = hulthen::Command::Verify;

    return hulthen::run_command(cfg);
}
