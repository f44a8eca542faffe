#include "hulthen/commands.hpp"

#include "hulthen/errors.hpp"
#include "hulthen/table1.hpp"
#include "hulthen/wavefun.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <tuple>

namespace hulthen {

namespace {

const char* symmetry_name(SymmetryKind s)
{
    return s == SymmetryKind::Pseudospin ? "pseudospin" : "spin";
}

void push_common_meta(OutputTable& t, const RunConfig& cfg, const char* command)
{
    t.meta.emplace_back("command", command);
    t.meta.emplace_back("mu", fmt9(cfg.params.mu));
    t.meta.emplace_back("strength", fmt9(cfg.params.strength));
    t.meta.emplace_back("c_const", fmt9(cfg.params.c_const));
    t.meta.emplace_back("symmetry", symmetry_name(cfg.params.symmetry));
}

/// Reference doublet labels: rows 1..2 of the kappa<0 member for l_tilde 1..4.
std::vector<std::string> reference_labels()
{
    std::vector<std::string> out;
    for (int lt = 1; lt <= 4; ++lt)
        for (int row = 1; row <= 2; ++row)
            out.push_back(SpectroscopicLabel{row, lt - 1, 2 * lt - 1}.str());
    return out;
}

struct ResolvedState {
    std::string label;
    QuantumState labeled;
    QuantumState solver;  // dominant-component radial index
    int momentum = 0;     // l_tilde or l
};

ResolvedState resolve(const std::string& label, const PhysicalParams& params)
{
    ResolvedState rs;
    rs.label = label;
    rs.labeled = parse_label(label);
    rs.solver = QuantumState{dominant_radial_index(rs.labeled, params.symmetry),
                             rs.labeled.kappa};
    rs.momentum = dominant_momentum(params, rs.labeled);
    return rs;
}

std::vector<std::string> split_labels(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& chunk : raw) {
        std::stringstream ss{chunk};
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            if (b == std::string::npos) continue;
            const auto e = item.find_last_not_of(" \t");
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

} // namespace

std::vector<QuantumState> parse_state_list(const std::vector<std::string>& labels)
{
    std::vector<QuantumState> out;
    for (const auto& l : split_labels(labels)) out.push_back(parse_label(l));
    return out;
}

OutputTable cmd_spectrum(const RunConfig& cfg)
{
    cfg.params.validate();
    OutputTable t;
    push_common_meta(t, cfg, "spectrum");
    t.columns = {"state", "delta",       "l_or_lt",    "n_solver",   "e_plus",
                 "e_minus", "theta_plus", "theta_minus", "valid_plus", "valid_minus",
                 "selected", "note"};

    std::vector<std::string> labels;
    std::vector<double> deltas;
    if (!cfg.states_given && !cfg.delta_given) {
        labels = reference_labels();
        deltas = {0.025, 0.100, 0.175, 0.250};
    } else {
        labels = split_labels(cfg.state_labels);
        deltas = {cfg.params.delta};
    }

    struct Row {
        std::tuple<int, int, double, std::string> key;
        std::vector<Cell> cells;
    };
    std::vector<Row> rows;
    for (const auto& label : labels) {
        for (double d : deltas) {
            PhysicalParams p = cfg.params;
            p.delta = d;
            std::vector<Cell> cells(t.columns.size(), Cell::null());
            cells[0] = Cell::of(label);
            cells[1] = Cell::of(d);
            int mom = 1 << 20, nsol = 1 << 20;
            try {
                const auto rs = resolve(label, p);
                mom = rs.momentum;
                nsol = rs.solver.n_r;
                cells[2] = Cell::of(double(rs.momentum));
                cells[3] = Cell::of(double(rs.solver.n_r));
                const auto pair = energy_closed_form(p, rs.solver);
                cells[4] = Cell::of(pair.e_plus);
                cells[5] = Cell::of(pair.e_minus);
                cells[6] = Cell::of(pair.theta_plus);
                cells[7] = Cell::of(pair.theta_minus);
                cells[8] = Cell::of_bool(pair.valid_plus);
                cells[9] = Cell::of_bool(pair.valid_minus);
                RootSelectionNote note;
                cells[10] = Cell::of(select_bound_root(pair, p, &note));
                if (note.both_valid) cells[11] = Cell::of("both-roots-valid");
            } catch (const std::exception& e) {
                cells[11] = Cell::of(e.what());
            }
            rows.push_back(Row{{mom, nsol, d, label}, std::move(cells)});
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.key < b.key; });
    for (auto& r : rows) t.rows.push_back(std::move(r.cells));
    return t;
}

OutputTable cmd_table1(const RunConfig& cfg, bool* all_pass)
{
    OutputTable t;
    t.meta.emplace_back("command", "table1");
    t.meta.emplace_back("mu", fmt9(kRefMu));
    t.meta.emplace_back("strength", fmt9(kRefStrength));
    t.meta.emplace_back("c_const", fmt9(kRefCConst));
    t.meta.emplace_back("tolerance", fmt9(kTable1Tol));
    t.columns = {"l_tilde", "n",        "delta",   "doublet", "computed",
                 "printed", "abs_diff", "pass",    "sigfig6_match"};
    bool ok = true;
    for (const auto& row : run_table1_regression()) {
        ok = ok && row.pass;
        t.rows.push_back({Cell::of(double(row.entry.l_tilde)),
                          Cell::of(double(row.entry.row_n)), Cell::of(row.entry.delta),
                          Cell::of(row.doublet), Cell::of(row.computed),
                          Cell::of(row.entry.printed), Cell::of(row.abs_diff),
                          Cell::of_bool(row.pass), Cell::of_bool(row.sigfig6)});
    }
    t.meta.emplace_back("overall_pass", ok ? "true" : "false");
    if (all_pass) *all_pass = ok;
    (void)cfg;
    return t;
}

OutputTable cmd_sweep(const RunConfig& cfg, ExecPolicy policy)
{
    cfg.params.validate();
    if (!cfg.axis_given) throw config_error("sweep needs --axis and --range");
    cfg.axis.validate();

    const auto labels =
        cfg.states_given ? split_labels(cfg.state_labels) : reference_labels();

    SweepRequest req;
    req.base = cfg.params;
    req.axis = cfg.axis;
    std::vector<std::string> good_labels;
    for (const auto& label : labels) {
        const auto rs = resolve(label, cfg.params);  // config errors are fatal here
        req.states.push_back(rs.solver);
        good_labels.push_back(label);
    }

    OutputTable t;
    push_common_meta(t, cfg, "sweep");
    const char* axis_name = cfg.axis.kind == SweepAxisKind::Delta ? "delta"
                            : cfg.axis.kind == SweepAxisKind::Mu  ? "mu"
                                                                  : "c_const";
    t.meta.emplace_back("axis", axis_name);
    t.columns = {axis_name};
    for (const auto& label : good_labels) {
        t.columns.push_back("e_plus[" + label + "]");
        t.columns.push_back("e_minus[" + label + "]");
        t.columns.push_back("valid_plus[" + label + "]");
        t.columns.push_back("valid_minus[" + label + "]");
        t.columns.push_back("theta_sq_plus[" + label + "]");
        t.columns.push_back("theta_sq_minus[" + label + "]");
    }

    for (const auto& pt : evaluate_sweep(req, policy)) {
        std::vector<Cell> cells;
        cells.push_back(Cell::of(pt.axis_value));
        for (const auto& res : pt.per_state) {
            if (!res) {
                for (int i = 0; i < 6; ++i) cells.push_back(Cell::null());
                continue;
            }
            cells.push_back(Cell::of(res->e_plus));
            cells.push_back(Cell::of(res->e_minus));
            cells.push_back(Cell::of_bool(res->valid_plus));
            cells.push_back(Cell::of_bool(res->valid_minus));
            cells.push_back(Cell::of(res->theta_sq_plus));
            cells.push_back(Cell::of(res->theta_sq_minus));
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

OutputTable cmd_wavefunction(const RunConfig& cfg)
{
    cfg.params.validate();
    const auto labels = split_labels(cfg.state_labels);
    if (labels.size() != 1)
        throw config_error("wavefunction needs exactly one state label");

    OutputTable t;
    if (cfg.nonrel) {
        const auto labeled = parse_label(labels[0]);
        const auto m = orbital_momenta(labeled.kappa);
        const double E = nonrel_energy(cfg.params.mu, cfg.params.delta, labeled.n_r, m.l);
        if (!(E < 0.0)) throw unbound_error("non-relativistic state is unbound");
        const double b = std::sqrt(-2.0 * cfg.params.mu * E);
        const auto grid = default_grid(b, cfg.params.delta);
        const auto R = nonrel_radial(cfg.params.mu, cfg.params.delta, labeled.n_r, m.l, grid,
                                     ExecPolicy::Parallel);
        t.meta.emplace_back("command", "wavefunction");
        t.meta.emplace_back("state", labels[0]);
        t.meta.emplace_back("mode", "nonrelativistic");
        t.meta.emplace_back("mu", fmt9(cfg.params.mu));
        t.meta.emplace_back("delta", fmt9(cfg.params.delta));
        t.meta.emplace_back("energy", fmt9(E));
        t.meta.emplace_back("decay_exponent", fmt9(b));
        t.meta.emplace_back("node_count_R", std::to_string(R.node_count));
        t.columns = {"r", "R"};
        for (size_t i = 0; i < grid.r.size(); ++i)
            t.rows.push_back({Cell::of(grid.r[i]), Cell::of(R.values[i])});
        return t;
    }

    const auto rs = resolve(labels[0], cfg.params);
    const auto pair = energy_closed_form(cfg.params, rs.solver);
    const double E = select_bound_root(pair, cfg.params);
    const double theta = std::sqrt(theta_squared(cfg.params, E));
    const auto grid = default_grid(theta, cfg.params.delta);

    RadialFunction G, F;
    if (cfg.params.symmetry == SymmetryKind::Pseudospin) {
        G = lower_pseudospin(cfg.params, rs.solver, E, grid, ExecPolicy::Parallel);
        F = upper_pseudospin(cfg.params, rs.solver, E, grid, ExecPolicy::Parallel);
    } else {
        F = upper_spin(cfg.params, rs.solver, E, grid, ExecPolicy::Parallel);
        G = lower_spin(cfg.params, rs.solver, E, grid, ExecPolicy::Parallel);
    }

    push_common_meta(t, cfg, "wavefunction");
    t.meta.emplace_back("state", labels[0]);
    t.meta.emplace_back("delta", fmt9(cfg.params.delta));
    t.meta.emplace_back("energy", fmt9(E));
    t.meta.emplace_back("theta", fmt9(theta));
    t.meta.emplace_back("node_count_G", std::to_string(G.node_count));
    t.meta.emplace_back("node_count_F", std::to_string(F.node_count));
    t.columns = {"r", "G", "F"};
    for (size_t i = 0; i < grid.r.size(); ++i)
        t.rows.push_back(
            {Cell::of(grid.r[i]), Cell::of(G.values[i]), Cell::of(F.values[i])});
    return t;
}

OutputTable cmd_verify(const RunConfig& cfg, bool* all_pass, std::string* human_summary)
{
    cfg.params.validate();
    if (!cfg.oracle) throw config_error("verify needs the oracle enabled");

    struct Item {
        std::string label;
        PhysicalParams params;
        QuantumState solver;
    };
    std::vector<Item> items;
    if (cfg.states_given) {
        for (const auto& label : split_labels(cfg.state_labels)) {
            const auto rs = resolve(label, cfg.params);
            items.push_back({label, cfg.params, rs.solver});
        }
    } else {
        for (const auto& e : table1_entries()) {
            const auto labels = doublet_partner(QuantumState{e.row_n, -e.l_tilde},
                                                SymmetryKind::Pseudospin);
            items.push_back({labels.first.str(), table1_params(e), table1_state(e)});
        }
    }

    struct Result {
        double e_closed = 0.0;
        bool have_closed = false;
        double e_shoot = 0.0;
        bool have_shoot = false;
        double e_shoot_exact = 0.0;
        bool have_exact = false;
        std::string note;
    };
    std::vector<Result> results(items.size());

    const bool with_exact = cfg.centrifugal == CentrifugalMode::ExactInverseSquare;
    const int n_items = static_cast<int>(items.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_items; ++i) {
        auto& res = results[i];
        const auto& it = items[i];
        try {
            res.e_closed = select_bound_root(energy_closed_form(it.params, it.solver), it.params);
            res.have_closed = true;
        } catch (const std::exception& e) {
            res.note = std::string("closed-form: ") + e.what();
            continue;
        }
        ShootConfig sc;
        sc.e_lo = res.e_closed - 0.05;
        sc.e_hi = res.e_closed + 0.05;
        const int L = dominant_momentum(it.params, it.solver);
        auto shoot = [&](CentrifugalMode mode) {
            ShootConfig c = sc;
            c.centrifugal = mode;
            return it.params.symmetry == SymmetryKind::Pseudospin
                       ? shoot_pseudospin(it.params.mu, it.params.delta, it.params.strength,
                                          it.params.c_const, it.solver.n_r, L, c)
                       : shoot_spin(it.params.mu, it.params.delta, it.params.strength,
                                    it.params.c_const, it.solver.n_r, L, c);
        };
        try {
            res.e_shoot = shoot(CentrifugalMode::HulthenSquare);
            res.have_shoot = true;
        } catch (const std::exception& e) {
            res.note = std::string("shooting: ") + e.what();
        }
        if (with_exact) {
            try {
                res.e_shoot_exact = shoot(CentrifugalMode::ExactInverseSquare);
                res.have_exact = true;
            } catch (const std::exception& e) {
                if (!res.note.empty()) res.note += "; ";
                res.note += std::string("exact-centrifugal: ") + e.what();
            }
        }
    }

    OutputTable t;
    push_common_meta(t, cfg, "verify");
    t.meta.emplace_back("tolerance", fmt9(cfg.verify_tol));
    t.columns = {"state", "delta", "e_closed", "e_shoot", "abs_diff", "rel_diff", "pass"};
    if (with_exact) {
        t.columns.push_back("e_shoot_exact");
        t.columns.push_back("centrifugal_mode_delta");
    }
    t.columns.push_back("note");

    bool ok = true;
    int n_pass = 0;
    for (int i = 0; i < n_items; ++i) {
        const auto& it = items[i];
        const auto& res = results[i];
        std::vector<Cell> cells;
        cells.push_back(Cell::of(it.label));
        cells.push_back(Cell::of(it.params.delta));
        cells.push_back(res.have_closed ? Cell::of(res.e_closed) : Cell::null());
        cells.push_back(res.have_shoot ? Cell::of(res.e_shoot) : Cell::null());
        bool pass = false;
        if (res.have_closed && res.have_shoot) {
            const double diff = std::abs(res.e_closed - res.e_shoot);
            pass = diff <= cfg.verify_tol;
            cells.push_back(Cell::of(diff));
            cells.push_back(Cell::of(diff / std::max(std::abs(res.e_closed), 1e-300)));
        } else {
            cells.push_back(Cell::null());
            cells.push_back(Cell::null());
        }
        cells.push_back(Cell::of_bool(pass));
        if (with_exact) {
            cells.push_back(res.have_exact ? Cell::of(res.e_shoot_exact) : Cell::null());
            cells.push_back(res.have_shoot && res.have_exact
                                ? Cell::of(res.e_shoot - res.e_shoot_exact)
                                : Cell::null());
        }
        cells.push_back(res.note.empty() ? Cell::null() : Cell::of(res.note));
        t.rows.push_back(std::move(cells));
        ok = ok && pass;
        if (pass) ++n_pass;
    }
    t.meta.emplace_back("overall_pass", ok ? "true" : "false");
    if (all_pass) *all_pass = ok;
    if (human_summary) {
        std::ostringstream os;
        os << "verify: " << n_pass << "/" << n_items << " states matched to "
           << fmt9(cfg.verify_tol) << " fm^-1";
        *human_summary = os.str();
    }
    return t;
}

int run_command(const RunConfig& cfg)
{
    try {
        OutputTable t;
        bool gate = true;
        std::string human;
        switch (cfg.command) {
        case Command::Spectrum: t = cmd_spectrum(cfg); break;
        case Command::Table1: t = cmd_table1(cfg, &gate); break;
        case Command::Sweep: t = cmd_sweep(cfg); break;
        case Command::Wavefunction: t = cmd_wavefunction(cfg); break;
        case Command::Verify: t = cmd_verify(cfg, &gate, &human); break;
        }
        write_text(cfg.format == OutFormat::Csv ? to_csv(t) : to_json(t), cfg.out_path);
        if (!human.empty()) std::cerr << human << "\n";
        if (!gate) {
            std::cerr << (cfg.command == Command::Table1 ? "table1" : "verify")
                      << ": regression gate failed\n";
            return 3;
        }
        return 0;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace hulthen
