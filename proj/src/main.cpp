// Command-line surface: measure reports for single states, regeneration of
// the reference tables, r_c sweeps, confined spectra, and the verification
// suite that pits the production pipeline against independent oracles.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hatom/circular.hpp"
#include "hatom/golden.hpp"
#include "hatom/measures.hpp"
#include "hatom/oracle.hpp"
#include "hatom/pipeline.hpp"
#include "hatom/report.hpp"

namespace {

using hatom::golden::find_exclusion;
using hatom::hydrogenic::QuantumState;
using hatom::measures::EntropicParams;
using hatom::measures::MeasureReport;
using hatom::oracle::CrosscheckReport;
using hatom::pipeline::Engine;
using hatom::report::format_number;
using hatom::report::RunConfig;

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + cfg.output_path);
    }
    out << text;
}

// ---------------------------------------------------------------- measure --

std::string measure_output(Engine& engine, const RunConfig& cfg,
                           const std::string& system, const QuantumState& state,
                           std::optional<double> r_c) {
    const EntropicParams params = engine.params();
    const MeasureReport* rep = nullptr;
    double energy = 0.0;
    if (system == "free") {
        rep = &engine.free_report(state);
        energy = engine.free_amplitudes(state).energy;
    } else {
        rep = &engine.confined_report(state, *r_c);
        energy = engine.confined_level(state.n, state.l, state.Z, *r_c).energy;
    }
    if (cfg.format == "json") {
        return hatom::report::dump_json(
            hatom::pipeline::to_json(system, state, r_c, params, *rep, energy));
    }
    const auto& cols = hatom::pipeline::measure_columns();
    const auto row = hatom::pipeline::to_row(system, state, r_c, params, *rep, energy);
    return hatom::report::csv_header(cols) + "\n" +
           hatom::report::csv_row(row, cols) + "\n";
}

// ------------------------------------------------------------------ table --

// Angular table: one row per l = 0..9 at m = 0.
std::string table_angular() {
    const std::vector<std::string> cols = {"S_ang",     "R_ang_alpha",
                                           "R_ang_beta", "T_ang_alpha",
                                           "T_ang_beta", "E_ang"};
    const double a = 0.6, b = 3.0;
    std::string out = hatom::report::csv_header(cols) + "\n";
    for (int l = 0; l <= 9; ++l) {
        const double wa = hatom::measures::entropic_moment_angular(l, 0, a);
        const double wb = hatom::measures::entropic_moment_angular(l, 0, b);
        hatom::report::Row row;
        row.system = "angular";
        row.l = l;
        row.m = 0;
        row.alpha = a;
        row.beta = b;
        row.values = {
            {"S_ang", hatom::measures::shannon_angular(l, 0)},
            {"R_ang_alpha", std::log(wa) / (1.0 - a)},
            {"R_ang_beta", std::log(wb) / (1.0 - b)},
            {"T_ang_alpha", (1.0 - wa) / (a - 1.0)},
            {"T_ang_beta", (1.0 - wb) / (b - 1.0)},
            {"E_ang", hatom::measures::entropic_moment_angular(l, 0, 2.0)},
        };
        out += hatom::report::csv_row(row, cols) + "\n";
    }
    return out;
}

// Free-atom tables T4..T7: 20 states, one radial pair per row.
std::string table_fha(Engine& engine, const std::string& id) {
    std::vector<std::string> cols;
    if (id == "T4") cols = {"R_r", "R_p"};
    else if (id == "T5") cols = {"T_r", "T_p"};
    else if (id == "T6") cols = {"S_r", "S_p"};
    else cols = {"E_r", "E_p"};
    std::string out = hatom::report::csv_header(cols) + "\n";
    for (const auto& g : hatom::golden::table4()) {
        const QuantumState state{g.n, g.l, 0, 1.0};
        const MeasureReport& rep = engine.free_report(state);
        double first = 0.0, second = 0.0;
        if (id == "T4") {
            first = rep.renyi.R_r;
            second = rep.renyi.R_p;
        } else if (id == "T5") {
            first = rep.tsallis.T_r;
            second = rep.tsallis.T_p;
        } else if (id == "T6") {
            first = rep.shannon.S_r;
            second = rep.shannon.S_p;
        } else {
            first = rep.onicescu.E_r;
            second = rep.onicescu.E_p;
        }
        hatom::report::Row row;
        row.system = "free";
        row.n = g.n;
        row.l = g.l;
        row.m = 0;
        row.Z = 1.0;
        if (id == "T4" || id == "T5") {
            row.alpha = 0.6;
            row.beta = 3.0;
        }
        row.values = {{cols[0], first}, {cols[1], second}};
        out += hatom::report::csv_row(row, cols) + "\n";
    }
    return out;
}

// Confined tables T8..T12: 1s rows then 2s rows over the hard-coded r_c
// grids.
std::string table_cha(Engine& engine, const std::string& id) {
    std::vector<std::string> cols;
    if (id == "T8") cols = {"R_rho", "R_pi", "R_total"};
    else if (id == "T9") cols = {"T_rho", "T_pi", "T_total"};
    else if (id == "T10") cols = {"S_rho", "S_pi", "S_total"};
    else if (id == "T11") cols = {"I_rho", "I_pi"};
    else cols = {"E_rho", "E_pi"};

    const auto grid_for = [&](bool ground) -> const std::vector<hatom::golden::ChaRow>& {
        if (id == "T8") return ground ? hatom::golden::table8_1s() : hatom::golden::table8_2s();
        if (id == "T9") return ground ? hatom::golden::table9_1s() : hatom::golden::table9_2s();
        if (id == "T10") return ground ? hatom::golden::table10_1s() : hatom::golden::table10_2s();
        if (id == "T11") return ground ? hatom::golden::table11_1s() : hatom::golden::table11_2s();
        return ground ? hatom::golden::table12_1s() : hatom::golden::table12_2s();
    };

    std::string out = hatom::report::csv_header(cols) + "\n";
    for (const bool ground : {true, false}) {
        const QuantumState state{ground ? 1 : 2, 0, 0, 1.0};
        for (const auto& g : grid_for(ground)) {
            const double rc = hatom::golden::parse(g.rc);
            const MeasureReport& rep = engine.confined_report(state, rc);
            hatom::report::Row row;
            row.system = "confined";
            row.n = state.n;
            row.l = 0;
            row.m = 0;
            row.Z = 1.0;
            row.rc = rc;
            if (id == "T8" || id == "T9") {
                row.alpha = 0.6;
                row.beta = 3.0;
            }
            if (id == "T8") {
                row.values = {{"R_rho", rep.renyi.R_rho},
                              {"R_pi", rep.renyi.R_pi},
                              {"R_total", rep.renyi.R_total}};
            } else if (id == "T9") {
                row.values = {{"T_rho", rep.tsallis.T_rho},
                              {"T_pi", rep.tsallis.T_pi},
                              {"T_total", rep.tsallis.T_total}};
            } else if (id == "T10") {
                row.values = {{"S_rho", rep.shannon.S_rho},
                              {"S_pi", rep.shannon.S_pi},
                              {"S_total", rep.shannon.S_rho + rep.shannon.S_pi}};
            } else if (id == "T11") {
                row.values = {{"I_rho", rep.fisher.I_rho},
                              {"I_pi", rep.fisher.I_pi}};
            } else {
                row.values = {{"E_rho", rep.onicescu.E_rho},
                              {"E_pi", rep.onicescu.E_pi}};
            }
            out += hatom::report::csv_row(row, cols) + "\n";
        }
    }
    return out;
}

// Two-route momentum Shannon comparison for circular states n = 1..11.
std::string table_routes() {
    const std::vector<std::string> cols = {"S_p_closed", "S_p_integral",
                                           "abs_diff"};
    std::string out = hatom::report::csv_header(cols) + "\n";
    for (int n = 1; n <= 11; ++n) {
        const hatom::circular::CircularState state{n, 1.0};
        const double closed = hatom::circular::circ_shannon(state).S_p;
        const double integral = hatom::circular::circ_shannon_p_alt(state);
        hatom::report::Row row;
        row.system = "free";
        row.n = n;
        row.l = n - 1;
        row.m = 0;
        row.Z = 1.0;
        row.values = {{"S_p_closed", closed},
                      {"S_p_integral", integral},
                      {"abs_diff", std::abs(closed - integral)}};
        out += hatom::report::csv_row(row, cols) + "\n";
    }
    return out;
}

std::string table_output(Engine& engine, const std::string& id) {
    if (id == "T3") return table_angular();
    if (id == "T4" || id == "T5" || id == "T6" || id == "T7")
        return table_fha(engine, id);
    if (id == "TS1") return table_routes();
    return table_cha(engine, id);
}

// ------------------------------------------------------------------ sweep --

std::vector<std::string> expand_measures(const std::vector<std::string>& tokens) {
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
        families = {
            {{"energy"}, {"energy"}},
            {{"shannon", "s"}, {"S_r", "S_p", "S_rho", "S_pi", "S_total"}},
            {{"renyi", "r"}, {"R_r", "R_p", "R_rho", "R_pi", "R_total"}},
            {{"tsallis", "t"}, {"T_r", "T_p", "T_rho", "T_pi", "T_total"}},
            {{"onicescu", "e"}, {"E_r", "E_p", "E_rho", "E_pi", "E_total"}},
            {{"fisher", "i"}, {"I_rho", "I_pi", "I_total"}},
        };
    std::set<std::string> selected;
    for (std::string t : tokens) {
        std::transform(t.begin(), t.end(), t.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (t == "none" || t.empty()) continue;
        bool known = false;
        if (t == "all") {
            for (const auto& f : families) selected.insert(f.first.front());
            known = true;
        }
        for (const auto& f : families) {
            if (std::find(f.first.begin(), f.first.end(), t) != f.first.end()) {
                selected.insert(f.first.front());
                known = true;
            }
        }
        if (!known) {
            throw std::invalid_argument(
                "unknown measure '" + t +
                "' (expected energy, shannon, renyi, tsallis, onicescu, fisher, "
                "all, or none)");
        }
    }
    std::vector<std::string> cols;
    for (const auto& f : families) {
        if (selected.count(f.first.front())) {
            cols.insert(cols.end(), f.second.begin(), f.second.end());
        }
    }
    return cols;
}

std::string sweep_output(Engine& engine, const std::vector<std::string>& labels,
                         double Z, double rc_min, double rc_max, int rc_steps,
                         bool log_spacing,
                         const std::vector<std::string>& measure_tokens) {
    if (!(rc_min > 0.0)) throw std::invalid_argument("rc_min must be positive");
    if (!(rc_max > rc_min)) throw std::invalid_argument("rc_max must exceed rc_min");
    if (rc_steps < 2) throw std::invalid_argument("rc_steps must be at least 2");

    std::vector<QuantumState> states;
    for (const auto& label : labels) {
        QuantumState s = hatom::pipeline::parse_state_label(label);
        s.Z = Z;
        states.push_back(s);
    }
    std::sort(states.begin(), states.end(), [](const QuantumState& a, const QuantumState& b) {
        return std::tie(a.n, a.l) < std::tie(b.n, b.l);
    });
    states.erase(std::unique(states.begin(), states.end(),
                             [](const QuantumState& a, const QuantumState& b) {
                                 return a.n == b.n && a.l == b.l;
                             }),
                 states.end());

    std::vector<double> rcs(static_cast<std::size_t>(rc_steps));
    for (int i = 0; i < rc_steps; ++i) {
        const double t = static_cast<double>(i) / (rc_steps - 1);
        rcs[static_cast<std::size_t>(i)] =
            log_spacing ? rc_min * std::pow(rc_max / rc_min, t)
                        : rc_min + t * (rc_max - rc_min);
    }

    const std::vector<std::string> cols = expand_measures(measure_tokens);
    std::string out = hatom::report::csv_header(cols) + ",error\n";
    if (cols.empty()) return out;  // nothing requested: header only

    const EntropicParams params = engine.params();
    for (const QuantumState& state : states) {
        for (const double rc : rcs) {
            hatom::report::Row row;
            std::string error;
            try {
                const MeasureReport& rep = engine.confined_report(state, rc);
                const double energy =
                    engine.confined_level(state.n, state.l, state.Z, rc).energy;
                row = hatom::pipeline::to_row("confined", state, rc, params, rep,
                                              energy);
            } catch (const std::exception& ex) {
                row.system = "confined";
                row.n = state.n;
                row.l = state.l;
                row.m = state.m;
                row.Z = state.Z;
                row.rc = rc;
                row.alpha = params.alpha;
                row.beta = params.beta;
                error = ex.what();
            }
            out += hatom::report::csv_row(row, cols) + "," +
                   hatom::report::csv_escape(error) + "\n";
        }
    }
    return out;
}

// --------------------------------------------------------------- spectrum --

std::string spectrum_output(Engine& engine, int l, double Z, double rc,
                            int count) {
    const std::vector<std::string> cols = {"energy", "node_count"};
    std::string out = hatom::report::csv_header(cols) + ",error\n";
    for (int n = l + 1; n <= l + count; ++n) {
        hatom::report::Row row;
        row.system = "confined";
        row.n = n;
        row.l = l;
        row.Z = Z;
        row.rc = rc;
        std::string error;
        try {
            const auto& level = engine.confined_level(n, l, Z, rc);
            row.values = {{"energy", level.energy},
                          {"node_count", static_cast<double>(level.node_count)}};
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        out += hatom::report::csv_row(row, cols) + "," +
               hatom::report::csv_escape(error) + "\n";
    }
    return out;
}

// ----------------------------------------------------------------- verify --

CrosscheckReport abs_check(std::string name, double production, double oracle,
                           double abs_tol) {
    CrosscheckReport c;
    c.name = std::move(name);
    c.production = production;
    c.oracle = oracle;
    c.abs_dev = std::abs(production - oracle);
    c.rel_dev = c.abs_dev /
                std::max({std::abs(production), std::abs(oracle), 1.0e-12});
    c.tolerance = abs_tol;
    c.pass = c.abs_dev <= abs_tol;
    return c;
}

CrosscheckReport flag_check(std::string name, bool ok) {
    return abs_check(std::move(name), ok ? 1.0 : 0.0, 1.0, 0.5);
}

void verify_angular(std::vector<CrosscheckReport>& out, int l_max) {
    namespace msr = hatom::measures;
    using hatom::golden::parse;
    using hatom::golden::ulp_rel;
    using hatom::oracle::crosscheck;
    const double a = 0.6, b = 3.0;
    for (const auto& row : hatom::golden::table3()) {
        if (row.l > l_max) continue;
        const std::string tag = "T3 l=" + std::to_string(row.l) + " ";
        const double wa = msr::entropic_moment_angular(row.l, 0, a);
        const double wb = msr::entropic_moment_angular(row.l, 0, b);
        const auto tol = [&](const char* cell) {
            return std::max(1.0e-8, ulp_rel(cell));
        };
        out.push_back(crosscheck(tag + "S_ang", msr::shannon_angular(row.l, 0),
                                 parse(row.S), tol(row.S)));
        out.push_back(crosscheck(tag + "R_ang_alpha", std::log(wa) / (1.0 - a),
                                 parse(row.R_alpha), tol(row.R_alpha)));
        out.push_back(crosscheck(tag + "R_ang_beta", std::log(wb) / (1.0 - b),
                                 parse(row.R_beta), tol(row.R_beta)));
        const double t_alpha = (1.0 - wa) / (a - 1.0);
        if (const auto* ex =
                find_exclusion("T3", std::to_string(row.l), "T_alpha")) {
            out.push_back(crosscheck(tag + "T_ang_alpha [flagged cell]", t_alpha,
                                     parse(ex->frozen), tol(ex->frozen)));
        } else {
            out.push_back(crosscheck(tag + "T_ang_alpha", t_alpha,
                                     parse(row.T_alpha), tol(row.T_alpha)));
        }
        out.push_back(crosscheck(tag + "T_ang_beta", (1.0 - wb) / (b - 1.0),
                                 parse(row.T_beta), tol(row.T_beta)));
        out.push_back(crosscheck(tag + "E_ang",
                                 msr::entropic_moment_angular(row.l, 0, 2.0),
                                 parse(row.E), tol(row.E)));
    }
}

void verify_fha_golden(std::vector<CrosscheckReport>& out, Engine& engine,
                       int n_max) {
    using hatom::golden::parse;
    using hatom::golden::ulp_rel;
    using hatom::oracle::crosscheck;
    struct TableRef {
        const char* id;
        const std::array<hatom::golden::FhaRow, 20>* rows;
        const char* col_first;
        const char* col_second;
    };
    const TableRef tables[] = {
        {"T4", &hatom::golden::table4(), "R_r", "R_p"},
        {"T5", &hatom::golden::table5(), "T_r", "T_p"},
        {"T6", &hatom::golden::table6(), "S_r", "S_p"},
        {"T7", &hatom::golden::table7(), "E_r", "E_p"},
    };
    for (const auto& table : tables) {
        for (const auto& g : *table.rows) {
            if (g.n > n_max) continue;
            const MeasureReport& rep = engine.free_report({g.n, g.l, 0, 1.0});
            double first = 0.0, second = 0.0;
            if (table.id[1] == '4') {
                first = rep.renyi.R_r;
                second = rep.renyi.R_p;
            } else if (table.id[1] == '5') {
                first = rep.tsallis.T_r;
                second = rep.tsallis.T_p;
            } else if (table.id[1] == '6') {
                first = rep.shannon.S_r;
                second = rep.shannon.S_p;
            } else {
                first = rep.onicescu.E_r;
                second = rep.onicescu.E_p;
            }
            const auto compare = [&](const char* col, double value,
                                     const char* printed) {
                std::string name = std::string(table.id) + " " + g.state + " " + col;
                const char* target = printed;
                if (const auto* ex = find_exclusion(table.id, g.state, col)) {
                    target = ex->frozen;
                    name += " [flagged cell]";
                }
                out.push_back(crosscheck(name, value, parse(target),
                                         std::max(1.0e-6, ulp_rel(target))));
            };
            compare(table.col_first, first, g.first);
            compare(table.col_second, second, g.second);
        }
    }
}

void verify_circular(std::vector<CrosscheckReport>& out, Engine& engine,
                     int n_max) {
    namespace circ = hatom::circular;
    using hatom::oracle::crosscheck;
    for (int n = 1; n <= n_max; ++n) {
        const circ::CircularState state{n, 1.0};
        const QuantumState qs{n, n - 1, 0, 1.0};
        const MeasureReport& rep = engine.free_report(qs);
        const std::string tag =
            "circular " + hatom::pipeline::state_label(n, n - 1) + " ";
        const auto renyi = circ::circ_renyi(state, 0.6, 3.0);
        out.push_back(crosscheck(tag + "R_r closed vs quadrature", rep.renyi.R_r,
                                 renyi.R_r, 1.0e-9));
        out.push_back(crosscheck(tag + "R_p closed vs quadrature", rep.renyi.R_p,
                                 renyi.R_p, 1.0e-9));
        const auto tsallis = circ::circ_tsallis(state, 0.6, 3.0);
        out.push_back(crosscheck(tag + "T_r closed vs quadrature",
                                 rep.tsallis.T_r, tsallis.T_r, 1.0e-9));
        out.push_back(crosscheck(tag + "T_p closed vs quadrature",
                                 rep.tsallis.T_p, tsallis.T_p, 1.0e-9));
        const auto shannon = circ::circ_shannon(state);
        out.push_back(crosscheck(tag + "S_r closed vs quadrature",
                                 rep.shannon.S_r, shannon.S_r, 1.0e-9));
        out.push_back(crosscheck(tag + "S_p closed vs quadrature",
                                 rep.shannon.S_p, shannon.S_p, 1.0e-9));
        const auto onicescu = circ::circ_onicescu(state);
        out.push_back(crosscheck(tag + "E_r closed vs quadrature",
                                 rep.onicescu.E_r, onicescu.E_r, 1.0e-9));
        out.push_back(crosscheck(tag + "E_p closed vs quadrature",
                                 rep.onicescu.E_p, onicescu.E_p, 1.0e-9));
        const auto fisher = circ::fha_fisher(qs);
        out.push_back(crosscheck(tag + "I_rho closed vs moments",
                                 rep.fisher.I_rho, fisher.I_rho, 1.0e-8));
        out.push_back(crosscheck(tag + "I_pi closed vs moments",
                                 rep.fisher.I_pi, fisher.I_pi, 1.0e-8));
    }
}

void verify_cha(std::vector<CrosscheckReport>& out, Engine& engine,
                const std::vector<QuantumState>& states,
                const std::vector<double>& rcs) {
    namespace orc = hatom::oracle;
    for (const QuantumState& state : states) {
        for (const double rc : rcs) {
            const std::string tag = "cha " +
                                    hatom::pipeline::state_label(state.n, state.l) +
                                    " rc=" + format_number(rc) + " ";
            const auto& level = engine.confined_level(state.n, state.l, 1.0, rc);
            const auto& amp = engine.confined_amplitudes(state, rc);
            const MeasureReport& rep = engine.confined_report(state, rc);

            const auto fd = orc::fd_matrix_energies(state.l, 1.0, rc, 5000);
            out.push_back(orc::crosscheck(tag + "energy shooting vs fd matrix",
                                          level.energy,
                                          fd.at(static_cast<std::size_t>(
                                              state.n - state.l - 1)),
                                          1.0e-7));

            const int samples =
                std::min(200001, 20001 + 4000 * static_cast<int>(rc));
            const auto grid = orc::sample_density(amp.position, rc, samples);
            const auto fisher = orc::fisher_gradient_form(grid, state.l);
            out.push_back(orc::crosscheck(tag + "I_rho moments vs gradient form",
                                          rep.fisher.I_rho, fisher.value, 1.0e-5));

            out.push_back(orc::crosscheck(
                tag + "p2 transform vs position-space kinetic", rep.expect.p2_avg,
                orc::kinetic_from_position(amp.position, state.l), 1.0e-6));

            auto r4 = [&](double r) {
                const double v = amp.position.value(r);
                return v * v * r * r * r * r;
            };
            out.push_back(orc::crosscheck(
                tag + "r2 adaptive GL vs dense Simpson", rep.expect.r2_avg,
                orc::dense_grid_integrate(r4, 0.0, rc, 150001), 1.0e-9));

            out.push_back(orc::crosscheck(tag + "momentum norm before rescale",
                                          1.0 + amp.momentum.norm_defect, 1.0,
                                          1.0e-6));

            out.push_back(flag_check(tag + "Shannon sum bound holds",
                                     rep.shannon.bound_ok));
            out.push_back(flag_check(tag + "Renyi sum bound holds",
                                     rep.renyi.bound_ok));
            out.push_back(flag_check(tag + "Fisher product bounds hold",
                                     rep.fisher.bound_ok));
        }
    }
}

void verify_large_box(std::vector<CrosscheckReport>& out, Engine& engine) {
    using hatom::oracle::crosscheck;
    const double rc = 40.0;
    for (const int n : {1, 2}) {
        const QuantumState state{n, 0, 0, 1.0};
        const std::string tag = "cha " + hatom::pipeline::state_label(n, 0) +
                                " rc=40 free-atom limit ";
        const MeasureReport& confined = engine.confined_report(state, rc);
        const MeasureReport& free = engine.free_report(state);
        out.push_back(crosscheck(tag + "S_r", confined.shannon.S_r,
                                 free.shannon.S_r, 1.0e-6));
        out.push_back(crosscheck(tag + "S_p", confined.shannon.S_p,
                                 free.shannon.S_p, 1.0e-6));
        out.push_back(crosscheck(tag + "R_r", confined.renyi.R_r, free.renyi.R_r,
                                 1.0e-6));
        out.push_back(crosscheck(tag + "R_p", confined.renyi.R_p, free.renyi.R_p,
                                 1.0e-6));
        out.push_back(crosscheck(tag + "I_rho", confined.fisher.I_rho,
                                 free.fisher.I_rho, 1.0e-6));
        out.push_back(crosscheck(tag + "I_pi", confined.fisher.I_pi,
                                 free.fisher.I_pi, 1.0e-6));
    }
}

void verify_momentum_routes(std::vector<CrosscheckReport>& out) {
    for (int n = 1; n <= 10; ++n) {
        const hatom::circular::CircularState state{n, 1.0};
        out.push_back(abs_check(
            "S_p two-route difference " + hatom::pipeline::state_label(n, n - 1),
            hatom::circular::circ_shannon(state).S_p,
            hatom::circular::circ_shannon_p_alt(state), 1.0e-9));
    }
}

std::vector<CrosscheckReport> run_verify(Engine& engine, bool full) {
    std::vector<CrosscheckReport> out;
    verify_angular(out, full ? 9 : 3);
    verify_fha_golden(out, engine, full ? 4 : 3);
    verify_circular(out, engine, full ? 6 : 3);

    std::vector<QuantumState> states = {{1, 0, 0, 1.0}, {2, 0, 0, 1.0}};
    std::vector<double> rcs = {1.0, 5.0, 40.0};
    if (full) {
        states.push_back({2, 1, 0, 1.0});
        states.push_back({3, 2, 0, 1.0});
        rcs.insert(rcs.begin(), 0.5);
    }
    verify_cha(out, engine, states, rcs);
    verify_large_box(out, engine);
    if (full) verify_momentum_routes(out);
    return out;
}

std::string verify_output(const RunConfig& cfg,
                          const std::vector<CrosscheckReport>& checks,
                          const std::string& scope, int* failures) {
    *failures = 0;
    for (const auto& c : checks) {
        if (!c.pass) ++*failures;
    }
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["scope"] = scope;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) j["checks"].push_back(hatom::pipeline::to_json(c));
        j["total"] = static_cast<int>(checks.size());
        j["failed"] = *failures;
        return hatom::report::dump_json(j);
    }
    std::string out;
    for (const auto& c : checks) {
        out += (c.pass ? "PASS  " : "FAIL  ") + c.name +
               ": production=" + format_number(c.production) +
               " oracle=" + format_number(c.oracle) +
               " rel=" + format_number(c.rel_dev) +
               " tol=" + format_number(c.tolerance) + "\n";
    }
    out += "verify (" + scope + "): " + std::to_string(checks.size()) +
           " checks, " + std::to_string(checks.size() - *failures) +
           " passed, " + std::to_string(*failures) + " failed\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg = hatom::report::load_config_from_env();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }

    CLI::App app{"Information-entropic measures (Shannon, Renyi, Tsallis, "
                 "Onicescu, Fisher) of free and hard-wall confined hydrogenic "
                 "atoms"};
    app.require_subcommand(1);

    app.add_option("--format", cfg.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output_path,
                   "Write output to this file instead of stdout");
    app.add_option("--alpha", cfg.alpha, "Renyi/Tsallis order for position space")
        ->capture_default_str();
    app.add_option("--beta", cfg.beta, "Renyi/Tsallis order for momentum space")
        ->capture_default_str();
    app.add_option("--quad-tol", cfg.quad_tol, "Adaptive quadrature tolerance")
        ->capture_default_str();
    app.add_option("--numerov-grid", cfg.numerov_grid,
                   "Radial grid size for the confined solver")
        ->capture_default_str();
    app.add_option("--momentum-grid", cfg.momentum_grid,
                   "Momentum grid size (0 = automatic)")
        ->capture_default_str();
    app.add_option("--p-max-scale", cfg.p_max_scale,
                   "Multiplier on the automatic momentum cutoff")
        ->capture_default_str();

    // measure
    auto* cmd_measure = app.add_subcommand(
        "measure", "Full measure report for one state");
    cmd_measure->fallthrough();
    std::string system = "free";
    int n = 1, l = 0, m = 0;
    double Z = 1.0;
    double rc = 0.0;
    cmd_measure->add_option("--system", system, "free or confined")
        ->check(CLI::IsMember({"free", "confined"}))
        ->capture_default_str();
    cmd_measure->add_option("--n", n, "Principal quantum number")->required();
    cmd_measure->add_option("--l", l, "Orbital quantum number")->required();
    cmd_measure->add_option("--m", m, "Magnetic quantum number")
        ->capture_default_str();
    cmd_measure->add_option("--Z", Z, "Nuclear charge")->capture_default_str();
    auto* rc_opt = cmd_measure->add_option(
        "--rc", rc, "Confinement radius (confined system only)");

    // table
    auto* cmd_table = app.add_subcommand(
        "table",
        "Regenerate a reference table as CSV. Measure columns by id: "
        "T3 angular (S_ang,R_ang_alpha,R_ang_beta,T_ang_alpha,T_ang_beta,"
        "E_ang); T4 (R_r,R_p); T5 (T_r,T_p); T6 (S_r,S_p); T7 (E_r,E_p); "
        "T8 (R_rho,R_pi,R_total); T9 (T_rho,T_pi,T_total); "
        "T10 (S_rho,S_pi,S_total); T11 (I_rho,I_pi); T12 (E_rho,E_pi); "
        "TS1 (S_p_closed,S_p_integral,abs_diff)");
    cmd_table->fallthrough();
    std::string table_id;
    cmd_table
        ->add_option("id", table_id, "Table identifier")
        ->required()
        ->check(CLI::IsMember({"T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10",
                               "T11", "T12", "TS1"}));

    // sweep
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Measures of confined states over a confinement-radius grid");
    cmd_sweep->fallthrough();
    std::vector<std::string> sweep_states;
    std::vector<std::string> sweep_measures = {"all"};
    double rc_min = 0.0, rc_max = 0.0, sweep_Z = 1.0;
    int rc_steps = 0;
    bool log_spacing = false;
    cmd_sweep
        ->add_option("--states", sweep_states,
                     "Comma-separated state labels, e.g. 1s,2s,2p")
        ->delimiter(',')
        ->required();
    cmd_sweep->add_option("--rc-min", rc_min, "Smallest confinement radius")
        ->required();
    cmd_sweep->add_option("--rc-max", rc_max, "Largest confinement radius")
        ->required();
    cmd_sweep->add_option("--rc-steps", rc_steps, "Number of grid points")
        ->required();
    cmd_sweep
        ->add_option("--measures", sweep_measures,
                     "Comma-separated families: shannon,renyi,tsallis,"
                     "onicescu,fisher,energy (or all / none)")
        ->delimiter(',')
        ->capture_default_str();
    cmd_sweep->add_flag("--log", log_spacing,
                        "Logarithmic instead of linear r_c spacing");
    cmd_sweep->add_option("--Z", sweep_Z, "Nuclear charge")->capture_default_str();

    // spectrum
    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "Lowest confined levels for fixed l");
    cmd_spectrum->fallthrough();
    int spec_l = 0, spec_count = 1;
    double spec_Z = 1.0, spec_rc = 0.0;
    cmd_spectrum->add_option("--l", spec_l, "Orbital quantum number")->required();
    cmd_spectrum->add_option("--Z", spec_Z, "Nuclear charge")
        ->capture_default_str();
    cmd_spectrum->add_option("--rc", spec_rc, "Confinement radius")->required();
    cmd_spectrum->add_option("--count", spec_count, "Number of levels")
        ->required();

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Crosscheck production results against independent oracles");
    cmd_verify->fallthrough();
    std::string scope = "fast";
    cmd_verify->add_option("--scope", scope, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        if (*cmd_measure) {
            if (system == "confined" && rc_opt->count() == 0) {
                throw std::invalid_argument(
                    "confined system requires --rc > 0");
            }
            if (system == "confined" && !(rc > 0.0)) {
                throw std::invalid_argument("rc must be positive");
            }
            if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l) {
                throw std::invalid_argument(
                    "quantum numbers must satisfy n >= 1, 0 <= l <= n-1, "
                    "|m| <= l");
            }
            if (!(Z >= 0.0)) {
                throw std::invalid_argument("Z must be non-negative");
            }
            Engine engine(cfg);
            const QuantumState state{n, l, m, Z};
            const std::optional<double> rc_arg =
                system == "confined" ? std::optional<double>(rc) : std::nullopt;
            emit(cfg, measure_output(engine, cfg, system, state, rc_arg));
        } else if (*cmd_table) {
            RunConfig table_cfg = cfg;
            table_cfg.alpha = 0.6;  // tables are defined at the conjugate pair
            table_cfg.beta = 3.0;   // (3/5, 3)
            Engine engine(table_cfg);
            emit(cfg, table_output(engine, table_id));
        } else if (*cmd_sweep) {
            Engine engine(cfg);
            emit(cfg, sweep_output(engine, sweep_states, sweep_Z, rc_min, rc_max,
                                   rc_steps, log_spacing, sweep_measures));
        } else if (*cmd_spectrum) {
            if (spec_l < 0) throw std::invalid_argument("l must be >= 0");
            if (!(spec_rc > 0.0)) throw std::invalid_argument("rc must be positive");
            if (spec_count < 1) throw std::invalid_argument("count must be >= 1");
            Engine engine(cfg);
            emit(cfg, spectrum_output(engine, spec_l, spec_Z, spec_rc, spec_count));
        } else if (*cmd_verify) {
            Engine engine(cfg);
            const auto checks = run_verify(engine, scope == "full");
            int failures = 0;
            emit(cfg, verify_output(cfg, checks, scope, &failures));
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
