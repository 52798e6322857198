#include "hatom/pipeline.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hatom::pipeline {

namespace {

constexpr const char* kLetters = "spdfghiklm"; // l = 0..9, j skipped

} // namespace

int letter_to_l(char letter) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
    for (int l = 0; kLetters[l] != '\0'; ++l) {
        if (kLetters[l] == c) return l;
    }
    throw std::invalid_argument(std::string("unknown subshell letter '") + letter + "'");
}

char l_to_letter(int l) {
    if (l < 0 || l > 9) {
        throw std::invalid_argument("no subshell letter for l = " + std::to_string(l));
    }
    return kLetters[l];
}

QuantumState parse_state_label(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0 || i + 1 != label.size()) {
        throw std::invalid_argument("state label must be digits followed by one letter: '" +
                                    label + "'");
    }
    QuantumState state;
    state.n = std::stoi(label.substr(0, i));
    state.l = letter_to_l(label[i]);
    if (state.n < 1 || state.l > state.n - 1) {
        throw std::invalid_argument("state label '" + label + "' violates l <= n - 1");
    }
    return state;
}

std::string state_label(int n, int l) {
    return std::to_string(n) + l_to_letter(l);
}

Engine::Engine(report::RunConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
}

EntropicParams Engine::params() const {
    EntropicParams p;
    p.alpha = cfg_.alpha;
    p.beta = cfg_.beta;
    p.conjugate = std::abs(1.0 / p.alpha + 1.0 / p.beta - 2.0) < 1.0e-9;
    p.validate();
    return p;
}

const ConfinedLevel& Engine::confined_level(int n, int l, double Z, double r_c) {
    const auto key = std::make_tuple(n, l, Z, r_c);
    auto it = levels_.find(key);
    if (it == levels_.end()) {
        it = levels_.emplace(key, hydrogenic::cha_energy(n, l, Z, r_c)).first;
    }
    return it->second;
}

std::vector<ConfinedLevel> Engine::confined_spectrum(int l, double Z, double r_c,
                                                     int count) {
    if (count < 1) throw std::invalid_argument("spectrum count must be at least 1");
    std::vector<ConfinedLevel> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = l + 1; n <= l + count; ++n) {
        out.push_back(confined_level(n, l, Z, r_c));
    }
    return out;
}

const AmplitudePair& Engine::free_amplitudes(const QuantumState& state) {
    const auto key = std::make_tuple(state.n, state.l, state.Z);
    auto it = free_amps_.find(key);
    if (it == free_amps_.end()) {
        QuantumState radial = state;
        radial.m = 0;
        AmplitudePair pair;
        pair.position = hydrogenic::fha_radial_r(radial);
        pair.momentum = hydrogenic::fha_radial_p(radial);
        pair.energy = hydrogenic::fha_energy(radial);
        it = free_amps_.emplace(key, std::move(pair)).first;
    }
    return it->second;
}

const AmplitudePair& Engine::confined_amplitudes(const QuantumState& state,
                                                 double r_c) {
    const auto key = std::make_tuple(state.n, state.l, state.Z, r_c);
    auto it = cha_amps_.find(key);
    if (it == cha_amps_.end()) {
        const ConfinedLevel& level = confined_level(state.n, state.l, state.Z, r_c);
        AmplitudePair pair;
        pair.position = hydrogenic::cha_radial_r(level, cfg_.numerov_grid);
        pair.momentum = hydrogenic::radial_to_momentum(pair.position, state.l,
                                                       cfg_.momentum_grid,
                                                       cfg_.p_max_scale);
        pair.energy = level.energy;
        it = cha_amps_.emplace(key, std::move(pair)).first;
    }
    return it->second;
}

const MeasureReport& Engine::free_report(const QuantumState& state) {
    const auto key = std::make_tuple(state.n, state.l, state.m, state.Z);
    auto it = free_reports_.find(key);
    if (it == free_reports_.end()) {
        const AmplitudePair& amp = free_amplitudes(state);
        it = free_reports_.emplace(key, build_report(amp, state.l, state.m, params(), cfg_.quad_tol))
                 .first;
    }
    return it->second;
}

const MeasureReport& Engine::confined_report(const QuantumState& state, double r_c) {
    const auto key = std::make_tuple(state.n, state.l, state.m, state.Z, r_c);
    auto it = cha_reports_.find(key);
    if (it == cha_reports_.end()) {
        const AmplitudePair& amp = confined_amplitudes(state, r_c);
        it = cha_reports_.emplace(key, build_report(amp, state.l, state.m, params(), cfg_.quad_tol))
                 .first;
    }
    return it->second;
}

MeasureReport build_report(const AmplitudePair& amp, int l, int m,
                           const EntropicParams& params, double quad_tol) {
    MeasureReport rep;
    rep.expect = hydrogenic::expectation_values(amp.position, amp.momentum);
    rep.shannon = measures::shannon(amp.position, amp.momentum, l, m, quad_tol);
    rep.renyi = measures::renyi(amp.position, amp.momentum, l, m, params, quad_tol);
    rep.tsallis =
        measures::tsallis(amp.position, amp.momentum, l, m, params, quad_tol);
    rep.onicescu =
        measures::onicescu(amp.position, amp.momentum, l, m, quad_tol);
    rep.fisher = measures::fisher(rep.expect, l, m);
    return rep;
}

const std::vector<std::string>& measure_columns() {
    static const std::vector<std::string> cols = {
        "energy",
        "S_r", "S_p", "S_ang", "S_rho", "S_pi", "S_total", "S_bound", "S_bound_ok",
        "R_r", "R_p", "R_ang_alpha", "R_ang_beta", "R_rho", "R_pi", "R_total",
        "R_bound", "R_bound_ok",
        "T_r", "T_p", "T_rho", "T_pi", "T_total",
        "E_r", "E_p", "E_ang", "E_rho", "E_pi", "E_total",
        "I_rho", "I_pi", "I_total", "I_lower", "I_upper", "I_bound_ok",
        "r_avg", "r2_avg", "rm2_avg", "p_avg", "p2_avg", "pm2_avg",
        "delta_r", "delta_p",
    };
    return cols;
}

report::Row to_row(const std::string& system, const QuantumState& state,
                   std::optional<double> r_c, const EntropicParams& params,
                   const MeasureReport& rep, double energy) {
    report::Row row;
    row.system = system;
    row.n = state.n;
    row.l = state.l;
    row.m = state.m;
    row.Z = state.Z;
    row.rc = r_c;
    row.alpha = params.alpha;
    row.beta = params.beta;

    const auto flag = [](bool b) { return b ? 1.0 : 0.0; };
    const auto& s = rep.shannon;
    const auto& r = rep.renyi;
    const auto& t = rep.tsallis;
    const auto& e = rep.onicescu;
    const auto& f = rep.fisher;
    const auto& x = rep.expect;
    row.values = {
        {"energy", energy},
        {"S_r", s.S_r}, {"S_p", s.S_p}, {"S_ang", s.S_ang},
        {"S_rho", s.S_rho}, {"S_pi", s.S_pi}, {"S_total", s.S_total},
        {"S_bound", s.bound}, {"S_bound_ok", flag(s.bound_ok)},
        {"R_r", r.R_r}, {"R_p", r.R_p},
        {"R_ang_alpha", r.R_ang_alpha}, {"R_ang_beta", r.R_ang_beta},
        {"R_rho", r.R_rho}, {"R_pi", r.R_pi}, {"R_total", r.R_total},
        {"R_bound", r.bound}, {"R_bound_ok", flag(r.bound_ok)},
        {"T_r", t.T_r}, {"T_p", t.T_p},
        {"T_rho", t.T_rho}, {"T_pi", t.T_pi}, {"T_total", t.T_total},
        {"E_r", e.E_r}, {"E_p", e.E_p}, {"E_ang", e.E_ang},
        {"E_rho", e.E_rho}, {"E_pi", e.E_pi}, {"E_total", e.E_total},
        {"I_rho", f.I_rho}, {"I_pi", f.I_pi}, {"I_total", f.I_total},
        {"I_lower", f.lower}, {"I_upper", f.upper}, {"I_bound_ok", flag(f.bound_ok)},
        {"r_avg", x.r_avg}, {"r2_avg", x.r2_avg}, {"rm2_avg", x.rm2_avg},
        {"p_avg", x.p_avg}, {"p2_avg", x.p2_avg},
        {"pm2_avg", x.pm2_diverged ? std::optional<double>{} : std::optional<double>{x.pm2_avg}},
        {"delta_r", x.delta_r}, {"delta_p", x.delta_p},
    };
    return row;
}

nlohmann::ordered_json to_json(const std::string& system,
                               const QuantumState& state,
                               std::optional<double> r_c,
                               const EntropicParams& params,
                               const MeasureReport& rep, double energy) {
    nlohmann::ordered_json j;
    j["system"] = system;
    j["n"] = state.n;
    j["l"] = state.l;
    j["m"] = state.m;
    j["Z"] = state.Z;
    if (r_c.has_value()) j["rc"] = *r_c;
    j["alpha"] = params.alpha;
    j["beta"] = params.beta;
    j["energy"] = energy;

    const auto& s = rep.shannon;
    j["shannon"] = {
        {"S_r", s.S_r}, {"S_p", s.S_p}, {"S_ang", s.S_ang},
        {"S_rho", s.S_rho}, {"S_pi", s.S_pi}, {"S_total", s.S_total},
        {"bound", s.bound}, {"bound_ok", s.bound_ok},
    };
    const auto& r = rep.renyi;
    j["renyi"] = {
        {"R_r", r.R_r}, {"R_p", r.R_p},
        {"R_ang_alpha", r.R_ang_alpha}, {"R_ang_beta", r.R_ang_beta},
        {"R_rho", r.R_rho}, {"R_pi", r.R_pi}, {"R_total", r.R_total},
        {"bound", r.bound}, {"bound_ok", r.bound_ok},
    };
    const auto& t = rep.tsallis;
    j["tsallis"] = {
        {"T_r", t.T_r}, {"T_p", t.T_p},
        {"T_rho", t.T_rho}, {"T_pi", t.T_pi}, {"T_total", t.T_total},
    };
    const auto& e = rep.onicescu;
    j["onicescu"] = {
        {"E_r", e.E_r}, {"E_p", e.E_p}, {"E_ang", e.E_ang},
        {"E_rho", e.E_rho}, {"E_pi", e.E_pi}, {"E_total", e.E_total},
    };
    const auto& f = rep.fisher;
    j["fisher"] = {
        {"I_rho", f.I_rho}, {"I_pi", f.I_pi}, {"I_total", f.I_total},
        {"lower", f.lower}, {"upper", f.upper}, {"bound_ok", f.bound_ok},
    };
    const auto& x = rep.expect;
    nlohmann::ordered_json expect = {
        {"r_avg", x.r_avg}, {"r2_avg", x.r2_avg}, {"rm2_avg", x.rm2_avg},
        {"p_avg", x.p_avg}, {"p2_avg", x.p2_avg},
    };
    if (x.pm2_diverged) {
        expect["pm2_avg"] = nullptr;
    } else {
        expect["pm2_avg"] = x.pm2_avg;
    }
    expect["delta_r"] = x.delta_r;
    expect["delta_p"] = x.delta_p;
    j["expectation"] = expect;
    return j;
}

nlohmann::ordered_json to_json(const oracle::CrosscheckReport& check) {
    return nlohmann::ordered_json{
        {"name", check.name},
        {"production", check.production},
        {"oracle", check.oracle},
        {"abs_dev", check.abs_dev},
        {"rel_dev", check.rel_dev},
        {"tolerance", check.tolerance},
        {"pass", check.pass},
    };
}

} // namespace hatom::pipeline
