#pragma once

// Integration layer: assembles radial amplitudes into full measure reports,
// memoizes the expensive solver and transform stages, and flattens reports
// into the CSV/JSON shapes the command-line tool emits.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hatom/measures.hpp"
#include "hatom/oracle.hpp"
#include "hatom/report.hpp"

namespace hatom::pipeline {

using hydrogenic::ConfinedLevel;
using hydrogenic::QuantumState;
using hydrogenic::RadialAmplitude;
using measures::EntropicParams;
using measures::MeasureReport;

// Position/momentum amplitude pair for one level, plus its energy.
struct AmplitudePair {
    RadialAmplitude position;
    RadialAmplitude momentum;
    double energy = 0.0;
};

// Spectroscopic letters s p d f g h i k l m for l = 0..9 (j is skipped).
int letter_to_l(char letter);
char l_to_letter(int l);

// Parses a "2p" or "10m" style label into quantum numbers (m stays 0).
QuantumState parse_state_label(const std::string& label);
std::string state_label(int n, int l);

// Computes and memoizes amplitudes, levels, and measure reports for one run
// configuration. References returned by the accessors stay valid for the
// lifetime of the engine (node-based map storage).
class Engine {
  public:
    explicit Engine(report::RunConfig cfg = {});

    const report::RunConfig& config() const { return cfg_; }

    // Entropic orders from the configuration; conjugate flag set when
    // 1/alpha + 1/beta = 2 holds to 1e-9.
    EntropicParams params() const;

    const ConfinedLevel& confined_level(int n, int l, double Z, double r_c);

    // Lowest `count` levels for fixed l, n = l+1 .. l+count.
    std::vector<ConfinedLevel> confined_spectrum(int l, double Z, double r_c,
                                                 int count);

    const AmplitudePair& free_amplitudes(const QuantumState& state);
    const AmplitudePair& confined_amplitudes(const QuantumState& state,
                                             double r_c);

    const MeasureReport& free_report(const QuantumState& state);
    const MeasureReport& confined_report(const QuantumState& state, double r_c);

  private:
    report::RunConfig cfg_;
    std::map<std::tuple<int, int, double, double>, ConfinedLevel> levels_;
    std::map<std::tuple<int, int, double>, AmplitudePair> free_amps_;
    std::map<std::tuple<int, int, double, double>, AmplitudePair> cha_amps_;
    std::map<std::tuple<int, int, int, double>, MeasureReport> free_reports_;
    std::map<std::tuple<int, int, int, double, double>, MeasureReport>
        cha_reports_;
};

// Builds the full report from an amplitude pair (no caching).
MeasureReport build_report(const AmplitudePair& amp, int l, int m,
                           const EntropicParams& params,
                           double quad_tol = 1.0e-11);

// Fixed measure column order shared by the CLI `measure` output and tests.
const std::vector<std::string>& measure_columns();

// Flattens one report into a CSV row with the fixed identity prefix.
// r_c is empty for the free atom; <p^-2>-derived cells go empty when that
// moment diverges.
report::Row to_row(const std::string& system, const QuantumState& state,
                   std::optional<double> r_c, const EntropicParams& params,
                   const MeasureReport& rep, double energy);

// JSON object mirroring the report structure with nested records.
nlohmann::ordered_json to_json(const std::string& system,
                               const QuantumState& state,
                               std::optional<double> r_c,
                               const EntropicParams& params,
                               const MeasureReport& rep, double energy);

nlohmann::ordered_json to_json(const oracle::CrosscheckReport& check);

} // namespace hatom::pipeline
