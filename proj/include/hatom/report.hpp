#pragma once

// Output formatting and run configuration.
//
// Everything that leaves the program as text goes through this module so that
// output is deterministic byte-for-byte: numbers are printed with 12
// significant digits, CSV fields are quoted RFC-4180 style, and JSON is
// serialized with a fixed key order and the same 12-digit number format.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hatom::report {

// Tunable run parameters, loadable from a plain key=value file and
// overridable by command-line flags (flags win over file values).
struct RunConfig {
    double quad_tol = 1.0e-11;  // adaptive quadrature tolerance
    int numerov_grid = 20000;   // base radial grid for the confined solver
    int momentum_grid = 0;      // momentum grid size; 0 picks the default
    double p_max_scale = 1.0;   // multiplier on the automatic momentum cutoff
    double alpha = 0.6;         // Renyi/Tsallis order for the position side
    double beta = 3.0;          // conjugate order for the momentum side
    std::string format = "csv"; // "csv" or "json"
    std::string output_path;    // empty means stdout

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

// Parses a key=value config file.  Blank lines and lines starting with '#'
// are ignored; unknown keys and malformed lines are errors.
RunConfig load_config_file(const std::string& path);

// Returns load_config_file() on the path named by the HATOM_CONFIG
// environment variable, or a default-constructed RunConfig when it is unset.
RunConfig load_config_from_env();

// Canonical number format: printf "%.12g".  Trailing zeros are stripped by
// the format itself, so re-parsing and re-formatting reproduces the string.
std::string format_number(double v);

// RFC-4180 quoting: the field is wrapped in double quotes when it contains a
// comma, a quote, or a line break, and embedded quotes are doubled.
std::string csv_escape(const std::string& field);

// A named value that may be absent.  Absent values become empty CSV cells
// and null JSON members, never sentinel numbers.
using Field = std::pair<std::string, std::optional<double>>;

// One result row.  The fixed identity prefix is followed by measure columns
// selected by name from `values`.  Prefix fields that do not apply to a row
// (r_c for the free atom, n and Z for purely angular rows) stay empty.
struct Row {
    std::string system;       // "free", "confined", or "angular"
    std::optional<int> n;
    std::optional<int> l;
    std::optional<int> m;
    std::optional<double> Z;
    std::optional<double> rc;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::vector<Field> values;
};

// Header line "system,n,l,m,Z,rc,alpha,beta,<columns...>" without a newline.
std::string csv_header(const std::vector<std::string>& columns);

// One data line matching csv_header(columns); columns missing from
// row.values are emitted as empty cells.
std::string csv_row(const Row& row, const std::vector<std::string>& columns);

// Serializes JSON with 2-space indentation, preserving insertion order and
// printing every number through format_number().  Parsing the result and
// dumping it again yields the identical byte sequence.
std::string dump_json(const nlohmann::ordered_json& j);

} // namespace hatom::report
