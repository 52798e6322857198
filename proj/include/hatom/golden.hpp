#pragma once

#include <array>
#include <string>
#include <vector>

// Frozen reference values backing the regression and acceptance suites.
// Numeric strings are stored verbatim with their printed precision; the parse
// helpers below recover both the value and the size of one unit in the last
// printed digit, which is what the comparison tolerances key off.
//
// Table ids follow the CLI naming: T3 (angular measures), T4..T7 (free-atom
// Renyi/Tsallis/Shannon/Onicescu), T8..T12 (confined-atom Renyi, Tsallis,
// Shannon, Fisher, Onicescu for 1s and 2s over cage-radius grids).

namespace hatom::golden {

struct AngularRow {
    int l;
    const char* S;
    const char* R_alpha;
    const char* R_beta;
    const char* T_alpha;
    const char* T_beta;
    const char* E;
};

struct FhaRow {
    const char* state;
    int n;
    int l;
    const char* first;   // position-space column
    const char* second;  // momentum-space column
};

struct ChaRow {
    const char* rc;
    const char* rho;       // full position-space value
    const char* pi;        // full momentum-space value
    const char* combined;  // nullptr for two-column tables
};

// Momentum kernel expansion
//   f(r, p) = sum_k a_k cos(p r) / (p^k r^(k-1))
//           + sum_j b_j sin(p r) / (p^j r^(j-1)),
// with every coefficient carrying a global 1/sqrt(pi). Stored as integer
// numerators; assemble with numerator / sqrt(pi).
struct KernelTerm {
    int power;
    double numerator;
};

struct KernelRow {
    int l;
    std::vector<KernelTerm> cos_terms;  // a_k
    std::vector<KernelTerm> sin_terms;  // b_j
};

// A printed cell whose digits are inconsistent with the rest of the
// tabulation (misprints, or quadrature noise in a column that is an exact
// transform of an already-printed column). Comparisons use `frozen`, an
// independently recomputed value, and report the printed figure alongside.
struct Exclusion {
    const char* table;
    const char* row;      // state label or cage radius
    const char* column;
    const char* printed;
    const char* frozen;
    const char* reason;
};

const std::array<AngularRow, 10>& table3();
// Independent higher-precision values for the T3 Shannon column.
const std::array<const char*, 10>& table3_S_refs();

const std::array<FhaRow, 20>& table4();
const std::array<FhaRow, 20>& table5();
const std::array<FhaRow, 20>& table6();
const std::array<FhaRow, 20>& table7();

// Higher-precision companion values quoted alongside T6.
const std::array<FhaRow, 10>& table6_refs_low();  // 1s .. 4f
const std::array<FhaRow, 10>& table6_refs_n10();  // 10s .. 10m
// Full-space 1s Shannon values (radial plus angular) quoted beneath T6.
const char* table6_1s_S_rho();
const char* table6_1s_S_pi();

const std::vector<ChaRow>& table8_1s();
const std::vector<ChaRow>& table8_2s();
const std::vector<ChaRow>& table9_1s();
const std::vector<ChaRow>& table9_2s();
const std::vector<ChaRow>& table10_1s();
const std::vector<ChaRow>& table10_2s();
const std::vector<ChaRow>& table11_1s();
const std::vector<ChaRow>& table11_2s();
const std::vector<ChaRow>& table12_1s();
const std::vector<ChaRow>& table12_2s();

// Literature companion sets quoted beneath T10, and the variational Fisher
// values beneath T11 (already rescaled to this work's normalization).
struct LabeledChaRows {
    const char* label;
    std::vector<ChaRow> rows;
};
const std::vector<LabeledChaRows>& table10_refs_1s();
const std::vector<LabeledChaRows>& table10_refs_2s();
const std::vector<ChaRow>& table11_variational_1s();

const std::vector<KernelRow>& kernel_rows();

const std::vector<Exclusion>& exclusions();
const Exclusion* find_exclusion(const std::string& table,
                                const std::string& row,
                                const std::string& column);

// strtod on the printed string.
double parse(const char* printed);
// Count of significant digits in the printed string.
int significant_digits(const char* printed);
// One unit in the last printed digit, relative to the value. Comparison
// tolerances take max(criterion floor, ulp_rel).
double ulp_rel(const char* printed);

}  // namespace hatom::golden
