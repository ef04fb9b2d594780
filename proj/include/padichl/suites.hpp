#pragma once

#include <string>
#include <vector>

#include "padichl/montecarlo.hpp"

namespace padichl::veristat {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines;  // per-subcheck summaries
};

/* Deterministic verification suites exposed through `verify --suite`:
 *   engine          symmetrization vs branching, principal formulas,
 *                   skew Cauchy identity on the small grid
 *   hecke           integrality and nonnegativity of the structure
 *                   coefficients over the coefficient grid
 *   normalization   product laws sum to one; hermitian corner values
 *                   stay inside [0,1]
 *   corner-tables   the 1x1-of-2x2 hermitian and 2x2-of-3x3 alternating
 *                   corner tables, with exact tail sums
 *   marginalization joint chains against single-step laws, and the
 *                   large-ambient limit of the invertible-corner law
 *   reproducibility histograms independent of the worker count */
SuiteResult run_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace padichl::veristat
