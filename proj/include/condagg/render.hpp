#pragma once

#include <string>

#include "condagg/index_maps.hpp"
#include "condagg/step_function.hpp"

namespace condagg::render {

// Monospace staircase with value labels on the left and breakpoint ticks
// below.
std::string ascii_step(const StepFunction& f, int width = 64);

// Self-contained SVG staircase: ticks at the breakpoints and at the distinct
// values, filled/open endpoint markers for the right-open pieces.
std::string svg_step(const StepFunction& f, const std::string& x_label, const std::string& y_label);

// Two-row diagram of the permutation: lower axis aggregation indices, upper
// axis measure indices, one edge per matched pair.
std::string ascii_permutation(const PermutationTables& pt);
std::string svg_permutation(const PermutationTables& pt);

}  // namespace condagg::render
