#pragma once

#include <string>
#include <vector>

#include "persym/curves.hpp"
#include "persym/io.hpp"
#include "persym/stability.hpp"

namespace persym::svg {

// Horizontal bars stacked by birth, x-axis in threshold units. Multiplicity
// shown as a label rather than repeated rows past a small count.
std::string barcode_chart(const std::vector<io::BarRecord>& records, double eps_max);

// Both step curves overlaid on one threshold axis; gamma may be empty.
std::string curve_chart(const StepCurve& delta, const StepCurve& gamma);

// Study comparison: E and R against atom count on twin y-axes.
std::string study_chart(const StabilityReport& report);

}  // namespace persym::svg
