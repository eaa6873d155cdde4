#pragma once

#include "deformlab/linalg.hpp"
#include "deformlab/momentum_stats.hpp"
#include "deformlab/phase_counting.hpp"
#include "deformlab/quadrature.hpp"
#include "deformlab/repr_core.hpp"
#include "deformlab/report.hpp"
#include "deformlab/uncertainty_lab.hpp"
#include "deformlab/well_spectra.hpp"

namespace deformlab {
inline constexpr const char* version = "0.1.0";
}
