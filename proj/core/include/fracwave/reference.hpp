#pragma once

#include "fracwave/grid.hpp"

namespace fracwave {

// Route A evaluated on a grid zero-padded (centered) by the given factor,
// cropped back to the original window. Padding refines the frequency grid
// and suppresses the periodic wrap-around of the singular symbol.
ScalarField box_alpha_padded(const ScalarField& f, double alpha, int pad);

// Reference oracle: two padded evaluations combined by Richardson
// extrapolation with the known leading error exponent 1 + alpha,
//   ref = v2 + (v2 - v1) / (2^{1+alpha} - 1),    pad2 = 2 * pad1.
ScalarField box_alpha_padded_reference(const ScalarField& f, double alpha,
                                       int pad1, int pad2);

}  // namespace fracwave
