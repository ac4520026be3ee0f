#pragma once

#include "ffirred/matrix.hpp"
#include "ffirred/poly.hpp"

namespace ffirred {

/// [f]: ones on the superdiagonal, last row (-a_0, ..., -a_{d-1}).
/// Throws NotMonic and DegreeZero.
Mat companion_matrix(const Poly& f);

}  // namespace ffirred
