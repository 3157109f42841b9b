#pragma once

#include "errors.hpp"

namespace biso {

// Comparison tolerances used across the library.
//   abs_eps       slack for "equal within floating noise" checks
//   strict_margin threshold a gap must clear to count as a real strict gap
//   root_eps      target accuracy of scalar root finding
//   cap_eps       slack for "channels have the same capacity" preconditions;
//                 looser than abs_eps so channels specified with truncated
//                 decimal constants still qualify as equal-capacity
struct Tolerance {
  double abs_eps = 1e-9;
  double strict_margin = 1e-6;
  double root_eps = 1e-12;
  double cap_eps = 1e-4;

  void validate() const {
    if (!(abs_eps > 0) || !(strict_margin > 0) || !(root_eps > 0) || !(cap_eps > 0))
      throw_domain("tolerances must be strictly positive");
    if (!(strict_margin > abs_eps))
      throw_domain("strict_margin must exceed abs_eps");
  }
};

}  // namespace biso
