#pragma once

#include <stdexcept>

namespace csg {

/// Requested evaluation at (or numerically on top of) the source point.
struct SingularPointError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requested a limit the theory does not define (couple kernels at l = 0).
struct UnsupportedLimitError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A finite-difference stencil would straddle the source singularity.
struct StencilCollisionError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace csg
