#pragma once

#include <cstddef>

namespace fepstat {

/// Convergence control for the special-function kernels.
struct Accuracy {
    double abs_tol = 1e-12;     ///< absolute error target on the function value
    std::size_t max_iter = 200; ///< series / continued-fraction iteration cap

    [[nodiscard]] bool valid() const { return abs_tol > 0.0 && max_iter >= 1; }
};

}  // namespace fepstat
