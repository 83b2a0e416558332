#pragma once

#include <iosfwd>

#include "specmatch/types.hpp"

namespace specmatch {

struct VerifyOptions {
    // Test fixture: flips the contour orientation so the contour-vs-direct
    // check must fail.
    bool inject_contour_sign_error = false;
};

// Runs the oracle and identity suite at fixed small sizes and seeds, printing
// one line per check with its residual. Returns true iff all checks pass.
bool run_verify(std::ostream& out, const VerifyOptions& options = {});

}  // namespace specmatch
