#pragma once

#include <iosfwd>

namespace bc {

// Runs the complete verification suite — determinant/Alexander/omega-signature
// families, the Z^infinity certificate, defect and Lipschitz sweeps, bounded
// families, signature growth, homogenized slopes, displacement commutation,
// and the structural property suites — printing one verdict line per check.
// Returns the number of failed checks (0 = everything holds). All tolerances
// are fixed constants of the build, not parameters.
int run_acceptance(std::ostream& out);

}  // namespace bc
