#pragma once

#include <string>
#include <vector>

#include "gxpeakon/types.hpp"

namespace gx {

/// One violated constraint. `code` is a stable identifier (one per
/// constraint family, e.g. "params/sigma-order"); `message` carries the
/// offending group/index and values.
struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const;
};

/// Checks every structural and parameter constraint of a configuration.
/// Structural problems (list lengths not matching the layout) use
/// "structure/..." codes; parameter constraints use "spectral/..." and
/// "params/..." codes. The report is exhaustive: all violations are
/// collected, not just the first. Semantic checks run only when the
/// structure is consistent. Strict inequalities are checked exactly
/// (the solution formulas degenerate at equality); nearly equal
/// eigenvalues produce a conditioning warning instead.
ValidationReport validate(const GroupLayout& layout, const SpectralData& spectral,
                          const GroupParams& params);

/// Product of all mu_j (the quantity entering the C-constraints).
double mu_product(const SpectralData& spectral);

}  // namespace gx
