#pragma once

#include <string>
#include <vector>

#include "gxpeakon/types.hpp"

namespace gx {

/// A named ready-to-solve configuration.
struct Fixture {
    std::string name;
    GroupLayout layout;
    SpectralData spectral;
    GroupParams params;
};

/// Built-in configurations covering both parities, interlacing chains and
/// chains where every group has several peakons. Parameter values span
/// huge ranges (1e-15 .. 1e26) on purpose: that is the regime the
/// log-domain arithmetic exists for.
const std::vector<std::string>& fixture_names();
Fixture fixture(const std::string& name);

}  // namespace gx
