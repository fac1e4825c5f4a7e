#pragma once

#include <optional>
#include <vector>

#include "gxpeakon/solve.hpp"
#include "gxpeakon/types.hpp"

namespace gx {

/// One family of characteristic curves x = xi(t; theta). Families cover
/// every gap between adjacent peakons plus the two outer regions; as
/// theta sweeps its open range the curves fill the region between the
/// bounding trajectories (or run off to -/+ infinity in the outer
/// regions). `lower_target` / `upper_target` name the bounding peakon
/// reached in the limit theta -> lo+ / hi-, when there is one.
struct CharFamily {
    enum class Region { within, between, far_left, far_right };
    Region region = Region::within;

    // within: the group and the gap index (between member `gap` and
    // `gap`+1). between: identified by the left group; the right group is
    // the next one in the chain.
    Side side = Side::X;
    int group = 1;
    int gap = 1;

    double theta_lo = 0.0;
    double theta_hi = 0.0;  // may be +infinity

    std::optional<PeakonRef> lower_target;
    std::optional<PeakonRef> upper_target;
};

class Characteristics {
public:
    explicit Characteristics(const Solver& solver);

    /// One family per inter-peakon gap plus the far-left and far-right
    /// regions, in chain order.
    const std::vector<CharFamily>& families() const { return families_; }

    /// xi(t; theta). theta must lie inside the family's open range.
    double xi(const CharFamily& family, double theta, double t) const;

    /// Analytic theta -> upper-limit value (the far-right region has
    /// none and returns +infinity).
    double xi_at_upper_limit(const CharFamily& family, double t) const;

    /// |d xi/dt - u(xi) v(xi)| / (1 + |u v|) with a central difference of
    /// step h and the fields evaluated on the closed-form state at t.
    double residual(const CharFamily& family, double theta, double t, double h) const;

private:
    const Solver& solver_;
    std::vector<CharFamily> families_;

    LogReal scaled_value(const CharFamily& family, double theta, const JCache& cache) const;
};

}  // namespace gx
