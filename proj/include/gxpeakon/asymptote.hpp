#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gxpeakon/solve.hpp"
#include "gxpeakon/types.hpp"

namespace gx {

enum class Direction { minus_inf, plus_inf };
enum class LineKind { position, log_amplitude };

/// A predicted straight line c*t + d approached by a peakon position or
/// log-amplitude as t goes to +-infinity. `degenerate` marks lines that
/// are constant in t (slope contribution absent, e.g. the inner members
/// of the outermost groups on their trailing side).
struct AsymptoteLine {
    double slope = 0.0;
    double intercept = 0.0;
    Direction direction = Direction::plus_inf;
    LineKind kind = LineKind::position;
    PeakonRef target{Side::X, 1, 1};
    bool degenerate = false;
};

/// The asymptotic line of one peakon variable, computed from the
/// closed-form coefficients (eigenvalues, residues, C, D, the group sums
/// and the Psi ratios). Dispatches on parity, group side, chain position
/// and member class.
AsymptoteLine asymptote(const Solver& solver, const PeakonRef& target, LineKind kind,
                        Direction dir);

/// Lines for every position and log-amplitude of the configuration, in
/// chain order (positions first, then log-amplitudes).
std::vector<AsymptoteLine> all_asymptotes(const Solver& solver, Direction dir);

/// Ordinary least-squares fit of f over `samples` uniformly spaced
/// points in [t0, t1]; returns (slope, intercept). Needs samples >= 2.
std::pair<double, double> fit_line(const std::function<double(double)>& f, double t0, double t1,
                                   int samples);

}  // namespace gx
