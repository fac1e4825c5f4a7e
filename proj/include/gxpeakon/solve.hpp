#pragma once

#include <memory>
#include <vector>

#include "gxpeakon/jdet.hpp"
#include "gxpeakon/types.hpp"

namespace gx {

/// Scaled solution values at one time, stored as logs:
/// X = exp(2x)/2, Y = exp(2y)/2, Q = 2 m exp(-x), P = 2 n exp(-y).
struct ScaledState {
    std::vector<std::vector<double>> log_X, log_Q;
    std::vector<std::vector<double>> log_Y, log_P;
    double t = 0.0;
};

/// The closed-form solution of every group follows one six-determinant
/// pattern: with T_i, S_i the prefix sums of the group parameters,
///
///   pos(member i)   = (alpha + T_i gamma + S_i eps) / (beta + T_i delta + S_i phi)
///   pos(member N)   = (gamma + sigma_{N-1} eps) / (delta + sigma_{N-1} phi)
///   pos(singleton)  = gamma / delta
///
/// and the amplitudes share the prefactor p0 and the denominator triple
/// (g, h, i2) via  den_i = g + sigma_i h + R_i i2.  Entries with
/// out-of-range subset sizes evaluate to zero, which is what makes the
/// outermost groups come out right:
///  - rightmost group (even Y_K, odd X_{K+1}): beta = 1 and delta = phi = 0,
///    so positions reduce to the additive form, and D acts as one more tau
///    (member N uses T_{N-1}+D, S_{N-1}+D sigma_{N-1}).
///  - leftmost X-group: alpha = gamma = 0; member 1 uses the shifted sums
///    (T_1 + theta0, theta0 sigma_1) with theta0 = tau_1 M / (sigma_1 C),
///    and the singleton and first-member amplitudes carry the explicit
///    C-dependent forms.
struct SlotPattern {
    JIndex alpha, beta, gamma, delta, eps, phi;
    JIndex p0, g, h, i2;
    enum class Shape { typical, leftmost, rightmost } shape = Shape::typical;
};

/// Pattern for X- or Y-group number `jprime` (1-based from the left);
/// K is the number of Y-groups.
SlotPattern slot_pattern(bool odd, Side side, int jprime, int K);

/// (alpha + T gamma + S eps) / (beta + T delta + S phi). The member-i
/// position is this with (T_i, S_i); the characteristic families inside
/// a group are this with (T_i + theta, S_i + theta sigma_i).
LogReal pattern_member_value(const JCache& cache, const SlotPattern& p, LogReal T, LogReal S);

/// (gamma + theta eps) / (delta + theta phi): the family between this
/// group and its right neighbour, whose patterns share these tuples.
LogReal pattern_between_value(const JCache& cache, const SlotPattern& p, LogReal theta);

/// Evaluates the closed-form multipeakon solution for one validated
/// configuration. Construction precomputes the t-independent Psi tables;
/// each solve() call shares one per-t determinant memo across all groups.
class Solver {
public:
    /// Throws std::invalid_argument when validate() reports violations.
    Solver(GroupLayout layout, SpectralData spectral, GroupParams params);

    const GroupLayout& layout() const { return layout_; }
    const SpectralData& spectral() const { return spectral_; }
    const GroupParams& params() const { return params_; }
    const JEngine& engine() const { return *engine_; }
    const GroupSums& sums(Side side, int jprime) const;

    ScaledState solve_scaled(double t) const;
    PeakonState solve(double t) const;

    /// Scaled log values (positions, then amplitudes) of one group, all
    /// sharing the per-t cache. Used by solve_scaled and by the
    /// characteristic families for the outer regions.
    void solve_group(const JCache& cache, Side side, int jprime, std::vector<double>& log_pos,
                     std::vector<double>& log_amp) const;

    /// The interlacing solver with the same spectral data (every group a
    /// singleton). Its singleton values coincide with this solver's
    /// singleton slots and with the effective position/amplitude of each
    /// non-singleton group.
    Solver interlacing() const;

    LogReal log_mu_over_lambda_product() const { return m_over_l_; }

private:
    GroupLayout layout_;
    SpectralData spectral_;
    GroupParams params_;
    std::shared_ptr<const JEngine> engine_;
    std::vector<GroupSums> x_sums_, y_sums_;
    std::vector<SlotPattern> x_pat_, y_pat_;
    LogReal m_over_l_;
};

PeakonState to_physical(const ScaledState& scaled);

/// Effective position and amplitude of a group: the unique (x~, m~) with
/// m~ exp(+-x~) = sum_i m_i exp(+-x_i). It lies strictly inside the
/// group's position range and obeys the interlacing singleton ODEs.
struct EffectivePeakon {
    double x;
    double log_m;
};
EffectivePeakon effective_peakon(const std::vector<double>& pos,
                                 const std::vector<double>& log_amp);

}  // namespace gx
