#include "gxpeakon/solve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gxpeakon/validate.hpp"

namespace gx {

SlotPattern slot_pattern(bool odd, Side side, int jprime, int K) {
    SlotPattern p;
    if (side == Side::X && !odd) {
        const int j = K + 1 - jprime;
        p.alpha = {0, 0, j + 1, j};
        p.beta = {1, 1, j, j - 1};
        p.gamma = {0, 0, j, j};
        p.delta = {1, 1, j - 1, j - 1};
        p.eps = {0, 0, j, j - 1};
        p.phi = {1, 1, j - 1, j - 2};
        p.p0 = {0, 1, j, j - 1};
        p.g = {1, 0, j, j};
        p.h = {1, 0, j, j - 1};
        p.i2 = {1, 0, j - 1, j - 1};
        p.shape = (jprime == 1) ? SlotPattern::Shape::leftmost : SlotPattern::Shape::typical;
    } else if (side == Side::X && odd) {
        const int j = K + 2 - jprime;
        p.alpha = {0, 0, j, j};
        p.beta = {1, 1, j - 1, j - 1};
        p.gamma = {0, 0, j - 1, j};
        p.delta = {1, 1, j - 2, j - 1};
        p.eps = {0, 0, j - 1, j - 1};
        p.phi = {1, 1, j - 2, j - 2};
        p.p0 = {0, 1, j - 1, j - 1};
        p.g = {1, 0, j - 1, j};
        p.h = {1, 0, j - 1, j - 1};
        p.i2 = {1, 0, j - 2, j - 1};
        p.shape = (jprime == 1)       ? SlotPattern::Shape::leftmost
                  : (jprime == K + 1) ? SlotPattern::Shape::rightmost
                                      : SlotPattern::Shape::typical;
    } else if (side == Side::Y && !odd) {
        const int j = K + 1 - jprime;
        p.alpha = {0, 0, j, j};
        p.beta = {1, 1, j - 1, j - 1};
        p.gamma = {0, 0, j, j - 1};
        p.delta = {1, 1, j - 1, j - 2};
        p.eps = {0, 0, j - 1, j - 1};
        p.phi = {1, 1, j - 2, j - 2};
        p.p0 = {1, 0, j - 1, j - 1};
        p.g = {0, 1, j, j - 1};
        p.h = {0, 1, j - 1, j - 1};
        p.i2 = {0, 1, j - 1, j - 2};
        p.shape = (jprime == K) ? SlotPattern::Shape::rightmost : SlotPattern::Shape::typical;
    } else {
        const int j = K + 1 - jprime;
        p.alpha = {0, 0, j, j + 1};
        p.beta = {1, 1, j - 1, j};
        p.gamma = {0, 0, j, j};
        p.delta = {1, 1, j - 1, j - 1};
        p.eps = {0, 0, j - 1, j};
        p.phi = {1, 1, j - 2, j - 1};
        p.p0 = {1, 0, j - 1, j};
        p.g = {0, 1, j, j};
        p.h = {0, 1, j - 1, j};
        p.i2 = {0, 1, j - 1, j - 1};
        p.shape = SlotPattern::Shape::typical;
    }
    return p;
}

namespace {

LogReal lin3(const JCache& J, const JIndex& a, LogReal c1, const JIndex& b, LogReal c2,
             const JIndex& c) {
    LogSum s;
    s.add(J(a));
    s.add_scaled(c1, J(b));
    s.add_scaled(c2, J(c));
    return s.total();
}

LogReal pos_den(const JCache& J, const SlotPattern& p, LogReal T, LogReal S) {
    return lin3(J, p.beta, T, p.delta, S, p.phi);
}

// g + sigma h + R i2
LogReal amp_den(const JCache& J, const SlotPattern& p, LogReal sigma, LogReal R) {
    return lin3(J, p.g, sigma, p.h, R, p.i2);
}

LogReal lp(double v) { return LogReal::from_value(v); }

}  // namespace

LogReal pattern_member_value(const JCache& J, const SlotPattern& p, LogReal T, LogReal S) {
    return lin3(J, p.alpha, T, p.gamma, S, p.eps) / lin3(J, p.beta, T, p.delta, S, p.phi);
}

LogReal pattern_between_value(const JCache& J, const SlotPattern& p, LogReal theta) {
    LogSum num, den;
    num.add(J(p.gamma));
    num.add_scaled(theta, J(p.eps));
    den.add(J(p.delta));
    den.add_scaled(theta, J(p.phi));
    return num.total() / den.total();
}

Solver::Solver(GroupLayout layout, SpectralData spectral, GroupParams params)
    : layout_(std::move(layout)), spectral_(std::move(spectral)), params_(std::move(params)) {
    const ValidationReport report = validate(layout_, spectral_, params_);
    if (!report.ok()) {
        std::ostringstream os;
        os << "invalid peakon configuration:";
        for (const auto& v : report.violations) os << "\n  [" << v.code << "] " << v.message;
        throw std::invalid_argument(os.str());
    }

    engine_ = std::make_shared<JEngine>(spectral_, layout_.det_a(), layout_.det_b());

    for (int g = 0; g < layout_.num_x_groups(); ++g)
        x_sums_.push_back(group_sums(params_.x_tau[g], params_.x_sigma[g]));
    for (int g = 0; g < layout_.num_y_groups(); ++g)
        y_sums_.push_back(group_sums(params_.y_tau[g], params_.y_sigma[g]));

    const bool odd = layout_.odd();
    for (int g = 1; g <= layout_.num_x_groups(); ++g)
        x_pat_.push_back(slot_pattern(odd, Side::X, g, layout_.K()));
    for (int g = 1; g <= layout_.num_y_groups(); ++g)
        y_pat_.push_back(slot_pattern(odd, Side::Y, g, layout_.K()));

    LogReal m = LogReal::one(), l = LogReal::one();
    for (double v : spectral_.mu) m *= lp(v);
    for (double v : spectral_.lambda) l *= lp(v);
    m_over_l_ = m / l;
}

const GroupSums& Solver::sums(Side side, int jprime) const {
    return side == Side::X ? x_sums_[jprime - 1] : y_sums_[jprime - 1];
}

void Solver::solve_group(const JCache& J, Side side, int jprime, std::vector<double>& log_pos,
                         std::vector<double>& log_amp) const {
    const bool x_side = side == Side::X;
    const SlotPattern& p = x_side ? x_pat_[jprime - 1] : y_pat_[jprime - 1];
    const GroupSums& sums = x_side ? x_sums_[jprime - 1] : y_sums_[jprime - 1];
    const auto& tau = x_side ? params_.x_tau[jprime - 1] : params_.y_tau[jprime - 1];
    const auto& sigma = x_side ? params_.x_sigma[jprime - 1] : params_.y_sigma[jprime - 1];
    const int n = x_side ? layout_.x_sizes[jprime - 1] : layout_.y_sizes[jprime - 1];
    const LogReal C = lp(spectral_.C), D = lp(spectral_.D);

    log_pos.assign(n, 0.0);
    log_amp.assign(n, 0.0);

    if (n == 1) {
        LogReal pos, amp;
        switch (p.shape) {
            case SlotPattern::Shape::typical:
                pos = J(p.gamma) / J(p.delta);
                amp = J(p.p0) * J(p.delta) / (J(p.g) * J(p.i2));
                break;
            case SlotPattern::Shape::leftmost: {
                LogSum den;
                den.add(J(p.phi));
                den.add_scaled(C, J(p.i2));
                pos = J(p.eps) / den.total();
                amp = m_over_l_ * (J(p.phi) / J(p.i2) + C);
                break;
            }
            case SlotPattern::Shape::rightmost:
                pos = pattern_member_value(J, p, D, LogReal::zero());
                amp = LogReal::one() / J(p.g);
                break;
        }
        log_pos[0] = pos.log();
        log_amp[0] = amp.log();
        return;
    }

    // Per-member coefficients as logs; sigma_0 = 0, R_0 = 0.
    auto T = [&](int i) { return lp(sums.T[i]); };
    auto S = [&](int i) { return lp(sums.S[i]); };
    auto R = [&](int i) { return lp(sums.R[i]); };
    auto sig = [&](int i) { return i == 0 ? LogReal::zero() : lp(sigma[i - 1]); };

    std::vector<LogReal> aden(n);
    for (int i = 0; i <= n - 1; ++i) aden[i] = amp_den(J, p, sig(i), R(i));

    const int first = (p.shape == SlotPattern::Shape::leftmost) ? 2 : 1;
    for (int i = first; i <= n - 1; ++i) {
        const LogReal Ti = T(i), Si = S(i);
        const LogReal gap = lp(i >= 2 ? sigma[i - 1] - sigma[i - 2] : sigma[0]);
        log_pos[i - 1] = pattern_member_value(J, p, Ti, Si).log();
        log_amp[i - 1] = (gap * J(p.p0) * pos_den(J, p, Ti, Si) / (aden[i] * aden[i - 1])).log();
    }

    // Member N: the D-extended member formula in the rightmost group,
    // the sigma-limit form elsewhere.
    {
        const LogReal sN = lp(sigma[n - 2]);
        LogReal pos, amp;
        if (p.shape == SlotPattern::Shape::rightmost) {
            pos = pattern_member_value(J, p, T(n - 1) + D, S(n - 1) + D * sN);
            amp = LogReal::one() / aden[n - 1];
        } else {
            LogSum num, den;
            num.add(J(p.gamma));
            num.add_scaled(sN, J(p.eps));
            den.add(J(p.delta));
            den.add_scaled(sN, J(p.phi));
            const LogReal den_total = den.total();
            pos = num.total() / den_total;
            amp = J(p.p0) * den_total / (J(p.i2) * aden[n - 1]);
        }
        log_pos[n - 1] = pos.log();
        log_amp[n - 1] = amp.log();
    }

    // Leftmost X-group: the first member carries the C-constraint. Its
    // position is the member formula shifted by theta0 = tau_1 M/(sigma_1 C),
    // its amplitude the explicit 1/sigma_1, 1/tau_1, C combination.
    if (p.shape == SlotPattern::Shape::leftmost) {
        LogReal M = LogReal::one();
        for (double v : spectral_.mu) M *= lp(v);
        const LogReal theta0 = lp(tau[0]) * M / (lp(sigma[0]) * C);
        log_pos[0] = pattern_member_value(J, p, T(1) + theta0, theta0 * lp(sigma[0])).log();

        LogSum num, den;
        num.add(J(p.phi));
        num.add_scaled(LogReal::one() / lp(sigma[0]), J(p.delta));
        den.add(J(p.i2));
        den.add_scaled(LogReal::one() / lp(tau[0]), J(p.h));
        log_amp[0] = (m_over_l_ * (num.total() / den.total() + C)).log();
    }
}

ScaledState Solver::solve_scaled(double t) const {
    JCache cache(*engine_, t);
    ScaledState st;
    st.t = t;
    st.log_X.resize(layout_.num_x_groups());
    st.log_Q.resize(layout_.num_x_groups());
    st.log_Y.resize(layout_.num_y_groups());
    st.log_P.resize(layout_.num_y_groups());
    for (int g = 1; g <= layout_.num_x_groups(); ++g)
        solve_group(cache, Side::X, g, st.log_X[g - 1], st.log_Q[g - 1]);
    for (int g = 1; g <= layout_.num_y_groups(); ++g)
        solve_group(cache, Side::Y, g, st.log_Y[g - 1], st.log_P[g - 1]);
    return st;
}

PeakonState Solver::solve(double t) const { return to_physical(solve_scaled(t)); }

Solver Solver::interlacing() const {
    GroupLayout lay;
    lay.x_sizes.assign(layout_.num_x_groups(), 1);
    lay.y_sizes.assign(layout_.num_y_groups(), 1);
    GroupParams par;
    par.x_tau.resize(lay.x_sizes.size());
    par.x_sigma.resize(lay.x_sizes.size());
    par.y_tau.resize(lay.y_sizes.size());
    par.y_sigma.resize(lay.y_sizes.size());

    // The effective peakons of the outermost groups follow interlacing
    // singletons with merged constants: the rightmost group's taus join D
    // (D' = D + T_{N-1}), and mirrored on the left C' = C + M/sigma_1.
    // Inner groups need no adjustment.
    SpectralData sp = spectral_;
    if (layout_.x_sizes.front() >= 2) {
        double M = 1.0;
        for (double v : sp.mu) M *= v;
        sp.C += M / params_.x_sigma.front().front();
    }
    const bool odd = layout_.odd();
    const auto& last_tau = odd ? params_.x_tau.back() : params_.y_tau.back();
    if (!last_tau.empty()) {
        double T = 0.0;
        for (double v : last_tau) T += v;
        sp.D += T;
    }
    return Solver(lay, sp, par);
}

PeakonState to_physical(const ScaledState& scaled) {
    constexpr double half_log2 = 0.34657359027997264;  // ln(2)/2
    PeakonState st;
    st.t = scaled.t;
    auto convert = [&](const std::vector<std::vector<double>>& log_v,
                       const std::vector<std::vector<double>>& log_a,
                       std::vector<std::vector<double>>& pos,
                       std::vector<std::vector<double>>& log_amp) {
        pos.resize(log_v.size());
        log_amp.resize(log_v.size());
        for (std::size_t g = 0; g < log_v.size(); ++g) {
            pos[g].resize(log_v[g].size());
            log_amp[g].resize(log_v[g].size());
            for (std::size_t i = 0; i < log_v[g].size(); ++i) {
                // x = ln(2 X)/2,  m = sqrt(X) Q / sqrt(2).
                pos[g][i] = 0.5 * log_v[g][i] + half_log2;
                log_amp[g][i] = 0.5 * log_v[g][i] + log_a[g][i] - half_log2;
            }
        }
    };
    convert(scaled.log_X, scaled.log_Q, st.x, st.log_m);
    convert(scaled.log_Y, scaled.log_P, st.y, st.log_n);
    return st;
}

EffectivePeakon effective_peakon(const std::vector<double>& pos,
                                 const std::vector<double>& log_amp) {
    if (pos.empty() || pos.size() != log_amp.size())
        throw std::invalid_argument("effective_peakon: empty or mismatched group");
    std::vector<double> plus, minus;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        plus.push_back(log_amp[i] + pos[i]);
        minus.push_back(log_amp[i] - pos[i]);
    }
    const double lp = log_sum_exp(std::move(plus));
    const double lm = log_sum_exp(std::move(minus));
    return {0.5 * (lp - lm), 0.5 * (lp + lm)};
}

}  // namespace gx
