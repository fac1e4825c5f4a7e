#include "gxpeakon/characteristic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gxpeakon/field.hpp"
#include "gxpeakon/validate.hpp"

namespace gx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2 = 0.6931471805599453;

LogReal lp(double v) { return LogReal::from_value(v); }

struct ChainSlot {
    Side side;
    int group;
};

std::vector<ChainSlot> chain(const GroupLayout& lay) {
    std::vector<ChainSlot> out;
    for (int g = 1; g <= lay.num_x_groups(); ++g) {
        out.push_back({Side::X, g});
        if (g <= lay.num_y_groups()) out.push_back({Side::Y, g});
    }
    return out;
}

}  // namespace

Characteristics::Characteristics(const Solver& solver) : solver_(solver) {
    const GroupLayout& lay = solver.layout();
    const GroupParams& par = solver.params();
    const auto slots = chain(lay);
    const double M_over_C = mu_product(solver.spectral()) / solver.spectral().C;
    const double D = solver.spectral().D;

    auto group_size = [&](const ChainSlot& s) {
        return s.side == Side::X ? lay.x_sizes[s.group - 1] : lay.y_sizes[s.group - 1];
    };
    auto tau_of = [&](const ChainSlot& s, int i) {
        return s.side == Side::X ? par.x_tau[s.group - 1][i - 1] : par.y_tau[s.group - 1][i - 1];
    };
    auto sigma_of = [&](const ChainSlot& s, int i) {
        return s.side == Side::X ? par.x_sigma[s.group - 1][i - 1] : par.y_sigma[s.group - 1][i - 1];
    };
    auto shape_of = [&](const ChainSlot& s) {
        return slot_pattern(lay.odd(), s.side, s.group, lay.K()).shape;
    };
    auto theta0_of = [&](const ChainSlot& s) {
        return tau_of(s, 1) * mu_product(solver.spectral()) /
               (sigma_of(s, 1) * solver.spectral().C);
    };

    {
        CharFamily fam;
        fam.region = CharFamily::Region::far_left;
        fam.theta_lo = 0.0;
        fam.theta_hi = kInf;
        fam.upper_target = PeakonRef{Side::X, 1, 1};
        families_.push_back(fam);
    }

    for (std::size_t k = 0; k < slots.size(); ++k) {
        const ChainSlot& s = slots[k];
        const int n = group_size(s);
        const auto shape = shape_of(s);

        for (int i = 1; i <= n - 1; ++i) {
            CharFamily fam;
            fam.region = CharFamily::Region::within;
            fam.side = s.side;
            fam.group = s.group;
            fam.gap = i;
            fam.theta_lo = (shape == SlotPattern::Shape::leftmost && i == 1) ? theta0_of(s) : 0.0;
            if (i <= n - 2)
                fam.theta_hi = tau_of(s, i + 1);
            else
                fam.theta_hi = (shape == SlotPattern::Shape::rightmost) ? D : kInf;
            fam.lower_target = PeakonRef{s.side, s.group, i};
            fam.upper_target = PeakonRef{s.side, s.group, i + 1};
            families_.push_back(fam);
        }

        if (k + 1 < slots.size()) {
            const ChainSlot& right = slots[k + 1];
            const int nr = group_size(right);
            CharFamily fam;
            fam.region = CharFamily::Region::between;
            fam.side = s.side;
            fam.group = s.group;
            if (n >= 2)
                fam.theta_lo = sigma_of(s, n - 1);
            else if (shape == SlotPattern::Shape::leftmost)
                fam.theta_lo = M_over_C;
            else
                fam.theta_lo = 0.0;
            if (nr >= 2)
                fam.theta_hi = tau_of(right, 1);
            else if (k + 2 == slots.size())
                fam.theta_hi = D;  // rightmost group is a singleton
            else
                fam.theta_hi = kInf;
            fam.lower_target = PeakonRef{s.side, s.group, n};
            fam.upper_target = PeakonRef{right.side, right.group, 1};
            families_.push_back(fam);
        }
    }

    {
        CharFamily fam;
        fam.region = CharFamily::Region::far_right;
        fam.theta_lo = 0.0;
        fam.theta_hi = kInf;
        const ChainSlot& last = slots.back();
        fam.lower_target = PeakonRef{last.side, last.group, group_size(last)};
        families_.push_back(fam);
    }
}

LogReal Characteristics::scaled_value(const CharFamily& fam, double theta,
                                      const JCache& cache) const {
    const GroupLayout& lay = solver_.layout();
    switch (fam.region) {
        case CharFamily::Region::within: {
            const SlotPattern p = slot_pattern(lay.odd(), fam.side, fam.group, lay.K());
            const GroupSums& sums = solver_.sums(fam.side, fam.group);
            const int i = fam.gap;
            const double sig_i =
                (fam.side == Side::X ? solver_.params().x_sigma : solver_.params().y_sigma)
                    [fam.group - 1][i - 1];
            return pattern_member_value(cache, p, lp(sums.T[i]) + lp(theta),
                                        lp(sums.S[i]) + lp(theta) * lp(sig_i));
        }
        case CharFamily::Region::between: {
            const SlotPattern p = slot_pattern(lay.odd(), fam.side, fam.group, lay.K());
            return pattern_between_value(cache, p, lp(theta));
        }
        case CharFamily::Region::far_left: {
            std::vector<double> log_pos, log_amp;
            solver_.solve_group(cache, Side::X, 1, log_pos, log_amp);
            // 1/Xi = 1/X_first + 1/theta
            const LogReal first = LogReal::from_log(log_pos.front());
            const LogReal th = lp(theta);
            return first * th / (first + th);
        }
        case CharFamily::Region::far_right: {
            std::vector<double> log_pos, log_amp;
            const bool odd = lay.odd();
            solver_.solve_group(cache, odd ? Side::X : Side::Y,
                                odd ? lay.num_x_groups() : lay.num_y_groups(), log_pos, log_amp);
            return LogReal::from_log(log_pos.back()) + lp(theta);
        }
    }
    throw std::logic_error("unreachable");
}

double Characteristics::xi(const CharFamily& fam, double theta, double t) const {
    if (!(theta >= fam.theta_lo) || !(theta <= fam.theta_hi))
        throw std::domain_error("xi: theta outside the family range");
    const JCache cache(solver_.engine(), t);
    return 0.5 * (scaled_value(fam, theta, cache).log() + kLog2);
}

double Characteristics::xi_at_upper_limit(const CharFamily& fam, double t) const {
    if (std::isfinite(fam.theta_hi)) return xi(fam, fam.theta_hi, t);
    const JCache cache(solver_.engine(), t);
    const GroupLayout& lay = solver_.layout();
    switch (fam.region) {
        case CharFamily::Region::within: {
            // theta -> inf drops the alpha/beta terms.
            const SlotPattern p = slot_pattern(lay.odd(), fam.side, fam.group, lay.K());
            const double sig_i =
                (fam.side == Side::X ? solver_.params().x_sigma : solver_.params().y_sigma)
                    [fam.group - 1][fam.gap - 1];
            return 0.5 * (pattern_between_value(cache, p, lp(sig_i)).log() + kLog2);
        }
        case CharFamily::Region::between: {
            const SlotPattern p = slot_pattern(lay.odd(), fam.side, fam.group, lay.K());
            return 0.5 * ((cache(p.eps) / cache(p.phi)).log() + kLog2);
        }
        case CharFamily::Region::far_left: {
            std::vector<double> log_pos, log_amp;
            solver_.solve_group(cache, Side::X, 1, log_pos, log_amp);
            return 0.5 * (log_pos.front() + kLog2);
        }
        case CharFamily::Region::far_right:
            return kInf;
    }
    throw std::logic_error("unreachable");
}

double Characteristics::residual(const CharFamily& fam, double theta, double t, double h) const {
    const double lo = xi(fam, theta, t - h);
    const double hi = xi(fam, theta, t + h);
    const double mid = xi(fam, theta, t);
    const double slope = (hi - lo) / (2.0 * h);
    const FieldSample f = eval_fields(solver_.solve(t), mid);
    const double rhs = f.u * f.v;
    return std::abs(slope - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace gx
