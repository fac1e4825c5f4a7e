#include "gxpeakon/field.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gx {

FieldSample eval_fields(const PeakonState& state, double xq) {
    FieldSample f;
    for (std::size_t g = 0; g < state.x.size(); ++g)
        for (std::size_t i = 0; i < state.x[g].size(); ++i) {
            const double d = state.x[g][i] - xq;
            const double term = std::exp(state.log_m[g][i] - std::abs(d));
            f.u += term;
            f.ux += (d > 0 ? 1.0 : d < 0 ? -1.0 : 0.0) * term;
        }
    for (std::size_t g = 0; g < state.y.size(); ++g)
        for (std::size_t i = 0; i < state.y[g].size(); ++i) {
            const double d = state.y[g][i] - xq;
            const double term = std::exp(state.log_n[g][i] - std::abs(d));
            f.v += term;
            f.vx += (d > 0 ? 1.0 : d < 0 ? -1.0 : 0.0) * term;
        }
    return f;
}

namespace {

struct ChainPeakon {
    double pos;
    double log_amp;
    int rank;
    bool is_x;
};

// Peakons in chain order (x-group 1, y-group 1, x-group 2, ...), which
// for a valid state is the spatial order.
std::vector<ChainPeakon> chain_peakons(const PeakonState& st) {
    std::vector<ChainPeakon> out;
    const std::size_t ng = std::max(st.x.size(), st.y.size());
    int rank = 0;
    for (std::size_t g = 0; g < ng; ++g) {
        if (g < st.x.size())
            for (std::size_t i = 0; i < st.x[g].size(); ++i)
                out.push_back({st.x[g][i], st.log_m[g][i], rank++, true});
        if (g < st.y.size())
            for (std::size_t i = 0; i < st.y[g].size(); ++i)
                out.push_back({st.y[g][i], st.log_n[g][i], rank++, false});
    }
    return out;
}

FieldSample fields_at_peakon(const std::vector<ChainPeakon>& all, const ChainPeakon& q) {
    FieldSample f;
    for (const auto& p : all) {
        const double d = p.pos - q.pos;
        const double term = std::exp(p.log_amp - std::abs(d));
        const double sign = d > 0   ? 1.0
                            : d < 0 ? -1.0
                            : (p.rank > q.rank ? 1.0 : p.rank < q.rank ? -1.0 : 0.0);
        if (p.is_x) {
            f.u += term;
            f.ux += sign * term;
        } else {
            f.v += term;
            f.vx += sign * term;
        }
    }
    return f;
}

}  // namespace

OdeRates ode_rhs(const PeakonState& state, bool resolve_ties_by_chain_order) {
    if (!resolve_ties_by_chain_order) {
        for (const auto& gx : state.x)
            for (double xi : gx)
                for (const auto& gy : state.y)
                    for (double yj : gy)
                        if (xi == yj)
                            throw std::domain_error(
                                "ode_rhs: overlapping x and y peakon positions");
    }

    const auto all = chain_peakons(state);
    OdeRates r;
    r.dx.resize(state.x.size());
    r.dlog_m.resize(state.x.size());
    r.dy.resize(state.y.size());
    r.dlog_n.resize(state.y.size());
    std::size_t k = 0;
    const std::size_t ng = std::max(state.x.size(), state.y.size());
    for (std::size_t g = 0; g < ng; ++g) {
        if (g < state.x.size()) {
            r.dx[g].resize(state.x[g].size());
            r.dlog_m[g].resize(state.x[g].size());
            for (std::size_t i = 0; i < state.x[g].size(); ++i, ++k) {
                const FieldSample f = fields_at_peakon(all, all[k]);
                r.dx[g][i] = f.u * f.v;
                r.dlog_m[g][i] = f.u * f.vx - 2.0 * f.ux * f.v;
            }
        }
        if (g < state.y.size()) {
            r.dy[g].resize(state.y[g].size());
            r.dlog_n[g].resize(state.y[g].size());
            for (std::size_t i = 0; i < state.y[g].size(); ++i, ++k) {
                const FieldSample f = fields_at_peakon(all, all[k]);
                r.dy[g][i] = f.u * f.v;
                r.dlog_n[g][i] = f.ux * f.v - 2.0 * f.u * f.vx;
            }
        }
    }
    return r;
}

namespace {

Eigen::VectorXd pack(const PeakonState& st) {
    std::vector<double> all;
    for (const auto* part : {&st.x, &st.y, &st.log_m, &st.log_n})
        for (const auto& g : *part) all.insert(all.end(), g.begin(), g.end());
    return Eigen::Map<const Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

PeakonState unpack(const Eigen::VectorXd& z, const PeakonState& shape, double t) {
    PeakonState st = shape;
    st.t = t;
    Eigen::Index k = 0;
    for (auto* part : {&st.x, &st.y, &st.log_m, &st.log_n})
        for (auto& g : *part)
            for (double& v : g) v = z[k++];
    return st;
}

Eigen::VectorXd rhs_vector(const Eigen::VectorXd& z, const PeakonState& shape) {
    const PeakonState st = unpack(z, shape, shape.t);
    const OdeRates r = ode_rhs(st, true);
    std::vector<double> all;
    for (const auto* part : {&r.dx, &r.dy, &r.dlog_m, &r.dlog_n})
        for (const auto& g : *part) all.insert(all.end(), g.begin(), g.end());
    return Eigen::Map<const Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

}  // namespace

PeakonState integrate(const PeakonState& state0, double t1, int steps) {
    if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
    const double h = (t1 - state0.t) / steps;
    Eigen::VectorXd z = pack(state0);
    double t = state0.t;
    for (int s = 0; s < steps; ++s) {
        const Eigen::VectorXd k1 = rhs_vector(z, state0);
        const Eigen::VectorXd k2 = rhs_vector(z + 0.5 * h * k1, state0);
        const Eigen::VectorXd k3 = rhs_vector(z + 0.5 * h * k2, state0);
        const Eigen::VectorXd k4 = rhs_vector(z + h * k3, state0);
        z += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = state0.t + (s + 1) * h;
        if (!chain_ordered(unpack(z, state0, t).chain_positions()))
            throw std::runtime_error("integrate: peakon ordering violated at t = " +
                                     std::to_string(t) + " (step too coarse?)");
    }
    return unpack(z, state0, t1);
}

double ode_residual(const Solver& solver, double t, double h) {
    const PeakonState mid = solver.solve(t);
    const PeakonState lo = solver.solve(t - h);
    const PeakonState hi = solver.solve(t + h);
    const OdeRates rhs = ode_rhs(mid, true);

    double worst = 0.0;
    auto check = [&](const std::vector<std::vector<double>>& a,
                     const std::vector<std::vector<double>>& b,
                     const std::vector<std::vector<double>>& r) {
        for (std::size_t g = 0; g < r.size(); ++g)
            for (std::size_t i = 0; i < r[g].size(); ++i) {
                const double diff = (b[g][i] - a[g][i]) / (2.0 * h);
                worst = std::max(worst, std::abs(diff - r[g][i]) / (1.0 + std::abs(r[g][i])));
            }
    };
    check(lo.x, hi.x, rhs.dx);
    check(lo.y, hi.y, rhs.dy);
    check(lo.log_m, hi.log_m, rhs.dlog_m);
    check(lo.log_n, hi.log_n, rhs.dlog_n);
    return worst;
}

}  // namespace gx
