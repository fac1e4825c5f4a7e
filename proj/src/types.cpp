#include "gxpeakon/types.hpp"

#include <numeric>

namespace gx {

int GroupLayout::total_x() const {
    return std::accumulate(x_sizes.begin(), x_sizes.end(), 0);
}

int GroupLayout::total_y() const {
    return std::accumulate(y_sizes.begin(), y_sizes.end(), 0);
}

bool GroupLayout::all_singletons() const {
    for (int n : x_sizes)
        if (n != 1) return false;
    for (int n : y_sizes)
        if (n != 1) return false;
    return true;
}

GroupSums group_sums(const std::vector<double>& tau, const std::vector<double>& sigma) {
    const std::size_t n = tau.size();
    GroupSums s;
    s.T.assign(n + 1, 0.0);
    s.S.assign(n + 1, 0.0);
    s.R.assign(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        s.T[i] = s.T[i - 1] + tau[i - 1];
        s.S[i] = s.S[i - 1] + (i >= 2 ? tau[i - 1] * sigma[i - 2] : 0.0);
        double r = 0.0;
        for (std::size_t a = 1; a <= i; ++a) {
            const double sigma_prev = (a >= 2) ? sigma[a - 2] : 0.0;
            r += tau[a - 1] * (sigma[i - 1] - sigma_prev);
        }
        s.R[i] = r;
    }
    return s;
}

static std::vector<double> flatten(const std::vector<std::vector<double>>& v) {
    std::vector<double> out;
    for (const auto& g : v) out.insert(out.end(), g.begin(), g.end());
    return out;
}

std::vector<double> PeakonState::flat_x() const { return flatten(x); }
std::vector<double> PeakonState::flat_y() const { return flatten(y); }
std::vector<double> PeakonState::flat_log_m() const { return flatten(log_m); }
std::vector<double> PeakonState::flat_log_n() const { return flatten(log_n); }

std::vector<double> PeakonState::chain_positions() const {
    std::vector<double> out;
    const std::size_t ng = std::max(x.size(), y.size());
    for (std::size_t g = 0; g < ng; ++g) {
        if (g < x.size()) out.insert(out.end(), x[g].begin(), x[g].end());
        if (g < y.size()) out.insert(out.end(), y[g].begin(), y[g].end());
    }
    return out;
}

std::string to_string(const PeakonRef& ref) {
    return std::string(ref.side == Side::X ? "x" : "y") + "[" + std::to_string(ref.group) +
           "." + std::to_string(ref.member) + "]";
}

bool chain_ordered(const std::vector<double>& v, double slack) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] - v[i - 1] > -slack)) return false;
    return true;
}

}  // namespace gx
