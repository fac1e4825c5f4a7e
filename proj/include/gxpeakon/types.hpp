#pragma once

#include <string>
#include <vector>

namespace gx {

/// Spectral data parametrizing a multipeakon solution of the Geng-Xue
/// equation: eigenvalues lambda_i, mu_j, residues a_i(0), b_j(0) and the
/// two constants C, D. All entries are strictly positive in the pure
/// peakon sector, and the eigenvalue lists are strictly increasing.
struct SpectralData {
    std::vector<double> lambda;
    std::vector<double> mu;
    std::vector<double> a0;
    std::vector<double> b0;
    double C = 1.0;
    double D = 1.0;
};

/// Group sizes of a non-interlacing configuration. The chain starts with
/// an X-group and alternates X, Y, X, Y, ...; an even layout ends with a
/// Y-group (K groups of each kind), an odd one with an extra X-group.
struct GroupLayout {
    std::vector<int> x_sizes;
    std::vector<int> y_sizes;

    bool odd() const { return x_sizes.size() == y_sizes.size() + 1; }
    /// K as used by the determinant sizes: the number of Y-groups.
    int K() const { return static_cast<int>(y_sizes.size()); }
    int num_x_groups() const { return static_cast<int>(x_sizes.size()); }
    int num_y_groups() const { return static_cast<int>(y_sizes.size()); }
    int total_x() const;
    int total_y() const;
    /// Determinant sizes: A = K in both parities, B = K-1 (even) or K (odd).
    int det_a() const { return K(); }
    int det_b() const { return odd() ? K() : K() - 1; }
    bool all_singletons() const;
};

/// Internal parameters tau, sigma for each group; singleton groups carry
/// empty lists, a group of N peakons carries N-1 of each.
struct GroupParams {
    std::vector<std::vector<double>> x_tau, x_sigma;
    std::vector<std::vector<double>> y_tau, y_sigma;
};

/// Prefix sums T_i, S_i and R_i = sigma_i T_i - S_i for one group,
/// indexed 0..N-1 with T_0 = S_0 = R_0 = 0 and sigma_0 = 0.
struct GroupSums {
    std::vector<double> T, S, R;
};

/// R_i is accumulated as sum_a tau_a (sigma_i - sigma_{a-1}), which has
/// only positive terms; the algebraically equal sigma_i T_i - S_i would
/// cancel.
GroupSums group_sums(const std::vector<double>& tau, const std::vector<double>& sigma);

/// Physical peakon configuration at one time: positions and log-amplitudes,
/// grouped as in the layout. Amplitudes are kept as logs because they grow
/// or decay like exp(c t).
struct PeakonState {
    std::vector<std::vector<double>> x, log_m;
    std::vector<std::vector<double>> y, log_n;
    double t = 0.0;

    std::vector<double> flat_x() const;
    std::vector<double> flat_y() const;
    std::vector<double> flat_log_m() const;
    std::vector<double> flat_log_n() const;
    /// All positions interleaved in chain order (x-group 1, y-group 1, ...).
    std::vector<double> chain_positions() const;
};

enum class Side { X, Y };

/// Identifies one peakon: group side, group index (1-based from the left)
/// and member index within the group (1-based).
struct PeakonRef {
    Side side;
    int group;
    int member;
};

std::string to_string(const PeakonRef& ref);

/// True when the values never genuinely reverse: each gap is positive or
/// closed to within `slack`. Trajectories that approach a common
/// asymptotic line merge below double resolution at large |t|, so exact
/// strict comparisons stop being meaningful there; a real crossing would
/// show up as an O(1) negative gap.
bool chain_ordered(const std::vector<double>& v, double slack = 1e-9);

}  // namespace gx
