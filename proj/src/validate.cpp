#include "gxpeakon/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gx {

bool ValidationReport::has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

double mu_product(const SpectralData& spectral) {
    double m = 1.0;
    for (double v : spectral.mu) m *= v;
    return m;
}

namespace {

class Checker {
public:
    Checker(const GroupLayout& layout, const SpectralData& sp, const GroupParams& pr)
        : layout_(layout), sp_(sp), pr_(pr) {}

    ValidationReport run() {
        check_structure();
        if (report_.ok()) {
            check_spectral();
            check_group_params();
            check_adjacency();
            check_outer_constraints();
        }
        return std::move(report_);
    }

private:
    void add(const std::string& code, const std::string& message) {
        report_.violations.push_back({code, message});
    }

    void check_structure() {
        const std::size_t kx = layout_.x_sizes.size();
        const std::size_t ky = layout_.y_sizes.size();
        if (kx == 0 || ky == 0) {
            add("structure/layout-empty", "need at least one X-group and one Y-group");
            return;
        }
        if (kx != ky && kx != ky + 1) {
            std::ostringstream os;
            os << "groups must alternate starting with X: got " << kx << " X-groups and "
               << ky << " Y-groups";
            add("structure/alternation", os.str());
            return;
        }
        for (std::size_t g = 0; g < kx; ++g)
            if (layout_.x_sizes[g] < 1)
                add("structure/group-size", "X-group " + std::to_string(g + 1) + " has size < 1");
        for (std::size_t g = 0; g < ky; ++g)
            if (layout_.y_sizes[g] < 1)
                add("structure/group-size", "Y-group " + std::to_string(g + 1) + " has size < 1");

        const std::size_t want_lambda = ky;
        const std::size_t want_mu = layout_.odd() ? ky : ky - 1;
        if (sp_.lambda.size() != want_lambda)
            add("structure/lambda-count", "expected " + std::to_string(want_lambda) +
                                              " lambda eigenvalues, got " +
                                              std::to_string(sp_.lambda.size()));
        if (sp_.mu.size() != want_mu)
            add("structure/mu-count", "expected " + std::to_string(want_mu) +
                                          " mu eigenvalues, got " + std::to_string(sp_.mu.size()));
        if (sp_.a0.size() != want_lambda)
            add("structure/a0-count", "expected " + std::to_string(want_lambda) +
                                          " residues a(0), got " + std::to_string(sp_.a0.size()));
        if (sp_.b0.size() != want_mu)
            add("structure/b0-count", "expected " + std::to_string(want_mu) +
                                          " residues b(0), got " + std::to_string(sp_.b0.size()));

        check_param_shape(Side::X, layout_.x_sizes, pr_.x_tau, pr_.x_sigma);
        check_param_shape(Side::Y, layout_.y_sizes, pr_.y_tau, pr_.y_sigma);
    }

    void check_param_shape(Side side, const std::vector<int>& sizes,
                           const std::vector<std::vector<double>>& tau,
                           const std::vector<std::vector<double>>& sigma) {
        const char* name = side == Side::X ? "X" : "Y";
        if (tau.size() != sizes.size() || sigma.size() != sizes.size()) {
            add("structure/params-count", std::string(name) + "-side tau/sigma lists must have one entry per group");
            return;
        }
        for (std::size_t g = 0; g < sizes.size(); ++g) {
            const std::size_t want = static_cast<std::size_t>(sizes[g] - 1);
            if (tau[g].size() != want)
                add("structure/tau-count", std::string(name) + "-group " + std::to_string(g + 1) +
                                               ": expected " + std::to_string(want) + " tau, got " +
                                               std::to_string(tau[g].size()));
            if (sigma[g].size() != want)
                add("structure/sigma-count", std::string(name) + "-group " + std::to_string(g + 1) +
                                                 ": expected " + std::to_string(want) +
                                                 " sigma, got " + std::to_string(sigma[g].size()));
        }
    }

    void check_eigenvalue_list(const char* code, const char* name,
                               const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double prev = (i == 0) ? 0.0 : v[i - 1];
            if (!(v[i] > prev)) {
                std::ostringstream os;
                os << name << " must satisfy 0 < " << name << "_1 < " << name << "_2 < ...; entry "
                   << (i + 1) << " = " << v[i] << " breaks it";
                add(code, os.str());
            }
        }
    }

    void check_spectral() {
        check_eigenvalue_list("spectral/lambda-order", "lambda", sp_.lambda);
        check_eigenvalue_list("spectral/mu-order", "mu", sp_.mu);
        for (std::size_t i = 0; i < sp_.a0.size(); ++i)
            if (!(sp_.a0[i] > 0.0))
                add("spectral/residue-positive", "a0[" + std::to_string(i + 1) + "] must be > 0");
        for (std::size_t i = 0; i < sp_.b0.size(); ++i)
            if (!(sp_.b0[i] > 0.0))
                add("spectral/residue-positive", "b0[" + std::to_string(i + 1) + "] must be > 0");
        if (!(sp_.C > 0.0)) add("spectral/CD-positive", "C must be > 0");
        if (!(sp_.D > 0.0)) add("spectral/CD-positive", "D must be > 0");

        // Conditioning: formulas contain (lambda_a - lambda_b)^2 factors.
        double max_ev = 0.0, min_gap = std::numeric_limits<double>::infinity();
        auto scan = [&](const std::vector<double>& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                max_ev = std::max(max_ev, std::abs(v[i]));
                if (i > 0) min_gap = std::min(min_gap, v[i] - v[i - 1]);
            }
        };
        scan(sp_.lambda);
        scan(sp_.mu);
        if (std::isfinite(min_gap) && min_gap < 1e-9 * max_ev)
            report_.warnings.push_back("eigenvalue gap below 1e-9 of the largest eigenvalue; "
                                       "results may be poorly conditioned");
    }

    void check_group_side(Side side, const std::vector<std::vector<double>>& tau,
                          const std::vector<std::vector<double>>& sigma) {
        const char* name = side == Side::X ? "X" : "Y";
        for (std::size_t g = 0; g < tau.size(); ++g) {
            for (std::size_t i = 0; i < tau[g].size(); ++i)
                if (!(tau[g][i] > 0.0))
                    add("params/tau-positive", std::string(name) + "-group " + std::to_string(g + 1) +
                                                   ": tau_" + std::to_string(i + 1) + " must be > 0");
            for (std::size_t i = 0; i < sigma[g].size(); ++i) {
                const double prev = (i == 0) ? 0.0 : sigma[g][i - 1];
                if (!(sigma[g][i] > prev))
                    add("params/sigma-order", std::string(name) + "-group " + std::to_string(g + 1) +
                                                  ": need 0 < sigma_1 < sigma_2 < ...; sigma_" +
                                                  std::to_string(i + 1) + " breaks it");
            }
        }
    }

    void check_group_params() {
        check_group_side(Side::X, pr_.x_tau, pr_.x_sigma);
        check_group_side(Side::Y, pr_.y_tau, pr_.y_sigma);
    }

    // Last sigma of a non-singleton group must stay below the first tau of
    // a non-singleton right neighbour.
    void check_adjacency() {
        const int kx = layout_.num_x_groups();
        const int ky = layout_.num_y_groups();
        for (int g = 1; g <= ky; ++g) {
            // X-group g vs Y-group g.
            if (layout_.x_sizes[g - 1] >= 2 && layout_.y_sizes[g - 1] >= 2) {
                const double sig = pr_.x_sigma[g - 1].back();
                const double tau = pr_.y_tau[g - 1].front();
                if (!(sig < tau))
                    add("params/sigma-tau-adjacent",
                        "last sigma of X-group " + std::to_string(g) +
                            " must be < first tau of Y-group " + std::to_string(g));
            }
            // Y-group g vs X-group g+1.
            if (g + 1 <= kx && layout_.y_sizes[g - 1] >= 2 && layout_.x_sizes[g] >= 2) {
                const double sig = pr_.y_sigma[g - 1].back();
                const double tau = pr_.x_tau[g].front();
                if (!(sig < tau))
                    add("params/sigma-tau-adjacent",
                        "last sigma of Y-group " + std::to_string(g) +
                            " must be < first tau of X-group " + std::to_string(g + 1));
            }
        }
    }

    void check_outer_constraints() {
        const bool odd = layout_.odd();
        const int kx = layout_.num_x_groups();
        const int ky = layout_.num_y_groups();
        const double M = mu_product(sp_);

        // 1+1 interlacing merges the C and D constraints into CD > 1.
        if (!odd && kx == 1 && layout_.x_sizes[0] == 1 && layout_.y_sizes[0] == 1) {
            if (!(sp_.C * sp_.D > 1.0))
                add("spectral/CD-product", "the 1+1 interlacing configuration requires CD > 1");
            return;
        }

        // Rightmost group a singleton next to a non-singleton: sigma_last < D.
        if (!odd) {
            if (layout_.y_sizes[ky - 1] == 1 && layout_.x_sizes[kx - 1] >= 2) {
                const double sig = pr_.x_sigma[kx - 1].back();
                if (!(sig < sp_.D))
                    add("params/sigma-D",
                        "last sigma of the rightmost X-group must be < D (singleton Y to its right)");
            }
        } else {
            if (layout_.x_sizes[kx - 1] == 1 && layout_.y_sizes[ky - 1] >= 2) {
                const double sig = pr_.y_sigma[ky - 1].back();
                if (!(sig < sp_.D))
                    add("params/sigma-D",
                        "last sigma of the rightmost Y-group must be < D (singleton X to its right)");
            }
        }

        // Leftmost constraints involving C.
        const int n1x = layout_.x_sizes[0];
        if (n1x == 1 && layout_.y_sizes[0] >= 2) {
            const double tau1 = pr_.y_tau[0].front();
            if (!(M < sp_.C * tau1))
                add("params/C-simpler",
                    "leftmost X singleton next to a Y-group requires M < C * tau^Y_{1,1}");
        } else if (n1x >= 3) {
            const double tau1 = pr_.x_tau[0][0];
            const double tau2 = pr_.x_tau[0][1];
            const double sig1 = pr_.x_sigma[0][0];
            if (!(tau1 * M < sp_.C * sig1 * tau2))
                add("params/C-general",
                    "leftmost X-group with >= 3 peakons requires tau_1 * M < C * sigma_1 * tau_2");
        }
        // n1x == 2: C > 0 is the only constraint.
    }

    const GroupLayout& layout_;
    const SpectralData& sp_;
    const GroupParams& pr_;
    ValidationReport report_;
};

}  // namespace

ValidationReport validate(const GroupLayout& layout, const SpectralData& spectral,
                          const GroupParams& params) {
    return Checker(layout, spectral, params).run();
}

}  // namespace gx
