#include "gxpeakon/asymptote.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace gx {

namespace {

constexpr double kLog2 = 0.6931471805599453;

// Accessors for the theorem coefficients, all 1-based and in log form.
// Range products and Psi ratios over empty ranges are 1 (log 0).
struct Ctx {
    const Solver& solver;
    const SpectralData& sp;
    int K;
    bool odd;

    explicit Ctx(const Solver& s)
        : solver(s), sp(s.spectral()), K(s.layout().K()), odd(s.layout().odd()) {}

    double lam(int j) const { return sp.lambda[j - 1]; }
    double mu(int j) const { return sp.mu[j - 1]; }
    double lga(int j) const { return std::log(sp.a0[j - 1]); }
    double lgb(int j) const { return std::log(sp.b0[j - 1]); }
    double lgC() const { return std::log(sp.C); }
    double lgD() const { return std::log(sp.D); }

    double lg_lam(int a, int b) const {
        double s = 0.0;
        for (int j = a; j <= b; ++j) s += std::log(lam(j));
        return s;
    }
    double lg_mu(int a, int b) const {
        double s = 0.0;
        for (int j = a; j <= b; ++j) s += std::log(mu(j));
        return s;
    }
    double lgL() const { return lg_lam(1, static_cast<int>(sp.lambda.size())); }
    double lgM() const { return lg_mu(1, static_cast<int>(sp.mu.size())); }

    static std::uint32_t range_mask(int a, int b) {
        if (a > b) return 0;
        return ((b - a + 1) >= 32 ? ~0u : ((1u << (b - a + 1)) - 1u)) << (a - 1);
    }

    /// log Psi_{[la,lb][ma,mb]}.
    double lg_psi(int la, int lb, int ma, int mb) const {
        return solver.engine().psi(range_mask(la, lb), range_mask(ma, mb)).log();
    }

    const GroupSums& sums(Side side, int g) const { return solver.sums(side, g); }
    double tau(Side side, int g, int i) const {
        const auto& v = side == Side::X ? solver.params().x_tau : solver.params().y_tau;
        return v[g - 1][i - 1];
    }
    double sigma(Side side, int g, int i) const {
        if (i == 0) return 0.0;
        const auto& v = side == Side::X ? solver.params().x_sigma : solver.params().y_sigma;
        return v[g - 1][i - 1];
    }
    int size(Side side, int g) const {
        return side == Side::X ? solver.layout().x_sizes[g - 1] : solver.layout().y_sizes[g - 1];
    }
};

struct Line {
    double c = 0.0;
    double d = 0.0;
    bool degenerate = false;
};

Line line(double c, double d) { return {c, d, false}; }
Line const_line(double d) { return {0.0, d, true}; }

// ---------------------------------------------------------------------
// Even case (B = K-1). Positions.
// ---------------------------------------------------------------------

// X-singleton at slot g (from the left); jr = K+1-g counts from the right.
// For K = 1 the lines are exact and identical in both directions.
Line even_pos_x_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (K == 1) dir = Direction::plus_inf;
    if (dir == Direction::plus_inf) {
        if (g == 1)
            return line(0.5 / c.lam(K),
                        0.5 * (kLog2 + c.lga(K) + c.lg_psi(1, K, 1, K - 1) - c.lgC() -
                               c.lg_lam(1, K - 1) - c.lg_psi(1, K - 1, 1, K - 1)));
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.lam(j) + 1.0 / c.mu(j)),
                    0.5 * (kLog2 + c.lga(j) + c.lgb(j) + c.lg_psi(1, j, 1, j) -
                           c.lg_lam(1, j - 1) - c.lg_mu(1, j - 1) - c.lg_psi(1, j - 1, 1, j - 1)));
    }
    if (g == 1)
        return line(0.5 * (1.0 / c.lam(1) + 1.0 / c.mu(1)),
                    0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, K, 1, K - 1) -
                           c.lg_lam(2, K) - c.lg_mu(2, K - 1) - c.lg_psi(2, K, 2, K - 1)));
    return line(0.5 * (1.0 / c.lam(g) + 1.0 / c.mu(g - 1)),
                0.5 * (kLog2 + c.lga(g) + c.lgb(g - 1) + c.lg_psi(g, K, g - 1, K - 1) -
                       c.lg_lam(g + 1, K) - c.lg_mu(g, K - 1) - c.lg_psi(g + 1, K, g, K - 1)));
}

Line even_pos_y_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (K == 1) dir = Direction::minus_inf;
    if (dir == Direction::plus_inf) {
        if (g == K)  // rightmost
            return line(0.5 * (1.0 / c.lam(1) + 1.0 / c.mu(1)),
                        0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, 1, 1, 1)));
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.mu(j - 1) + 1.0 / c.lam(j)),
                    0.5 * (kLog2 + c.lga(j) + c.lgb(j - 1) + c.lg_psi(1, j, 1, j - 1) -
                           c.lg_lam(1, j - 1) - c.lg_mu(1, j - 2) - c.lg_psi(1, j - 1, 1, j - 2)));
    }
    if (g == K) return line(0.5 / c.lam(K), 0.5 * (kLog2 + c.lgD() + c.lga(K)));
    return line(0.5 * (1.0 / c.lam(g) + 1.0 / c.mu(g)),
                0.5 * (kLog2 + c.lga(g) + c.lgb(g) + c.lg_psi(g, K, g, K - 1) -
                       c.lg_lam(g + 1, K) - c.lg_mu(g + 1, K - 1) - c.lg_psi(g + 1, K, g + 1, K - 1)));
}

Line even_pos_group(const Ctx& c, Side side, int g, int i, Direction dir) {
    const int K = c.K;
    const int N = c.size(side, g);
    const auto& sums = c.sums(side, g);
    const double sig_last = c.sigma(side, g, N - 1);

    if (side == Side::X) {
        if (g == 1) {  // leftmost X-group
            if (dir == Direction::plus_inf) {
                if (i == 1)
                    return const_line(0.5 * (kLog2 + std::log(c.tau(side, 1, 1)) - c.lgC() - c.lgL()));
                if (i < N)
                    return const_line(0.5 * (kLog2 + std::log(sums.S[i]) - c.lgL() - c.lgM()));
                return line(0.5 / c.lam(K),
                            0.5 * (kLog2 + std::log(sig_last) + c.lga(K) + c.lg_psi(1, K, 1, K - 1) -
                                   c.lg_lam(1, K - 1) - c.lgM() - c.lg_psi(1, K - 1, 1, K - 1)));
            }
            if (K == 1) {  // the only X-group
                if (i == 1)
                    return line(0.5 / c.lam(1),
                                0.5 * (kLog2 + std::log(c.sigma(side, 1, 1)) + c.lga(1) -
                                       std::log1p(c.sp.C * c.sigma(side, 1, 1))));
                if (i < N)
                    return line(0.5 / c.lam(1),
                                0.5 * (kLog2 + std::log(sums.S[i] / sums.T[i]) + c.lga(1)));
                return line(0.5 / c.lam(1), 0.5 * (kLog2 + std::log(sig_last) + c.lga(1)));
            }
            return even_pos_x_singleton(c, 1, dir);  // all members share the singleton line
        }
        if (dir == Direction::plus_inf) {
            // members 1..N-1 ride the left-neighbour Y-singleton line
            if (i < N) return even_pos_y_singleton(c, g - 1, dir);
            return even_pos_x_singleton(c, g, dir);
        }
        if (g == K && K >= 2) {  // rightmost X-group at -inf
            if (i == 1) return even_pos_x_singleton(c, K, dir);
            if (i < N)
                return line(0.5 / c.lam(K),
                            0.5 * (kLog2 + std::log(sums.S[i] / sums.T[i]) + c.lga(K)));
            return line(0.5 / c.lam(K), 0.5 * (kLog2 + std::log(sig_last) + c.lga(K)));
        }
        if (i == 1) return even_pos_x_singleton(c, g, dir);
        return even_pos_y_singleton(c, g, dir);
    }

    // Y-groups.
    if (g == K) {  // rightmost Y-group
        if (dir == Direction::plus_inf) {
            if (K == 1) {
                const double t_ext = (i < N) ? sums.T[i] : sums.T[N - 1] + c.sp.D;
                return line(0.5 / c.lam(1), 0.5 * (kLog2 + std::log(t_ext) + c.lga(1)));
            }
            return even_pos_y_singleton(c, K, dir);  // all members, same line
        }
        if (i == 1)
            return line(0.5 / c.lam(K), 0.5 * (kLog2 + std::log(c.tau(side, g, 1)) + c.lga(K)));
        if (i < N) return const_line(0.5 * (kLog2 + std::log(sums.S[i])));
        return const_line(0.5 * (kLog2 + std::log(sums.S[N - 1] + c.sp.D * sig_last)));
    }
    if (dir == Direction::plus_inf) {
        if (g == 1 && K >= 2) {  // leftmost Y-group: parallel T_i lines
            if (i < N)
                return line(0.5 / c.lam(K),
                            0.5 * (kLog2 + std::log(sums.T[i]) + c.lga(K) + c.lg_psi(1, K, 1, K - 1) -
                                   c.lg_lam(1, K - 1) - c.lgM() - c.lg_psi(1, K - 1, 1, K - 1)));
            return even_pos_y_singleton(c, 1, dir);
        }
        if (i < N) return even_pos_x_singleton(c, g, dir);
        return even_pos_y_singleton(c, g, dir);
    }
    if (i == 1) return even_pos_y_singleton(c, g, dir);
    return even_pos_x_singleton(c, g + 1, dir);
}

// ---------------------------------------------------------------------
// Even case. Amplitudes.
// ---------------------------------------------------------------------

Line even_amp_x_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (K == 1) dir = Direction::plus_inf;
    const Line p = even_pos_x_singleton(c, g, dir);
    if (dir == Direction::plus_inf) {
        if (g == 1) return line(p.c, p.d + c.lgC() + c.lgM() - kLog2 - c.lgL());
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.lam(j) - 1.0 / c.mu(j)),
                    p.d + 2.0 * c.lg_mu(1, j - 1) + c.lg_psi(1, j, 1, j - 1) - kLog2 - c.lgb(j) -
                        c.lg_lam(1, j) - c.lg_psi(1, j, 1, j));
    }
    if (g == 1)
        return line(0.5 * (1.0 / c.lam(1) - 1.0 / c.mu(1)),
                    p.d + c.lg_mu(2, K - 1) + c.lgM() + c.lg_psi(2, K, 2, K - 1) - kLog2 - c.lgb(1) -
                        c.lgL() - c.lg_psi(2, K, 1, K - 1));
    return line(0.5 * (1.0 / c.lam(g) - 1.0 / c.mu(g - 1)),
                p.d + 2.0 * c.lg_mu(g, K - 1) + c.lg_psi(g, K, g, K - 1) - kLog2 - c.lgb(g - 1) -
                    c.lg_lam(g, K) - c.lg_psi(g, K, g - 1, K - 1));
}

Line even_amp_y_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (K == 1) dir = Direction::minus_inf;
    const Line p = even_pos_y_singleton(c, g, dir);
    if (dir == Direction::plus_inf) {
        if (g == K)
            return line(0.5 * (1.0 / c.mu(1) - 1.0 / c.lam(1)), p.d - kLog2 - c.lga(1));
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.mu(j - 1) - 1.0 / c.lam(j)),
                    p.d + 2.0 * c.lg_lam(1, j - 1) + c.lg_psi(1, j - 1, 1, j - 1) - kLog2 - c.lga(j) -
                        c.lg_mu(1, j - 1) - c.lg_psi(1, j, 1, j - 1));
    }
    if (g == K) return line(-0.5 / c.lam(K), p.d - kLog2 - c.lga(K));
    return line(0.5 * (1.0 / c.mu(g) - 1.0 / c.lam(g)),
                p.d + 2.0 * c.lg_lam(g + 1, K) + c.lg_psi(g + 1, K, g, K - 1) - kLog2 - c.lga(g) -
                    c.lg_mu(g, K - 1) - c.lg_psi(g, K, g, K - 1));
}

Line even_amp_group(const Ctx& c, Side side, int g, int i, Direction dir) {
    const int K = c.K;
    const int N = c.size(side, g);
    const auto& sums = c.sums(side, g);
    const double dsig = c.sigma(side, g, i) - c.sigma(side, g, i - 1);
    const double sig_last = c.sigma(side, g, N - 1);

    if (side == Side::X) {
        if (g == 1) {  // leftmost X-group
            if (dir == Direction::plus_inf) {
                const Line p = even_pos_group(c, side, g, i, dir);
                if (i == 1) return {p.c, p.d + c.lgC() + c.lgM() - kLog2 - c.lgL(), p.degenerate};
                if (i < N)
                    return {p.c,
                            p.d + std::log(dsig) + 2.0 * c.lgM() - kLog2 -
                                std::log(c.sigma(side, g, i)) - std::log(c.sigma(side, g, i - 1)) -
                                c.lgL(),
                            p.degenerate};
                return line(p.c, p.d + 2.0 * c.lgM() - kLog2 - std::log(sig_last) - c.lgL());
            }
            if (K == 1) {  // the only X-group at -inf
                const Line p = even_pos_group(c, side, g, i, dir);
                const double sig1 = c.sigma(side, 1, 1);
                if (i == 1)
                    return line(p.c, p.d + std::log1p(c.sp.C * sig1) - kLog2 -
                                          std::log(c.lam(1)) - std::log(sig1));
                if (i < N)
                    return line(1.5 / c.lam(1), p.d + std::log(dsig) + std::log(sums.T[i]) +
                                                    c.lga(1) - kLog2 - std::log(sums.R[i]) -
                                                    std::log(sums.R[i - 1]));
                return line(1.5 / c.lam(1),
                            p.d + c.lga(1) - kLog2 - std::log(sums.R[N - 1]));
            }
            if (i == 1) return even_amp_x_singleton(c, 1, dir);
            const Line p2 = even_pos_x_singleton(c, 1, dir);
            const double shared = std::log(c.sp.a0[0]) + c.lgM() + c.lg_mu(2, K - 1) - c.lgb(1) -
                                  c.lg_lam(2, K) + c.lg_psi(1, K, 1, K - 1) +
                                  c.lg_psi(2, K, 2, K - 1) - kLog2 -
                                  2.0 * c.lg_psi(2, K, 1, K - 1);
            const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) -
                                                std::log(sums.R[i]) - std::log(sums.R[i - 1])
                                          : std::log(sig_last) - std::log(sums.R[N - 1]);
            return line(0.5 * (3.0 / c.lam(1) - 1.0 / c.mu(1)), p2.d + member + shared);
        }
        if (dir == Direction::plus_inf) {
            if (i == N) return even_amp_x_singleton(c, g, dir);
            const int j = K + 1 - g;
            const Line p = even_pos_group(c, side, g, i, dir);
            return line(0.5 * (1.0 / c.lam(j + 1) - 3.0 / c.mu(j)),
                        p.d + std::log(dsig) + 2.0 * c.lg_mu(1, j - 1) +
                            2.0 * c.lg_psi(1, j, 1, j - 1) - kLog2 - 2.0 * c.lgb(j) -
                            c.lg_lam(1, j) - 2.0 * c.lg_psi(1, j, 1, j));
        }
        if (g == K && K >= 2) {  // rightmost X-group at -inf
            if (i == 1)
                return line(0.5 * (1.0 / c.lam(K) - 1.0 / c.mu(K - 1)),
                            0.5 * (kLog2 + c.lga(K) + c.lgb(K - 1) + c.lg_psi(K, K, K - 1, K - 1)) -
                                kLog2 - c.lgb(K - 1) - std::log(c.lam(K)) -
                                c.lg_psi(K, K, K - 1, K - 1));
            const Line p = even_pos_group(c, side, g, i, dir);
            if (i < N)
                return line(1.5 / c.lam(K), p.d + std::log(dsig) + std::log(sums.T[i]) + c.lga(K) -
                                                kLog2 - std::log(sums.R[i]) - std::log(sums.R[i - 1]));
            return line(1.5 / c.lam(K), p.d + c.lga(K) - kLog2 - std::log(sums.R[N - 1]));
        }
        if (i == 1) return even_amp_x_singleton(c, g, dir);
        const Line base = even_pos_y_singleton(c, g, dir);
        const double shared = c.lg_mu(g, K - 1) + c.lg_mu(g + 1, K - 1) + c.lga(g) - c.lgb(g) -
                              c.lg_lam(g + 1, K) + c.lg_psi(g, K, g, K - 1) +
                              c.lg_psi(g + 1, K, g + 1, K - 1) - kLog2 -
                              2.0 * c.lg_psi(g + 1, K, g, K - 1);
        const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) - std::log(sums.R[i]) -
                                            std::log(sums.R[i - 1])
                                      : std::log(sig_last) - std::log(sums.R[N - 1]);
        return line(0.5 * (3.0 / c.lam(g) - 1.0 / c.mu(g)), base.d + member + shared);
    }

    // Y-groups.
    if (g == K) {  // rightmost Y-group
        if (dir == Direction::plus_inf) {
            if (K == 1) {
                const Line p = even_pos_group(c, side, g, i, dir);
                if (i < N)
                    return line(-1.5 / c.lam(1),
                                p.d + std::log(dsig) - kLog2 - 2.0 * c.lga(1));
                return line(-0.5 / c.lam(1), p.d - kLog2 - c.lga(1));
            }
            if (i == N) return even_amp_y_singleton(c, K, dir);
            return line(0.5 * (1.0 / c.mu(1) - 3.0 / c.lam(1)),
                        0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, 1, 1, 1)) +
                            std::log(dsig) - kLog2 - 2.0 * c.lga(1));
        }
        const Line p = even_pos_group(c, side, g, i, dir);
        if (i == 1) return line(-0.5 / c.lam(K), p.d - kLog2 - c.lga(K));
        if (i < N)
            return {0.0,
                    p.d + std::log(dsig) - kLog2 - std::log(c.sigma(side, g, i)) -
                        std::log(c.sigma(side, g, i - 1)),
                    true};
        return {0.0, p.d - kLog2 - std::log(sig_last), true};
    }
    if (dir == Direction::plus_inf) {
        if (i == N) return even_amp_y_singleton(c, g, dir);
        if (g == 1 && K >= 2) {  // leftmost Y-group
            const Line p = even_pos_group(c, side, g, i, dir);
            return line(-1.5 / c.lam(K),
                        p.d + std::log(dsig) + 2.0 * c.lg_lam(1, K - 1) +
                            2.0 * c.lg_psi(1, K - 1, 1, K - 1) - kLog2 - 2.0 * c.lga(K) - c.lgM() -
                            2.0 * c.lg_psi(1, K, 1, K - 1));
        }
        const int j = K + 1 - g;
        const Line p = even_pos_group(c, side, g, i, dir);
        return line(0.5 * (1.0 / c.mu(j) - 3.0 / c.lam(j)),
                    p.d + std::log(dsig) + 2.0 * c.lg_lam(1, j - 1) +
                        2.0 * c.lg_psi(1, j - 1, 1, j - 1) - kLog2 - 2.0 * c.lga(j) -
                        c.lg_mu(1, j - 1) - 2.0 * c.lg_psi(1, j, 1, j - 1));
    }
    if (i == 1) return even_amp_y_singleton(c, g, dir);
    const Line base = even_pos_x_singleton(c, g + 1, dir);
    const double shared = c.lgb(g) + c.lg_lam(g + 1, K) + c.lg_lam(g + 2, K) - c.lga(g + 1) -
                          c.lg_mu(g + 1, K - 1) + c.lg_psi(g + 1, K, g, K - 1) +
                          c.lg_psi(g + 2, K, g + 1, K - 1) - kLog2 -
                          2.0 * c.lg_psi(g + 1, K, g + 1, K - 1);
    const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) - std::log(sums.R[i]) -
                                        std::log(sums.R[i - 1])
                                  : std::log(sig_last) - std::log(sums.R[N - 1]);
    return line(0.5 * (3.0 / c.mu(g) - 1.0 / c.lam(g + 1)), base.d + member + shared);
}

// ---------------------------------------------------------------------
// Odd case (B = K). Positions.
// ---------------------------------------------------------------------

Line odd_pos_x_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (dir == Direction::plus_inf) {
        if (g == 1)
            return line(0.5 / c.lam(K),
                        0.5 * (kLog2 + c.lga(K) + c.lg_psi(1, K, 1, K) - c.lgC() -
                               c.lg_lam(1, K - 1) - c.lg_psi(1, K - 1, 1, K)));
        if (g == K + 1)
            return line(0.5 * (1.0 / c.lam(1) + 1.0 / c.mu(1)),
                        0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, 1, 1, 1)));
        const int j = K + 2 - g;
        return line(0.5 * (1.0 / c.lam(j - 1) + 1.0 / c.mu(j)),
                    0.5 * (kLog2 + c.lga(j - 1) + c.lgb(j) + c.lg_psi(1, j - 1, 1, j) -
                           c.lg_lam(1, j - 2) - c.lg_mu(1, j - 1) - c.lg_psi(1, j - 2, 1, j - 1)));
    }
    if (g == 1)
        return line(0.5 * (1.0 / c.lam(1) + 1.0 / c.mu(1)),
                    0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, K, 1, K) - c.lg_lam(2, K) -
                           c.lg_mu(2, K) - c.lg_psi(2, K, 2, K)));
    if (g == K + 1) return line(0.5 / c.mu(K), 0.5 * (kLog2 + c.lgD() + c.lgb(K)));
    return line(0.5 * (1.0 / c.lam(g) + 1.0 / c.mu(g - 1)),
                0.5 * (kLog2 + c.lga(g) + c.lgb(g - 1) + c.lg_psi(g, K, g - 1, K) -
                       c.lg_lam(g + 1, K) - c.lg_mu(g, K) - c.lg_psi(g + 1, K, g, K)));
}

Line odd_pos_y_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    if (dir == Direction::plus_inf) {
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.lam(j) + 1.0 / c.mu(j)),
                    0.5 * (kLog2 + c.lga(j) + c.lgb(j) + c.lg_psi(1, j, 1, j) -
                           c.lg_lam(1, j - 1) - c.lg_mu(1, j - 1) - c.lg_psi(1, j - 1, 1, j - 1)));
    }
    return line(0.5 * (1.0 / c.lam(g) + 1.0 / c.mu(g)),
                0.5 * (kLog2 + c.lga(g) + c.lgb(g) + c.lg_psi(g, K, g, K) - c.lg_lam(g + 1, K) -
                       c.lg_mu(g + 1, K) - c.lg_psi(g + 1, K, g + 1, K)));
}

Line odd_pos_group(const Ctx& c, Side side, int g, int i, Direction dir) {
    const int K = c.K;
    const int N = c.size(side, g);
    const auto& sums = c.sums(side, g);
    const double sig_last = c.sigma(side, g, N - 1);

    if (side == Side::X) {
        if (g == 1) {  // leftmost X-group
            if (dir == Direction::plus_inf) {
                if (i == 1)
                    return const_line(0.5 * (kLog2 + std::log(c.tau(side, 1, 1)) - c.lgC() - c.lgL()));
                if (i < N)
                    return const_line(0.5 * (kLog2 + std::log(sums.S[i]) - c.lgL() - c.lgM()));
                return line(0.5 / c.lam(K),
                            0.5 * (kLog2 + std::log(sig_last) + c.lga(K) + c.lg_psi(1, K, 1, K) -
                                   c.lg_lam(1, K - 1) - c.lgM() - c.lg_psi(1, K - 1, 1, K)));
            }
            return odd_pos_x_singleton(c, 1, dir);
        }
        if (g == K + 1) {  // rightmost X-group
            if (dir == Direction::plus_inf) return odd_pos_x_singleton(c, K + 1, dir);
            if (i == 1)
                return line(0.5 / c.mu(K), 0.5 * (kLog2 + std::log(sums.T[1]) + c.lgb(K)));
            if (i < N) return const_line(0.5 * (kLog2 + std::log(sums.S[i])));
            return const_line(0.5 * (kLog2 + std::log(sums.S[N - 1] + c.sp.D * sig_last)));
        }
        if (dir == Direction::plus_inf) {
            if (i < N) return odd_pos_y_singleton(c, g - 1, dir);
            return odd_pos_x_singleton(c, g, dir);
        }
        if (i == 1) return odd_pos_x_singleton(c, g, dir);
        return odd_pos_y_singleton(c, g, dir);
    }

    // Y-groups.
    if (dir == Direction::plus_inf) {
        if (g == 1 && K >= 1) {  // leftmost Y-group (jr = K)
            if (i < N)
                return line(0.5 / c.lam(K),
                            0.5 * (kLog2 + std::log(sums.T[i]) + c.lga(K) + c.lg_psi(1, K, 1, K) -
                                   c.lg_lam(1, K - 1) - c.lgM() - c.lg_psi(1, K - 1, 1, K)));
            return odd_pos_y_singleton(c, 1, dir);
        }
        if (i < N) return odd_pos_x_singleton(c, g, dir);
        return odd_pos_y_singleton(c, g, dir);
    }
    if (g == K) {  // rightmost Y-group at -inf
        if (i == 1) return odd_pos_y_singleton(c, K, dir);
        if (i < N)
            return line(0.5 / c.mu(K), 0.5 * (kLog2 + std::log(sums.S[i] / sums.T[i]) + c.lgb(K)));
        return line(0.5 / c.mu(K), 0.5 * (kLog2 + std::log(sig_last) + c.lgb(K)));
    }
    if (i == 1) return odd_pos_y_singleton(c, g, dir);
    return line(0.5 * (1.0 / c.lam(g + 1) + 1.0 / c.mu(g)),
                0.5 * (kLog2 + c.lga(g + 1) + c.lgb(g) + c.lg_psi(g + 1, K, g, K) -
                       c.lg_lam(g + 2, K) - c.lg_mu(g + 1, K) - c.lg_psi(g + 2, K, g + 1, K)));
}

// ---------------------------------------------------------------------
// Odd case. Amplitudes.
// ---------------------------------------------------------------------

Line odd_amp_x_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    const Line p = odd_pos_x_singleton(c, g, dir);
    if (dir == Direction::plus_inf) {
        if (g == 1) return line(p.c, p.d + c.lgC() + c.lgM() - kLog2 - c.lgL());
        if (g == K + 1)
            return line(0.5 * (1.0 / c.lam(1) - 1.0 / c.mu(1)), p.d - kLog2 - c.lgb(1));
        const int j = K + 2 - g;
        return line(0.5 * (1.0 / c.lam(j - 1) - 1.0 / c.mu(j)),
                    p.d + 2.0 * c.lg_mu(1, j - 1) + c.lg_psi(1, j - 1, 1, j - 1) - kLog2 -
                        c.lgb(j) - c.lg_lam(1, j - 1) - c.lg_psi(1, j - 1, 1, j));
    }
    if (g == 1)
        return line(0.5 * (1.0 / c.lam(1) - 1.0 / c.mu(1)),
                    p.d + c.lg_mu(2, K) + c.lgM() + c.lg_psi(2, K, 2, K) - kLog2 - c.lgb(1) -
                        c.lgL() - c.lg_psi(2, K, 1, K));
    if (g == K + 1) return line(-0.5 / c.mu(K), p.d - kLog2 - c.lgb(K));
    return line(0.5 * (1.0 / c.lam(g) - 1.0 / c.mu(g - 1)),
                p.d + 2.0 * c.lg_mu(g, K) + c.lg_psi(g, K, g, K) - kLog2 - c.lgb(g - 1) -
                    c.lg_lam(g, K) - c.lg_psi(g, K, g - 1, K));
}

Line odd_amp_y_singleton(const Ctx& c, int g, Direction dir) {
    const int K = c.K;
    const Line p = odd_pos_y_singleton(c, g, dir);
    if (dir == Direction::plus_inf) {
        const int j = K + 1 - g;
        return line(0.5 * (1.0 / c.mu(j) - 1.0 / c.lam(j)),
                    p.d + 2.0 * c.lg_lam(1, j - 1) + c.lg_psi(1, j - 1, 1, j) - kLog2 - c.lga(j) -
                        c.lg_mu(1, j) - c.lg_psi(1, j, 1, j));
    }
    return line(0.5 * (1.0 / c.mu(g) - 1.0 / c.lam(g)),
                p.d + 2.0 * c.lg_lam(g + 1, K) + c.lg_psi(g + 1, K, g, K) - kLog2 - c.lga(g) -
                    c.lg_mu(g, K) - c.lg_psi(g, K, g, K));
}

Line odd_amp_group(const Ctx& c, Side side, int g, int i, Direction dir) {
    const int K = c.K;
    const int N = c.size(side, g);
    const auto& sums = c.sums(side, g);
    const double dsig = c.sigma(side, g, i) - c.sigma(side, g, i - 1);
    const double sig_last = c.sigma(side, g, N - 1);

    if (side == Side::X) {
        if (g == 1) {  // leftmost X-group
            if (dir == Direction::plus_inf) {
                const Line p = odd_pos_group(c, side, g, i, dir);
                if (i == 1) return {p.c, p.d + c.lgC() + c.lgM() - kLog2 - c.lgL(), p.degenerate};
                if (i < N)
                    return {p.c,
                            p.d + std::log(dsig) + 2.0 * c.lgM() - kLog2 -
                                std::log(c.sigma(side, g, i)) - std::log(c.sigma(side, g, i - 1)) -
                                c.lgL(),
                            p.degenerate};
                return line(p.c, p.d + 2.0 * c.lgM() - kLog2 - std::log(sig_last) - c.lgL());
            }
            if (i == 1) return odd_amp_x_singleton(c, 1, dir);
            const Line base = odd_pos_x_singleton(c, 1, dir);
            const double shared = c.lga(1) + c.lgM() + c.lg_mu(2, K) - c.lgb(1) - c.lg_lam(2, K) +
                                  c.lg_psi(1, K, 1, K) + c.lg_psi(2, K, 2, K) - kLog2 -
                                  2.0 * c.lg_psi(2, K, 1, K);
            const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) -
                                                std::log(sums.R[i]) - std::log(sums.R[i - 1])
                                          : std::log(sig_last) - std::log(sums.R[N - 1]);
            return line(0.5 * (3.0 / c.lam(1) - 1.0 / c.mu(1)), base.d + member + shared);
        }
        if (g == K + 1) {  // rightmost X-group
            if (dir == Direction::plus_inf) {
                if (i == N) return odd_amp_x_singleton(c, K + 1, dir);
                return line(0.5 * (1.0 / c.lam(1) - 3.0 / c.mu(1)),
                            0.5 * (kLog2 + c.lga(1) + c.lgb(1) + c.lg_psi(1, 1, 1, 1)) +
                                std::log(dsig) - kLog2 - 2.0 * c.lgb(1));
            }
            const Line p = odd_pos_group(c, side, g, i, dir);
            if (i == 1) return line(-0.5 / c.mu(K), p.d - kLog2 - c.lgb(K));
            if (i < N)
                return {0.0,
                        p.d + std::log(dsig) - kLog2 - std::log(c.sigma(side, g, i)) -
                            std::log(c.sigma(side, g, i - 1)),
                        true};
            return {0.0, p.d - kLog2 - std::log(sig_last), true};
        }
        if (dir == Direction::plus_inf) {
            if (i == N) return odd_amp_x_singleton(c, g, dir);
            const int j = K + 2 - g;
            const Line p = odd_pos_group(c, side, g, i, dir);
            return line(0.5 * (1.0 / c.lam(j) - 3.0 / c.mu(j)),
                        p.d + std::log(dsig) + 2.0 * c.lg_mu(1, j - 1) +
                            2.0 * c.lg_psi(1, j - 1, 1, j - 1) - kLog2 - 2.0 * c.lgb(j) -
                            c.lg_lam(1, j - 1) - 2.0 * c.lg_psi(1, j - 1, 1, j));
        }
        if (i == 1) return odd_amp_x_singleton(c, g, dir);
        const Line base = odd_pos_y_singleton(c, g, dir);
        const double shared = c.lga(g) + c.lg_mu(g, K) + c.lg_mu(g + 1, K) - c.lgb(g) -
                              c.lg_lam(g + 1, K) + c.lg_psi(g, K, g, K) +
                              c.lg_psi(g + 1, K, g + 1, K) - kLog2 - 2.0 * c.lg_psi(g + 1, K, g, K);
        const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) - std::log(sums.R[i]) -
                                            std::log(sums.R[i - 1])
                                      : std::log(sig_last) - std::log(sums.R[N - 1]);
        return line(0.5 * (3.0 / c.lam(g) - 1.0 / c.mu(g)), base.d + member + shared);
    }

    // Y-groups.
    if (dir == Direction::plus_inf) {
        if (i == N) return odd_amp_y_singleton(c, g, dir);
        if (g == 1) {  // leftmost Y-group (jr = K)
            const Line p = odd_pos_group(c, side, g, i, dir);
            return line(-1.5 / c.lam(K),
                        p.d + std::log(dsig) + 2.0 * c.lg_lam(1, K - 1) +
                            2.0 * c.lg_psi(1, K - 1, 1, K) - kLog2 - 2.0 * c.lga(K) - c.lgM() -
                            2.0 * c.lg_psi(1, K, 1, K));
        }
        const int j = K + 1 - g;
        const Line p = odd_pos_group(c, side, g, i, dir);
        return line(0.5 * (1.0 / c.mu(j + 1) - 3.0 / c.lam(j)),
                    p.d + std::log(dsig) + 2.0 * c.lg_lam(1, j - 1) + 2.0 * c.lg_psi(1, j - 1, 1, j) -
                        kLog2 - 2.0 * c.lga(j) - c.lg_mu(1, j) - 2.0 * c.lg_psi(1, j, 1, j));
    }
    if (g == K) {  // rightmost Y-group at -inf
        const Line p = odd_pos_group(c, side, g, i, dir);
        if (i == 1)
            return line(0.5 * (1.0 / c.mu(K) - 1.0 / c.lam(K)),
                        p.d - kLog2 - c.lga(K) - std::log(c.mu(K)) - c.lg_psi(K, K, K, K));
        if (i < N)
            return line(1.5 / c.mu(K), p.d + std::log(dsig) + std::log(sums.T[i]) + c.lgb(K) -
                                           kLog2 - std::log(sums.R[i]) - std::log(sums.R[i - 1]));
        return line(1.5 / c.mu(K), p.d + c.lgb(K) - kLog2 - std::log(sums.R[N - 1]));
    }
    if (i == 1) return odd_amp_y_singleton(c, g, dir);
    const Line base = odd_pos_group(c, side, g, 2, dir);  // the X-singleton(g+1)-like base
    const double shared = c.lgb(g) + c.lg_lam(g + 1, K) + c.lg_lam(g + 2, K) - c.lga(g + 1) -
                          c.lg_mu(g + 1, K) + c.lg_psi(g + 1, K, g, K) +
                          c.lg_psi(g + 2, K, g + 1, K) - kLog2 -
                          2.0 * c.lg_psi(g + 1, K, g + 1, K);
    const double member = (i < N) ? std::log(dsig) + std::log(sums.S[i]) - std::log(sums.R[i]) -
                                        std::log(sums.R[i - 1])
                                  : std::log(sig_last) - std::log(sums.R[N - 1]);
    return line(0.5 * (3.0 / c.mu(g) - 1.0 / c.lam(g + 1)), base.d + member + shared);
}

}  // namespace

AsymptoteLine asymptote(const Solver& solver, const PeakonRef& target, LineKind kind,
                        Direction dir) {
    const Ctx c(solver);
    const int n = c.size(target.side, target.group);
    if (target.member < 1 || target.member > n)
        throw std::out_of_range("asymptote: member index out of range");

    Line ln;
    if (!c.odd) {
        if (kind == LineKind::position)
            ln = (n == 1) ? (target.side == Side::X ? even_pos_x_singleton(c, target.group, dir)
                                                    : even_pos_y_singleton(c, target.group, dir))
                          : even_pos_group(c, target.side, target.group, target.member, dir);
        else
            ln = (n == 1) ? (target.side == Side::X ? even_amp_x_singleton(c, target.group, dir)
                                                    : even_amp_y_singleton(c, target.group, dir))
                          : even_amp_group(c, target.side, target.group, target.member, dir);
    } else {
        if (kind == LineKind::position)
            ln = (n == 1) ? (target.side == Side::X ? odd_pos_x_singleton(c, target.group, dir)
                                                    : odd_pos_y_singleton(c, target.group, dir))
                          : odd_pos_group(c, target.side, target.group, target.member, dir);
        else
            ln = (n == 1) ? (target.side == Side::X ? odd_amp_x_singleton(c, target.group, dir)
                                                    : odd_amp_y_singleton(c, target.group, dir))
                          : odd_amp_group(c, target.side, target.group, target.member, dir);
    }

    AsymptoteLine out;
    out.slope = ln.c;
    out.intercept = ln.d;
    out.direction = dir;
    out.kind = kind;
    out.target = target;
    out.degenerate = ln.degenerate;
    return out;
}

std::vector<AsymptoteLine> all_asymptotes(const Solver& solver, Direction dir) {
    std::vector<AsymptoteLine> out;
    const GroupLayout& lay = solver.layout();
    for (LineKind kind : {LineKind::position, LineKind::log_amplitude}) {
        const std::size_t ng = std::max(lay.x_sizes.size(), lay.y_sizes.size());
        for (std::size_t g = 0; g < ng; ++g) {
            if (g < lay.x_sizes.size())
                for (int i = 1; i <= lay.x_sizes[g]; ++i)
                    out.push_back(asymptote(solver, {Side::X, static_cast<int>(g + 1), i}, kind, dir));
            if (g < lay.y_sizes.size())
                for (int i = 1; i <= lay.y_sizes[g]; ++i)
                    out.push_back(asymptote(solver, {Side::Y, static_cast<int>(g + 1), i}, kind, dir));
        }
    }
    return out;
}

std::pair<double, double> fit_line(const std::function<double(double)>& f, double t0, double t1,
                                   int samples) {
    if (samples < 2) throw std::invalid_argument("fit_line: need at least 2 samples");
    Eigen::MatrixXd A(samples, 2);
    Eigen::VectorXd b(samples);
    for (int k = 0; k < samples; ++k) {
        const double t = t0 + (t1 - t0) * k / (samples - 1);
        A(k, 0) = t;
        A(k, 1) = 1.0;
        b(k) = f(t);
    }
    const Eigen::Vector2d sol = A.colPivHouseholderQr().solve(b);
    return {sol(0), sol(1)};
}

}  // namespace gx
