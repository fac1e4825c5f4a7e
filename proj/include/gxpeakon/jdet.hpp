#pragma once

#include <cstdint>
#include <vector>

#include "gxpeakon/logsum.hpp"
#include "gxpeakon/types.hpp"

namespace gx {

/// Index tuple of one determinant sum J[A,B,r,s,i,j]. r and s are the
/// eigenvalue powers, i and j the subset sizes. Out-of-range i or j is
/// allowed and denotes the zero value.
struct JIndex {
    int r = 0, s = 0, i = 0, j = 0;
};

/// Evaluates the sums
///   J[A,B,r,s,i,j](t) = sum over |I|=i, |J|=j of
///       Psi_IJ * prod_{n in I} lambda_n^r a_n(t) * prod_{m in J} mu_m^s b_m(t)
/// with Psi_IJ = Delta_I^2 Delta~_J^2 / Gamma_IJ and the time dependence
/// a_n(t) = a_n(0) exp(t/lambda_n), b_m(t) = b_m(0) exp(t/mu_m).
///
/// Everything runs on logs. The Psi factors are t-independent and
/// precomputed per subset bitmask at construction; each call enumerates
/// the subset pairs, collects the term logs and reduces them with a
/// descending log-sum-exp so that results are reproducible.
class JEngine {
public:
    /// A eigenvalues lambda, B eigenvalues mu are taken from `spectral`.
    /// Throws std::length_error when A or B exceeds the enumeration cap.
    JEngine(const SpectralData& spectral, int A, int B);

    int A() const { return a_; }
    int B() const { return b_; }

    /// log Psi_IJ for subset bitmasks (bit n <=> eigenvalue n+1).
    LogReal psi(std::uint32_t mask_i, std::uint32_t mask_j) const;

    /// J[A,B,r,s,i,j](t); exact zero when i or j is out of range.
    LogReal jdet(int r, int s, int i, int j, double t) const;
    LogReal jdet(const JIndex& idx, double t) const { return jdet(idx.r, idx.s, idx.i, idx.j, t); }

    /// Subset enumeration cap per eigenvalue list; reads PEAKON_GX_MAX_K
    /// once (default 12).
    static int capacity();

private:
    double subset_weight(std::uint32_t mask, int power, bool lambda_side, double t) const;

    int a_, b_;
    std::vector<double> log_lambda_, log_mu_, log_a0_, log_b0_;
    std::vector<double> inv_lambda_, inv_mu_;
    std::vector<double> log_delta2_x_;                 // per lambda-subset mask
    std::vector<double> log_delta2_y_;                 // per mu-subset mask
    std::vector<std::vector<double>> log_gamma_row_;   // [n][mu-mask]: sum log(lambda_n + mu_m)
    std::vector<std::vector<std::uint32_t>> masks_x_;  // masks by popcount
    std::vector<std::vector<std::uint32_t>> masks_y_;
};

/// Memo for the many J values needed at one time t. The memo covers
/// r, s in {0, 1} (the only powers appearing in the solution formulas);
/// other powers fall through to the engine.
class JCache {
public:
    JCache(const JEngine& engine, double t);

    double t() const { return t_; }
    const JEngine& engine() const { return engine_; }

    LogReal operator()(const JIndex& idx) const;
    LogReal operator()(int r, int s, int i, int j) const { return (*this)(JIndex{r, s, i, j}); }

private:
    const JEngine& engine_;
    double t_;
    mutable std::vector<double> memo_;  // NaN = not computed
};

}  // namespace gx
