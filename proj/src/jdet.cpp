#include "gxpeakon/jdet.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gx {

namespace {

std::vector<std::vector<std::uint32_t>> masks_by_popcount(int n) {
    std::vector<std::vector<std::uint32_t>> out(n + 1);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        out[std::popcount(m)].push_back(m);
    return out;
}

}  // namespace

int JEngine::capacity() {
    static const int cap = [] {
        if (const char* env = std::getenv("PEAKON_GX_MAX_K")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 12;
    }();
    return cap;
}

JEngine::JEngine(const SpectralData& spectral, int A, int B) : a_(A), b_(B) {
    if (A < 0 || B < 0) throw std::length_error("JEngine: negative eigenvalue count");
    if (A > capacity() || B > capacity())
        throw std::length_error("JEngine: eigenvalue count " + std::to_string(std::max(A, B)) +
                                " exceeds the enumeration cap " + std::to_string(capacity()) +
                                " (set PEAKON_GX_MAX_K to raise it)");
    if (static_cast<int>(spectral.lambda.size()) < A ||
        static_cast<int>(spectral.mu.size()) < B ||
        static_cast<int>(spectral.a0.size()) < A || static_cast<int>(spectral.b0.size()) < B)
        throw std::length_error("JEngine: spectral data smaller than requested sizes");

    for (int n = 0; n < A; ++n) {
        log_lambda_.push_back(std::log(spectral.lambda[n]));
        inv_lambda_.push_back(1.0 / spectral.lambda[n]);
        log_a0_.push_back(std::log(spectral.a0[n]));
    }
    for (int m = 0; m < B; ++m) {
        log_mu_.push_back(std::log(spectral.mu[m]));
        inv_mu_.push_back(1.0 / spectral.mu[m]);
        log_b0_.push_back(std::log(spectral.b0[m]));
    }

    auto build_delta2 = [](const std::vector<double>& ev) {
        const int n = static_cast<int>(ev.size());
        std::vector<double> d2(std::size_t{1} << n, 0.0);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const int lo = std::countr_zero(mask);
            const std::uint32_t rest = mask & (mask - 1);
            double acc = d2[rest];
            for (std::uint32_t r = rest; r;) {
                const int b = std::countr_zero(r);
                acc += 2.0 * std::log(std::abs(ev[lo] - ev[b]));
                r &= r - 1;
            }
            d2[mask] = acc;
        }
        return d2;
    };
    log_delta2_x_ = build_delta2(std::vector<double>(spectral.lambda.begin(), spectral.lambda.begin() + A));
    log_delta2_y_ = build_delta2(std::vector<double>(spectral.mu.begin(), spectral.mu.begin() + B));

    log_gamma_row_.assign(A, std::vector<double>(std::size_t{1} << B, 0.0));
    for (int n = 0; n < A; ++n)
        for (std::uint32_t mask = 1; mask < (1u << B); ++mask) {
            const int m = std::countr_zero(mask);
            log_gamma_row_[n][mask] =
                log_gamma_row_[n][mask & (mask - 1)] + std::log(spectral.lambda[n] + spectral.mu[m]);
        }

    masks_x_ = masks_by_popcount(A);
    masks_y_ = masks_by_popcount(B);
}

LogReal JEngine::psi(std::uint32_t mask_i, std::uint32_t mask_j) const {
    double lg = log_delta2_x_[mask_i] + log_delta2_y_[mask_j];
    for (std::uint32_t r = mask_i; r;) {
        lg -= log_gamma_row_[std::countr_zero(r)][mask_j];
        r &= r - 1;
    }
    return LogReal::from_log(lg);
}

double JEngine::subset_weight(std::uint32_t mask, int power, bool lambda_side, double t) const {
    const auto& log_ev = lambda_side ? log_lambda_ : log_mu_;
    const auto& inv_ev = lambda_side ? inv_lambda_ : inv_mu_;
    const auto& log_r0 = lambda_side ? log_a0_ : log_b0_;
    double w = 0.0;
    for (std::uint32_t r = mask; r;) {
        const int n = std::countr_zero(r);
        w += power * log_ev[n] + log_r0[n] + t * inv_ev[n];
        r &= r - 1;
    }
    return w;
}

LogReal JEngine::jdet(int r, int s, int i, int j, double t) const {
    if (i < 0 || i > a_ || j < 0 || j > b_) return LogReal::zero();
    const auto& mi = masks_x_[i];
    const auto& mj = masks_y_[j];

    std::vector<double> wj(mj.size());
    for (std::size_t q = 0; q < mj.size(); ++q) wj[q] = subset_weight(mj[q], s, false, t);

    std::vector<double> terms;
    terms.reserve(mi.size() * mj.size());
    for (std::uint32_t maskI : mi) {
        const double wi = subset_weight(maskI, r, true, t);
        for (std::size_t q = 0; q < mj.size(); ++q) {
            double lg = log_delta2_x_[maskI] + log_delta2_y_[mj[q]] + wi + wj[q];
            for (std::uint32_t rr = maskI; rr;) {
                lg -= log_gamma_row_[std::countr_zero(rr)][mj[q]];
                rr &= rr - 1;
            }
            terms.push_back(lg);
        }
    }
    return LogReal::from_log(log_sum_exp(std::move(terms)));
}

JCache::JCache(const JEngine& engine, double t) : engine_(engine), t_(t) {
    const std::size_t slots =
        std::size_t{4} * (engine.A() + 1) * (engine.B() + 1);
    memo_.assign(slots, std::numeric_limits<double>::quiet_NaN());
}

LogReal JCache::operator()(const JIndex& idx) const {
    if (idx.i < 0 || idx.i > engine_.A() || idx.j < 0 || idx.j > engine_.B())
        return LogReal::zero();
    if (idx.r < 0 || idx.r > 1 || idx.s < 0 || idx.s > 1)
        return engine_.jdet(idx, t_);
    const std::size_t slot =
        ((static_cast<std::size_t>(idx.r) * 2 + idx.s) * (engine_.A() + 1) + idx.i) *
            (engine_.B() + 1) +
        idx.j;
    if (std::isnan(memo_[slot])) memo_[slot] = engine_.jdet(idx, t_).log();
    return LogReal::from_log(memo_[slot]);
}

}  // namespace gx
