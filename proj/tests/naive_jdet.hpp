#pragma once

// Plain-double reference evaluation of the determinant sums, independent
// of the log-domain path. Only valid for benign magnitudes.

#include <bit>
#include <cmath>
#include <cstdint>

#include "gxpeakon/types.hpp"

namespace gxtest {

inline double naive_jdet(const gx::SpectralData& sp, int A, int B, int r, int s, int i, int j,
                         double t) {
    if (i < 0 || i > A || j < 0 || j > B) return 0.0;
    double total = 0.0;
    for (std::uint32_t mi = 0; mi < (1u << A); ++mi) {
        if (std::popcount(mi) != i) continue;
        for (std::uint32_t mj = 0; mj < (1u << B); ++mj) {
            if (std::popcount(mj) != j) continue;
            double delta2 = 1.0;
            for (int a = 0; a < A; ++a)
                for (int b = a + 1; b < A; ++b)
                    if ((mi >> a & 1) && (mi >> b & 1)) {
                        const double d = sp.lambda[a] - sp.lambda[b];
                        delta2 *= d * d;
                    }
            for (int a = 0; a < B; ++a)
                for (int b = a + 1; b < B; ++b)
                    if ((mj >> a & 1) && (mj >> b & 1)) {
                        const double d = sp.mu[a] - sp.mu[b];
                        delta2 *= d * d;
                    }
            double gamma = 1.0, weights = 1.0;
            for (int n = 0; n < A; ++n)
                if (mi >> n & 1) {
                    weights *= std::pow(sp.lambda[n], r) * sp.a0[n] * std::exp(t / sp.lambda[n]);
                    for (int m = 0; m < B; ++m)
                        if (mj >> m & 1) gamma *= sp.lambda[n] + sp.mu[m];
                }
            for (int m = 0; m < B; ++m)
                if (mj >> m & 1) weights *= std::pow(sp.mu[m], s) * sp.b0[m] * std::exp(t / sp.mu[m]);
            total += delta2 / gamma * weights;
        }
    }
    return total;
}

}  // namespace gxtest
