#include "gxpeakon/logsum.hpp"

#include <algorithm>

namespace gx {

double log_sum_exp(std::vector<double> terms) {
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    std::stable_sort(terms.begin(), terms.end(), std::greater<double>());
    const double top = terms.front();
    if (top == -std::numeric_limits<double>::infinity()) return top;
    double sum = 0.0;
    for (std::size_t k = 1; k < terms.size(); ++k)
        sum += std::exp(terms[k] - top);
    return top + std::log1p(sum);
}

}  // namespace gx
