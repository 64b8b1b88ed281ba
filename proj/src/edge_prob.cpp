#include "randnet/edge_prob.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace randnet {

double combinatorial_p(double n, double m, double wi, double wj, ProbMode mode,
                       std::uint64_t* clamped) {
    const CombinatorialTerms t = combinatorial_terms(n, m, wi, wj);
    if (!t.out_of_range) {
        return t.p;
    }
    if (mode == ProbMode::strict) {
        std::ostringstream msg;
        msg << "no simple graph on n=" << n << ", m=" << m
            << " gives the pair degrees (" << wi << ", " << wj
            << "); raw probability " << t.p;
        throw NonGraphicalError(msg.str(), t);
    }
    if (clamped) {
        ++*clamped;
    }
    return t.x > 0.0 ? 1.0 : 0.0;
}

EdgeProbabilityModel EdgeProbabilityModel::from_weights(ModelKind kind,
                                                        const WeightSeq& w) {
    return EdgeProbabilityModel(kind, static_cast<double>(w.size()),
                                w.total() / 2.0);
}

EdgeProbabilityModel EdgeProbabilityModel::from_counts(ModelKind kind,
                                                       std::size_t n,
                                                       double m) {
    if (m < 0.0) {
        throw std::invalid_argument("edge probability model: negative edge count");
    }
    return EdgeProbabilityModel(kind, static_cast<double>(n), m);
}

double EdgeProbabilityModel::edge_p(double wi, double wj, ProbMode mode,
                                    std::uint64_t* clamped) const {
    if (kind_ == ModelKind::chung_lu) {
        return chung_lu_p(total_, wi, wj);
    }
    return combinatorial_p(n_, m_, wi, wj, mode, clamped);
}

bool is_graphical(std::vector<long long> degrees) {
    const std::size_t n = degrees.size();
    long long sum = 0;
    for (long long d : degrees) {
        if (d < 0 || d > static_cast<long long>(n) - 1) {
            return false;
        }
        sum += d;
    }
    if (sum % 2 != 0) {
        return false;
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<>());

    std::vector<long long> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + degrees[i];
    }
    for (std::size_t k = 1; k <= n; ++k) {
        // First tail index whose degree drops below k; entries before it
        // contribute min(d, k) = k, the rest contribute their own degree.
        const auto split =
            std::lower_bound(degrees.begin() + static_cast<std::ptrdiff_t>(k),
                             degrees.end(), static_cast<long long>(k),
                             std::greater<>());
        const auto j = static_cast<std::size_t>(split - degrees.begin());
        const long long kk = static_cast<long long>(k);
        const long long rhs = kk * (kk - 1) +
                              kk * static_cast<long long>(j - k) +
                              (prefix[n] - prefix[j]);
        if (prefix[k] > rhs) {
            return false;
        }
    }
    return true;
}

} // namespace randnet
