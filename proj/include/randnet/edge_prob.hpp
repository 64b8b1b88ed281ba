#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "randnet/graph.hpp"

namespace randnet {

enum class ModelKind { chung_lu, combinatorial };

// What to do when the combinatorial formula leaves [0, 1] (which happens
// exactly when no simple graph is consistent with the requested degrees):
// `strict` throws NonGraphicalError, `clamp` snaps to the nearest endpoint
// and counts the event.
enum class ProbMode { strict, clamp };

// Raw ingredients of the combinatorial edge probability, exposed so callers
// can report the unclamped ratio or decide their own failure policy.
struct CombinatorialTerms {
    double m_star;     // edge budget outside the pair: m - wi - wj + 1
    double x;          // reduced count of graphs where the pair is adjacent
    double y;          // reduced count of graphs where it is not
    double p;          // x / (x + y), possibly outside [0, 1], NaN when 0/0
    bool out_of_range; // formula certifies the input as unrealizable
};

/// Probability that two specific nodes with degrees `wi` and `wj` are
/// adjacent, when a simple graph on `n` nodes with `m` edges is drawn
/// uniformly among all graphs giving the pair exactly those degrees. `x`
/// counts the adjacent configurations and `y` the non-adjacent ones, both
/// reduced to polynomials by cancelling the shared binomial factors; the
/// exact integer-count reference lives in oracle.hpp. Inputs are doubles so
/// fractional expected degrees are accepted; the polynomial extends the
/// integer counting continuously.
///
/// When the formula can certify that no simple graph realizes the input, x or
/// y goes negative (or both collapse to zero) and `out_of_range` is set; `p`
/// then carries the raw ratio for diagnostics. The certificate is one-sided:
/// a few contradictory inputs (zero weight hiding an oversized leftover edge
/// budget) still evaluate in range. Requires n >= 2.
inline CombinatorialTerms combinatorial_terms(double n, double m, double wi,
                                              double wj) {
    if (!(n >= 2.0)) {
        throw std::invalid_argument(
            "combinatorial_terms: need at least two nodes");
    }
    CombinatorialTerms t{};
    t.m_star = m - wi - wj + 1.0;
    t.x = wi * wj * (n * n - 5.0 * n + 8.0 - 2.0 * t.m_star);
    t.y = 2.0 * t.m_star * (n - wi - 1.0) * (n - wj - 1.0);
    t.p = t.x / (t.x + t.y);
    t.out_of_range = (t.x < 0.0) || (t.y < 0.0) || !(t.p >= 0.0 && t.p <= 1.0);
    return t;
}

/// Chung-Lu kernel: min(1, wi * wj / total_weight). Zero total weight is fine
/// as long as the product is also zero; otherwise the request is contradictory
/// and throws std::domain_error.
inline double chung_lu_p(double total_weight, double wi, double wj) {
    const double prod = wi * wj;
    if (total_weight <= 0.0) {
        if (prod > 0.0) {
            throw std::domain_error(
                "chung_lu_p: positive weights with zero total weight");
        }
        return 0.0;
    }
    return std::min(1.0, prod / total_weight);
}

// Thrown in strict mode when the combinatorial formula certifies that no
// simple graph matches the requested (n, m, wi, wj); carries the raw terms so
// callers can report the offending ratio.
struct NonGraphicalError : std::domain_error {
    NonGraphicalError(const std::string& what, const CombinatorialTerms& t)
        : std::domain_error(what), terms(t) {}
    CombinatorialTerms terms;
};

/// Combinatorial edge probability with the failure policy applied. In clamp
/// mode an out-of-range value becomes 1 when the adjacent-count x is positive
/// and 0 otherwise, and `*clamped` (when given) is incremented; in strict
/// mode it raises NonGraphicalError.
double combinatorial_p(double n, double m, double wi, double wj, ProbMode mode,
                       std::uint64_t* clamped = nullptr);

// One edge-probability model bound to its graph-level parameters. Both
// kernels need the node count and either the edge count or the total weight
// (they determine each other: total = 2m), so a single small value type
// serves both.
class EdgeProbabilityModel {
public:
    static EdgeProbabilityModel from_weights(ModelKind kind, const WeightSeq& w);
    static EdgeProbabilityModel from_counts(ModelKind kind, std::size_t n,
                                            double m);

    ModelKind kind() const { return kind_; }
    double node_count() const { return n_; }
    double edge_count() const { return m_; }
    double total_weight() const { return total_; }

    /// Scalar evaluation for one pair of expected degrees. The mode and the
    /// clamp counter only matter for the combinatorial kind.
    double edge_p(double wi, double wj, ProbMode mode = ProbMode::clamp,
                  std::uint64_t* clamped = nullptr) const;

private:
    EdgeProbabilityModel(ModelKind kind, double n, double m)
        : kind_(kind), n_(n), m_(m), total_(2.0 * m) {}

    ModelKind kind_;
    double n_;
    double m_;
    double total_;
};

/// Erdos-Gallai test: can `degrees` be realized by some simple graph?
/// Rejects negative entries, entries above n - 1, and odd total degree.
bool is_graphical(std::vector<long long> degrees);

} // namespace randnet
