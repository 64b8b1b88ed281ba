#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace randnet {

// The two exhaustive graph counts behind the exact edge probability.
struct BinomialCounts {
    mpz_class c_connected;    // simple graphs realizing (wi, wj) with the pair adjacent
    mpz_class c_disconnected; // ... with the pair not adjacent
};

struct OracleResult {
    mpq_class p; // c_connected / (c_connected + c_disconnected), reduced
    BinomialCounts counts;
};

// Raised when both counts are zero: the (n, m, wi, wj) combination is
// realized by no simple graph at all, so the conditional probability does
// not exist.
struct UndefinedProbabilityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact reference for the combinatorial edge probability, by direct
/// counting with arbitrary-precision integers.
///
/// Fix nodes i and j with target degrees wi and wj in a simple graph on n
/// nodes with m edges, all other degrees free. With the pair adjacent, i
/// picks wi-1 of the other n-2 nodes, j picks wj-1, and the remaining
/// m-wi-wj+1 edges fall anywhere among the C(n-2, 2) slots the pair does not
/// touch; without the edge the counts shift by one. The probability is the
/// adjacent count over the total. This is the ground truth the closed-form
/// polynomial in edge_prob.hpp must reproduce; it is exponential-free but
/// still big-integer work, so it is for verification and small-n reporting,
/// not for sampling loops.
///
/// Requires n >= 2 and 0 <= wi, wj <= n-1; any m is accepted (impossible
/// values simply zero both counts and raise UndefinedProbabilityError).
OracleResult oracle_p(std::uint64_t n, std::int64_t m, std::int64_t wi,
                      std::int64_t wj);

} // namespace randnet
