#include "randnet/oracle.hpp"

namespace randnet {

namespace {

// C(a, b) with the usual convention that out-of-range b gives 0.
mpz_class binom(unsigned long a, std::int64_t b) {
    if (b < 0 || b > static_cast<std::int64_t>(a)) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, static_cast<unsigned long>(b));
    return r;
}

} // namespace

OracleResult oracle_p(std::uint64_t n, std::int64_t m, std::int64_t wi,
                      std::int64_t wj) {
    if (n < 2) {
        throw std::invalid_argument("oracle_p: need at least two nodes");
    }
    const auto max_deg = static_cast<std::int64_t>(n) - 1;
    if (wi < 0 || wi > max_deg || wj < 0 || wj > max_deg) {
        throw std::invalid_argument(
            "oracle_p: degrees must lie in [0, n-1]");
    }

    const unsigned long rest = static_cast<unsigned long>(n) - 2;
    const unsigned long pool = rest * (rest - 1) / 2; // edge slots not touching the pair
    const std::int64_t leftover = m - wi - wj;        // edges outside the pair's stubs

    BinomialCounts counts;
    counts.c_connected =
        binom(rest, wi - 1) * binom(rest, wj - 1) * binom(pool, leftover + 1);
    counts.c_disconnected =
        binom(rest, wi) * binom(rest, wj) * binom(pool, leftover);

    const mpz_class total = counts.c_connected + counts.c_disconnected;
    if (total == 0) {
        throw UndefinedProbabilityError(
            "oracle_p: no simple graph matches these degree/edge counts");
    }

    OracleResult result;
    result.p = mpq_class(counts.c_connected, total);
    result.p.canonicalize();
    result.counts = std::move(counts);
    return result;
}

} // namespace randnet
