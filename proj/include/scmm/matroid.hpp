#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scmm/monomial.hpp"

namespace scmm {

/// The bases of a matroid on {1..n}, i.e. the generator supports of a
/// matroidal ideal generated in degree d.
struct BasisFamily {
    int n = 0;
    int d = 0;
    std::vector<std::uint32_t> bases; // d-subsets as bitmasks, ascending

    static BasisFamily from_ideal(const MonomialIdeal& I);
    MonomialIdeal to_ideal() const;
};

/// Exchange condition on exponent vectors: for u, v in G(I) and every i with
/// deg_i(v) < deg_i(u) there is a j with deg_j(u) < deg_j(v) and
/// x_j * (u / x_i) in G(I).  Requires a single generation degree.
bool is_polymatroidal(const MonomialIdeal& I);

/// Polymatroidal with square-free generators.
bool is_matroidal(const MonomialIdeal& I);

struct EnumerateOptions {
    bool full_support = true;
    bool gcd_one = true;
    int jobs = 1;
};

/// Exhaustively enumerate the matroidal ideals of degree d on n variables:
/// all 2^binom(n,d) - 1 non-empty basis families are tested against the
/// exchange condition and the requested filters.  Requires binom(n,d) <= 24.
/// The sink sees ideals in ascending order of the candidate family's subset
/// index over the lex-ordered d-subsets, independent of the job count.
void enumerate_matroidal(int n, int d, const EnumerateOptions& opts,
                         const std::function<void(const MonomialIdeal&)>& sink);
std::vector<MonomialIdeal> enumerate_matroidal_ideals(int n, int d,
                                                      const EnumerateOptions& opts = {});

/// binom(n,d) with the same overflow-free evaluation the regime check uses.
long long binomial(int n, int k);

} // namespace scmm
