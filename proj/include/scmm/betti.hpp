#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scmm/monomial.hpp"
#include "scmm/simplicial.hpp"

namespace scmm {

/// Multigraded Betti numbers of a monomial ideal, with totals aggregated by
/// homological index i and total degree j.
class BettiTable {
public:
    void add(int i, const Monomial& b, long long rank);

    long long total(int i, int j) const;
    long long multigraded(int i, const Monomial& b) const;
    const std::map<std::pair<int, int>, long long>& totals() const { return totals_; }
    const std::map<std::pair<int, Monomial>, long long>& multigraded_entries() const {
        return entries_;
    }

    /// projdim of the ideal: largest i with a nonzero entry.
    int max_index() const;
    /// max j - i over nonzero entries.
    int regularity() const;

    std::string render_text() const; // aligned rows i, columns j
    std::string render_json() const; // {"entries": [[i, j, rank], ...]}

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<std::pair<int, Monomial>, long long> entries_;
    std::map<std::pair<int, int>, long long> totals_;
};

/// beta_{i,b}(I) = rank of reduced homology in degree i-1 of the upper
/// Koszul complex K^b(I) = { square-free tau <= b : b/tau in I }, for b
/// running over the lcm lattice of the generators.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field = {}, int jobs = 1);

int regularity(const MonomialIdeal& I, const FieldSpec& field = {});
/// projdim(R/I) = projdim(I) + 1.
int projdim_quotient(const MonomialIdeal& I, const FieldSpec& field = {});
/// Equigenerated in degree d with regularity d.
bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field = {});

enum class LQStatus { found, none, unknown };

struct LinearQuotients {
    LQStatus status = LQStatus::none;
    std::vector<Monomial> order; // witness when status == found
};

/// A degree-non-decreasing ordering of G(I) in which each colon ideal
/// (u_1..u_{i-1}) : u_i is generated by variables.  Reverse-lex is tried
/// first (it works for every polymatroidal ideal); otherwise the space of
/// degree-compatible orderings is searched with memoized prefixes, up to
/// `budget` generators.  Beyond the budget without a greedy witness the
/// result is `unknown`, which is distinct from `none`.
LinearQuotients linear_quotients_order(const MonomialIdeal& I, int budget = 16);

/// Square-free ideals: every square-free component I_[i] is zero or has a
/// linear resolution.  General ideals: the graded components from the least
/// to the largest generator degree all have linear resolutions and reg(I)
/// equals the largest generator degree (which settles the higher components).
bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field = {});

} // namespace scmm
