#pragma once

#include <string>
#include <vector>

#include "scmm/betti.hpp"
#include "scmm/monomial.hpp"

namespace scmm {

/// Alexander dual of a square-free ideal: the intersection of the variable
/// primes of the generators; its generators are the minimal vertex covers
/// of the generator supports.  Requires square-free, nonzero, proper input.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

/// Ass(R/I) for square-free I: the supports of G(I^dual) (minimal primes;
/// square-free ideals are radical, so these are all associated primes).
std::vector<PrimeRef> associated_primes(const MonomialIdeal& I);

/// The homological invariants of a square-free ideal, computed in one pass:
/// the dual and its Betti data are shared between the fields.
struct InvariantReport {
    MonomialIdeal ideal;
    int n = 0;
    int degree = 0;
    bool matroidal = false;
    Monomial gcd;
    std::vector<int> support_vars; // 0-based
    std::vector<PrimeRef> ass_primes;
    int height = 0;
    int bight = 0;
    int projdim_quotient = 0;
    int depth_quotient = 0; // n - projdim_quotient
    int regularity = 0;
    bool is_cm = false;  // projdim_quotient == height
    bool is_scm = false; // alexander dual componentwise linear

    std::string to_json() const;
    /// Fixed column order: n, d, gens, matroidal, gcd, height, bight,
    /// projdim, depth, reg, cm, scm.
    std::string to_tsv_row() const;
    static std::string tsv_header();
};

InvariantReport invariant_report(const MonomialIdeal& I, const FieldSpec& field = {});

/// R/I sequentially Cohen-Macaulay: the Alexander dual is componentwise
/// linear.
bool is_scm(const MonomialIdeal& I, const FieldSpec& field = {});

} // namespace scmm
