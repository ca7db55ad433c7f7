#pragma once

#include <cstdint>
#include <vector>

#include "scmm/errors.hpp"

namespace scmm {

/// Bitmask over variable indices 0..n-1.  All square-free set operations
/// (support, divisibility, gcd of square-free monomials) are single word ops.
using VarMask = std::uint64_t;

constexpr int kMaxVars = 62;

inline VarMask var_bit(int i) { return VarMask{1} << i; }
inline VarMask full_mask(int n) { return (VarMask{1} << n) - 1; }
int popcount(VarMask m);
std::vector<int> mask_to_vars(VarMask m);
VarMask vars_to_mask(const std::vector<int>& vars);

/// A monomial in n variables, stored as its exponent vector.  Immutable
/// after construction; degree and support mask are cached.
class Monomial {
public:
    Monomial() = default; // the monomial 1 in 0 variables
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n);
    static Monomial variable(int n, int var);          // 0-based
    static Monomial from_support(int n, VarMask vars); // square-free

    int vars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const { return deg_; }
    VarMask support() const { return mask_; }
    bool is_squarefree() const { return squarefree_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& m) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    /// u / gcd(u, m): the generator image under the colon by m.
    friend Monomial colon_quotient(const Monomial& u, const Monomial& m);

    /// Canonical (graded-lexicographic) order: lower degree first; within a
    /// degree the lexicographically larger exponent vector first, so x1
    /// sorts before x2.  Equal ideals serialize identically under this order.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> e_;
    int deg_ = 0;
    VarMask mask_ = 0;
    bool squarefree_ = true;
};

/// A monomial ideal given by its unique minimal generating set, canonically
/// sorted.  The zero ideal has no generators; the unit ideal is generated
/// by 1.  Values are immutable; all operations are pure functions.
class MonomialIdeal {
public:
    MonomialIdeal() = default;                 // zero ideal in 0 variables
    explicit MonomialIdeal(int n) : n_(n) {}   // zero ideal in n variables

    /// Minimalize + canonically sort; this is the only constructor path,
    /// so every MonomialIdeal in the program is in canonical form.
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);

    int vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;
    /// True when all generators share one degree (vacuously true only
    /// for nonzero ideals; the zero ideal returns false).
    bool is_equigenerated() const;

    /// Ideal membership: some generator divides m.
    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }
    friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// A monomial prime ideal, identified by the variables generating it.
struct PrimeRef {
    std::vector<int> vars; // 0-based, sorted ascending

    int height() const { return static_cast<int>(vars.size()); }
    VarMask mask() const { return vars_to_mask(vars); }
    MonomialIdeal to_ideal(int n) const;

    friend bool operator==(const PrimeRef& a, const PrimeRef& b) { return a.vars == b.vars; }
    friend bool operator<(const PrimeRef& a, const PrimeRef& b) { return a.vars < b.vars; }
};

// ---- monomial-ideal arithmetic ----

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_scale(const Monomial& m, const MonomialIdeal& I);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

VarMask support(const MonomialIdeal& I);
Monomial ideal_gcd(const MonomialIdeal& I); // error on the zero ideal
int ideal_degree(const MonomialIdeal& I);   // max generator degree; error on zero

/// Ideal generated by the square-free degree-i monomials of a square-free I.
MonomialIdeal squarefree_component(const MonomialIdeal& I, int i);
/// Ideal generated by all degree-i elements of I.
MonomialIdeal graded_component(const MonomialIdeal& I, int i);

/// All degree-d monomials with exponent of x_j capped at caps[j].
/// Infeasible caps (sum < d) yield the zero ideal.
MonomialIdeal veronese_type(int n, int d, const std::vector<int>& caps);
/// All square-free degree-d monomials: the uniform matroid U_{d,n}.
MonomialIdeal squarefree_veronese(int n, int d);

} // namespace scmm
