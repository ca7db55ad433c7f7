#include "scmm/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace scmm {

int popcount(VarMask m) { return std::popcount(m); }

std::vector<int> mask_to_vars(VarMask m) {
    std::vector<int> out;
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

VarMask vars_to_mask(const std::vector<int>& vars) {
    VarMask m = 0;
    for (int v : vars) m |= var_bit(v);
    return m;
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (static_cast<int>(e_.size()) > kMaxVars)
        throw budget_error("too many variables (limit " + std::to_string(kMaxVars) + ")");
    for (int i = 0; i < static_cast<int>(e_.size()); ++i) {
        int e = e_[i];
        if (e < 0) throw error("negative exponent");
        deg_ += e;
        if (e > 0) mask_ |= var_bit(i);
        if (e > 1) squarefree_ = false;
    }
}

Monomial Monomial::one(int n) { return Monomial(std::vector<int>(n, 0)); }

Monomial Monomial::variable(int n, int var) {
    std::vector<int> e(n, 0);
    e[var] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_support(int n, VarMask vars) {
    std::vector<int> e(n, 0);
    for (int v : mask_to_vars(vars)) e[v] = 1;
    return Monomial(std::move(e));
}

namespace {
void check_same_vars(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars())
        throw ambient_mismatch("monomials live in different variable counts");
}
} // namespace

bool Monomial::divides(const Monomial& m) const {
    check_same_vars(*this, m);
    if (deg_ > m.deg_ || (mask_ & ~m.mask_)) return false;
    if (squarefree_ && m.squarefree_) return true; // mask containment settled it
    for (int i = 0; i < vars(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.vars());
    for (int i = 0; i < a.vars(); ++i) e[i] = a.e_[i] + b.e_[i];
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.vars());
    for (int i = 0; i < a.vars(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_vars(a, b);
    std::vector<int> e(a.vars());
    for (int i = 0; i < a.vars(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& u, const Monomial& m) {
    check_same_vars(u, m);
    std::vector<int> e(u.vars());
    for (int i = 0; i < u.vars(); ++i) e[i] = std::max(u.e_[i] - m.e_[i], 0);
    return Monomial(std::move(e));
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return a.e_ > b.e_; // larger exponent vector first within a degree
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != n)
            throw ambient_mismatch("generator has wrong variable count");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Divisibility-minimal elements only; a divisor has strictly smaller
    // degree, so after the graded sort only earlier entries can absorb.
    std::vector<Monomial> minimal;
    for (const Monomial& g : gens) {
        bool absorbed = false;
        for (const Monomial& m : minimal) {
            if (m.degree() >= g.degree()) break;
            if (m.divides(g)) { absorbed = true; break; }
        }
        if (!absorbed) minimal.push_back(g);
    }
    MonomialIdeal I(n);
    I.gens_ = std::move(minimal);
    return I;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
    if (gens_.empty()) return false;
    int d = gens_.front().degree();
    return std::all_of(gens_.begin(), gens_.end(),
                       [d](const Monomial& g) { return g.degree() == d; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    if (n_ != other.n_) throw ambient_mismatch("ideals live in different rings");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.gens_ < b.gens_;
}

MonomialIdeal PrimeRef::to_ideal(int n) const {
    std::vector<Monomial> gens;
    gens.reserve(vars.size());
    for (int v : vars) gens.push_back(Monomial::variable(n, v));
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    return MonomialIdeal::from_generators(n, std::move(gens));
}

namespace {
void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw ambient_mismatch("ideals live in different rings");
}
} // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::from_generators(a.vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (const Monomial& u : a.generators())
        for (const Monomial& v : b.generators())
            gens.push_back(lcm(u, v));
    return MonomialIdeal::from_generators(a.vars(), std::move(gens));
}

MonomialIdeal monomial_scale(const Monomial& m, const MonomialIdeal& I) {
    if (m.vars() != I.vars())
        throw ambient_mismatch("monomial and ideal live in different rings");
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const Monomial& g : I.generators()) gens.push_back(m * g);
    return MonomialIdeal::from_generators(I.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    if (m.vars() != I.vars())
        throw ambient_mismatch("monomial and ideal live in different rings");
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const Monomial& g : I.generators()) gens.push_back(colon_quotient(g, m));
    return MonomialIdeal::from_generators(I.vars(), std::move(gens));
}

VarMask support(const MonomialIdeal& I) {
    VarMask m = 0;
    for (const Monomial& g : I.generators()) m |= g.support();
    return m;
}

Monomial ideal_gcd(const MonomialIdeal& I) {
    if (I.is_zero()) throw degenerate_ideal_error("gcd of the zero ideal is undefined");
    Monomial g = I.generators().front();
    for (std::size_t i = 1; i < I.size(); ++i) g = gcd(g, I.generators()[i]);
    return g;
}

int ideal_degree(const MonomialIdeal& I) {
    if (I.is_zero()) throw degenerate_ideal_error("degree of the zero ideal is undefined");
    int d = 0;
    for (const Monomial& g : I.generators()) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal squarefree_component(const MonomialIdeal& I, int i) {
    if (i < 0) throw error("negative component degree");
    if (!I.is_squarefree()) {
        for (const Monomial& g : I.generators())
            if (!g.is_squarefree())
                throw not_squarefree_error("generator with a squared variable");
    }
    int n = I.vars();
    if (I.is_zero() || i > n) return MonomialIdeal(n);
    // All square-free degree-i multiples of the generators: walk the
    // i-subsets of the variables and keep those some generator divides.
    std::vector<Monomial> gens;
    std::vector<int> idx(i);
    for (int k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        VarMask s = 0;
        for (int v : idx) s |= var_bit(v);
        for (const Monomial& g : I.generators()) {
            if (g.degree() <= i && (g.support() & ~s) == 0) {
                gens.push_back(Monomial::from_support(n, s));
                break;
            }
        }
        int k = i - 1;
        while (k >= 0 && idx[k] == n - i + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int t = k + 1; t < i; ++t) idx[t] = idx[t - 1] + 1;
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

namespace {
// Enumerate exponent vectors of total degree d under per-variable caps.
void walk_degrees(int n, int d, const std::vector<int>& caps, std::vector<int>& cur, int pos,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == n) {
        if (d == 0) emit(cur);
        return;
    }
    int cap = std::min(caps.empty() ? d : caps[pos], d);
    for (int e = 0; e <= cap; ++e) {
        cur[pos] = e;
        walk_degrees(n, d - e, caps, cur, pos + 1, emit);
    }
    cur[pos] = 0;
}
} // namespace

MonomialIdeal graded_component(const MonomialIdeal& I, int i) {
    if (i < 0) throw error("negative component degree");
    int n = I.vars();
    std::vector<Monomial> gens;
    std::vector<int> cur(n, 0);
    for (const Monomial& g : I.generators()) {
        if (g.degree() > i) continue;
        walk_degrees(n, i - g.degree(), {}, cur, 0, [&](const std::vector<int>& e) {
            std::vector<int> prod(n);
            for (int k = 0; k < n; ++k) prod[k] = e[k] + g.exponent(k);
            gens.emplace_back(std::move(prod));
        });
        if (gens.size() > (1u << 22))
            throw budget_error("graded component too large");
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal veronese_type(int n, int d, const std::vector<int>& caps) {
    if (static_cast<int>(caps.size()) != n)
        throw ambient_mismatch("need one cap per variable");
    for (int c : caps)
        if (c < 1 || c > d) throw error("caps must satisfy 1 <= a_j <= d");
    std::vector<Monomial> gens;
    std::vector<int> cur(n, 0);
    walk_degrees(n, d, caps, cur, 0, [&](const std::vector<int>& e) {
        gens.emplace_back(e);
    });
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal squarefree_veronese(int n, int d) {
    if (d < 1 || d > n) throw error("square-free Veronese needs 1 <= d <= n");
    return veronese_type(n, d, std::vector<int>(n, 1));
}

} // namespace scmm
