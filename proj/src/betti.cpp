#include "scmm/betti.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace scmm {

void BettiTable::add(int i, const Monomial& b, long long rank) {
    if (rank == 0) return;
    entries_[{i, b}] += rank;
    totals_[{i, b.degree()}] += rank;
}

long long BettiTable::total(int i, int j) const {
    auto it = totals_.find({i, j});
    return it == totals_.end() ? 0 : it->second;
}

long long BettiTable::multigraded(int i, const Monomial& b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
    int m = 0;
    for (const auto& [key, rank] : totals_) m = std::max(m, key.first);
    return m;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [key, rank] : totals_) r = std::max(r, key.second - key.first);
    return r;
}

std::string BettiTable::render_text() const {
    if (totals_.empty()) return "(empty table)\n";
    int imax = 0, jmin = totals_.begin()->second, jmax = 0;
    jmin = 1 << 20;
    for (const auto& [key, rank] : totals_) {
        imax = std::max(imax, key.first);
        jmin = std::min(jmin, key.second);
        jmax = std::max(jmax, key.second);
    }
    std::ostringstream os;
    auto cell = [&](const std::string& s) {
        os << ' ';
        for (std::size_t k = s.size(); k < 6; ++k) os << ' ';
        os << s;
    };
    cell("");
    for (int j = jmin; j <= jmax; ++j) cell("j=" + std::to_string(j));
    os << '\n';
    for (int i = 0; i <= imax; ++i) {
        cell("i=" + std::to_string(i));
        for (int j = jmin; j <= jmax; ++j) {
            long long v = total(i, j);
            cell(v ? std::to_string(v) : ".");
        }
        os << '\n';
    }
    return os.str();
}

std::string BettiTable::render_json() const {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, rank] : totals_)
        entries.push_back({key.first, key.second, rank});
    nlohmann::ordered_json j;
    j["entries"] = entries;
    return j.dump();
}

namespace {

constexpr std::size_t kLatticeBudget = std::size_t{1} << 18;

// The lcm lattice: closure of the generator multidegrees under pairwise lcm.
// Only these multidegrees can carry nonzero Betti numbers.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I) {
    std::set<Monomial> seen;
    std::vector<Monomial> queue;
    for (const Monomial& g : I.generators())
        if (seen.insert(g).second) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Monomial b = queue[head]; // copy: queue may reallocate
        for (const Monomial& g : I.generators()) {
            Monomial l = lcm(b, g);
            if (seen.insert(l).second) {
                queue.push_back(l);
                if (queue.size() > kLatticeBudget)
                    throw budget_error("lcm lattice exceeds budget");
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

// K^b(I) on the support of b: the facets are, per generator g dividing b,
// the variable sets { k : deg_k(g) <= deg_k(b) - 1 }; a square-free tau is a
// face iff it lies under one of them.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& b,
                               const std::vector<int>& verts) {
    const int nv = static_cast<int>(verts.size());
    std::vector<std::uint32_t> facets;
    for (const Monomial& g : I.generators()) {
        if (!g.divides(b)) continue;
        std::uint32_t f = 0;
        for (int k = 0; k < nv; ++k)
            if (g.exponent(verts[k]) <= b.exponent(verts[k]) - 1) f |= std::uint32_t{1} << k;
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(nv, std::move(facets));
}

} // namespace

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, int jobs) {
    if (I.is_zero()) throw degenerate_ideal_error("Betti table of the zero ideal");
    std::vector<Monomial> lattice = lcm_lattice(I);

    auto profile_at = [&](const Monomial& b) {
        std::vector<int> verts = mask_to_vars(b.support());
        return reduced_homology(upper_koszul(I, b, verts), field);
    };

    std::vector<RankProfile> profiles(lattice.size());
    jobs = std::max(1, jobs);
    if (jobs == 1 || lattice.size() < 16) {
        for (std::size_t k = 0; k < lattice.size(); ++k) profiles[k] = profile_at(lattice[k]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = lattice.size() / jobs + 1;
        for (int t = 0; t < jobs; ++t) {
            std::size_t lo = chunk * t, hi = std::min(lattice.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t k = lo; k < hi; ++k) profiles[k] = profile_at(lattice[k]);
            });
        }
        for (auto& th : pool) th.join();
    }

    BettiTable T;
    for (std::size_t k = 0; k < lattice.size(); ++k)
        for (const auto& [deg, rank] : profiles[k].dims)
            T.add(deg + 1, lattice[k], rank); // beta_{i,b} = h~_{i-1}(K^b)
    return T;
}

int regularity(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero() || I.is_unit())
        throw degenerate_ideal_error("regularity needs a nonzero proper ideal");
    return betti_table(I, field).regularity();
}

int projdim_quotient(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero() || I.is_unit())
        throw degenerate_ideal_error("projective dimension needs a nonzero proper ideal");
    return betti_table(I, field).max_index() + 1;
}

bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero()) throw degenerate_ideal_error("zero ideal");
    if (!I.is_equigenerated()) return false;
    return regularity(I, field) == I.generators().front().degree();
}

namespace {

// (prefix) : u is generated by variables iff every colon quotient v/gcd(v,u)
// is divisible by some z/gcd(z,u) that is a single variable.
bool prefix_extensible(const std::vector<Monomial>& gens, const std::vector<int>& prefix,
                       int candidate) {
    const Monomial& u = gens[candidate];
    std::vector<int> vars; // variables x_t with deg_t(z) == deg_t(u) + 1 witnessing
    for (int z : prefix) {
        const Monomial q = colon_quotient(gens[z], u);
        if (q.degree() == 1) vars.push_back(mask_to_vars(q.support())[0]);
    }
    for (int v : prefix) {
        const Monomial& w = gens[v];
        bool covered = false;
        for (int t : vars)
            if (w.exponent(t) > u.exponent(t)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

bool whole_order_ok(const std::vector<Monomial>& gens, const std::vector<int>& order) {
    std::vector<int> prefix;
    for (int k : order) {
        if (!prefix.empty() && !prefix_extensible(gens, prefix, k)) return false;
        prefix.push_back(k);
    }
    return true;
}

// Descending reverse-lex within the (already degree-sorted) generators:
// u before v iff the last nonzero entry of u - v is negative.
bool revlex_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.vars() - 1; i >= 0; --i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0;
    }
    return false;
}

} // namespace

LinearQuotients linear_quotients_order(const MonomialIdeal& I, int budget) {
    if (I.is_zero()) throw degenerate_ideal_error("zero ideal");
    const std::vector<Monomial>& gens = I.generators();
    const int m = static_cast<int>(gens.size());
    LinearQuotients out;

    std::vector<int> order(m);
    for (int k = 0; k < m; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return revlex_before(gens[a], gens[b]); });
    if (whole_order_ok(gens, order)) {
        out.status = LQStatus::found;
        for (int k : order) out.order.push_back(gens[k]);
        return out;
    }

    if (m > budget) {
        out.status = LQStatus::unknown;
        return out;
    }

    // Whether a prefix extends depends only on the prefix as a set, so the
    // failed sets are memoized.  Degree monotonicity: a generator may enter
    // only once everything of smaller degree is already placed.
    std::vector<long long> below(m, 0); // mask of strictly smaller degree gens
    {
        long long acc = 0;
        int cur = gens[0].degree();
        long long cur_mask = 0;
        for (int k = 0; k < m; ++k) {
            if (gens[k].degree() != cur) {
                acc |= cur_mask;
                cur = gens[k].degree();
                cur_mask = 0;
            }
            below[k] = acc;
            cur_mask |= 1LL << k;
        }
    }

    std::unordered_set<long long> dead;
    std::vector<int> path;
    const long long full = (1LL << m) - 1;

    std::function<bool(long long)> dfs = [&](long long used) -> bool {
        if (used == full) return true;
        if (dead.count(used)) return false;
        for (int k = 0; k < m; ++k) {
            if (used & (1LL << k)) continue;
            if ((below[k] & ~used) != 0) continue; // smaller degrees must come first
            if (!path.empty() && !prefix_extensible(gens, path, k)) continue;
            path.push_back(k);
            if (dfs(used | (1LL << k))) return true;
            path.pop_back();
        }
        dead.insert(used);
        return false;
    };

    if (dfs(0)) {
        out.status = LQStatus::found;
        for (int k : path) out.order.push_back(gens[k]);
    } else {
        out.status = LQStatus::none;
    }
    return out;
}

bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field) {
    if (I.is_zero() || I.is_unit())
        throw degenerate_ideal_error("componentwise linearity needs a nonzero proper ideal");
    if (I.is_squarefree()) {
        for (int i = 1; i <= I.vars(); ++i) {
            MonomialIdeal C = squarefree_component(I, i);
            if (C.is_zero()) continue;
            if (regularity(C, field) != i) return false;
        }
        return true;
    }
    int dmin = I.generators().front().degree();
    int dmax = ideal_degree(I);
    for (int i = dmin; i <= dmax; ++i) {
        MonomialIdeal C = graded_component(I, i);
        if (C.is_zero()) continue;
        if (regularity(C, field) != i) return false;
    }
    return regularity(I, field) == dmax;
}

} // namespace scmm
