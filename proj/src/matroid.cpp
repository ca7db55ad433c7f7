#include "scmm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

namespace scmm {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BasisFamily BasisFamily::from_ideal(const MonomialIdeal& I) {
    if (I.is_zero()) throw degenerate_ideal_error("zero ideal has no basis family");
    if (!I.is_squarefree()) throw not_squarefree_error(std::string("non-square-free generator"));
    if (!I.is_equigenerated()) throw error("basis family needs a single generation degree");
    BasisFamily B;
    B.n = I.vars();
    B.d = I.generators().front().degree();
    for (const Monomial& g : I.generators())
        B.bases.push_back(static_cast<std::uint32_t>(g.support()));
    std::sort(B.bases.begin(), B.bases.end());
    return B;
}

MonomialIdeal BasisFamily::to_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(bases.size());
    for (std::uint32_t b : bases) gens.push_back(Monomial::from_support(n, b));
    return MonomialIdeal::from_generators(n, std::move(gens));
}

namespace {

// Membership oracle over square-free basis masks.  For small n a direct
// lookup table; the enumeration loop reuses one table per thread with an
// epoch stamp so clearing is O(1).
class MaskSet {
public:
    explicit MaskSet(int n) : stamp_(std::size_t{1} << n, 0) {}
    void begin_epoch() { ++epoch_; }
    void insert(std::uint32_t m) { stamp_[m] = epoch_; }
    bool contains(std::uint32_t m) const { return stamp_[m] == epoch_; }

private:
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
};

bool exchange_ok_masks(const std::vector<std::uint32_t>& bases, const MaskSet& members) {
    for (std::uint32_t u : bases) {
        for (std::uint32_t v : bases) {
            if (u == v) continue;
            std::uint32_t from = u & ~v;
            std::uint32_t to = v & ~u;
            for (std::uint32_t fi = from; fi;) {
                std::uint32_t ibit = fi & (~fi + 1);
                fi ^= ibit;
                std::uint32_t base = u ^ ibit;
                bool found = false;
                for (std::uint32_t tj = to; tj;) {
                    std::uint32_t jbit = tj & (~tj + 1);
                    tj ^= jbit;
                    if (members.contains(base | jbit)) { found = true; break; }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

bool exchange_ok_general(const std::vector<Monomial>& gens) {
    std::map<std::vector<int>, bool> members;
    for (const Monomial& g : gens) members[g.exponents()] = true;
    int n = gens.front().vars();
    std::vector<int> probe;
    for (const Monomial& u : gens) {
        for (const Monomial& v : gens) {
            if (u == v) continue;
            for (int i = 0; i < n; ++i) {
                if (v.exponent(i) >= u.exponent(i)) continue;
                bool found = false;
                for (int j = 0; j < n && !found; ++j) {
                    if (u.exponent(j) >= v.exponent(j)) continue;
                    probe = u.exponents();
                    --probe[i];
                    ++probe[j];
                    found = members.count(probe) > 0;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_polymatroidal(const MonomialIdeal& I) {
    if (I.is_zero()) throw degenerate_ideal_error("zero ideal");
    if (!I.is_equigenerated()) return false;
    if (I.size() == 1) return true;
    if (I.is_squarefree() && I.vars() <= 24) {
        MaskSet members(I.vars());
        members.begin_epoch();
        std::vector<std::uint32_t> bases;
        bases.reserve(I.size());
        for (const Monomial& g : I.generators()) {
            auto m = static_cast<std::uint32_t>(g.support());
            bases.push_back(m);
            members.insert(m);
        }
        return exchange_ok_masks(bases, members);
    }
    return exchange_ok_general(I.generators());
}

bool is_matroidal(const MonomialIdeal& I) {
    if (I.is_zero()) throw degenerate_ideal_error("zero ideal");
    return I.is_squarefree() && is_polymatroidal(I);
}

void enumerate_matroidal(int n, int d, const EnumerateOptions& opts,
                         const std::function<void(const MonomialIdeal&)>& sink) {
    if (n < 1 || d < 1 || d > n || n > 24)
        throw out_of_regime_error("need 1 <= d <= n <= 24");
    long long nc = binomial(n, d);
    if (nc > 24)
        throw out_of_regime_error("binom(n,d) = " + std::to_string(nc) +
                                  " exceeds the exhaustive bound 24; use constructors instead");
    const int C = static_cast<int>(nc);

    // d-subsets in lex order of the index tuple; bit c of a candidate
    // selects combos[c].
    std::vector<std::uint32_t> combos;
    combos.reserve(C);
    {
        std::vector<int> idx(d);
        for (int k = 0; k < d; ++k) idx[k] = k;
        while (true) {
            std::uint32_t m = 0;
            for (int v : idx) m |= std::uint32_t{1} << v;
            combos.push_back(m);
            int k = d - 1;
            while (k >= 0 && idx[k] == n - d + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int t = k + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
        }
    }

    const std::uint32_t all_vars = (std::uint32_t{1} << n) - 1;
    const std::uint64_t total = (std::uint64_t{1} << C) - 1;

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hits) {
        MaskSet members(n);
        std::vector<std::uint32_t> bases;
        for (std::uint64_t cand = lo; cand < hi; ++cand) {
            std::uint32_t sup = 0;
            std::uint32_t common = all_vars;
            bases.clear();
            for (std::uint64_t rest = cand; rest;) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint32_t b = combos[c];
                bases.push_back(b);
                sup |= b;
                common &= b;
            }
            if (opts.full_support && sup != all_vars) continue;
            if (opts.gcd_one && common != 0) continue;
            members.begin_epoch();
            for (std::uint32_t b : bases) members.insert(b);
            if (exchange_ok_masks(bases, members)) hits.push_back(cand);
        }
    };

    int jobs = std::max(1, opts.jobs);
    std::vector<std::vector<std::uint64_t>> hits;
    if (jobs == 1 || total < 4096) {
        hits.resize(1);
        scan_range(1, total + 1, hits[0]);
    } else {
        hits.resize(jobs);
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / jobs + 1;
        for (int t = 0; t < jobs; ++t) {
            std::uint64_t lo = 1 + chunk * t;
            std::uint64_t hi = std::min(total + 1, lo + chunk);
            if (lo > total) break;
            pool.emplace_back([&, lo, hi, t] { scan_range(lo, hi, hits[t]); });
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& part : hits) {
        for (std::uint64_t cand : part) {
            BasisFamily B;
            B.n = n;
            B.d = d;
            for (std::uint64_t rest = cand; rest;) {
                int c = std::countr_zero(rest);
                rest &= rest - 1;
                B.bases.push_back(combos[c]);
            }
            sink(B.to_ideal());
        }
    }
}

std::vector<MonomialIdeal> enumerate_matroidal_ideals(int n, int d, const EnumerateOptions& opts) {
    std::vector<MonomialIdeal> out;
    enumerate_matroidal(n, d, opts, [&](const MonomialIdeal& I) { out.push_back(I); });
    return out;
}

} // namespace scmm
