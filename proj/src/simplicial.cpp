#include "scmm/simplicial.hpp"

#include <algorithm>
#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

namespace scmm {

using boost::multiprecision::cpp_int;

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (p < 2) throw error("field characteristic must be a prime >= 2");
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw error(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("gf:", 0) == 0) {
        try {
            return gf(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
        } catch (const std::logic_error&) {
            throw error("bad field spec: " + s);
        }
    }
    throw error("bad field spec: " + s + " (expected q or gf:<p>)");
}

std::string FieldSpec::name() const {
    return kind == Kind::rationals ? "q" : "gf:" + std::to_string(p);
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    SimplicialComplex K;
    K.n_ = n;
    return K;
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int n) {
    SimplicialComplex K;
    K.n_ = n;
    K.faces_.push_back({0});
    return K;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    std::vector<std::uint32_t> facets = {(std::uint32_t{1} << n) - 1};
    return from_facets(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::uint32_t> facets) {
    if (n < 0 || n > 24) throw budget_error("vertex budget is 24");
    SimplicialComplex K;
    K.n_ = n;
    if (facets.empty()) return K;

    long long bound = 0;
    for (std::uint32_t f : facets) {
        if (f >= (std::uint32_t{1} << n)) throw error("facet uses a vertex outside 0..n-1");
        bound += 1LL << std::popcount(f);
        if (bound > (1LL << 25)) throw budget_error("face enumeration too large");
    }

    // Keep only maximal faces, then take all subsets of each.
    std::sort(facets.begin(), facets.end(),
              [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t f : facets) {
        bool inside = false;
        for (std::uint32_t m : maximal)
            if ((f & ~m) == 0) { inside = true; break; }
        if (!inside) maximal.push_back(f);
    }

    std::vector<std::uint32_t> all;
    all.reserve(static_cast<std::size_t>(bound));
    for (std::uint32_t f : maximal) {
        std::uint32_t s = f;
        while (true) {
            all.push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    K.faces_.resize(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t s : all) K.faces_[std::popcount(s)].push_back(s);
    while (!K.faces_.empty() && K.faces_.back().empty()) K.faces_.pop_back();
    return K;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw error("the void complex has no dimension");
    return static_cast<int>(faces_.size()) - 2;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
    int c = std::popcount(face);
    if (c >= static_cast<int>(faces_.size())) return false;
    const auto& bucket = faces_[c];
    return std::binary_search(bucket.begin(), bucket.end(), face);
}

long long SimplicialComplex::face_count() const {
    long long t = 0;
    for (const auto& bucket : faces_) t += static_cast<long long>(bucket.size());
    return t;
}

std::vector<std::uint32_t> SimplicialComplex::facets() const {
    std::vector<std::uint32_t> out;
    for (int c = static_cast<int>(faces_.size()) - 1; c >= 0; --c) {
        for (std::uint32_t f : faces_[c]) {
            bool covered = false;
            for (std::uint32_t m : out)
                if ((f & ~m) == 0) { covered = true; break; }
            if (!covered) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long SimplicialComplex::reduced_euler() const {
    long long chi = 0;
    for (std::size_t c = 0; c < faces_.size(); ++c) {
        long long sgn = (c % 2 == 0) ? -1 : 1; // cardinality c = dimension c-1
        chi += sgn * static_cast<long long>(faces_[c].size());
    }
    return chi;
}

SimplicialComplex dual_complex(const SimplicialComplex& K) {
    int n = K.vertex_count();
    if (n > 24) throw budget_error("vertex budget is 24");
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    SimplicialComplex D;
    D.n_ = n;
    D.faces_.resize(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t f = 0; f <= all; ++f) {
        if (!K.contains(f)) {
            std::uint32_t c = all & ~f;
            D.faces_[std::popcount(c)].push_back(c);
        }
    }
    for (auto& bucket : D.faces_) std::sort(bucket.begin(), bucket.end());
    while (!D.faces_.empty() && D.faces_.back().empty()) D.faces_.pop_back();
    return D;
}

namespace {

long long rank_rationals(std::vector<std::vector<cpp_int>>& M) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    cpp_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        // Bareiss step: every 2x2 minor against the pivot divides exactly
        // by the previous pivot, keeping entries integral.
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) / prev;
            M[i][c] = 0;
        }
        prev = M[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

long long rank_prime(std::vector<std::vector<std::uint64_t>>& M, std::uint64_t p) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    auto inv = [p](std::uint64_t a) {
        // Fermat: a^(p-2) mod p
        std::uint64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        std::uint64_t pinv = inv(M[r][c] % p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t f = M[i][c] % p * pinv % p;
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j)
                M[i][j] = (M[i][j] + (p - f) * (M[r][j] % p)) % p;
        }
        ++r;
    }
    return static_cast<long long>(r);
}

} // namespace

long long matrix_rank(const std::vector<std::vector<int>>& M, const FieldSpec& field) {
    if (M.empty() || M[0].empty()) return 0;
    if (field.kind == FieldSpec::Kind::rationals) {
        std::vector<std::vector<cpp_int>> W(M.size(), std::vector<cpp_int>(M[0].size()));
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M[0].size(); ++j) W[i][j] = M[i][j];
        return rank_rationals(W);
    }
    const std::uint64_t p = field.p;
    std::vector<std::vector<std::uint64_t>> W(M.size(), std::vector<std::uint64_t>(M[0].size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[0].size(); ++j) {
            long long v = M[i][j] % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            W[i][j] = static_cast<std::uint64_t>(v);
        }
    return rank_prime(W, p);
}

namespace {

// Boundary from the card-c faces to the card-(c-1) faces, columns indexed by
// the fixed sorted face order so ranks are reproducible.
std::vector<std::vector<int>> boundary_matrix(const std::vector<std::uint32_t>& lower,
                                              const std::vector<std::uint32_t>& upper) {
    std::vector<std::vector<int>> M(lower.size(), std::vector<int>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        std::uint32_t f = upper[col];
        int t = 0;
        for (std::uint32_t rest = f; rest; ++t) {
            std::uint32_t bit = rest & (~rest + 1);
            rest ^= bit;
            std::uint32_t child = f ^ bit;
            auto it = std::lower_bound(lower.begin(), lower.end(), child);
            std::size_t row = static_cast<std::size_t>(it - lower.begin());
            M[row][col] = (t % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

} // namespace

RankProfile reduced_homology(const SimplicialComplex& K, const FieldSpec& field) {
    RankProfile out;
    if (K.is_void()) return out;
    const auto& faces = K.faces_by_card();
    const int top = static_cast<int>(faces.size()); // cardinalities 0..top-1
    // h_k lives at cardinality k+1; boundary_c maps card c to card c-1.
    std::vector<long long> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int c = 1; c < top; ++c) {
        auto M = boundary_matrix(faces[c - 1], faces[c]);
        ranks[c] = matrix_rank(M, field);
    }
    for (int c = 0; c < top; ++c) {
        long long h = static_cast<long long>(faces[c].size()) - ranks[c] -
                      (c + 1 <= top ? ranks[c + 1] : 0);
        if (h != 0) out.dims[c - 1] = h;
    }
    return out;
}

} // namespace scmm
