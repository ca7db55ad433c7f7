#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scmm/errors.hpp"

namespace scmm {

/// Coefficient field for homology ranks.  The default is the rationals,
/// computed exactly by fraction-free elimination over arbitrary-precision
/// integers; a prime field is selectable for speed.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint32_t p);
    /// Accepts "q" or "gf:<p>".
    static FieldSpec parse(const std::string& s);
    std::string name() const;
};

/// Ranks of reduced homology by degree (k >= -1).  Absent keys are zero.
struct RankProfile {
    std::map<int, long long> dims;

    long long rank(int k) const {
        auto it = dims.find(k);
        return it == dims.end() ? 0 : it->second;
    }
    bool trivial() const { return dims.empty(); }
    friend bool operator==(const RankProfile& a, const RankProfile& b) { return a.dims == b.dims; }
};

/// A simplicial complex on vertices 0..n-1, stored as the full face list
/// bucketed by cardinality (bucket k holds faces with k vertices, so bucket
/// 0 is the empty face).  The void complex (no faces at all) and the
/// irrelevant complex {∅} are distinct values.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex irrelevant_complex(int n); // {∅}
    static SimplicialComplex full_simplex(int n);
    /// Downward closure of the given faces.
    static SimplicialComplex from_facets(int n, std::vector<std::uint32_t> facets);

    int vertex_count() const { return n_; }
    bool is_void() const { return faces_.empty(); }
    /// Dimension of the complex; -1 for {∅}.  Undefined on the void complex.
    int dim() const;
    bool contains(std::uint32_t face) const;
    long long face_count() const;
    /// faces_by_card()[k] = sorted masks of the k-vertex faces.
    const std::vector<std::vector<std::uint32_t>>& faces_by_card() const { return faces_; }
    std::vector<std::uint32_t> facets() const;
    /// Reduced Euler characteristic sum_k (-1)^k #faces of dim k, empty face included.
    long long reduced_euler() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.faces_ == b.faces_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<std::uint32_t>> faces_; // index = cardinality

    friend SimplicialComplex dual_complex(const SimplicialComplex&);
};

/// Alexander dual: { V \ F : F not a face }.
SimplicialComplex dual_complex(const SimplicialComplex& K);

/// Ranks of reduced simplicial homology over the configured field.
/// rank_k = null(boundary_k) - rank(boundary_{k+1}); the irrelevant complex
/// has rank 1 in degree -1, the void complex is trivial.
RankProfile reduced_homology(const SimplicialComplex& K, const FieldSpec& field = {});

/// Rank of a dense integer matrix over the field (exposed for the Betti
/// machinery; entries are small, intermediates may not be).
long long matrix_rank(const std::vector<std::vector<int>>& M, const FieldSpec& field);

} // namespace scmm
