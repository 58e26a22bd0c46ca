#pragma once

// Facet-list simplicial complexes over the vertex set [n]. Faces are stored
// as Monomial bitmasks. Facets form an antichain and are kept colex sorted.
//
// The only complex with an empty facet list we ever hand out is none at all:
// construction from generators rejects empty input. The irrelevant complex
// { empty face } can still arise as an Alexander dual (sole facet ()); it is
// representable and round-trips through the dual.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fideal/monomial.hpp"

namespace fideal {

class SimplicialComplex {
public:
    /// Builds the complex generated by the given nonempty faces; dominated
    /// generators are dropped so the stored facets form an antichain.
    static SimplicialComplex from_generators(int n, const MonomialSet& faces) {
        detail::check_ambient(n);
        if (faces.empty())
            throw std::invalid_argument("a complex needs at least one generating face");
        std::vector<Monomial> maximal;
        for (const Monomial& f : faces) {
            if (f.is_unit())
                throw std::invalid_argument("generating faces must be nonempty");
            if (f.max_index() > n)
                throw std::invalid_argument("face " + f.str() + " has a vertex beyond " +
                                            std::to_string(n));
            bool dominated = false;
            for (const Monomial& g : faces)
                if (g != f && f.divides(g)) { dominated = true; break; }
            if (!dominated) maximal.push_back(f);
        }
        return SimplicialComplex(n, std::move(maximal));
    }

    /// Facets must already be an antichain (used internally, e.g. by the
    /// Alexander dual, which may legitimately produce the empty facet).
    static SimplicialComplex from_facets_unchecked(int n, std::vector<Monomial> facets) {
        return SimplicialComplex(n, std::move(facets));
    }

    int n() const { return n_; }
    const std::vector<Monomial>& facets() const { return facets_; }

    bool is_face(Monomial f) const {
        for (const Monomial& g : facets_)
            if (f.divides(g)) return true;
        return false;
    }

    bool is_full_simplex() const {
        return facets_.size() == 1 && facets_.front() == full_support(n_);
    }

    /// All nonempty faces, colex ascending.
    std::vector<Monomial> faces() const {
        std::unordered_set<std::uint64_t> seen;
        for (const Monomial& f : facets_) {
            // enumerate submasks of the facet
            std::uint64_t sub = f.mask();
            while (sub) {
                seen.insert(sub);
                sub = (sub - 1) & f.mask();
            }
        }
        std::vector<Monomial> out;
        out.reserve(seen.size());
        for (std::uint64_t m : seen) out.push_back(Monomial::from_mask(m));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<Monomial> facets)
        : n_(n), facets_(std::move(facets)) {
        std::sort(facets_.begin(), facets_.end());
    }

    int n_ = 0;
    std::vector<Monomial> facets_;
};

struct FVector {
    // counts[i] = number of i-dimensional faces (cardinality i+1); the empty
    // face is not counted, so the irrelevant complex has an empty vector.
    std::vector<std::uint64_t> counts;

    int dim() const { return static_cast<int>(counts.size()) - 1; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(counts[i]);
        }
        return out + ")";
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

inline int dimension(const SimplicialComplex& dx) {
    int best = -1;
    for (const Monomial& f : dx.facets()) best = std::max(best, f.degree() - 1);
    return best;
}

inline FVector f_vector(const SimplicialComplex& dx) {
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(std::max(0, dimension(dx) + 1)), 0);
    for (const Monomial& f : dx.faces())
        ++fv.counts[static_cast<std::size_t>(f.degree() - 1)];
    return fv;
}

/// Inclusion-minimal subsets of [n] that are not faces, colex ascending.
/// A nonface is minimal exactly when all its one-smaller subsets are faces.
inline std::vector<Monomial> minimal_nonfaces(const SimplicialComplex& dx) {
    std::vector<Monomial> out;
    const std::uint64_t full = full_support(dx.n()).mask();
    for (std::uint64_t m = 1; m <= full; ++m) {
        const Monomial f = Monomial::from_mask(m);
        if (dx.is_face(f)) continue;
        bool minimal = true;
        for (std::uint64_t b = m; b; b &= b - 1) {
            const std::uint64_t low = b & (~b + 1);
            if (!dx.is_face(Monomial::from_mask(m ^ low))) { minimal = false; break; }
        }
        if (minimal) out.push_back(f);
    }
    return out;
}

inline bool is_d_flag(const SimplicialComplex& dx, int d) {
    for (const Monomial& f : minimal_nonfaces(dx))
        if (f.degree() != d) return false;
    return true;
}

/// Alexander dual: faces are the complements of nonfaces. Its facets are the
/// complements of the minimal nonfaces. Undefined (error) for the full
/// simplex, whose dual would have no faces at all.
inline SimplicialComplex alexander_dual(const SimplicialComplex& dx) {
    if (dx.is_full_simplex())
        throw std::invalid_argument("the full simplex has no Alexander dual");
    const Monomial full = full_support(dx.n());
    std::vector<Monomial> facets;
    for (const Monomial& f : minimal_nonfaces(dx)) facets.push_back(full.minus(f));
    return SimplicialComplex::from_facets_unchecked(dx.n(), std::move(facets));
}

}  // namespace fideal
