#pragma once

// Squarefree monomial ideals given by their minimal generating set, the two
// complexes attached to them (facet complex and Stanley-Reisner complex),
// the f-ideal test in both the general f-vector form and the homogeneous
// perfect-set form, and the unmixedness characterizations.

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fideal/complex.hpp"
#include "fideal/monomial.hpp"
#include "fideal/perfect.hpp"

namespace fideal {

class Ideal {
public:
    /// gens must already be divisibility-minimal; use minimal_generators() to
    /// normalize arbitrary input. Generators of degree < 2 are out of scope.
    Ideal(int n, MonomialSet gens) : n_(n), gens_(std::move(gens)) {
        detail::check_ambient(n);
        if (gens_.empty()) throw std::invalid_argument("an ideal needs generators");
        for (const Monomial& g : gens_) {
            if (g.degree() < 2)
                throw std::invalid_argument("generator " + g.str() +
                                            " has degree < 2 (out of scope)");
            if (g.max_index() > n)
                throw std::invalid_argument("generator " + g.str() +
                                            " does not live in [" + std::to_string(n) + "]");
        }
        for (const Monomial& g : gens_)
            for (const Monomial& h : gens_)
                if (g != h && g.divides(h))
                    throw std::invalid_argument("generating set is not minimal: " + g.str() +
                                                " divides " + h.str());
    }

    int n() const { return n_; }
    const MonomialSet& generators() const { return gens_; }

    bool homogeneous() const { return gens_.homogeneous(); }
    int degree() const { return gens_.degree(); }

    friend bool operator==(const Ideal&, const Ideal&) = default;

private:
    int n_;
    MonomialSet gens_;
};

/// Normalizes an arbitrary nonempty generator list to G(I) by dropping
/// divisibility-dominated elements.
inline Ideal minimal_generators(int n, const MonomialSet& gens) {
    if (gens.empty()) throw std::invalid_argument("an ideal needs generators");
    std::vector<Monomial> keep;
    for (const Monomial& g : gens) {
        bool dominated = false;
        for (const Monomial& h : gens)
            if (h != g && h.divides(g)) { dominated = true; break; }
        if (!dominated) keep.push_back(g);
    }
    return Ideal(n, MonomialSet(std::move(keep)));
}

/// The complex generated by the supports of G(I); for minimal G(I) the
/// generators are exactly the facets.
inline SimplicialComplex facet_complex(const Ideal& ideal) {
    return SimplicialComplex::from_generators(ideal.n(), ideal.generators());
}

namespace detail {

inline bool contains_generator(Monomial face, const MonomialSet& gens) {
    for (const Monomial& g : gens)
        if (g.divides(face)) return true;
    return false;
}

// Descends from [n], peeling one index of some contained generator at a time;
// every maximal generator-free subset is reachable this way.
inline void descend_independent(Monomial s, const MonomialSet& gens,
                                std::unordered_set<std::uint64_t>& visited,
                                std::vector<Monomial>& independent) {
    if (!visited.insert(s.mask()).second) return;
    Monomial offender{};
    for (const Monomial& g : gens)
        if (g.divides(s)) { offender = g; break; }
    if (offender.is_unit()) {
        independent.push_back(s);
        return;
    }
    for (int i : offender.indices())
        descend_independent(s.minus(Monomial{}.with(i)), gens, visited, independent);
}

}  // namespace detail

/// The Stanley-Reisner complex: faces are the subsets of [n] containing no
/// generator's support; returned by its facet list (the maximal such sets).
inline SimplicialComplex stanley_reisner_complex(const Ideal& ideal) {
    const MonomialSet& gens = ideal.generators();
    std::unordered_set<std::uint64_t> visited;
    std::vector<Monomial> independent;
    detail::descend_independent(full_support(ideal.n()), gens, visited, independent);

    std::vector<Monomial> facets;
    for (const Monomial& s : independent) {
        bool maximal = true;
        for (int i = 1; i <= ideal.n() && maximal; ++i) {
            if (s.contains(i)) continue;
            if (!detail::contains_generator(s.with(i), gens)) maximal = false;
        }
        if (maximal) facets.push_back(s);
    }
    std::sort(facets.begin(), facets.end());
    return SimplicialComplex::from_facets_unchecked(ideal.n(), std::move(facets));
}

/// The general f-ideal test: both complexes share one f-vector (sequence
/// equality, so differing dimensions already fail).
inline bool is_f_ideal(const Ideal& ideal) {
    return f_vector(facet_complex(ideal)) == f_vector(stanley_reisner_complex(ideal));
}

/// Homogeneous degree-d route: G(I) perfect and |G(I)| = C(n,d)/2. Agrees
/// with is_f_ideal on every homogeneous input.
inline bool is_f_ideal_homogeneous(const Ideal& ideal, int d) {
    for (const Monomial& g : ideal.generators())
        if (g.degree() != d)
            throw std::invalid_argument("generator " + g.str() + " does not have degree " +
                                        std::to_string(d));
    if (2 * ideal.generators().size() != binomial(ideal.n(), d)) return false;
    return is_perfect(ideal.generators(), ideal.n(), d).perfect();
}

enum class UnmixedMethod { direct, dual };

/// Unmixedness of a homogeneous degree-d ideal.
///
/// direct: requires I to be an f-ideal (error otherwise) and tests whether
/// the complementary layer sm(S)_d \ G(I) is lower perfect.
///
/// dual: decides "unmixed f-ideal" outright via three conditions —
/// |G(I)| = C(n,d)/2, dim of the Alexander dual of the facet complex equals
/// n-d-1, and the complex generated by the complementary layer is d-flag.
inline bool is_unmixed_f_ideal(const Ideal& ideal, int d, UnmixedMethod method) {
    for (const Monomial& g : ideal.generators())
        if (g.degree() != d)
            throw std::invalid_argument("generator " + g.str() + " does not have degree " +
                                        std::to_string(d));
    const int n = ideal.n();
    const MonomialSet rest = enumerate_degree(n, d).set_minus(ideal.generators());

    if (method == UnmixedMethod::direct) {
        if (!is_f_ideal_homogeneous(ideal, d))
            throw std::invalid_argument("the direct unmixedness test applies to f-ideals only");
        return is_perfect(rest, n, d).lower;
    }

    if (2 * ideal.generators().size() != binomial(n, d)) return false;
    if (dimension(alexander_dual(facet_complex(ideal))) != n - d - 1) return false;
    return is_d_flag(SimplicialComplex::from_generators(n, rest), d);
}

}  // namespace fideal
