#pragma once

// The perfect-set calculus over squarefree monomial layers. A set M of
// degree-d monomials is upper perfect when every degree-(d+1) monomial is
// divisible by some member of M, and lower perfect when every degree-(d-1)
// monomial divides some member. "Without X" / "containing X" restrict both
// the set and the checked layers to monomials avoiding / containing X.

#include <optional>
#include <stdexcept>
#include <string>

#include "fideal/monomial.hpp"

namespace fideal {

enum class ShadowDirection { up, down };

struct PerfectVerdict {
    bool upper = false;
    bool lower = false;
    // Colex-least monomial witnessing a failed flag: degree d+1 and uncovered
    // when upper fails, else degree d-1 and covering nothing when lower fails.
    std::optional<Monomial> witness_failure;

    bool perfect() const { return upper && lower; }
};

/// Degree-e slice of the up-shadow (multiples) or down-shadow (divisors) of m.
inline MonomialSet shadow(const MonomialSet& m, int n, int e, ShadowDirection dir) {
    std::vector<Monomial> out;
    for (const Monomial& w : enumerate_degree(n, e)) {
        bool hit = false;
        for (const Monomial& v : m) {
            hit = dir == ShadowDirection::up ? v.divides(w) : w.divides(v);
            if (hit) break;
        }
        if (hit) out.push_back(w);
    }
    return MonomialSet::from_sorted_unique(std::move(out));
}

namespace detail {

inline void check_homogeneous_layer(const MonomialSet& m, int n, int d) {
    check_ambient(n);
    if (d < 0 || d > n)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [0, " +
                                    std::to_string(n) + "]");
    for (const Monomial& u : m) {
        if (u.degree() != d)
            throw std::invalid_argument("monomial " + u.str() + " does not have degree " +
                                        std::to_string(d));
        if (u.max_index() > n)
            throw std::invalid_argument("monomial " + u.str() + " does not live in [" +
                                        std::to_string(n) + "]");
    }
}

// Shared core: checks coverage of the given constraint layers.
inline PerfectVerdict perfect_against(const MonomialSet& m, const MonomialSet& up_layer,
                                      const MonomialSet& down_layer) {
    PerfectVerdict v;
    v.upper = true;
    for (const Monomial& w : up_layer) {
        bool covered = false;
        for (const Monomial& u : m)
            if (u.divides(w)) { covered = true; break; }
        if (!covered) {
            v.upper = false;
            v.witness_failure = w;
            break;
        }
    }
    v.lower = true;
    for (const Monomial& w : down_layer) {
        bool covering = false;
        for (const Monomial& u : m)
            if (w.divides(u)) { covering = true; break; }
        if (!covering) {
            v.lower = false;
            if (!v.witness_failure) v.witness_failure = w;
            break;
        }
    }
    return v;
}

inline MonomialSet layer_restricted(int n, int e, Monomial x, RestrictMode mode) {
    return restrict_set(enumerate_degree(n, e), x, mode);
}

}  // namespace detail

/// Perfection of M inside sm(S)_d. Boundary conventions: d = n is vacuously
/// upper perfect and d = 0 vacuously lower perfect; d = 1 is lower perfect
/// only for nonempty M, since the monomial 1 must divide into M.
inline PerfectVerdict is_perfect(const MonomialSet& m, int n, int d) {
    detail::check_homogeneous_layer(m, n, d);
    return detail::perfect_against(m, enumerate_degree(n, d + 1),
                                   enumerate_degree(n, d - 1));
}

/// Perfection without X (m and both checked layers avoid X) or containing X
/// (m and both layers contain X).
inline PerfectVerdict is_perfect_relative(const MonomialSet& m, int n, int d,
                                          Monomial x, RestrictMode mode) {
    detail::check_homogeneous_layer(m, n, d);
    for (const Monomial& u : m) {
        if (mode == RestrictMode::without && !u.disjoint_from(x))
            throw std::invalid_argument("monomial " + u.str() +
                                        " meets the excluded index set {" + x.str() + "}");
        if (mode == RestrictMode::containing && !x.divides(u))
            throw std::invalid_argument("monomial " + u.str() +
                                        " misses the required index set {" + x.str() + "}");
    }
    return detail::perfect_against(m, detail::layer_restricted(n, d + 1, x, mode),
                                   detail::layer_restricted(n, d - 1, x, mode));
}

/// Complement duality: M upper/lower perfect in degree d iff M' lower/upper
/// perfect in degree n-d. Encoded as a self-check that must always hold.
inline bool check_duality(const MonomialSet& m, int n, int d) {
    const PerfectVerdict direct = is_perfect(m, n, d);
    const PerfectVerdict dual = is_perfect(complement_set(m, n), n, n - d);
    return direct.upper == dual.lower && direct.lower == dual.upper;
}

/// Gluing: if A restricted away from k is perfect without k and the part
/// containing k is perfect containing k, then A is perfect. Returns the truth
/// of that implication on this instance (so it must always return true).
inline bool check_gluing(const MonomialSet& a, int n, int d, int k) {
    const Monomial kk = Monomial{}.with(k);
    const MonomialSet without_part = restrict_set(a, kk, RestrictMode::without);
    const MonomialSet containing_part = restrict_set(a, kk, RestrictMode::containing);
    const bool hypothesis =
        is_perfect_relative(without_part, n, d, kk, RestrictMode::without).perfect() &&
        is_perfect_relative(containing_part, n, d, kk, RestrictMode::containing).perfect();
    if (!hypothesis) return true;
    return is_perfect(a, n, d).perfect();
}

}  // namespace fideal
