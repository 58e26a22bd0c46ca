#pragma once

// Constructions of perfect sets and f-ideals for every feasible (n, d):
// the two-block partition sets for d = 2, their complements for n = d + 2,
// the task-decomposition recursion for the general case, padding up to
// C(n,d)/2 generators, and the explicit bound set behind the perfect-number
// upper bound.

#include <compare>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fideal/ideal.hpp"
#include "fideal/monomial.hpp"

namespace fideal {

/// Raised when no (n,d) f-ideal exists, i.e. when C(n,d) is odd.
class v_empty_error : public std::domain_error {
public:
    v_empty_error(int n, int d)
        : std::domain_error("V(" + std::to_string(n) + ", " + std::to_string(d) +
                            ") is empty: C(n,d) is odd") {}
};

/// Smallest size of a degree-2 perfect set on n >= 4 vertices:
/// k^2 - k for n = 2k and k^2 for n = 2k + 1.
inline std::uint64_t perfect_number_degree2(int n) {
    if (n < 4) throw std::invalid_argument("degree-2 perfect sets need n >= 4");
    const std::uint64_t k = static_cast<std::uint64_t>(n) / 2;
    return n % 2 == 0 ? k * k - k : k * k;
}

/// Splits [n] into the low block {1..ceil(n/2)} and the rest, and returns all
/// pairs lying inside one block. Perfect, of the minimal degree-2 size.
inline MonomialSet partition_perfect_n2(int n) {
    if (n < 4) throw std::invalid_argument("partition construction needs n >= 4");
    detail::check_ambient(n);
    const int half = (n + 1) / 2;
    MonomialSet out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((i <= half) == (j <= half)) out.insert(Monomial::from_indices({i, j}));
    return out;
}

/// Pads a perfect degree-d set up to exactly C(n,d)/2 elements with monomials
/// from the rest of the layer; the result stays perfect. The default choice
/// is colex-least; a seed switches to a seeded pseudorandom choice.
inline MonomialSet pad_to_half(const MonomialSet& a, int n, int d,
                               std::optional<std::uint64_t> seed = std::nullopt) {
    const std::uint64_t layer_size = binomial(n, d);
    if (layer_size % 2 != 0)
        throw std::invalid_argument("C(n,d) is odd; no half-layer size exists");
    const std::uint64_t target = layer_size / 2;
    if (a.size() > target)
        throw std::invalid_argument("set of size " + std::to_string(a.size()) +
                                    " already exceeds C(n,d)/2 = " + std::to_string(target));
    MonomialSet out = a;
    std::vector<Monomial> eligible = enumerate_degree(n, d).set_minus(a).elements();
    std::size_t need = static_cast<std::size_t>(target) - a.size();
    if (seed) {
        // Partial Fisher-Yates with a fixed engine keeps the choice
        // reproducible for a given seed on any platform.
        std::mt19937_64 rng(*seed);
        for (std::size_t i = 0; i < need; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (eligible.size() - i));
            std::swap(eligible[i], eligible[j]);
        }
    }
    for (std::size_t i = 0; i < need; ++i) out.insert(eligible[i]);
    return out;
}

/// f-ideal on n = d + 2 variables: complement a degree-2 partition set up to
/// degree d, then pad to C(n,d)/2.
inline Ideal construct_d_plus_2(int d, std::optional<std::uint64_t> seed = std::nullopt) {
    if (d < 3) throw std::invalid_argument("this construction needs d >= 3");
    const int n = d + 2;
    if (binomial(n, 2) % 2 != 0) throw v_empty_error(n, d);
    const MonomialSet base = complement_set(partition_perfect_n2(n), n);
    return Ideal(n, pad_to_half(base, n, d, seed));
}

/// One node of the decomposition recursion: build a degree-l perfect set on
/// the variables [t], then multiply every element by x_E (E is disjoint
/// from [t]). Leaves are the nodes with l = 2 or t = l + 2.
struct TaskLabel {
    int t = 0;
    int l = 0;
    Monomial forced;  // E, a subset of {t+1, .., n}

    bool leaf() const { return l == 2 || t == l + 2; }

    friend constexpr auto operator<=>(const TaskLabel&, const TaskLabel&) = default;

    std::string str() const { return "B(" + std::to_string(t) + ", " + std::to_string(l) +
                                     ", {" + forced.str() + "})"; }
};

/// Rewrites {B(n, d, {})} by splitting every non-leaf B(t, l, E) into
/// B(t-1, l, E) and B(t-1, l-1, E + {t}) until only leaves remain. The leaf
/// set is unique; it is returned sorted by descending l, then ascending t.
inline std::vector<TaskLabel> decompose_tasks(int n, int d) {
    if (d <= 2 || n <= d + 2)
        throw std::invalid_argument("task decomposition applies to d > 2, n > d + 2");
    detail::check_ambient(n);
    std::vector<TaskLabel> tasks{TaskLabel{n, d, Monomial{}}};
    for (;;) {
        std::vector<TaskLabel> next;
        bool changed = false;
        for (const TaskLabel& b : tasks) {
            if (b.leaf()) {
                next.push_back(b);
            } else {
                next.push_back(TaskLabel{b.t - 1, b.l, b.forced});
                next.push_back(TaskLabel{b.t - 1, b.l - 1, b.forced.with(b.t)});
                changed = true;
            }
        }
        tasks = std::move(next);
        if (!changed) break;
    }
    std::sort(tasks.begin(), tasks.end(), [](const TaskLabel& a, const TaskLabel& b) {
        if (a.l != b.l) return a.l > b.l;
        if (a.t != b.t) return a.t < b.t;
        return a.forced < b.forced;
    });
    return tasks;
}

namespace detail {

// Perfect set assigned to a leaf: the partition set for l = 2, its degree-l
// complement for t = l + 2 (unpadded; padding only matters for the final
// ideal, not for perfection).
inline MonomialSet leaf_perfect_set(const TaskLabel& b) {
    if (b.l == 2) return partition_perfect_n2(b.t);
    return complement_set(partition_perfect_n2(b.t), b.t);
}

}  // namespace detail

/// Perfect subset of sm(S)_d of size at most C(n,d)/2 for d > 2, n > d + 2,
/// assembled by gluing the leaf sets of the task decomposition.
inline MonomialSet assemble_perfect_set(int n, int d) {
    MonomialSet out;
    for (const TaskLabel& b : decompose_tasks(n, d))
        out = out.set_union(bullet_product(detail::leaf_perfect_set(b),
                                           MonomialSet{b.forced}));
    return out;
}

/// An (n,d) f-ideal for any 2 <= d <= n - 2 with C(n,d) even; throws
/// v_empty_error otherwise.
inline Ideal construct_f_ideal(int n, int d, std::optional<std::uint64_t> seed = std::nullopt) {
    detail::check_ambient(n);
    if (d < 2 || d > n - 2)
        throw std::invalid_argument("f-ideal construction needs 2 <= d <= n - 2");
    if (binomial(n, d) % 2 != 0) throw v_empty_error(n, d);
    if (d == 2) return Ideal(n, pad_to_half(partition_perfect_n2(n), n, 2, seed));
    if (n == d + 2) return construct_d_plus_2(d, seed);
    return Ideal(n, pad_to_half(assemble_perfect_set(n, d), n, d, seed));
}

/// Upper bound on the least size of an (n,d) perfect set, d > 2. For
/// n = d + 2 this is the exact degree-2 perfect number; for n > d + 2 it is
/// sum_{i=5}^{n-d+2} N(i,2) C(n-i-1, d-3) + sum_{j=3}^{d} N(j+2,2) C(n-j-3, d-j)
/// with C(0,0) = 1 and out-of-range binomials equal to 0.
inline std::uint64_t perfect_number_upper_bound(int n, int d) {
    if (d <= 2) throw std::invalid_argument("the bound formula applies to d > 2");
    if (n < d + 2) throw std::invalid_argument("the bound formula applies to n >= d + 2");
    if (n == d + 2) return perfect_number_degree2(n);
    std::uint64_t total = 0;
    for (int i = 5; i <= n - d + 2; ++i)
        total += perfect_number_degree2(i) * binomial(n - i - 1, d - 3);
    for (int j = 3; j <= d; ++j)
        total += perfect_number_degree2(j + 2) * binomial(n - j - 3, d - j);
    return total;
}

/// The explicit perfect set realizing perfect_number_upper_bound(n, d) for
/// d > 2, n > d + 2: blocks P(i,2) * x_{i+1} * Q_[i+2,n]^{d-3} together with
/// blocks P(j+2,j) * Q_[j+4,n]^{d-j}.
inline MonomialSet bound_perfect_set(int n, int d) {
    if (d <= 2 || n <= d + 2)
        throw std::invalid_argument("the bound set applies to d > 2, n > d + 2");
    detail::check_ambient(n);
    MonomialSet out;
    for (int i = 5; i <= n - d + 2; ++i) {
        MonomialSet block = bullet_product(partition_perfect_n2(i),
                                           MonomialSet{Monomial{}.with(i + 1)});
        block = bullet_product(block, interval_monomials(i + 2, n, d - 3));
        out = out.set_union(block);
    }
    for (int j = 3; j <= d; ++j) {
        const MonomialSet lifted = complement_set(partition_perfect_n2(j + 2), j + 2);
        out = out.set_union(bullet_product(lifted, interval_monomials(j + 4, n, d - j)));
    }
    return out;
}

}  // namespace fideal
