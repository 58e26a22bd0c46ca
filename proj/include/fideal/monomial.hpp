#pragma once

// Square-free monomials over x_1..x_n, stored as index subsets of
// [n] = {1,..,n} packed into a 64-bit mask (bit i-1 set <=> index i in the
// support). Numeric order on masks equals colex order on supports, so every
// sorted container in this library iterates in colex order for free.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fideal {

inline constexpr int kMaxVariables = 63;

// Layers larger than this are refused instead of materialized.
inline constexpr std::uint64_t kMaxLayerSize = std::uint64_t{1} << 26;

namespace detail {
inline void check_ambient(int n) {
    if (n < 0 || n > kMaxVariables)
        throw std::invalid_argument("ambient size must be in [0, " +
                                    std::to_string(kMaxVariables) + "], got " +
                                    std::to_string(n));
}
}  // namespace detail

/// Exact binomial coefficient; 0 when k < 0 or k > n.
constexpr std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

class Monomial {
public:
    constexpr Monomial() = default;

    static constexpr Monomial from_mask(std::uint64_t bits) { return Monomial(bits); }

    static Monomial from_indices(std::initializer_list<int> idx) {
        Monomial m;
        for (int i : idx) m = m.with(i);
        return m;
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr int degree() const { return std::popcount(bits_); }

    /// True for the empty support, i.e. the monomial 1.
    constexpr bool is_unit() const { return bits_ == 0; }

    constexpr bool contains(int i) const {
        return i >= 1 && i <= 64 && (bits_ >> (i - 1)) & 1u;
    }

    /// this | v in the divisibility sense: support(this) subseteq support(v).
    constexpr bool divides(Monomial v) const { return (bits_ & v.bits_) == bits_; }

    constexpr bool disjoint_from(Monomial v) const { return (bits_ & v.bits_) == 0; }

    constexpr int max_index() const {
        return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
    }

    Monomial with(int i) const {
        if (i < 1 || i > kMaxVariables)
            throw std::invalid_argument("index out of range: " + std::to_string(i));
        return Monomial(bits_ | (std::uint64_t{1} << (i - 1)));
    }

    constexpr Monomial operator|(Monomial o) const { return Monomial(bits_ | o.bits_); }
    constexpr Monomial operator&(Monomial o) const { return Monomial(bits_ & o.bits_); }
    constexpr Monomial minus(Monomial o) const { return Monomial(bits_ & ~o.bits_); }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree()));
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// "1 3 6" for x1*x3*x6; the unit monomial prints as "()".
    std::string str() const {
        if (is_unit()) return "()";
        std::string out;
        for (int i : indices()) {
            if (!out.empty()) out += ' ';
            out += std::to_string(i);
        }
        return out;
    }

    friend constexpr auto operator<=>(Monomial, Monomial) = default;

private:
    explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

inline Monomial full_support(int n) {
    detail::check_ambient(n);
    return Monomial::from_mask(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

inline bool divides(Monomial u, Monomial v) { return u.divides(v); }

/// A finite set of monomials, kept sorted (colex) and duplicate-free.
class MonomialSet {
public:
    MonomialSet() = default;

    explicit MonomialSet(std::vector<Monomial> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    MonomialSet(std::initializer_list<Monomial> elems)
        : MonomialSet(std::vector<Monomial>(elems)) {}

    static MonomialSet from_sorted_unique(std::vector<Monomial> elems) {
        MonomialSet s;
        s.elems_ = std::move(elems);
        return s;
    }

    bool insert(Monomial u) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), u);
        if (it != elems_.end() && *it == u) return false;
        elems_.insert(it, u);
        return true;
    }

    bool erase(Monomial u) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), u);
        if (it == elems_.end() || *it != u) return false;
        elems_.erase(it);
        return true;
    }

    bool contains(Monomial u) const {
        return std::binary_search(elems_.begin(), elems_.end(), u);
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const std::vector<Monomial>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    /// True when all elements share one degree (vacuously for the empty set).
    bool homogeneous() const {
        for (const Monomial& u : elems_)
            if (u.degree() != elems_.front().degree()) return false;
        return true;
    }

    /// Common degree of a nonempty homogeneous set.
    int degree() const {
        if (elems_.empty()) throw std::invalid_argument("degree() of empty set");
        return elems_.front().degree();
    }

    MonomialSet set_union(const MonomialSet& o) const {
        std::vector<Monomial> out;
        out.reserve(size() + o.size());
        std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
        return from_sorted_unique(std::move(out));
    }

    MonomialSet set_minus(const MonomialSet& o) const {
        std::vector<Monomial> out;
        std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
        return from_sorted_unique(std::move(out));
    }

    std::string str() const {
        std::string out = "{";
        for (const Monomial& u : elems_) {
            if (out.size() > 1) out += ", ";
            out += u.str();
        }
        return out + "}";
    }

    friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

private:
    std::vector<Monomial> elems_;
};

/// All C(n,d) squarefree monomials of degree d in x_1..x_n, colex ascending.
/// Out-of-range d yields the empty set; d = 0 yields { 1 }.
inline MonomialSet enumerate_degree(int n, int d) {
    detail::check_ambient(n);
    if (d < 0 || d > n) return {};
    if (d == 0) return MonomialSet{Monomial{}};
    const std::uint64_t count = binomial(n, d);
    if (count > kMaxLayerSize)
        throw std::invalid_argument("degree layer too large to materialize");
    std::vector<Monomial> out;
    out.reserve(count);
    // Gosper's hack: next integer with the same popcount.
    std::uint64_t v = (std::uint64_t{1} << d) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        out.push_back(Monomial::from_mask(v));
        std::uint64_t c = v & (~v + 1);
        std::uint64_t r = v + c;
        v = r | (((v ^ r) >> 2) / c);
    }
    return MonomialSet::from_sorted_unique(std::move(out));
}

/// Support complement within [n]; involutive.
inline Monomial complement(Monomial u, int n) {
    detail::check_ambient(n);
    if (u.max_index() > n)
        throw std::invalid_argument("monomial " + u.str() + " does not live in [" +
                                    std::to_string(n) + "]");
    return full_support(n).minus(u);
}

/// Elementwise complement; a bijection, so |M'| = |M| and M'' = M.
inline MonomialSet complement_set(const MonomialSet& m, int n) {
    std::vector<Monomial> out;
    out.reserve(m.size());
    for (const Monomial& u : m) out.push_back(complement(u, n));
    return MonomialSet(std::move(out));
}

enum class RestrictMode { without, containing };

/// Elements of a whose support avoids X (without) or contains X (containing).
inline MonomialSet restrict_set(const MonomialSet& a, Monomial x, RestrictMode mode) {
    std::vector<Monomial> out;
    for (const Monomial& u : a) {
        const bool keep =
            mode == RestrictMode::without ? u.disjoint_from(x) : x.divides(u);
        if (keep) out.push_back(u);
    }
    return MonomialSet::from_sorted_unique(std::move(out));
}

/// All pairwise products {uv : u in a, v in b}. The factors of each pair must
/// be variable-disjoint (the product stays square-free). An empty b acts as
/// the identity.
inline MonomialSet bullet_product(const MonomialSet& a, const MonomialSet& b) {
    if (b.empty()) return a;
    MonomialSet out;
    for (const Monomial& u : a)
        for (const Monomial& v : b) {
            if (!u.disjoint_from(v))
                throw std::invalid_argument("bullet product of overlapping supports: (" +
                                            u.str() + ") * (" + v.str() + ")");
            out.insert(u | v);
        }
    return out;
}

/// Degree-k squarefree monomials in the variables x_i..x_j. Empty whenever
/// i > j or k < 0; k = 0 gives { 1 } (so bullet-multiplying by it is a no-op).
inline MonomialSet interval_monomials(int i, int j, int k) {
    if (k < 0 || i > j) return {};
    if (i < 1 || j > kMaxVariables)
        throw std::invalid_argument("interval [" + std::to_string(i) + ", " +
                                    std::to_string(j) + "] out of range");
    const MonomialSet base = enumerate_degree(j - i + 1, k);
    std::vector<Monomial> out;
    out.reserve(base.size());
    for (const Monomial& u : base)
        out.push_back(Monomial::from_mask(u.mask() << (i - 1)));
    return MonomialSet::from_sorted_unique(std::move(out));
}

}  // namespace fideal
