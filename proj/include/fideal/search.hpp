#pragma once

// Exact perfect numbers N(n,d): the least cardinality of a perfect subset of
// sm(S)_d, computed by iterative deepening over the target size with a
// branch-and-bound set-cover search. A set is perfect iff it covers two
// constraint families at once: every degree-(d+1) monomial from below and
// every degree-(d-1) monomial from above.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fideal/construct.hpp"
#include "fideal/monomial.hpp"
#include "fideal/perfect.hpp"

namespace fideal {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

enum class SearchStatus { exact, timeout };

struct SearchResult {
    int n = 0;
    int d = 0;
    std::size_t value = 0;   // exact minimum; best known upper bound on timeout
    MonomialSet witness;     // lexicographically least optimal set when exact
    std::uint64_t nodes_explored = 0;
    SearchStatus status = SearchStatus::exact;
    std::size_t lower_bound = 0;  // bracketing interval; both equal value when exact
    std::size_t upper_bound = 0;
};

namespace detail {

struct budget_exhausted {};

// Dual set-cover search over one (n, d) layer. Branches on the uncovered
// constraint with the fewest remaining coverers; alternatives already tried
// at a branch point are excluded below it, so distinct branches enumerate
// disjoint candidate sets.
class CoverSearch {
public:
    CoverSearch(int n, int d, std::uint64_t budget) : budget_(budget) {
        cands_ = enumerate_degree(n, d).elements();
        const std::vector<Monomial> up = enumerate_degree(n, d + 1).elements();
        const std::vector<Monomial> down = enumerate_degree(n, d - 1).elements();
        up_count_ = up.size();
        constraints_ = up;
        constraints_.insert(constraints_.end(), down.begin(), down.end());
        coverers_.resize(constraints_.size());
        covers_.resize(cands_.size());
        for (std::size_t c = 0; c < constraints_.size(); ++c)
            for (std::size_t v = 0; v < cands_.size(); ++v) {
                const bool hit = c < up_count_ ? cands_[v].divides(constraints_[c])
                                               : constraints_[c].divides(cands_[v]);
                if (hit) {
                    coverers_[c].push_back(static_cast<int>(v));
                    covers_[v].push_back(static_cast<int>(c));
                }
            }
        up_cap_ = n - d;  // a candidate divides exactly n-d monomials one degree up
        down_cap_ = d;    // and is divided by exactly d monomials one degree down
    }

    std::size_t candidate_count() const { return cands_.size(); }
    const std::vector<Monomial>& candidates() const { return cands_; }
    std::size_t up_constraints() const { return up_count_; }
    std::size_t down_constraints() const { return constraints_.size() - up_count_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& solution() const { return solution_; }

    /// Is there a perfect set of size <= s made of `prefix` plus candidates
    /// with index >= min_free?
    bool feasible(int s, const std::vector<int>& prefix, int min_free) {
        reset();
        for (int idx = 0; idx < min_free; ++idx) {
            bool in_prefix = false;
            for (int p : prefix) in_prefix = in_prefix || p == idx;
            if (!in_prefix) remove(idx);
        }
        for (int idx : prefix) choose(idx);
        return dfs(s);
    }

private:
    void reset() {
        cover_count_.assign(constraints_.size(), 0);
        avail_.assign(constraints_.size(), 0);
        for (std::size_t c = 0; c < constraints_.size(); ++c)
            avail_[c] = static_cast<int>(coverers_[c].size());
        removed_.assign(cands_.size(), 0);
        chosen_.clear();
        uncovered_up_ = static_cast<int>(up_count_);
        uncovered_down_ = static_cast<int>(constraints_.size() - up_count_);
    }

    void remove(int idx) {
        removed_[idx] = 1;
        for (int c : covers_[idx]) --avail_[c];
    }

    void unremove(int idx) {
        removed_[idx] = 0;
        for (int c : covers_[idx]) ++avail_[c];
    }

    void choose(int idx) {
        remove(idx);
        chosen_.push_back(idx);
        for (int c : covers_[idx])
            if (cover_count_[c]++ == 0)
                --(static_cast<std::size_t>(c) < up_count_ ? uncovered_up_ : uncovered_down_);
    }

    void unchoose(int idx) {
        for (int c : covers_[idx])
            if (--cover_count_[c] == 0)
                ++(static_cast<std::size_t>(c) < up_count_ ? uncovered_up_ : uncovered_down_);
        chosen_.pop_back();
        unremove(idx);
    }

    bool dfs(int s) {
        if (++nodes_ > budget_) throw budget_exhausted{};
        if (uncovered_up_ == 0 && uncovered_down_ == 0) {
            solution_ = chosen_;
            std::sort(solution_.begin(), solution_.end());
            return true;
        }
        const int remaining = s - static_cast<int>(chosen_.size());
        if (remaining <= 0) return false;
        if (up_cap_ > 0 && (uncovered_up_ + up_cap_ - 1) / up_cap_ > remaining) return false;
        if (down_cap_ > 0 && (uncovered_down_ + down_cap_ - 1) / down_cap_ > remaining)
            return false;

        int best = -1;
        int best_avail = std::numeric_limits<int>::max();
        for (std::size_t c = 0; c < constraints_.size(); ++c) {
            if (cover_count_[c] != 0) continue;
            if (avail_[c] < best_avail) {
                best = static_cast<int>(c);
                best_avail = avail_[c];
                if (best_avail == 0) return false;
            }
        }

        std::vector<int> tried;
        bool found = false;
        for (int idx : coverers_[best]) {
            if (removed_[idx]) continue;
            choose(idx);
            found = dfs(s);
            unchoose(idx);
            if (found) break;
            remove(idx);
            tried.push_back(idx);
        }
        for (int idx : tried) unremove(idx);
        return found;
    }

    std::vector<Monomial> cands_;
    std::vector<Monomial> constraints_;  // up layer first, then down layer
    std::size_t up_count_ = 0;
    std::vector<std::vector<int>> coverers_;
    std::vector<std::vector<int>> covers_;
    int up_cap_ = 0, down_cap_ = 0;

    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<int> cover_count_;
    std::vector<int> avail_;
    std::vector<char> removed_;
    std::vector<int> chosen_;
    int uncovered_up_ = 0, uncovered_down_ = 0;
    std::vector<int> solution_;
};

// Verified constructive perfect sets for (n, d), used to seed the upper
// bound. The search never trusts a construction: everything is re-checked.
inline std::vector<MonomialSet> constructive_perfect_sets(int n, int d) {
    std::vector<MonomialSet> out;
    out.push_back(enumerate_degree(n, d));
    if (d == 1) {
        MonomialSet s;
        for (int i = 1; i < n; ++i) s.insert(Monomial{}.with(i));
        out.push_back(s);
    }
    if (d == 2 && n >= 4) out.push_back(partition_perfect_n2(n));
    if (d > 2 && n == d + 2) out.push_back(complement_set(partition_perfect_n2(n), n));
    if (d > 2 && n > d + 2) out.push_back(bound_perfect_set(n, d));
    return out;
}

}  // namespace detail

/// Least cardinality of a perfect subset of sm(S)_d, with a lexicographically
/// least witness. Exactness means size value-1 was refuted (or the counting
/// lower bound already meets the witness). On budget exhaustion the result
/// carries the bracketing interval established so far.
inline SearchResult perfect_number(int n, int d,
                                   std::uint64_t budget = kDefaultSearchBudget) {
    detail::check_ambient(n);
    if (d < 1 || d > n - 1)
        throw std::invalid_argument("perfect_number needs 1 <= d <= n - 1");

    SearchResult res;
    res.n = n;
    res.d = d;

    MonomialSet best_known = enumerate_degree(n, d);
    const auto consider = [&](const MonomialSet& s) {
        if (s.size() < best_known.size() && is_perfect(s, n, d).perfect()) best_known = s;
    };
    for (const MonomialSet& s : detail::constructive_perfect_sets(n, d)) consider(s);
    for (const MonomialSet& s : detail::constructive_perfect_sets(n, n - d))
        consider(complement_set(s, n));

    detail::CoverSearch search(n, d, budget);
    const auto ceil_div = [](std::size_t a, std::size_t b) { return (a + b - 1) / b; };
    std::size_t lb = 1;
    if (n - d > 0)
        lb = std::max(lb, ceil_div(search.up_constraints(), static_cast<std::size_t>(n - d)));
    if (d > 0)
        lb = std::max(lb, ceil_div(search.down_constraints(), static_cast<std::size_t>(d)));
    std::size_t ub = best_known.size();

    const auto extract_lex_least = [&](std::size_t s) {
        std::vector<int> prefix;
        int min_free = 0;
        while (prefix.size() < s) {
            bool locked = false;
            for (int idx = min_free; idx < static_cast<int>(search.candidate_count()); ++idx) {
                std::vector<int> trial = prefix;
                trial.push_back(idx);
                if (search.feasible(static_cast<int>(s), trial, idx + 1)) {
                    prefix = std::move(trial);
                    min_free = idx + 1;
                    locked = true;
                    break;
                }
            }
            if (!locked) throw std::logic_error("witness extraction lost feasibility");
        }
        MonomialSet witness;
        for (int idx : prefix) witness.insert(search.candidates()[idx]);
        return witness;
    };

    try {
        std::size_t value = ub;
        for (std::size_t s = lb; s < ub; ++s) {
            if (search.feasible(static_cast<int>(s), {}, 0)) {
                value = s;
                break;
            }
            lb = s + 1;
        }
        res.value = value;
        res.witness = extract_lex_least(value);
        res.status = SearchStatus::exact;
        res.lower_bound = res.upper_bound = value;
        res.nodes_explored = search.nodes();
    } catch (const detail::budget_exhausted&) {
        res.status = SearchStatus::timeout;
        res.lower_bound = lb;
        res.upper_bound = ub;
        res.value = ub;
        res.witness = best_known;
        res.nodes_explored = search.nodes();
    }
    return res;
}

/// Checks the computed perfect number against the constructive upper bound;
/// must hold whenever the search completes. Budget exhaustion is an error.
inline bool certify_bound(int n, int d, std::uint64_t budget = kDefaultSearchBudget) {
    if (d <= 2) throw std::invalid_argument("certify_bound applies to d > 2");
    const SearchResult r = perfect_number(n, d, budget);
    if (r.status != SearchStatus::exact)
        throw std::runtime_error("search budget exhausted before certification");
    return r.value <= perfect_number_upper_bound(n, d);
}

namespace detail {

// Estimate for the part of a perfect set avoiding one index: exact degree-2
// values and the n = d + 2 identity where those apply, one more split step
// while the ambient stays large, and a plain covering count below that.
inline std::uint64_t split_without_bound(int m, int dd) {
    if (dd > m) return 0;
    if (dd == 2) return m >= 4 ? perfect_number_degree2(m) : (m == 3 ? 2 : 1);
    if (m == dd + 2) return perfect_number_degree2(m);
    if (m > dd + 2)
        return split_without_bound(m - 1, dd) +
               (binomial(m - 1, dd - 2) + static_cast<std::uint64_t>(dd) - 2) /
                   (static_cast<std::uint64_t>(dd) - 1);
    return (binomial(m, dd - 1) + static_cast<std::uint64_t>(dd) - 1) /
           static_cast<std::uint64_t>(dd);
}

}  // namespace detail

/// Split estimate for N(n,d) obtained by cutting at index k: a bound for the
/// part avoiding k plus the covering count for the part containing k (each
/// such element covers at most d-1 of the C(n-1, d-2) monomials it must
/// reach). Diagnostic only; the search prunes with its own counting bounds.
inline std::uint64_t lower_bound_split(int n, int d, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("cut index outside [n]");
    if (d < 2 || d > n - 1)
        throw std::invalid_argument("lower_bound_split needs 2 <= d <= n - 1");
    const std::uint64_t containing =
        (binomial(n - 1, d - 2) + static_cast<std::uint64_t>(d) - 2) /
        (static_cast<std::uint64_t>(d) - 1);
    return detail::split_without_bound(n - 1, d) + containing;
}

}  // namespace fideal
