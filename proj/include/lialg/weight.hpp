// Weight vectors over the primitive weights and finite weight systems.
//
// A weight is a vector of non-negative integer multiplicities over the
// primitives; the canonical order used everywhere (basis enumeration, report
// output) is by length first, then lexicographic on coordinates.
#pragma once

#include "lialg/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lialg {

struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    Weight(std::initializer_list<int> c) : coords(c) {}

    int rank() const { return static_cast<int>(coords.size()); }

    int length() const {
        int s = 0;
        for (int c : coords) s += c;
        return s;
    }

    // |p - q| for a rank-2 weight p*a1 + q*a2; defined only in rank 2.
    int diff() const {
        if (rank() != 2)
            throw RankError("diff is defined only for rank-2 weights, got rank " +
                            std::to_string(rank()));
        return std::abs(coords[0] - coords[1]);
    }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
    }

    bool is_primitive() const { return length() == 1; }

    static Weight unit(int rank, int i) {
        std::vector<int> c(rank, 0);
        c[i] = 1;
        return Weight(std::move(c));
    }

    static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

// Canonical order: (length, lexicographic).
inline bool canon_less(const Weight& a, const Weight& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.coords < b.coords;
}

inline void require_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank())
        throw RankError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                        std::to_string(b.rank()));
}

inline Weight add(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    std::vector<int> c(a.coords);
    for (int i = 0; i < b.rank(); ++i) c[i] += b.coords[i];
    return Weight(std::move(c));
}

// Absent when any coordinate of a - b would be negative.
inline std::optional<Weight> sub(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    std::vector<int> c(a.coords);
    for (int i = 0; i < b.rank(); ++i) {
        c[i] -= b.coords[i];
        if (c[i] < 0) return std::nullopt;
    }
    return Weight(std::move(c));
}

inline Weight scale(int k, const Weight& a) {
    std::vector<int> c(a.coords);
    for (int& x : c) x *= k;
    return Weight(std::move(c));
}

class WeightSystem {
public:
    WeightSystem() : rank_(0) {}

    // Members are stored deduplicated in canonical order.
    WeightSystem(int rank, std::vector<Weight> members) : rank_(rank) {
        for (const auto& w : members) {
            if (w.rank() != rank)
                throw RankError("weight " + w.str() + " has rank " +
                                std::to_string(w.rank()) + ", system has rank " +
                                std::to_string(rank));
            if (w.is_zero())
                throw BadParameter("zero vector cannot be a member of a weight system");
            for (int c : w.coords)
                if (c < 0) throw BadParameter("negative coordinate in weight " + w.str());
        }
        members_ = std::move(members);
        std::sort(members_.begin(), members_.end(), canon_less);
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int rank() const { return rank_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Weight>& members() const { return members_; }
    const Weight& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    bool contains(const Weight& w) const { return index_of(w) >= 0; }

    int index_of(const Weight& w) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), w, canon_less);
        if (it != members_.end() && *it == w)
            return static_cast<int>(it - members_.begin());
        return -1;
    }

    std::vector<Weight> primitives() const {
        std::vector<Weight> out;
        for (const auto& w : members_)
            if (w.is_primitive()) out.push_back(w);
        return out;
    }

    // Unordered pairs {a, b} of members with a + b = lam, a <= b canonically;
    // a == b allowed only when 2a = lam.
    std::vector<std::pair<Weight, Weight>> decompositions(const Weight& lam) const {
        if (lam.rank() != rank_)
            throw RankError("decompositions: weight rank " + std::to_string(lam.rank()) +
                            " does not match system rank " + std::to_string(rank_));
        std::vector<std::pair<Weight, Weight>> out;
        for (const auto& a : members_) {
            auto b = sub(lam, a);
            if (!b || b->is_zero()) continue;
            if (canon_less(*b, a)) continue;  // keep each unordered pair once
            if (contains(*b)) out.emplace_back(a, *b);
        }
        return out;
    }

private:
    int rank_;
    std::vector<Weight> members_;
};

}  // namespace lialg
