// Graded nilpotent Lie algebras of maximal rank: one-dimensional weight
// spaces N_a indexed by a finite weight system W, with antisymmetric rational
// structure constants [e_a, e_b] = c(a,b) e_{a+b}.
//
// Constants are stored only for canonically ordered pairs a < b; the reversed
// pair is implicitly -c(a,b) and c(a,a) = 0.
#pragma once

#include "lialg/rational.hpp"
#include "lialg/weight.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lialg {

struct BracketTriple {
    Weight a, b;
    Rat value;
};

class GradedNilpotentAlgebra {
public:
    GradedNilpotentAlgebra() = default;

    GradedNilpotentAlgebra(WeightSystem W, const std::vector<BracketTriple>& brackets)
        : W_(std::move(W)) {
        for (const auto& t : brackets) {
            if (t.value == 0) continue;
            int i = W_.index_of(t.a);
            int j = W_.index_of(t.b);
            if (i < 0) throw BadParameter("bracket references weight " + t.a.str() +
                                          " outside the weight system");
            if (j < 0) throw BadParameter("bracket references weight " + t.b.str() +
                                          " outside the weight system");
            if (i == j) throw BadParameter("self bracket on weight " + t.a.str());
            Rat v = t.value;
            if (i > j) {
                std::swap(i, j);
                v = -v;
            }
            auto [it, inserted] = constants_.emplace(std::make_pair(i, j), v);
            if (!inserted)
                throw BadParameter("duplicate bracket on pair " + W_[i].str() + ", " +
                                   W_[j].str());
        }
    }

    const WeightSystem& weights() const { return W_; }
    int rank() const { return W_.rank(); }
    int dim() const { return W_.size(); }
    const std::map<std::pair<int, int>, Rat>& constants() const { return constants_; }

    // c by member index, antisymmetric completion.
    Rat c(int i, int j) const {
        if (i == j) return Rat(0);
        if (i > j) return -c(j, i);
        auto it = constants_.find({i, j});
        return it == constants_.end() ? Rat(0) : it->second;
    }

    Rat c(const Weight& a, const Weight& b) const {
        int i = W_.index_of(a), j = W_.index_of(b);
        if (i < 0 || j < 0) return Rat(0);
        return c(i, j);
    }

    // L(a,b,g) of the Jacobi identity: sum of c(x,y)c(x+y,z) over cyclic (a,b,g).
    Rat jacobiator(int i, int j, int k) const {
        Rat total(0);
        const int idx[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
            int x = idx[r], y = idx[(r + 1) % 3], z = idx[(r + 2) % 3];
            Rat cxy = c(x, y);
            if (cxy == 0) continue;
            int s = W_.index_of(add(W_[x], W_[y]));
            if (s < 0) continue;
            total += cxy * c(s, z);
        }
        return total;
    }

private:
    WeightSystem W_;
    std::map<std::pair<int, int>, Rat> constants_;
};

// A general member of N: finite rational combination of basis vectors e_w.
struct Element {
    std::map<Weight, Rat, bool (*)(const Weight&, const Weight&)> terms{canon_less};

    void accumulate(const Weight& w, const Rat& v) {
        if (v == 0) return;
        auto [it, inserted] = terms.emplace(w, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) terms.erase(it);
        }
    }

    static Element basis(const Weight& w) {
        Element e;
        e.terms.emplace(w, Rat(1));
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
};

struct ValidationIssue {
    enum Kind { TargetOutsideSystem, JacobiFailure } kind;
    std::vector<Weight> weights;  // pair for TargetOutsideSystem, triple for Jacobi
    Rat value;                    // the non-zero jacobiator for JacobiFailure

    std::string str() const {
        std::string s = kind == TargetOutsideSystem ? "target outside W:" : "L != 0 on";
        for (const auto& w : weights) s += " " + w.str();
        if (kind == JacobiFailure) s += " (L = " + value.str() + ")";
        return s;
    }
};

// Empty report = valid. Lists every stored constant whose target a+b is not a
// member, and every weight triple with non-vanishing jacobiator.
inline std::vector<ValidationIssue> validate(const GradedNilpotentAlgebra& A) {
    std::vector<ValidationIssue> issues;
    const auto& W = A.weights();
    for (const auto& [pair, v] : A.constants()) {
        Weight target = add(W[pair.first], W[pair.second]);
        if (!W.contains(target))
            issues.push_back({ValidationIssue::TargetOutsideSystem,
                              {W[pair.first], W[pair.second]},
                              v});
    }
    int n = W.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Rat L = A.jacobiator(i, j, k);
                if (L != 0)
                    issues.push_back({ValidationIssue::JacobiFailure,
                                      {W[i], W[j], W[k]},
                                      L});
            }
    return issues;
}

inline Element bracket(const GradedNilpotentAlgebra& A, const Element& x, const Element& y) {
    Element out;
    const auto& W = A.weights();
    for (const auto& [wa, va] : x.terms) {
        int i = W.index_of(wa);
        if (i < 0) continue;
        for (const auto& [wb, vb] : y.terms) {
            int j = W.index_of(wb);
            if (j < 0) continue;
            Rat cij = A.c(i, j);
            if (cij == 0) continue;
            out.accumulate(add(wa, wb), va * vb * cij);
        }
    }
    return out;
}

// Lower central series as basis subsets: each N^k is spanned by basis
// vectors because brackets of basis vectors are scalar multiples of basis
// vectors. The list ends with the first empty term.
inline std::vector<std::vector<Weight>> lower_central_series(const GradedNilpotentAlgebra& A) {
    const auto& W = A.weights();
    std::vector<std::vector<Weight>> series;
    std::set<int> current;
    for (int i = 0; i < W.size(); ++i) current.insert(i);
    for (;;) {
        std::vector<Weight> level;
        for (int i : current) level.push_back(W[i]);
        series.push_back(level);
        if (current.empty()) break;
        std::set<int> next;
        for (int a = 0; a < W.size(); ++a)
            for (int b : current)
                if (A.c(a, b) != 0) next.insert(W.index_of(add(W[a], W[b])));
        current = std::move(next);
    }
    return series;
}

// Smallest k with N^k = 0 (series convention N^1 = N).
inline int nilindex(const GradedNilpotentAlgebra& A) {
    return static_cast<int>(lower_central_series(A).size());
}

inline std::vector<Weight> center(const GradedNilpotentAlgebra& A) {
    const auto& W = A.weights();
    std::vector<Weight> out;
    for (int i = 0; i < W.size(); ++i) {
        bool central = true;
        for (int j = 0; j < W.size() && central; ++j)
            if (A.c(i, j) != 0) central = false;
        if (central) out.push_back(W[i]);
    }
    return out;
}

struct GenerationReport {
    bool ok = true;
    std::vector<Weight> offending;  // non-primitive weights with no primitive-led product
};

// Weak form of the generation assumption: every non-primitive mu must admit a
// primitive a and b in W with mu = a + b and c(a,b) != 0.
inline GenerationReport check_generation(const GradedNilpotentAlgebra& A) {
    GenerationReport rep;
    const auto& W = A.weights();
    auto prims = W.primitives();
    for (const auto& mu : W.members()) {
        if (mu.is_primitive()) continue;
        bool generated = false;
        for (const auto& a : prims) {
            auto b = sub(mu, a);
            if (b && !b->is_zero() && W.contains(*b) && A.c(a, *b) != 0) {
                generated = true;
                break;
            }
        }
        if (!generated) {
            rep.ok = false;
            rep.offending.push_back(mu);
        }
    }
    return rep;
}

struct MaximalRankReport {
    bool ok = false;
    int primitive_count = 0;
    int codim_derived = 0;  // dim(N/N^2) = |W| - |N^2|
    GenerationReport generation;

    std::string str() const {
        std::string s = ok ? "maximal rank" : "not maximal rank";
        s += " (primitives " + std::to_string(primitive_count) + ", dim N/N^2 " +
             std::to_string(codim_derived);
        if (!generation.ok) {
            s += ", ungenerated:";
            for (const auto& w : generation.offending) s += " " + w.str();
        }
        return s + ")";
    }
};

inline MaximalRankReport check_maximal_rank(const GradedNilpotentAlgebra& A) {
    MaximalRankReport rep;
    auto series = lower_central_series(A);
    int n2 = series.size() > 1 ? static_cast<int>(series[1].size()) : 0;
    rep.primitive_count = static_cast<int>(A.weights().primitives().size());
    rep.codim_derived = A.dim() - n2;
    rep.generation = check_generation(A);
    rep.ok = rep.primitive_count == rep.codim_derived && rep.generation.ok;
    return rep;
}

}  // namespace lialg
