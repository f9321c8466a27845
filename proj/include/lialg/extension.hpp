// The maximal solvable extension R_T = N x| T as a flat (dense-dimension)
// Lie algebra, and the representations fed to the cohomology engines.
//
// Basis convention: nilradical weight vectors first, in canonical weight
// order, then the torus t_1..t_n dual to the primitive coordinates. Torus
// action: [t_i, e_mu] = mu_i e_mu.
#pragma once

#include "lialg/algebra.hpp"
#include "lialg/sparse.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lialg {

struct BasisTag {
    enum Kind { WeightVector, TorusVector } kind;
    Weight weight;    // the weight for WeightVector; zero weight for torus
    int torus_index;  // valid for TorusVector

    static BasisTag weight_vector(Weight w) { return {WeightVector, std::move(w), -1}; }
    static BasisTag torus_vector(int i, int rank) {
        return {TorusVector, Weight::zero(rank), i};
    }
};

using Coords = std::map<int, Rat>;  // sparse coordinate vector

class FlatLieAlgebra {
public:
    FlatLieAlgebra() = default;
    FlatLieAlgebra(std::vector<BasisTag> tags, std::map<std::pair<int, int>, Coords> structure)
        : tags_(std::move(tags)), structure_(std::move(structure)) {}

    int dim() const { return static_cast<int>(tags_.size()); }
    const std::vector<BasisTag>& tags() const { return tags_; }
    const std::map<std::pair<int, int>, Coords>& structure() const { return structure_; }

    int nilradical_dim() const {
        int n = 0;
        for (const auto& t : tags_)
            if (t.kind == BasisTag::WeightVector) ++n;
        return n;
    }

    int torus_dim() const { return dim() - nilradical_dim(); }

    Coords bracket_basis(int i, int j) const {
        if (i == j) return {};
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = structure_.find({i, j});
        if (it == structure_.end()) return {};
        Coords out = it->second;
        if (flip)
            for (auto& [k, v] : out) v = -v;
        return out;
    }

    Coords bracket(const Coords& x, const Coords& y) const {
        Coords out;
        for (const auto& [i, vi] : x)
            for (const auto& [j, vj] : y)
                for (const auto& [k, v] : bracket_basis(i, j))
                    accumulate(out, k, vi * vj * v);
        return out;
    }

    // Basis triples violating the Jacobi identity.
    std::vector<std::array<int, 3>> jacobi_failures() const {
        std::vector<std::array<int, 3>> bad;
        int d = dim();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    Coords acc = bracket(bracket_basis(i, j), unit(k));
                    merge(acc, bracket(bracket_basis(j, k), unit(i)));
                    merge(acc, bracket(bracket_basis(k, i), unit(j)));
                    if (!acc.empty()) bad.push_back({i, j, k});
                }
        return bad;
    }

    // Dimension of {x : [x, b] = 0 for every basis vector b}.
    int center_dim() const {
        int d = dim();
        SparseMatrix M(d * d, d);
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (const auto& [r, v] : bracket_basis(b, c))
                    M.add(b * d + r, c, v);
        return d - M.rank();
    }

    static Coords unit(int i) { return {{i, Rat(1)}}; }

    static void accumulate(Coords& m, int k, const Rat& v) {
        if (v == 0) return;
        auto [it, inserted] = m.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) m.erase(it);
        }
    }

    static void merge(Coords& dst, const Coords& src) {
        for (const auto& [k, v] : src) accumulate(dst, k, v);
    }

private:
    std::vector<BasisTag> tags_;
    std::map<std::pair<int, int>, Coords> structure_;
};

// A finite-dimensional module given by one action matrix per algebra basis
// vector, with a torus weight tag per module basis vector.
struct Representation {
    int algebra_dim = 0;
    int module_dim = 0;
    // action[i] holds x_i acting on the module, column-major sparse:
    // action[i][col] = coordinates of x_i . m_col
    std::vector<std::vector<Coords>> action;
    std::vector<Weight> module_weights;

    Coords apply(int i, const Coords& m) const {
        Coords out;
        for (const auto& [c, v] : m)
            for (const auto& [r, w] : action[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])
                FlatLieAlgebra::accumulate(out, r, v * w);
        return out;
    }

    // rho([x_i,x_j]) = rho(x_i)rho(x_j) - rho(x_j)rho(x_i) on all pairs.
    bool representation_identity_holds(const FlatLieAlgebra& L) const {
        for (int i = 0; i < algebra_dim; ++i)
            for (int j = i + 1; j < algebra_dim; ++j) {
                auto br = L.bracket_basis(i, j);
                for (int col = 0; col < module_dim; ++col) {
                    Coords lhs;
                    for (const auto& [k, v] : br)
                        for (const auto& [r, w] :
                             action[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)])
                            FlatLieAlgebra::accumulate(lhs, r, v * w);
                    Coords rhs = apply(i, apply(j, FlatLieAlgebra::unit(col)));
                    Coords tmp = apply(j, apply(i, FlatLieAlgebra::unit(col)));
                    for (auto& [k, v] : tmp) FlatLieAlgebra::accumulate(rhs, k, -v);
                    for (auto& [k, v] : lhs) FlatLieAlgebra::accumulate(rhs, k, -v);
                    if (!rhs.empty()) return false;
                }
            }
        return true;
    }
};

// N x| T with the canonical diagonal torus. Precondition: maximal rank.
inline FlatLieAlgebra extend(const GradedNilpotentAlgebra& A) {
    auto mr = check_maximal_rank(A);
    if (!mr.ok)
        throw NotMaximalRank("extend requires a maximal-rank algebra: " + mr.str());
    const auto& W = A.weights();
    int nw = W.size(), n = A.rank();
    std::vector<BasisTag> tags;
    tags.reserve(static_cast<std::size_t>(nw + n));
    for (int i = 0; i < nw; ++i) tags.push_back(BasisTag::weight_vector(W[i]));
    for (int i = 0; i < n; ++i) tags.push_back(BasisTag::torus_vector(i, n));

    std::map<std::pair<int, int>, Coords> st;
    for (const auto& [pair, v] : A.constants()) {
        int target = W.index_of(add(W[pair.first], W[pair.second]));
        st[{pair.first, pair.second}] = {{target, v}};
    }
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < nw; ++i) {
            int mu_t = W[i].coords[static_cast<std::size_t>(t)];
            if (mu_t != 0)
                st[{i, nw + t}] = {{i, Rat(-mu_t)}};  // stored as [e_mu, t] = -mu_t e_mu
        }
    return FlatLieAlgebra(std::move(tags), std::move(st));
}

inline Representation adjoint_module(const FlatLieAlgebra& L) {
    Representation rep;
    rep.algebra_dim = L.dim();
    rep.module_dim = L.dim();
    rep.action.resize(static_cast<std::size_t>(L.dim()));
    for (int i = 0; i < L.dim(); ++i) {
        rep.action[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(L.dim()));
        for (int c = 0; c < L.dim(); ++c)
            rep.action[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                L.bracket_basis(i, c);
    }
    for (const auto& t : L.tags()) rep.module_weights.push_back(t.weight);
    return rep;
}

// The nilradical as a flat algebra plus its adjoint-type action on all of L.
inline std::pair<FlatLieAlgebra, Representation> nilradical_restriction(const FlatLieAlgebra& L) {
    int nw = L.nilradical_dim();
    std::vector<BasisTag> tags(L.tags().begin(), L.tags().begin() + nw);
    std::map<std::pair<int, int>, Coords> st;
    for (const auto& [pair, coords] : L.structure())
        if (pair.first < nw && pair.second < nw) st[pair] = coords;
    FlatLieAlgebra N(std::move(tags), std::move(st));

    Representation rep;
    rep.algebra_dim = nw;
    rep.module_dim = L.dim();
    rep.action.resize(static_cast<std::size_t>(nw));
    for (int i = 0; i < nw; ++i) {
        rep.action[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(L.dim()));
        for (int c = 0; c < L.dim(); ++c)
            rep.action[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                L.bracket_basis(i, c);
    }
    for (const auto& t : L.tags()) rep.module_weights.push_back(t.weight);
    return {std::move(N), std::move(rep)};
}

}  // namespace lialg
