// The fast path: torus-invariant weight-graded subcomplex of C^*(N, M) and
// the Hochschild-Serre assembly of H^n(R_T, M).
//
// A basis cochain (S, nu) is invariant exactly when the module weight of nu
// equals the sum of the weights in S. The full CE differential maps invariant
// cochains to invariant cochains; the restriction is asserted exactly when
// the matrices are built. Cohomology of the subcomplex equals the invariant
// cohomology because the torus acts semisimply and commutes with d.
#pragma once

#include "lialg/complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace lialg {

struct GradedCochainBasis {
    int degree = 0;
    // (sorted tuple of nilradical basis indices, module basis index)
    std::vector<std::pair<std::vector<int>, int>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

struct InvariantCochainEntry {
    Weight x, y;        // arguments e_x, e_y
    BasisTag value;     // module basis vector carrying the coefficient
    Rat coeff;
};

struct Witness2Cochain {
    std::vector<InvariantCochainEntry> entries;
};

// Shared machinery for the graded subcomplex of C^*(N, M), M = R_T by default.
class InvariantComplex {
public:
    explicit InvariantComplex(const FlatLieAlgebra& RT) {
        auto [N, rep] = nilradical_restriction(RT);
        N_ = std::move(N);
        rep_ = std::move(rep);
    }

    InvariantComplex(FlatLieAlgebra N, Representation rep)
        : N_(std::move(N)), rep_(std::move(rep)) {}

    const FlatLieAlgebra& nilradical() const { return N_; }
    const Representation& module() const { return rep_; }

    const GradedCochainBasis& basis(int j) const {
        auto it = bases_.find(j);
        if (it != bases_.end()) return it->second;
        GradedCochainBasis b;
        b.degree = j;
        int nw = N_.dim(), m = rep_.module_dim;
        CochainBasis full(j, nw, m);
        for (const auto& T : full.tuples()) {
            Weight s = Weight::zero(weight_rank());
            for (int i : T) s = add(s, N_.tags()[static_cast<std::size_t>(i)].weight);
            for (int nu = 0; nu < m; ++nu)
                if (rep_.module_weights[static_cast<std::size_t>(nu)] == s)
                    b.entries.emplace_back(T, nu);
        }
        return bases_.emplace(j, std::move(b)).first->second;
    }

    // Matrix of d^j restricted to the invariant subcomplex:
    // rows = basis(j+1), cols = basis(j). Throws if the full differential
    // carries any invariant column outside the invariant rows.
    const SparseMatrix& restricted(int j) const {
        auto it = matrices_.find(j);
        if (it != matrices_.end()) return it->second;
        const auto& colsb = basis(j);
        const auto& rowsb = basis(j + 1);
        int nw = N_.dim(), m = rep_.module_dim;
        CochainBasis fullcols(j, nw, m), fullrows(j + 1, nw, m);
        std::map<int, int> colpos, rowpos;
        for (int i = 0; i < colsb.size(); ++i) {
            const auto& [T, nu] = colsb.entries[static_cast<std::size_t>(i)];
            colpos.emplace(fullcols.index(fullcols.tuple_rank(T), nu), i);
        }
        for (int i = 0; i < rowsb.size(); ++i) {
            const auto& [T, nu] = rowsb.entries[static_cast<std::size_t>(i)];
            rowpos.emplace(fullrows.index(fullrows.tuple_rank(T), nu), i);
        }
        auto slice = differential_matrix(N_, rep_, j);
        SparseMatrix R(rowsb.size(), colsb.size());
        for (int r = 0; r < slice.matrix.rows(); ++r)
            for (const auto& [c, v] : slice.matrix.row(r)) {
                auto ci = colpos.find(c);
                if (ci == colpos.end()) continue;
                auto ri = rowpos.find(r);
                if (ri == rowpos.end())
                    throw Error("grading violated: invariant column " + std::to_string(c) +
                                " has support in non-invariant row " + std::to_string(r));
                R.add(ri->second, ci->second, v);
            }
        return matrices_.emplace(j, std::move(R)).first->second;
    }

    int rank_of_restricted(int j) const { return restricted(j).rank(); }

    int h_dim(int j) const {
        int z = basis(j).size() - rank_of_restricted(j);
        int b = j == 0 ? 0 : rank_of_restricted(j - 1);
        return z - b;
    }

    // Invariant cocycles of degree 2 completing the coboundaries to a basis
    // of the invariant H^2.
    std::vector<Witness2Cochain> representatives2() const {
        const auto& d2 = restricted(2);
        auto kernel = kernel_basis(d2);
        ColumnSpan span;
        auto cols = restricted(1).columns();
        for (std::size_t c = 0; c < cols.size(); ++c)
            span.add(std::move(cols[c]), static_cast<int>(c));
        std::vector<Witness2Cochain> out;
        for (auto& z : kernel) {
            if (span.add(z, -1)) continue;
            out.push_back(to_witness(z));
        }
        return out;
    }

    Witness2Cochain to_witness(const std::map<int, Rat>& coords) const {
        const auto& b = basis(2);
        Witness2Cochain w;
        for (const auto& [i, v] : coords) {
            const auto& [T, nu] = b.entries[static_cast<std::size_t>(i)];
            InvariantCochainEntry e;
            e.x = N_.tags()[static_cast<std::size_t>(T[0])].weight;
            e.y = N_.tags()[static_cast<std::size_t>(T[1])].weight;
            e.value = nu >= N_.dim()
                          ? BasisTag::torus_vector(nu - N_.dim(), weight_rank())
                          : BasisTag::weight_vector(
                                rep_.module_weights[static_cast<std::size_t>(nu)]);
            e.coeff = v;
            w.entries.push_back(std::move(e));
        }
        return w;
    }

    // Column coordinates of an invariant 2-cochain given by weight pairs.
    std::map<int, Rat> coords_of(const Witness2Cochain& w) const {
        const auto& b = basis(2);
        std::map<std::pair<std::vector<int>, int>, int> pos;
        for (int i = 0; i < b.size(); ++i) pos.emplace(b.entries[static_cast<std::size_t>(i)], i);
        std::map<int, Rat> out;
        for (const auto& e : w.entries) {
            int ix = weight_index(e.x), iy = weight_index(e.y);
            if (ix < 0 || iy < 0) throw Error("witness argument outside the nilradical");
            Rat v = e.coeff;
            if (ix == iy) throw Error("witness argument pair is degenerate");
            if (ix > iy) {
                std::swap(ix, iy);
                v = -v;
            }
            int nu = module_index(e.value);
            auto it = pos.find({{ix, iy}, nu});
            if (it == pos.end())
                throw Error("witness entry (" + e.x.str() + "," + e.y.str() +
                            ") is not T-invariant");
            auto [slot, inserted] = out.emplace(it->second, v);
            if (!inserted) slot->second += v;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    int weight_rank() const {
        return N_.dim() > 0 ? N_.tags()[0].weight.rank() : 0;
    }

private:
    int weight_index(const Weight& w) const {
        for (int i = 0; i < N_.dim(); ++i)
            if (N_.tags()[static_cast<std::size_t>(i)].weight == w) return i;
        return -1;
    }

    int module_index(const BasisTag& tag) const {
        if (tag.kind == BasisTag::TorusVector) return N_.dim() + tag.torus_index;
        for (int nu = 0; nu < N_.dim() && nu < rep_.module_dim; ++nu)
            if (rep_.module_weights[static_cast<std::size_t>(nu)] == tag.weight) return nu;
        throw Error("witness value weight " + tag.weight.str() + " not in the module");
    }

    FlatLieAlgebra N_;
    Representation rep_;
    mutable std::map<int, GradedCochainBasis> bases_;
    mutable std::map<int, SparseMatrix> matrices_;
};

struct InvariantRow {
    int degree = 0;
    int dim_cochains = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim_cohomology = 0;
    // basis-count breakdown of the invariant cochains by total weight
    std::vector<std::pair<Weight, int>> cochains_by_weight;
};

struct InvariantReport {
    std::vector<InvariantRow> rows;
};

inline InvariantReport invariant_report(const InvariantComplex& ic, int j_max) {
    InvariantReport rep;
    for (int j = 0; j <= j_max; ++j) {
        InvariantRow row;
        row.degree = j;
        row.dim_cochains = ic.basis(j).size();
        int rk = ic.rank_of_restricted(j);
        row.dim_cocycles = row.dim_cochains - rk;
        row.dim_coboundaries = j == 0 ? 0 : ic.rank_of_restricted(j - 1);
        row.dim_cohomology = row.dim_cocycles - row.dim_coboundaries;
        std::map<std::vector<int>, int> by_weight;
        for (const auto& [T, nu] : ic.basis(j).entries) {
            Weight s = ic.module().module_weights[static_cast<std::size_t>(nu)];
            ++by_weight[s.coords];
        }
        for (const auto& [coords, count] : by_weight)
            row.cochains_by_weight.emplace_back(Weight(coords), count);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline int invariant_cohomology_dim(const InvariantComplex& ic, int j) { return ic.h_dim(j); }

// H^n(N x| T, M) = sum_{i+j=n} C(dim T, i) * h^j_inv.
inline int hochschild_serre_dim(const std::vector<int>& h_inv, int torus_dim, int n) {
    int total = 0;
    for (int i = 0; i <= n; ++i) {
        int j = n - i;
        if (j < static_cast<int>(h_inv.size()))
            total += static_cast<int>(binomial(torus_dim, i)) * h_inv[static_cast<std::size_t>(j)];
    }
    return total;
}

struct RigidityVerdict {
    enum Status { Rigid, NonRigid } status = Rigid;
    std::string provenance;      // criterion name, or "computed"
    bool computed = false;       // true when dims below are filled in
    int h0 = -1, h1 = -1, h2 = -1;
    int dim_h2 = -1;             // dim H^2(R_T, R_T) when computed
    int lower_bound = 0;         // certified lower bound on dim H^2 otherwise
    std::vector<Witness2Cochain> witnesses;

    bool rigid() const { return status == Rigid; }
};

// Direct decision by computation on the invariant subcomplex.
inline RigidityVerdict rigidity(const GradedNilpotentAlgebra& A) {
    auto RT = extend(A);  // throws NotMaximalRank
    InvariantComplex ic(RT);
    RigidityVerdict v;
    v.computed = true;
    v.provenance = "computed";
    v.h0 = ic.h_dim(0);
    v.h1 = ic.h_dim(1);
    v.h2 = ic.h_dim(2);
    int T = RT.torus_dim();
    v.dim_h2 = v.h2 + T * v.h1 + static_cast<int>(binomial(T, 2)) * v.h0;
    if (v.dim_h2 == 0) {
        v.status = RigidityVerdict::Rigid;
    } else {
        v.status = RigidityVerdict::NonRigid;
        v.lower_bound = v.dim_h2;
        v.witnesses = ic.representatives2();
    }
    return v;
}

}  // namespace lialg
