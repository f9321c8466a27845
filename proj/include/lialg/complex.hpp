// Chevalley-Eilenberg cochain complex of a flat Lie algebra with coefficients
// in a finite-dimensional module, over exact rationals. This is the
// brute-force engine: no grading tricks, bases enumerated in plain
// lexicographic order.
//
// Sign convention of the differential:
//   (d^k f)(x_1..x_{k+1}) = sum_i (-1)^{i+1} x_i . f(.. x_i^ ..)
//                         + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i^ .. x_j^ ..)
#pragma once

#include "lialg/extension.hpp"
#include "lialg/parallel.hpp"
#include "lialg/sparse.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lialg {

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Basis of C^k = Hom(/\^k G, M): (sorted k-tuple of algebra indices, module
// index), tuple-major lexicographic, module-minor.
class CochainBasis {
public:
    CochainBasis(int degree, int algebra_dim, int module_dim)
        : degree_(degree), algebra_dim_(algebra_dim), module_dim_(module_dim) {
        std::vector<int> t(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) t[static_cast<std::size_t>(i)] = i;
        if (degree <= algebra_dim) {
            for (;;) {
                tuples_.push_back(t);
                int i = degree - 1;
                while (i >= 0 && t[static_cast<std::size_t>(i)] == algebra_dim - degree + i) --i;
                if (i < 0) break;
                ++t[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < degree; ++j)
                    t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    int degree() const { return degree_; }
    int module_dim() const { return module_dim_; }
    int size() const { return static_cast<int>(tuples_.size()) * module_dim_; }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }

    // Lexicographic rank of a sorted tuple.
    int tuple_rank(const std::vector<int>& t) const {
        std::int64_t r = 0;
        int prev = -1;
        for (int i = 0; i < degree_; ++i) {
            for (int v = prev + 1; v < t[static_cast<std::size_t>(i)]; ++v)
                r += binomial(algebra_dim_ - 1 - v, degree_ - 1 - i);
            prev = t[static_cast<std::size_t>(i)];
        }
        return static_cast<int>(r);
    }

    int index(int tuple_rank_, int module_index) const {
        return tuple_rank_ * module_dim_ + module_index;
    }

private:
    int degree_, algebra_dim_, module_dim_;
    std::vector<std::vector<int>> tuples_;
};

struct ComplexSlice {
    int degree = 0;  // matrix of d^degree: rows C^{degree+1}, cols C^degree
    SparseMatrix matrix;
};

inline ComplexSlice differential_matrix(const FlatLieAlgebra& L, const Representation& rho,
                                        int k) {
    int d = L.dim(), m = rho.module_dim;
    CochainBasis rows(k + 1, d, m), cols(k, d, m);
    ComplexSlice slice{k, SparseMatrix(rows.size(), cols.size())};
    auto& M = slice.matrix;

    std::vector<int> T(static_cast<std::size_t>(k));
    for (std::size_t R = 0; R < rows.tuples().size(); ++R) {
        const auto& S = rows.tuples()[R];
        int rbase = static_cast<int>(R) * m;
        // module action term
        for (int i = 0; i <= k; ++i) {
            for (int p = 0, q = 0; p <= k; ++p)
                if (p != i) T[static_cast<std::size_t>(q++)] = S[static_cast<std::size_t>(p)];
            int cbase = cols.tuple_rank(T) * m;
            int sign = (i % 2 == 0) ? 1 : -1;
            const auto& act = rho.action[static_cast<std::size_t>(S[static_cast<std::size_t>(i)])];
            for (int nu = 0; nu < m; ++nu)
                for (const auto& [mu, v] : act[static_cast<std::size_t>(nu)])
                    M.add(rbase + mu, cbase + nu, sign < 0 ? -v : v);
        }
        // bracket substitution term
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                int sign = ((i + j) % 2 == 0) ? 1 : -1;
                auto br = L.bracket_basis(S[static_cast<std::size_t>(i)],
                                          S[static_cast<std::size_t>(j)]);
                if (br.empty()) continue;
                std::vector<int> rest;
                rest.reserve(static_cast<std::size_t>(k - 1));
                for (int p = 0; p <= k; ++p)
                    if (p != i && p != j) rest.push_back(S[static_cast<std::size_t>(p)]);
                for (const auto& [b, v] : br) {
                    bool dup = false;
                    int pos = 0;
                    for (int r : rest) {
                        if (r == b) { dup = true; break; }
                        if (r < b) ++pos;
                    }
                    if (dup) continue;
                    T.assign(rest.begin(), rest.end());
                    T.insert(T.begin() + pos, b);
                    int cbase = cols.tuple_rank(T) * m;
                    Rat coeff = (pos % 2 == 0) ? v : -v;
                    if (sign < 0) coeff = -coeff;
                    for (int nu = 0; nu < m; ++nu) M.add(rbase + nu, cbase + nu, coeff);
                }
                T.resize(static_cast<std::size_t>(k));
            }
    }
    return slice;
}

// d^k o d^{k-1} = 0, as an exact zero-matrix check. Requires 1 <= k <= dim.
inline bool verify_complex(const FlatLieAlgebra& L, const Representation& rho, int k) {
    auto dk = differential_matrix(L, rho, k);
    auto dk1 = differential_matrix(L, rho, k - 1);
    return dk.matrix.multiply(dk1.matrix).is_zero();
}

struct CohomologyRow {
    int degree = 0;
    int dim_cochains = 0;
    int rank_differential = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim_cohomology = 0;
};

struct CohomologyReport {
    std::vector<CohomologyRow> rows;  // degrees 0..k_max

    const CohomologyRow& at(int k) const { return rows[static_cast<std::size_t>(k)]; }
};

// The oracle: dims straight from ranks of the full CE differentials.
inline CohomologyReport cohomology_report(const FlatLieAlgebra& L, const Representation& rho,
                                          int k_max, int threads = 1) {
    std::vector<int> ranks(static_cast<std::size_t>(k_max) + 1, 0);
    std::vector<int> dims(static_cast<std::size_t>(k_max) + 1, 0);
    parallel_for(k_max + 1, threads, [&](int k) {
        auto slice = differential_matrix(L, rho, k);
        ranks[static_cast<std::size_t>(k)] = slice.matrix.rank();
        dims[static_cast<std::size_t>(k)] = slice.matrix.cols();
    });
    CohomologyReport rep;
    for (int k = 0; k <= k_max; ++k) {
        CohomologyRow row;
        row.degree = k;
        row.dim_cochains = dims[static_cast<std::size_t>(k)];
        row.rank_differential = ranks[static_cast<std::size_t>(k)];
        row.dim_cocycles = row.dim_cochains - row.rank_differential;
        row.dim_coboundaries = k == 0 ? 0 : ranks[static_cast<std::size_t>(k - 1)];
        row.dim_cohomology = row.dim_cocycles - row.dim_coboundaries;
        rep.rows.push_back(row);
    }
    return rep;
}

// A k-cochain as an explicit list of basis coefficients.
struct Cochain {
    int degree = 0;
    struct Entry {
        std::vector<int> args;  // sorted algebra basis indices
        int module_index = 0;
        Rat coeff;
    };
    std::vector<Entry> entries;
};

// Representatives of a basis of H^k: cocycles completing the coboundary space
// inside the cocycle space. Throws EmptyCohomology when H^k = 0.
inline std::vector<Cochain> cocycle_representatives(const FlatLieAlgebra& L,
                                                    const Representation& rho, int k) {
    auto dk = differential_matrix(L, rho, k);
    auto kernel = kernel_basis(dk.matrix);
    // rank-nullity cross-check
    if (static_cast<int>(kernel.size()) + dk.matrix.rank() != dk.matrix.cols())
        throw Error("rank-nullity violation in cocycle_representatives");

    ColumnSpan span;
    if (k >= 1) {
        auto prev = differential_matrix(L, rho, k - 1);
        auto cols = prev.matrix.columns();
        for (std::size_t c = 0; c < cols.size(); ++c)
            span.add(std::move(cols[c]), static_cast<int>(c));
    }
    int d = L.dim(), m = rho.module_dim;
    CochainBasis basis(k, d, m);
    std::vector<Cochain> reps;
    for (auto& z : kernel) {
        if (span.add(z, -1)) continue;  // lies in the coboundary span
        Cochain f;
        f.degree = k;
        for (const auto& [idx, v] : z) {
            Cochain::Entry e;
            e.args = basis.tuples()[static_cast<std::size_t>(idx / m)];
            e.module_index = idx % m;
            e.coeff = v;
            f.entries.push_back(std::move(e));
        }
        reps.push_back(std::move(f));
    }
    if (reps.empty()) throw EmptyCohomology("H^" + std::to_string(k) + " = 0");
    return reps;
}

}  // namespace lialg
