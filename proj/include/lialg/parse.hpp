// The algebra definition file format:
//
//   # comment lines start with '#'
//   rank 2
//   weight 1 0
//   weight 0 1
//   weight 1 1
//   bracket [1,0] [0,1] 1
//
// Weights are bracketed integer tuples of length = rank; coefficients are
// rationals "p/q" or integers. Declaration order is free, but brackets must
// reference declared weights and the sum weight must be declared too.
#pragma once

#include "lialg/algebra.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace lialg {

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline std::optional<std::vector<int>> parse_tuple(const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') return std::nullopt;
    std::vector<int> coords;
    std::string cur;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
        char ch = tok[i];
        if (ch == ',') {
            if (cur.empty()) return std::nullopt;
            coords.push_back(std::stoi(cur));
            cur.clear();
        } else if ((ch >= '0' && ch <= '9') || ch == '-') {
            cur += ch;
        } else {
            return std::nullopt;
        }
    }
    if (cur.empty()) return std::nullopt;
    coords.push_back(std::stoi(cur));
    return coords;
}

}  // namespace detail

inline GradedNilpotentAlgebra parse_algebra(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int rank = -1;
    int rank_line = 0;
    std::vector<std::pair<int, Weight>> weights;           // (line, weight)
    struct RawBracket {
        int line;
        Weight a, b;
        Rat value;
    };
    std::vector<RawBracket> brackets_raw;
    std::vector<std::pair<int, std::vector<std::string>>> bracket_lines;

    // first pass: rank and weights (declaration order is free)
    std::vector<std::string> lines;
    while (std::getline(is, line)) lines.push_back(line);

    for (std::size_t li = 0; li < lines.size(); ++li) {
        lineno = static_cast<int>(li) + 1;
        auto toks = detail::tokens_of(lines[li]);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& kw = toks[0];
        if (kw == "rank") {
            if (rank >= 0) throw ParseError(lineno, "duplicate rank declaration");
            if (toks.size() != 2) throw ParseError(lineno, "expected: rank <n>");
            try {
                rank = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "rank must be an integer");
            }
            if (rank < 1) throw ParseError(lineno, "rank must be positive");
            rank_line = lineno;
        } else if (kw == "weight") {
            std::vector<int> coords;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                try {
                    coords.push_back(std::stoi(toks[i]));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "weight coordinates must be integers");
                }
            }
            for (int c : coords)
                if (c < 0) throw ParseError(lineno, "weight coordinates must be non-negative");
            Weight w(coords);
            if (w.is_zero()) throw ParseError(lineno, "the zero weight is not allowed");
            for (const auto& [l, prev] : weights)
                if (prev == w)
                    throw DuplicateWeight(lineno, "weight " + w.str() +
                                                      " already declared on line " +
                                                      std::to_string(l));
            weights.emplace_back(lineno, std::move(w));
        } else if (kw == "bracket") {
            bracket_lines.emplace_back(lineno, toks);
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (rank < 0) throw ParseError(0, "missing rank declaration");
    for (const auto& [l, w] : weights)
        if (w.rank() != rank)
            throw ParseError(l, "weight " + w.str() + " has " + std::to_string(w.rank()) +
                                    " coordinates, rank is " + std::to_string(rank));
    (void)rank_line;

    std::vector<Weight> ws;
    for (const auto& [l, w] : weights) ws.push_back(w);
    WeightSystem W(rank, ws);

    // second pass: brackets against the declared weight set
    std::vector<BracketTriple> triples;
    std::vector<std::pair<int, int>> seen;
    for (const auto& [l, toks] : bracket_lines) {
        if (toks.size() != 4)
            throw ParseError(l, "expected: bracket [..] [..] <coefficient>");
        auto ta = detail::parse_tuple(toks[1]);
        auto tb = detail::parse_tuple(toks[2]);
        if (!ta || !tb) throw ParseError(l, "malformed weight tuple");
        if (static_cast<int>(ta->size()) != rank || static_cast<int>(tb->size()) != rank)
            throw ParseError(l, "bracket tuples must have length " + std::to_string(rank));
        Weight a(*ta), b(*tb);
        int ia = W.index_of(a), ib = W.index_of(b);
        if (ia < 0) throw UnknownWeight(l, "bracket references undeclared weight " + a.str());
        if (ib < 0) throw UnknownWeight(l, "bracket references undeclared weight " + b.str());
        if (ia == ib)
            throw ParseError(l, "self bracket [" + a.str() + "," + a.str() +
                                    "] vanishes by antisymmetry");
        if (!W.contains(add(a, b)))
            throw UnknownWeight(l, "bracket target " + add(a, b).str() + " is not declared");
        auto v = parse_rational(toks[3]);
        if (!v) throw NonRational(l, "coefficient '" + toks[3] + "' is not a rational");
        if (*v == 0) throw ParseError(l, "zero coefficient");
        int lo = std::min(ia, ib), hi = std::max(ia, ib);
        for (const auto& [plo, phi] : seen)
            if (plo == lo && phi == hi)
                throw DuplicateBracket(l, "bracket on pair " + W[lo].str() + ", " +
                                              W[hi].str() + " already declared");
        seen.emplace_back(lo, hi);
        triples.push_back({a, b, *v});
    }
    return GradedNilpotentAlgebra(std::move(W), triples);
}

// Emits the canonical file form; parse(emit(A)) reproduces the constant map.
inline std::string emit_algebra(const GradedNilpotentAlgebra& A, const std::string& comment = "") {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << "\n";
    os << "rank " << A.rank() << "\n";
    const auto& W = A.weights();
    for (const auto& w : W.members()) {
        os << "weight";
        for (int c : w.coords) os << " " << c;
        os << "\n";
    }
    auto tuple = [](const Weight& w) {
        std::string s = "[";
        for (std::size_t i = 0; i < w.coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w.coords[i]);
        }
        return s + "]";
    };
    for (const auto& [pair, v] : A.constants())
        os << "bracket " << tuple(W[pair.first]) << " " << tuple(W[pair.second]) << " "
           << v.str() << "\n";
    return os.str();
}

}  // namespace lialg
