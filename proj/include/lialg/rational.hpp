// Exact arithmetic types. All linear algebra in this library is over Q.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace lialg {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// "p", "-p" or "p/q" with q > 0 after normalization.
inline std::optional<Rat> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!ok_int(num) || !ok_int(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        return Rat(Int(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rat& r) {
    return r.str();
}

}  // namespace lialg
