#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schilling {

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator, which is exactly the representation the prover relies on.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Formats as "num/den" (denominator always written, so round-trips are
/// unambiguous in certificates and CSV rows).
inline std::string rat_to_string(const Rat& r) {
    return num(r).str() + "/" + den(r).str();
}

/// Parses "num/den" or a bare integer "num". Throws std::invalid_argument
/// on malformed input or zero denominator.
inline Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(BigInt(std::string(s)));
        BigInt n{std::string(s.substr(0, slash))};
        BigInt d{std::string(s.substr(slash + 1))};
        if (d == 0) bad();
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat{}; // unreachable
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace schilling
