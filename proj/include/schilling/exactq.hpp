#pragma once

#include "schilling/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace schilling {

struct OutOfRangeError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnknownInequalityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Every rational endpoint the derivation touches, precomputed from q.
/// All fields are exact; bigQ = q/(1-q).
struct QProfile {
    Rat q;
    Rat bigQ;                 // Q = q/(1-q)
    Rat oneMinusQ;            // 1 - Q
    Rat qQ;                   // q*Q
    Rat qTwoMinusQ;           // q*(2-Q)
    Rat q2TwoMinusQ;          // q^2*(2-Q)
    Rat qMinusQ2TwoMinusQ;    // q - q^2*(2-Q)
    Rat qPlusQ2Q;             // q + q^2*Q
    Rat oneMinusQQ;           // 1 - q*Q
    Rat oneMinusQTwoMinusQ;   // 1 - q*(2-Q)
};

enum class RegimeTag { CaseI, CaseII, AboveThreshold, Invalid };

struct Regime {
    RegimeTag tag = RegimeTag::Invalid;
    bool quarterFlag = false; // q == 1/4 exactly
    bool halfGuard = false;   // q < 1/2
};

std::string_view regime_name(RegimeTag tag);

/// Exact sign of sum c_i * q^i (constant term first).
int poly_sign(std::span<const Rat> coefficients, const Rat& q);

/// Throws OutOfRangeError unless 0 < q < 1.
QProfile derived_quantities(const Rat& q);

/// Regime membership decided purely by the exact signs of q^2-3q+1 and
/// 3q^3-3q^2+3q-1; the irrational thresholds themselves never appear.
Regime classify_regime(const Rat& q);

/// Count of geometric-series terms; the infinite case is a first-class value.
struct GeomCount {
    static GeomCount finite(unsigned long n) { return GeomCount{n}; }
    static GeomCount infinity() { return GeomCount{std::nullopt}; }
    bool is_infinite() const { return !n_.has_value(); }
    unsigned long value() const { return *n_; }

private:
    explicit GeomCount(std::optional<unsigned long> n) : n_(n) {}
    std::optional<unsigned long> n_;
};

/// Sum_{i=1..n} q^i; n = 0 gives 0, n = infinity gives Q. Requires 0 < q < 1.
Rat partial_geom_sum(const Rat& q, GeomCount n);

/// The exact side inequalities used along the derivation chain. Each is a
/// polynomial sign condition in q after clearing denominators.
enum class InequalityId {
    INEQ12,   // q - q^2*(2-Q) <= 1 - Q
    QQ_LT,    // q*Q < 1 - q*(2-Q)
    SIDE16A,  // q + q^2*Q < 1 - q*Q
    SIDE16B,  // 1 - q*(2-Q) < q*(2-Q)
    FINAL_Q,  // q < q*(2-Q)
};

std::string_view inequality_name(InequalityId id);
InequalityId inequality_from_name(std::string_view name); // throws UnknownInequalityError

bool check_inequality(InequalityId id, const Rat& q);

/// Bisection root of sum c_i * q^i inside (lo, hi); requires a sign change.
/// Diagnostic only: the prover never consumes the decimal.
double bisect_root(std::span<const Rat> coefficients, Rat lo, Rat hi, double tol);

} // namespace schilling
