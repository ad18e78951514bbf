#include "schilling/exactq.hpp"

namespace schilling {

std::string_view regime_name(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::CaseI: return "CaseI";
    case RegimeTag::CaseII: return "CaseII";
    case RegimeTag::AboveThreshold: return "AboveThreshold";
    case RegimeTag::Invalid: return "Invalid";
    }
    return "?";
}

int poly_sign(std::span<const Rat> coefficients, const Rat& q) {
    Rat acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * q + *it;
    return sign_of(acc);
}

QProfile derived_quantities(const Rat& q) {
    if (q <= 0 || q >= 1)
        throw OutOfRangeError("derived_quantities: q must lie in (0,1)");
    QProfile p;
    p.q = q;
    p.bigQ = q / (1 - q);
    p.oneMinusQ = 1 - p.bigQ;
    p.qQ = q * p.bigQ;
    p.qTwoMinusQ = q * (2 - p.bigQ);
    p.q2TwoMinusQ = q * p.qTwoMinusQ;
    p.qMinusQ2TwoMinusQ = q - p.q2TwoMinusQ;
    p.qPlusQ2Q = q + q * p.qQ;
    p.oneMinusQQ = 1 - p.qQ;
    p.oneMinusQTwoMinusQ = 1 - p.qTwoMinusQ;
    return p;
}

namespace {
// q^2 - 3q + 1 separates case (i) from case (ii); 3q^3 - 3q^2 + 3q - 1 is
// the cubic whose root is the theorem's upper bound for q.
const Rat kQuadratic[] = {Rat(1), Rat(-3), Rat(1)};
const Rat kCubic[] = {Rat(-1), Rat(3), Rat(-3), Rat(3)};
} // namespace

Regime classify_regime(const Rat& q) {
    Regime r;
    r.quarterFlag = (q == Rat(1, 4));
    r.halfGuard = (q < Rat(1, 2));
    if (q <= 0 || q >= 1) {
        r.tag = RegimeTag::Invalid;
        return r;
    }
    if (poly_sign(kCubic, q) > 0) {
        r.tag = RegimeTag::AboveThreshold;
    } else if (poly_sign(kQuadratic, q) >= 0 && r.halfGuard) {
        r.tag = RegimeTag::CaseI;
    } else {
        r.tag = RegimeTag::CaseII;
    }
    return r;
}

Rat partial_geom_sum(const Rat& q, GeomCount n) {
    if (q <= 0 || q >= 1)
        throw OutOfRangeError("partial_geom_sum: q must lie in (0,1)");
    if (n.is_infinite())
        return q / (1 - q);
    // q*(1 - q^n)/(1 - q)
    Rat qn = 1;
    for (unsigned long i = 0; i < n.value(); ++i) qn *= q;
    return q * (1 - qn) / (1 - q);
}

std::string_view inequality_name(InequalityId id) {
    switch (id) {
    case InequalityId::INEQ12: return "INEQ12";
    case InequalityId::QQ_LT: return "QQ_LT";
    case InequalityId::SIDE16A: return "SIDE16A";
    case InequalityId::SIDE16B: return "SIDE16B";
    case InequalityId::FINAL_Q: return "FINAL_Q";
    }
    return "?";
}

InequalityId inequality_from_name(std::string_view name) {
    if (name == "INEQ12") return InequalityId::INEQ12;
    if (name == "QQ_LT") return InequalityId::QQ_LT;
    if (name == "SIDE16A") return InequalityId::SIDE16A;
    if (name == "SIDE16B") return InequalityId::SIDE16B;
    if (name == "FINAL_Q") return InequalityId::FINAL_Q;
    throw UnknownInequalityError("unknown inequality: " + std::string(name));
}

bool check_inequality(InequalityId id, const Rat& q) {
    if (q <= 0 || q >= 1)
        throw OutOfRangeError("check_inequality: q must lie in (0,1)");
    const QProfile p = derived_quantities(q);
    switch (id) {
    case InequalityId::INEQ12: return p.qMinusQ2TwoMinusQ <= p.oneMinusQ;
    case InequalityId::QQ_LT: return p.qQ < p.oneMinusQTwoMinusQ;
    case InequalityId::SIDE16A: return p.qPlusQ2Q < p.oneMinusQQ;
    case InequalityId::SIDE16B: return p.oneMinusQTwoMinusQ < p.qTwoMinusQ;
    case InequalityId::FINAL_Q: return q < p.qTwoMinusQ;
    }
    throw UnknownInequalityError("unknown inequality id");
}

double bisect_root(std::span<const Rat> coefficients, Rat lo, Rat hi, double tol) {
    int slo = poly_sign(coefficients, lo);
    int shi = poly_sign(coefficients, hi);
    if (slo == 0) return to_double(lo);
    if (shi == 0) return to_double(hi);
    if (slo == shi)
        throw std::invalid_argument("bisect_root: no sign change on interval");
    while (to_double(hi - lo) > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = poly_sign(coefficients, mid);
        if (sm == 0) return to_double(mid);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return to_double((lo + hi) / 2);
}

} // namespace schilling
