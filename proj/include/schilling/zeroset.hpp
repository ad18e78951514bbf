#pragma once

#include "schilling/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace schilling {

struct MalformedIntervalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroScaleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IntervalBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One endpoint of an interval. Infinite endpoints are never closed.
struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rat value;           // meaningful only when kind == Finite
    bool closed = false; // always false for infinite endpoints

    static Bound neg_inf() { return Bound{Kind::NegInf, Rat(0), false}; }
    static Bound pos_inf() { return Bound{Kind::PosInf, Rat(0), false}; }
    static Bound open(Rat v) { return Bound{Kind::Finite, std::move(v), false}; }
    static Bound at(Rat v) { return Bound{Kind::Finite, std::move(v), true}; }

    bool operator==(const Bound& o) const {
        if (kind != o.kind) return false;
        if (kind != Kind::Finite) return true;
        return closed == o.closed && value == o.value;
    }
};

struct Interval {
    Bound lo, hi;
    bool operator==(const Interval& o) const = default;
};

/// Validates lo < hi (or lo == hi with both endpoints closed).
Interval make_interval(Bound lo, Bound hi);

/// Finite union of disjoint rational-endpoint intervals plus isolated atoms.
/// Always normalized: intervals sorted, merged (flag-aware), atoms sorted,
/// deduplicated, and never touching a covered point of an interval.
class ZeroSet {
public:
    static constexpr std::size_t kDefaultMaxIntervals = 4096;

    ZeroSet() = default;
    explicit ZeroSet(std::size_t maxIntervals) : maxIntervals_(maxIntervals) {}

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rat>& atoms() const { return atoms_; }
    bool empty() const { return intervals_.empty() && atoms_.empty(); }
    std::size_t max_intervals() const { return maxIntervals_; }
    void set_max_intervals(std::size_t cap) { maxIntervals_ = cap; }

    bool operator==(const ZeroSet& o) const {
        return intervals_ == o.intervals_ && atoms_ == o.atoms_;
    }

    /// Builds a normalized set from arbitrary pieces; throws
    /// IntervalBudgetExceeded when normalization needs more than the cap.
    static ZeroSet from_pieces(std::vector<Interval> intervals, std::vector<Rat> atoms,
                               std::size_t maxIntervals = kDefaultMaxIntervals);

private:
    std::vector<Interval> intervals_;
    std::vector<Rat> atoms_;
    std::size_t maxIntervals_ = kDefaultMaxIntervals;
};

ZeroSet insert(const ZeroSet& set, const Interval& piece);
ZeroSet insert(const ZeroSet& set, const Rat& atom);
ZeroSet unite(const ZeroSet& a, const ZeroSet& b);
ZeroSet intersect(const ZeroSet& a, const ZeroSet& b);
ZeroSet translate(const ZeroSet& set, const Rat& t);
ZeroSet scale(const ZeroSet& set, const Rat& s); // throws ZeroScaleError if s == 0
ZeroSet symmetrize(const ZeroSet& set);          // set union its reflection

bool member(const ZeroSet& set, const Rat& x);
bool contains(const ZeroSet& set, const Interval& piece);
bool contains(const ZeroSet& set, const Rat& atom);
bool contains(const ZeroSet& outer, const ZeroSet& inner);

/// True iff (0,q) or (-q,0) is entirely proven zero.
bool goal_reached(const ZeroSet& set, const Rat& q);

std::string to_string(const Bound& b, bool isLower);
std::string to_string(const Interval& iv);
std::string to_string(const ZeroSet& set);

} // namespace schilling
