#include "schilling/zeroset.hpp"

#include <algorithm>
#include <sstream>

namespace schilling {

namespace {

// Position comparison ignoring open/closed flags.
int cmp_pos(const Bound& a, const Bound& b) {
    auto rank = [](const Bound& x) {
        return x.kind == Bound::Kind::NegInf ? -1 : x.kind == Bound::Kind::PosInf ? 1 : 0;
    };
    const int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra != 0) return 0;
    if (a.value < b.value) return -1;
    if (a.value > b.value) return 1;
    return 0;
}

// As lower bounds: closed starts earlier at equal position.
int cmp_lower(const Bound& a, const Bound& b) {
    int c = cmp_pos(a, b);
    if (c != 0) return c;
    if (a.closed == b.closed) return 0;
    return a.closed ? -1 : 1;
}

// As upper bounds: open ends earlier at equal position.
int cmp_upper(const Bound& a, const Bound& b) {
    int c = cmp_pos(a, b);
    if (c != 0) return c;
    if (a.closed == b.closed) return 0;
    return a.closed ? 1 : -1;
}

// True iff there is an uncovered point between an interval ending at hi and
// one starting at lo.
bool gap_between(const Bound& hi, const Bound& lo) {
    if (hi.kind == Bound::Kind::PosInf || lo.kind == Bound::Kind::NegInf) return false;
    const int c = cmp_pos(hi, lo);
    if (c < 0) return true;
    if (c > 0) return false;
    return !hi.closed && !lo.closed;
}

bool is_degenerate(const Interval& iv) {
    return iv.lo.kind == Bound::Kind::Finite && iv.hi.kind == Bound::Kind::Finite &&
           iv.lo.closed && iv.hi.closed && iv.lo.value == iv.hi.value;
}

// Empty unless lo < hi, or lo == hi finite with both endpoints closed.
bool nonempty(const Bound& lo, const Bound& hi) {
    const int c = cmp_pos(lo, hi);
    if (c < 0) return true;
    if (c > 0) return false;
    return lo.kind == Bound::Kind::Finite && lo.closed && hi.closed;
}

std::vector<Interval> as_pieces(const ZeroSet& s) {
    std::vector<Interval> out = s.intervals();
    for (const Rat& a : s.atoms())
        out.push_back(Interval{Bound::at(a), Bound::at(a)});
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return cmp_lower(a.lo, b.lo) < 0; });
    return out;
}

Bound map_bound(const Bound& b, const Rat& mul, const Rat& add) {
    Bound out = b;
    if (b.kind == Bound::Kind::Finite) {
        out.value = b.value * mul + add;
    } else if (mul < 0) {
        out.kind = b.kind == Bound::Kind::NegInf ? Bound::Kind::PosInf : Bound::Kind::NegInf;
    }
    return out;
}

ZeroSet affine(const ZeroSet& set, const Rat& mul, const Rat& add) {
    std::vector<Interval> ivs;
    ivs.reserve(set.intervals().size());
    for (const Interval& iv : set.intervals()) {
        Bound lo = map_bound(iv.lo, mul, add);
        Bound hi = map_bound(iv.hi, mul, add);
        if (mul < 0) std::swap(lo, hi);
        ivs.push_back(Interval{std::move(lo), std::move(hi)});
    }
    std::vector<Rat> atoms;
    atoms.reserve(set.atoms().size());
    for (const Rat& a : set.atoms())
        atoms.push_back(a * mul + add);
    return ZeroSet::from_pieces(std::move(ivs), std::move(atoms), set.max_intervals());
}

} // namespace

Interval make_interval(Bound lo, Bound hi) {
    if (lo.kind == Bound::Kind::PosInf || hi.kind == Bound::Kind::NegInf)
        throw MalformedIntervalError("interval bounds reversed");
    if ((lo.kind != Bound::Kind::Finite && lo.closed) ||
        (hi.kind != Bound::Kind::Finite && hi.closed))
        throw MalformedIntervalError("infinite endpoint cannot be closed");
    if (!nonempty(lo, hi))
        throw MalformedIntervalError("empty interval: " + to_string(Interval{lo, hi}));
    return Interval{std::move(lo), std::move(hi)};
}

ZeroSet ZeroSet::from_pieces(std::vector<Interval> intervals, std::vector<Rat> atoms,
                             std::size_t maxIntervals) {
    std::vector<Interval> pieces = std::move(intervals);
    pieces.reserve(pieces.size() + atoms.size());
    for (Rat& a : atoms)
        pieces.push_back(Interval{Bound::at(a), Bound::at(std::move(a))});
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return cmp_lower(a.lo, b.lo) < 0; });

    ZeroSet out(maxIntervals);
    auto emit = [&](Interval iv) {
        if (is_degenerate(iv))
            out.atoms_.push_back(std::move(iv.lo.value));
        else
            out.intervals_.push_back(std::move(iv));
    };
    for (std::size_t i = 0; i < pieces.size();) {
        Interval cur = pieces[i++];
        while (i < pieces.size() && !gap_between(cur.hi, pieces[i].lo)) {
            if (cmp_upper(pieces[i].hi, cur.hi) > 0) cur.hi = pieces[i].hi;
            ++i;
        }
        emit(std::move(cur));
    }
    if (out.intervals_.size() > maxIntervals)
        throw IntervalBudgetExceeded("interval cap " + std::to_string(maxIntervals) +
                                     " exceeded (" + std::to_string(out.intervals_.size()) + ")");
    return out;
}

ZeroSet insert(const ZeroSet& set, const Interval& piece) {
    Interval checked = make_interval(piece.lo, piece.hi);
    std::vector<Interval> ivs = set.intervals();
    ivs.push_back(std::move(checked));
    return ZeroSet::from_pieces(std::move(ivs), set.atoms(), set.max_intervals());
}

ZeroSet insert(const ZeroSet& set, const Rat& atom) {
    std::vector<Rat> atoms = set.atoms();
    atoms.push_back(atom);
    return ZeroSet::from_pieces(set.intervals(), std::move(atoms), set.max_intervals());
}

ZeroSet unite(const ZeroSet& a, const ZeroSet& b) {
    std::vector<Interval> ivs = a.intervals();
    ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
    std::vector<Rat> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return ZeroSet::from_pieces(std::move(ivs), std::move(atoms),
                                std::max(a.max_intervals(), b.max_intervals()));
}

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) {
    const std::vector<Interval> pa = as_pieces(a);
    const std::vector<Interval> pb = as_pieces(b);
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        const Bound& lo = cmp_lower(pa[i].lo, pb[j].lo) >= 0 ? pa[i].lo : pb[j].lo;
        const Bound& hi = cmp_upper(pa[i].hi, pb[j].hi) <= 0 ? pa[i].hi : pb[j].hi;
        if (nonempty(lo, hi)) out.push_back(Interval{lo, hi});
        if (cmp_upper(pa[i].hi, pb[j].hi) <= 0)
            ++i;
        else
            ++j;
    }
    return ZeroSet::from_pieces(std::move(out), {},
                                std::max(a.max_intervals(), b.max_intervals()));
}

ZeroSet translate(const ZeroSet& set, const Rat& t) { return affine(set, Rat(1), t); }

ZeroSet scale(const ZeroSet& set, const Rat& s) {
    if (s == 0) throw ZeroScaleError("scale factor must be nonzero");
    return affine(set, s, Rat(0));
}

ZeroSet symmetrize(const ZeroSet& set) { return unite(set, scale(set, Rat(-1))); }

bool member(const ZeroSet& set, const Rat& x) {
    for (const Interval& iv : set.intervals()) {
        const bool aboveLo = iv.lo.kind == Bound::Kind::NegInf ||
                             iv.lo.value < x || (iv.lo.closed && iv.lo.value == x);
        const bool belowHi = iv.hi.kind == Bound::Kind::PosInf ||
                             x < iv.hi.value || (iv.hi.closed && iv.hi.value == x);
        if (aboveLo && belowHi) return true;
    }
    return std::binary_search(set.atoms().begin(), set.atoms().end(), x);
}

bool contains(const ZeroSet& set, const Interval& piece) {
    Interval checked = make_interval(piece.lo, piece.hi);
    if (is_degenerate(checked)) return member(set, checked.lo.value);
    // Normalization keeps components maximal, so a nondegenerate connected
    // piece is covered iff a single stored interval covers it.
    for (const Interval& iv : set.intervals())
        if (cmp_lower(iv.lo, checked.lo) <= 0 && cmp_upper(checked.hi, iv.hi) <= 0)
            return true;
    return false;
}

bool contains(const ZeroSet& set, const Rat& atom) { return member(set, atom); }

bool contains(const ZeroSet& outer, const ZeroSet& inner) {
    for (const Interval& iv : inner.intervals())
        if (!contains(outer, iv)) return false;
    for (const Rat& a : inner.atoms())
        if (!member(outer, a)) return false;
    return true;
}

bool goal_reached(const ZeroSet& set, const Rat& q) {
    const Interval pos{Bound::open(Rat(0)), Bound::open(q)};
    const Interval neg{Bound::open(-q), Bound::open(Rat(0))};
    return contains(set, pos) || contains(set, neg);
}

std::string to_string(const Bound& b, bool isLower) {
    switch (b.kind) {
    case Bound::Kind::NegInf: return "(-inf";
    case Bound::Kind::PosInf: return "+inf)";
    case Bound::Kind::Finite:
        if (isLower) return (b.closed ? "[" : "(") + rat_to_string(b.value);
        return rat_to_string(b.value) + (b.closed ? "]" : ")");
    }
    return "?";
}

std::string to_string(const Interval& iv) {
    return to_string(iv.lo, true) + ", " + to_string(iv.hi, false);
}

std::string to_string(const ZeroSet& set) {
    std::ostringstream os;
    bool first = true;
    for (const Interval& iv : set.intervals()) {
        if (!first) os << " u ";
        os << to_string(iv);
        first = false;
    }
    for (const Rat& a : set.atoms()) {
        if (!first) os << " u ";
        os << "{" << rat_to_string(a) << "}";
        first = false;
    }
    if (first) os << "{}";
    return os.str();
}

} // namespace schilling
