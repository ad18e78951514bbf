#include "schilling/prover.hpp"

#include <limits>
#include <utility>

namespace schilling {

std::string_view rule_name(RuleKind r) {
    switch (r) {
    case RuleKind::AXIOM: return "AXIOM";
    case RuleKind::FORWARD: return "FORWARD";
    case RuleKind::BACK_MINUS: return "BACK_MINUS";
    case RuleKind::BACK_CENTER: return "BACK_CENTER";
    case RuleKind::BACK_PLUS: return "BACK_PLUS";
    case RuleKind::INEQUALITY_CHECK: return "INEQUALITY_CHECK";
    case RuleKind::LEMMA1_CLOSURE: return "LEMMA1_CLOSURE";
    case RuleKind::SYMMETRIZE: return "SYMMETRIZE";
    }
    return "?";
}

RuleKind rule_from_name(std::string_view name) {
    for (RuleKind r : {RuleKind::AXIOM, RuleKind::FORWARD, RuleKind::BACK_MINUS,
                       RuleKind::BACK_CENTER, RuleKind::BACK_PLUS, RuleKind::INEQUALITY_CHECK,
                       RuleKind::LEMMA1_CLOSURE, RuleKind::SYMMETRIZE})
        if (rule_name(r) == name) return r;
    throw std::invalid_argument("unknown rule: " + std::string(name));
}

std::string_view axiom_name(AxiomKind k) {
    switch (k) {
    case AxiomKind::SUPPORT: return "SUPPORT";
    case AxiomKind::SEED_LEMMA2: return "SEED_LEMMA2";
    case AxiomKind::ATOM_ZERO: return "ATOM_ZERO";
    case AxiomKind::ATOM_Q: return "ATOM_Q";
    case AxiomKind::ATOM_Q_CONDITIONAL: return "ATOM_Q_CONDITIONAL";
    }
    return "?";
}

std::string_view verdict_name(Verdict v) {
    return v == Verdict::TRIVIAL_ONLY ? "TRIVIAL_ONLY" : "INCOMPLETE";
}

std::string_view saturate_status_name(SaturateStatus s) {
    switch (s) {
    case SaturateStatus::GOAL: return "GOAL";
    case SaturateStatus::STALLED: return "STALLED";
    case SaturateStatus::BUDGET: return "BUDGET";
    }
    return "?";
}

namespace {

ZeroSet singleton(const Rat& a, std::size_t cap) {
    return ZeroSet::from_pieces({}, {a}, cap);
}

ZeroSet closed_band(const Rat& lo, const Rat& hi, std::size_t cap) {
    return ZeroSet::from_pieces({Interval{Bound::at(lo), Bound::at(hi)}}, {}, cap);
}

ZeroSet seed_interval(const QProfile& p, std::size_t cap) {
    return ZeroSet::from_pieces(
        {Interval{Bound::open(-p.oneMinusQ), Bound::open(p.oneMinusQ)}}, {}, cap);
}

ZeroSet q_atoms(const QProfile& p, std::size_t cap) {
    return ZeroSet::from_pieces({}, {-p.bigQ, p.bigQ}, cap);
}

// Closure preconditions, spelled out once here for the producer and once in
// the verifier so the two stay independent above the set primitives.
void require_closure(const ZeroSet& Z, const Rat& q, std::size_t index) {
    if (q >= Rat(1, 2))
        throw HalfGuardViolated("lemma 1 closure needs q < 1/2");
    if (!goal_reached(Z, q))
        throw GoalNotReached("neither (0,q) nor (-q,0) is proven zero");
    if (!member(Z, Rat(0)))
        throw StepFailure(index, "", "closure needs the atom at 0");
    const QProfile p = derived_quantities(q);
    if (q == Rat(1, 4) && !member(Z, p.qQ))
        throw StepFailure(index, "", "conditional f(Q) branch needs qQ in the zero set");
    // Induction bookkeeping: Q < 1 and s_n/q = 1 + s_{n-1}.
    if (!(p.bigQ < 1))
        throw StepFailure(index, "", "closure needs Q < 1");
    for (unsigned long n = 1; n <= 8; ++n) {
        const Rat sn = partial_geom_sum(q, GeomCount::finite(n));
        const Rat sn1 = partial_geom_sum(q, GeomCount::finite(n - 1));
        if (sn / q != 1 + sn1)
            throw StepFailure(index, "", "geometric recursion identity failed");
    }
}

// Script-building context for the replay and for saturation passes.
struct Derivation {
    Rat q;
    QProfile p;
    std::size_t cap;
    ZeroSet Z;
    std::vector<DerivationStep> steps;

    std::size_t next() const { return steps.size(); }

    std::size_t push(DerivationStep s) {
        s.index = next();
        Z = unite(Z, s.produced);
        steps.push_back(std::move(s));
        return steps.size() - 1;
    }

    std::size_t check(std::string name, std::string tag) {
        if (!evaluate_named_check(name, q, Z))
            throw StepFailure(next(), name, "check failed: " + name);
        DerivationStep s;
        s.rule = RuleKind::INEQUALITY_CHECK;
        s.paperTag = std::move(tag);
        s.detail = std::move(name);
        return push(std::move(s));
    }

    std::size_t apply(RuleKind rule, ZeroSet window, std::string tag,
                      std::vector<std::size_t> inputs = {}) {
        const ZeroSet scaled = scale_or_empty(window, q);
        auto need = [&](const ZeroSet& part, const char* what) {
            if (!contains(Z, part))
                throw StepFailure(next(), "",
                                  std::string(rule_name(rule)) + ": " + what +
                                      " not in zero set: " + to_string(part));
        };
        ZeroSet produced;
        switch (rule) {
        case RuleKind::FORWARD:
            need(window, "window");
            need(translate(window, Rat(-1)), "window-1");
            need(translate(window, Rat(1)), "window+1");
            produced = scaled;
            break;
        case RuleKind::BACK_CENTER:
            need(scaled, "q*window");
            need(translate(window, Rat(-1)), "window-1");
            need(translate(window, Rat(1)), "window+1");
            produced = window;
            break;
        case RuleKind::BACK_MINUS:
            need(scaled, "q*window");
            need(window, "window");
            need(translate(window, Rat(1)), "window+1");
            produced = translate(window, Rat(-1));
            break;
        case RuleKind::BACK_PLUS:
            need(scaled, "q*window");
            need(window, "window");
            need(translate(window, Rat(-1)), "window-1");
            produced = translate(window, Rat(1));
            break;
        default:
            throw std::logic_error("apply: not a propagation rule");
        }
        DerivationStep s;
        s.rule = rule;
        s.inputs = std::move(inputs);
        s.domain = std::move(window);
        s.produced = std::move(produced);
        s.paperTag = std::move(tag);
        return push(std::move(s));
    }

    std::size_t mirror(const ZeroSet& domain, std::string tag,
                       std::vector<std::size_t> inputs = {}) {
        if (!contains(Z, domain))
            throw StepFailure(next(), "", "SYMMETRIZE: domain not in zero set");
        DerivationStep s;
        s.rule = RuleKind::SYMMETRIZE;
        s.inputs = std::move(inputs);
        s.domain = domain;
        s.produced = scale(domain, Rat(-1));
        s.paperTag = std::move(tag);
        return push(std::move(s));
    }

    std::size_t closure() {
        require_closure(Z, q, next());
        DerivationStep s = lemma1_closure(Z, q, next());
        return push(std::move(s));
    }

    static ZeroSet scale_or_empty(const ZeroSet& s, const Rat& factor) {
        return s.empty() ? s : scale(s, factor);
    }
};

} // namespace

bool evaluate_named_check(std::string_view name, const Rat& q, const ZeroSet& priorZ) {
    const QProfile p = derived_quantities(q);
    if (name == "CASEI_GUARD") return q <= p.oneMinusQ;
    if (name == "COVERAGE")
        return contains(priorZ, Interval{Bound::at(Rat(0)), Bound::at(p.qTwoMinusQ)});
    return check_inequality(inequality_from_name(name), q);
}

ZeroSet support_set(const Rat& q, std::size_t maxIntervals) {
    const QProfile p = derived_quantities(q);
    return ZeroSet::from_pieces({Interval{Bound::neg_inf(), Bound::open(-p.bigQ)},
                                 Interval{Bound::open(p.bigQ), Bound::pos_inf()}},
                                {}, maxIntervals);
}

std::pair<ZeroSet, std::vector<DerivationStep>> initial_axioms(const Rat& q, const Seed& seed) {
    if (q <= 0 || q >= Rat(1, 2))
        throw HalfGuardViolated("axioms need 0 < q < 1/2");
    const QProfile p = derived_quantities(q);
    const std::size_t cap = ZeroSet::kDefaultMaxIntervals;

    std::vector<DerivationStep> steps;
    auto axiom = [&](AxiomKind kind, ZeroSet payload, std::string tag) {
        DerivationStep s;
        s.index = steps.size();
        s.rule = RuleKind::AXIOM;
        s.produced = std::move(payload);
        s.paperTag = std::move(tag);
        s.detail = std::string(axiom_name(kind));
        steps.push_back(std::move(s));
    };

    axiom(AxiomKind::SUPPORT, support_set(q, cap), "support: f(x)=0 for |x|>Q");
    axiom(AxiomKind::SEED_LEMMA2, seed_interval(p, cap),
          "seed (n=" + std::to_string(seed.n) + ", eps=" + std::to_string(seed.epsilon) +
              "): f(x)=0 for |x|<1-Q; infinite seed indices reduce to finite ones");
    axiom(AxiomKind::ATOM_ZERO, singleton(Rat(0), cap), "f(0)=0 since q<1/2");
    if (q != Rat(1, 4))
        axiom(AxiomKind::ATOM_Q, q_atoms(p, cap), "f(+-Q)=0 since q!=1/4");

    ZeroSet Z;
    for (const DerivationStep& s : steps) Z = unite(Z, s.produced);
    return {std::move(Z), std::move(steps)};
}

ZeroSet rule_forward(const ZeroSet& Z, const Rat& q) {
    const ZeroSet window = intersect(intersect(Z, translate(Z, Rat(1))), translate(Z, Rat(-1)));
    return window.empty() ? window : scale(window, q);
}

ZeroSet rule_backward(const ZeroSet& Z, const Rat& q, Isolate isolate) {
    const ZeroSet zq = scale(Z, 1 / q); // x with qx in Z
    switch (isolate) {
    case Isolate::CENTER:
        return intersect(intersect(zq, translate(Z, Rat(1))), translate(Z, Rat(-1)));
    case Isolate::MINUS:
        return translate(intersect(intersect(zq, Z), translate(Z, Rat(-1))), Rat(-1));
    case Isolate::PLUS:
        return translate(intersect(intersect(zq, Z), translate(Z, Rat(1))), Rat(1));
    }
    throw std::logic_error("rule_backward: bad isolate");
}

DerivationStep lemma1_closure(const ZeroSet& Z, const Rat& q, std::size_t index) {
    require_closure(Z, q, index);
    DerivationStep s;
    s.index = index;
    s.rule = RuleKind::LEMMA1_CLOSURE;
    s.paperTag = "induction over A_n=[0, sum q^i) spreads vanishing to [0,Q), "
                 "then f(Q)=0, then everywhere";
    s.detail = q == Rat(1, 4) ? "CONDITIONAL_ATOM_Q: f(Q)=0 iff f(qQ)=0, discharged by qQ in Z"
                              : "ATOM_Q: f(Q)=0 directly";
    return s;
}

Certificate replay_paper_proof(const Rat& q, const Seed& seed, bool overrideRegime) {
    const Regime regime = classify_regime(q);
    if (regime.tag == RegimeTag::Invalid)
        throw RegimeError("q outside (0,1)");
    if (regime.tag == RegimeTag::AboveThreshold && !overrideRegime)
        throw RegimeError("q above the cubic threshold");

    Derivation d;
    d.q = q;
    d.p = derived_quantities(q);
    d.cap = ZeroSet::kDefaultMaxIntervals;

    auto [Z0, axSteps] = initial_axioms(q, seed);
    for (DerivationStep& s : axSteps) d.push(std::move(s));

    if (regime.tag == RegimeTag::CaseI) {
        d.check("CASEI_GUARD", "case (i): q <= 1-Q, so the seed interval covers (0,q)");
        d.closure();
    } else {
        const QProfile& p = d.p;
        // f(1-Q)=0 by isolating the center term at x = 1-Q, then mirror.
        const std::size_t s9 =
            d.apply(RuleKind::BACK_CENTER, singleton(p.oneMinusQ, d.cap),
                    "closed band |x| <= 1-Q: isolate f(1-Q) at x=1-Q");
        d.mirror(d.steps[s9].produced, "mirror of f(1-Q)=0", {s9});

        // Band [qQ, q(2-Q)] from the forward rule on [Q, 2-Q], then mirror.
        const std::size_t s10 =
            d.apply(RuleKind::FORWARD, closed_band(p.bigQ, 2 - p.bigQ, d.cap),
                    "band qQ <= |x| <= q(2-Q) via x in [Q, 2-Q]");
        d.mirror(d.steps[s10].produced, "mirror band [-q(2-Q), -qQ]", {s10});

        d.check("QQ_LT", "side check qQ < 1-q(2-Q)");

        // Band [q-q^2(2-Q), q^2(2-Q)] via x in [1-q(2-Q), q(2-Q)].
        const std::size_t s11 =
            d.apply(RuleKind::FORWARD, closed_band(p.oneMinusQTwoMinusQ, p.qTwoMinusQ, d.cap),
                    "band q-q^2(2-Q) <= |x| <= q^2(2-Q)");
        d.mirror(d.steps[s11].produced, "mirror band", {s11});

        d.check("INEQ12", "q-q^2(2-Q) <= 1-Q: the cubic 3q^3-3q^2+3q-1 is <= 0");

        // Band [1-q(2-Q), 1-qQ] by isolating the plus term over [-q(2-Q), -qQ].
        const std::size_t s15 =
            d.apply(RuleKind::BACK_PLUS, closed_band(-p.qTwoMinusQ, -p.qQ, d.cap),
                    "band 1-q(2-Q) <= x <= 1-qQ via x0-1 in [-q(2-Q), -qQ]");
        d.mirror(d.steps[s15].produced, "mirror band", {s15});

        d.check("SIDE16A", "side check q+q^2*Q < 1-qQ");
        d.check("SIDE16B", "side check 1-q(2-Q) < q(2-Q)");

        // Last isolation over [2-Q, 1+qQ]; empty whenever 1-Q > qQ, in which
        // case coverage already follows from the accumulated bands.
        ZeroSet wFinal(d.cap);
        if (2 - p.bigQ <= 1 + p.qQ)
            wFinal = closed_band(2 - p.bigQ, 1 + p.qQ, d.cap);
        d.apply(RuleKind::BACK_MINUS, wFinal, "band 1-Q <= x <= qQ via x0+1 in [2-Q, 1+qQ]");

        d.check("COVERAGE", "accumulated bands cover [0, q(2-Q)]");
        d.check("FINAL_Q", "q < q(2-Q), so f vanishes on (0,q)");
        d.closure();
    }

    Certificate cert;
    cert.q = q;
    cert.regime = regime;
    cert.seed = seed;
    cert.steps = std::move(d.steps);
    cert.verdict = Verdict::TRIVIAL_ONLY;
    cert.finalSet = std::move(d.Z);
    return cert;
}

SaturateResult saturate(const Rat& q, const ZeroSet& Z0,
                        std::vector<DerivationStep> initialSteps, const Budget& budget) {
    Derivation d;
    d.q = q;
    d.p = derived_quantities(q);
    d.cap = budget.maxIntervals;
    for (DerivationStep& s : initialSteps) d.push(std::move(s));
    if (!contains(d.Z, Z0))
        throw std::invalid_argument("saturate: initial steps do not produce Z0");
    d.Z.set_max_intervals(budget.maxIntervals);

    SaturateResult res;
    res.status = SaturateStatus::BUDGET; // overwritten unless passes run out
    bool goal = false;

    auto try_add = [&](RuleKind rule, ZeroSet window, ZeroSet fragment) {
        if (fragment.empty() || contains(d.Z, fragment)) return;
        DerivationStep s;
        s.rule = rule;
        s.domain = std::move(window);
        s.produced = std::move(fragment);
        s.paperTag = "saturation pass " + std::to_string(res.passes + 1);
        d.push(std::move(s));
    };

    for (std::size_t pass = 0; pass < budget.maxPasses; ++pass) {
        const ZeroSet before = d.Z;
        try {
            {
                ZeroSet window =
                    intersect(intersect(d.Z, translate(d.Z, Rat(1))), translate(d.Z, Rat(-1)));
                ZeroSet frag = window.empty() ? window : scale(window, q);
                try_add(RuleKind::FORWARD, std::move(window), std::move(frag));
            }
            for (auto [iso, rule] : {std::pair{Isolate::CENTER, RuleKind::BACK_CENTER},
                                     std::pair{Isolate::MINUS, RuleKind::BACK_MINUS},
                                     std::pair{Isolate::PLUS, RuleKind::BACK_PLUS}}) {
                ZeroSet frag = rule_backward(d.Z, q, iso);
                ZeroSet window = frag;
                if (rule == RuleKind::BACK_MINUS) window = translate(frag, Rat(1));
                if (rule == RuleKind::BACK_PLUS) window = translate(frag, Rat(-1));
                try_add(rule, std::move(window), std::move(frag));
            }
            try_add(RuleKind::SYMMETRIZE, d.Z, scale(d.Z, Rat(-1)));
        } catch (const IntervalBudgetExceeded&) {
            res.passes = pass + 1;
            res.status = goal ? SaturateStatus::GOAL : SaturateStatus::BUDGET;
            break;
        }
        res.passes = pass + 1;
        goal = goal || goal_reached(d.Z, q);
        // Keep passing until a fixpoint even after the goal is reached: at a
        // fixpoint the final set provably contains every scripted replay's
        // finalSet (each replay window sits inside the maximal window).
        if (d.Z == before) {
            res.status = goal ? SaturateStatus::GOAL : SaturateStatus::STALLED;
            break;
        }
        if (pass + 1 == budget.maxPasses)
            res.status = goal ? SaturateStatus::GOAL : SaturateStatus::BUDGET;
    }
    if (res.status == SaturateStatus::GOAL) d.closure();

    res.finalSet = d.Z;
    res.certificate.q = q;
    res.certificate.regime = classify_regime(q);
    res.certificate.seed = Seed{};
    res.certificate.steps = std::move(d.steps);
    res.certificate.verdict =
        res.status == SaturateStatus::GOAL ? Verdict::TRIVIAL_ONLY : Verdict::INCOMPLETE;
    res.certificate.finalSet = res.finalSet;
    return res;
}

SaturateResult saturate(const Rat& q, const Seed& seed, const Budget& budget) {
    auto [Z0, steps] = initial_axioms(q, seed);
    SaturateResult res = saturate(q, Z0, std::move(steps), budget);
    res.certificate.seed = seed;
    return res;
}

VerifyResult verify_certificate(const Certificate& cert) {
    auto fail = [](std::size_t step, std::string reason) {
        return VerifyResult{false, step, std::move(reason)};
    };
    if (cert.q <= 0 || cert.q >= 1) return fail(0, "q outside (0,1)");
    const Regime regime = classify_regime(cert.q);
    if (regime.tag != cert.regime.tag) return fail(0, "regime tag mismatch");
    const QProfile p = derived_quantities(cert.q);
    const Rat& q = cert.q;

    // Re-checking must never trip an interval cap the producer did not hit.
    ZeroSet Z(std::numeric_limits<std::size_t>::max());
    bool closureSeen = false;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const DerivationStep& s = cert.steps[i];
        try {
            const ZeroSet winMinus =
                s.domain.empty() ? s.domain : translate(s.domain, Rat(-1));
            const ZeroSet winPlus = s.domain.empty() ? s.domain : translate(s.domain, Rat(1));
            const ZeroSet winScaled = s.domain.empty() ? s.domain : scale(s.domain, q);
            switch (s.rule) {
            case RuleKind::AXIOM: {
                if (s.detail == "SUPPORT") {
                    if (!(s.produced == support_set(q))) return fail(i, "bad SUPPORT payload");
                } else if (s.detail == "SEED_LEMMA2") {
                    if (q >= Rat(1, 2)) return fail(i, "SEED_LEMMA2 needs q < 1/2");
                    if (!(s.produced == seed_interval(p, ZeroSet::kDefaultMaxIntervals)))
                        return fail(i, "bad SEED_LEMMA2 payload");
                } else if (s.detail == "ATOM_ZERO") {
                    if (q >= Rat(1, 2)) return fail(i, "ATOM_ZERO needs q < 1/2");
                    if (!(s.produced == singleton(Rat(0), ZeroSet::kDefaultMaxIntervals)))
                        return fail(i, "bad ATOM_ZERO payload");
                } else if (s.detail == "ATOM_Q") {
                    if (q == Rat(1, 4)) return fail(i, "ATOM_Q needs q != 1/4");
                    if (!(s.produced == q_atoms(p, ZeroSet::kDefaultMaxIntervals)))
                        return fail(i, "bad ATOM_Q payload");
                } else if (s.detail == "ATOM_Q_CONDITIONAL") {
                    if (q != Rat(1, 4)) return fail(i, "ATOM_Q_CONDITIONAL needs q = 1/4");
                    if (!member(Z, p.qQ)) return fail(i, "qQ not yet in zero set");
                    if (!(s.produced == q_atoms(p, ZeroSet::kDefaultMaxIntervals)))
                        return fail(i, "bad ATOM_Q_CONDITIONAL payload");
                } else {
                    return fail(i, "unknown axiom kind: " + s.detail);
                }
                break;
            }
            case RuleKind::FORWARD:
                if (!contains(Z, s.domain)) return fail(i, "FORWARD: window not proven");
                if (!contains(Z, winMinus)) return fail(i, "FORWARD: window-1 not proven");
                if (!contains(Z, winPlus)) return fail(i, "FORWARD: window+1 not proven");
                if (!(s.produced == winScaled)) return fail(i, "FORWARD: produced != q*window");
                break;
            case RuleKind::BACK_CENTER:
                if (!contains(Z, winScaled)) return fail(i, "BACK_CENTER: q*window not proven");
                if (!contains(Z, winMinus)) return fail(i, "BACK_CENTER: window-1 not proven");
                if (!contains(Z, winPlus)) return fail(i, "BACK_CENTER: window+1 not proven");
                if (!(s.produced == s.domain)) return fail(i, "BACK_CENTER: produced != window");
                break;
            case RuleKind::BACK_MINUS:
                if (!contains(Z, winScaled)) return fail(i, "BACK_MINUS: q*window not proven");
                if (!contains(Z, s.domain)) return fail(i, "BACK_MINUS: window not proven");
                if (!contains(Z, winPlus)) return fail(i, "BACK_MINUS: window+1 not proven");
                if (!(s.produced == winMinus)) return fail(i, "BACK_MINUS: produced != window-1");
                break;
            case RuleKind::BACK_PLUS:
                if (!contains(Z, winScaled)) return fail(i, "BACK_PLUS: q*window not proven");
                if (!contains(Z, s.domain)) return fail(i, "BACK_PLUS: window not proven");
                if (!contains(Z, winMinus)) return fail(i, "BACK_PLUS: window-1 not proven");
                if (!(s.produced == winPlus)) return fail(i, "BACK_PLUS: produced != window+1");
                break;
            case RuleKind::SYMMETRIZE:
                if (!contains(Z, s.domain)) return fail(i, "SYMMETRIZE: domain not proven");
                if (s.domain.empty()) {
                    if (!s.produced.empty()) return fail(i, "SYMMETRIZE: produced not empty");
                } else if (!(s.produced == scale(s.domain, Rat(-1)))) {
                    return fail(i, "SYMMETRIZE: produced != reflection");
                }
                break;
            case RuleKind::INEQUALITY_CHECK:
                if (!s.produced.empty()) return fail(i, "check step must produce nothing");
                if (!evaluate_named_check(s.detail, q, Z))
                    return fail(i, "check does not hold: " + s.detail);
                break;
            case RuleKind::LEMMA1_CLOSURE: {
                if (!s.produced.empty()) return fail(i, "closure step must produce nothing");
                if (q >= Rat(1, 2)) return fail(i, "closure needs q < 1/2");
                if (!goal_reached(Z, q)) return fail(i, "closure without goal");
                if (!member(Z, Rat(0))) return fail(i, "closure without atom 0");
                if (q == Rat(1, 4) && !member(Z, p.qQ))
                    return fail(i, "q=1/4 closure without f(qQ)=0");
                if (!(p.bigQ < 1)) return fail(i, "closure needs Q < 1");
                for (unsigned long n = 1; n <= 8; ++n) {
                    const Rat sn = partial_geom_sum(q, GeomCount::finite(n));
                    const Rat sn1 = partial_geom_sum(q, GeomCount::finite(n - 1));
                    if (sn / q != 1 + sn1) return fail(i, "geometric identity failed");
                }
                closureSeen = true;
                break;
            }
            }
            Z = unite(Z, s.produced);
        } catch (const std::exception& e) {
            return fail(i, std::string("exception while re-checking: ") + e.what());
        }
    }

    if (cert.verdict == Verdict::TRIVIAL_ONLY && !closureSeen)
        return fail(cert.steps.size(), "verdict TRIVIAL_ONLY without a closure step");
    if (cert.verdict == Verdict::INCOMPLETE && closureSeen)
        return fail(cert.steps.size(), "verdict INCOMPLETE despite a closure step");
    if (!(cert.finalSet == Z))
        return fail(cert.steps.size(), "finalSet differs from union of produced fragments");
    return VerifyResult{};
}

} // namespace schilling
