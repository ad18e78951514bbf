#pragma once

#include "schilling/exactq.hpp"
#include "schilling/zeroset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace schilling {

struct HalfGuardViolated : std::domain_error {
    using std::domain_error::domain_error;
};
struct RegimeError : std::domain_error {
    using std::domain_error::domain_error;
};
struct GoalNotReached : std::logic_error {
    using std::logic_error::logic_error;
};

/// A derivation step that could not be applied: the failing step index plus
/// the check or containment that broke.
struct StepFailure : std::runtime_error {
    StepFailure(std::size_t index, std::string check, const std::string& reason)
        : std::runtime_error("step " + std::to_string(index) + ": " + reason),
          index(index), check(std::move(check)) {}
    std::size_t index;
    std::string check; // named check for inequality failures, "" otherwise
};

enum class RuleKind {
    AXIOM,
    FORWARD,
    BACK_MINUS,
    BACK_CENTER,
    BACK_PLUS,
    INEQUALITY_CHECK,
    LEMMA1_CLOSURE,
    SYMMETRIZE,
};

std::string_view rule_name(RuleKind r);
RuleKind rule_from_name(std::string_view name);

enum class AxiomKind { SUPPORT, SEED_LEMMA2, ATOM_ZERO, ATOM_Q, ATOM_Q_CONDITIONAL };

std::string_view axiom_name(AxiomKind k);

/// One entry of a certificate. `domain` is the x-window the rule was applied
/// on; `produced` is the fragment it adds to the zero set. For AXIOM steps
/// `detail` names the axiom kind, for INEQUALITY_CHECK it names the check.
struct DerivationStep {
    std::size_t index = 0;
    RuleKind rule = RuleKind::AXIOM;
    std::vector<std::size_t> inputs;
    ZeroSet domain;
    ZeroSet produced;
    std::string paperTag;
    std::string detail;
};

enum class Verdict { TRIVIAL_ONLY, INCOMPLETE };

std::string_view verdict_name(Verdict v);

struct Seed {
    unsigned long n = 0;
    int epsilon = 1; // -1 or +1
};

struct Certificate {
    Rat q;
    Regime regime;
    Seed seed;
    std::vector<DerivationStep> steps;
    Verdict verdict = Verdict::INCOMPLETE;
    ZeroSet finalSet; // union of every step's produced fragment
};

/// Named checks a certificate may record. The five spec inequalities plus
/// the case-(i) guard q <= 1-Q and the final coverage [0, q(2-Q)] in Z.
/// Coverage is the only one that reads the accumulated zero set.
bool evaluate_named_check(std::string_view name, const Rat& q, const ZeroSet& priorZ);

/// Support set {|x| > Q} as a ZeroSet.
ZeroSet support_set(const Rat& q, std::size_t maxIntervals = ZeroSet::kDefaultMaxIntervals);

/// Axioms: support, the Lemma-2 seed interval (-(1-Q), 1-Q), the atom at 0,
/// and atoms at +-Q when q != 1/4. Throws HalfGuardViolated if q >= 1/2.
std::pair<ZeroSet, std::vector<DerivationStep>> initial_axioms(const Rat& q, const Seed& seed);

/// Maximal-window propagation rules. FORWARD returns q*J for
/// J = Z n (Z+1) n (Z-1); the backward rules isolate one remaining term.
ZeroSet rule_forward(const ZeroSet& Z, const Rat& q);

enum class Isolate { MINUS, CENTER, PLUS };
ZeroSet rule_backward(const ZeroSet& Z, const Rat& q, Isolate isolate);

/// Scripted replay of the published derivation chain for the given q.
/// Throws RegimeError above the threshold unless overrideRegime is set, in
/// which case the replay runs until the cubic inequality check fails and a
/// StepFailure pinpointing it is thrown.
Certificate replay_paper_proof(const Rat& q, const Seed& seed, bool overrideRegime = false);

/// Closure step: once (0,q) or (-q,0) is proven zero, vanishing spreads to
/// all of [0,Q), then f(Q)=0, then everywhere. Throws GoalNotReached.
DerivationStep lemma1_closure(const ZeroSet& Z, const Rat& q, std::size_t index = 0);

enum class SaturateStatus { GOAL, STALLED, BUDGET };

std::string_view saturate_status_name(SaturateStatus s);

struct Budget {
    std::size_t maxPasses = 64;
    std::size_t maxIntervals = 4096;
};

struct SaturateResult {
    ZeroSet finalSet;
    Certificate certificate;
    SaturateStatus status = SaturateStatus::STALLED;
    std::size_t passes = 0;
};

/// Deterministic fixpoint search: each pass applies FORWARD, BACK_CENTER,
/// BACK_MINUS, BACK_PLUS, SYMMETRIZE on maximal windows and inserts whatever
/// is new. `initialSteps` carry the axioms so the certificate verifies.
SaturateResult saturate(const Rat& q, const ZeroSet& Z0,
                        std::vector<DerivationStep> initialSteps, const Budget& budget);

/// Convenience: axioms then saturation.
SaturateResult saturate(const Rat& q, const Seed& seed, const Budget& budget = {});

struct VerifyResult {
    bool ok = true;
    std::size_t failingStep = 0;
    std::string reason;
};

/// Independent checker: re-derives every step invariant against only the
/// earlier steps. Shares nothing with the producer beyond the set algebra.
VerifyResult verify_certificate(const Certificate& cert);

} // namespace schilling
