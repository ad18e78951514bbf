#include "schilling/certificate_json.hpp"

namespace schilling {

using nlohmann::json;

namespace {

json bound_to_json(const Bound& b) {
    json j;
    switch (b.kind) {
    case Bound::Kind::NegInf: j["val"] = "-inf"; break;
    case Bound::Kind::PosInf: j["val"] = "+inf"; break;
    case Bound::Kind::Finite: j["val"] = rat_to_string(b.value); break;
    }
    j["closed"] = b.closed;
    return j;
}

Bound bound_from_json(const json& j) {
    const std::string val = j.at("val").get<std::string>();
    const bool closed = j.at("closed").get<bool>();
    if (val == "-inf" || val == "+inf") {
        if (closed) throw CertificateParseError("infinite endpoint marked closed");
        return val == "-inf" ? Bound::neg_inf() : Bound::pos_inf();
    }
    Bound b{Bound::Kind::Finite, parse_rat(val), closed};
    return b;
}

} // namespace

json zeroset_to_json(const ZeroSet& set) {
    json intervals = json::array();
    for (const Interval& iv : set.intervals())
        intervals.push_back({{"lo", bound_to_json(iv.lo)}, {"hi", bound_to_json(iv.hi)}});
    json atoms = json::array();
    for (const Rat& a : set.atoms())
        atoms.push_back(rat_to_string(a));
    return json{{"intervals", std::move(intervals)}, {"atoms", std::move(atoms)}};
}

ZeroSet zeroset_from_json(const json& j) {
    std::vector<Interval> intervals;
    for (const json& ji : j.at("intervals"))
        intervals.push_back(Interval{bound_from_json(ji.at("lo")), bound_from_json(ji.at("hi"))});
    std::vector<Rat> atoms;
    for (const json& ja : j.at("atoms"))
        atoms.push_back(parse_rat(ja.get<std::string>()));
    return ZeroSet::from_pieces(std::move(intervals), std::move(atoms));
}

json certificate_to_json(const Certificate& cert) {
    json steps = json::array();
    for (const DerivationStep& s : cert.steps) {
        steps.push_back({{"index", s.index},
                         {"rule", std::string(rule_name(s.rule))},
                         {"inputs", s.inputs},
                         {"domain", zeroset_to_json(s.domain)},
                         {"produced", zeroset_to_json(s.produced)},
                         {"paperTag", s.paperTag},
                         {"detail", s.detail}});
    }
    return json{{"q", rat_to_string(cert.q)},
                {"regime", std::string(regime_name(cert.regime.tag))},
                {"seed", {{"n", cert.seed.n}, {"epsilon", cert.seed.epsilon}}},
                {"steps", std::move(steps)},
                {"verdict", std::string(verdict_name(cert.verdict))},
                {"finalSet", zeroset_to_json(cert.finalSet)}};
}

Certificate certificate_from_json(const json& j) {
    try {
        Certificate cert;
        cert.q = parse_rat(j.at("q").get<std::string>());
        const std::string regime = j.at("regime").get<std::string>();
        cert.regime = classify_regime(cert.q);
        if (regime != regime_name(cert.regime.tag)) {
            // Keep whatever the file claims; verification reports the clash.
            for (RegimeTag t : {RegimeTag::CaseI, RegimeTag::CaseII, RegimeTag::AboveThreshold,
                                RegimeTag::Invalid})
                if (regime == regime_name(t)) cert.regime.tag = t;
        }
        cert.seed.n = j.at("seed").at("n").get<unsigned long>();
        cert.seed.epsilon = j.at("seed").at("epsilon").get<int>();
        for (const json& js : j.at("steps")) {
            DerivationStep s;
            s.index = js.at("index").get<std::size_t>();
            s.rule = rule_from_name(js.at("rule").get<std::string>());
            s.inputs = js.at("inputs").get<std::vector<std::size_t>>();
            s.domain = zeroset_from_json(js.at("domain"));
            s.produced = zeroset_from_json(js.at("produced"));
            s.paperTag = js.at("paperTag").get<std::string>();
            s.detail = js.value("detail", "");
            cert.steps.push_back(std::move(s));
        }
        const std::string verdict = j.at("verdict").get<std::string>();
        cert.verdict = verdict == "TRIVIAL_ONLY" ? Verdict::TRIVIAL_ONLY : Verdict::INCOMPLETE;
        cert.finalSet = zeroset_from_json(j.at("finalSet"));
        return cert;
    } catch (const json::exception& e) {
        throw CertificateParseError(std::string("bad certificate: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CertificateParseError(std::string("bad certificate: ") + e.what());
    }
}

std::string serialize_certificate(const Certificate& cert) {
    return certificate_to_json(cert).dump(2);
}

Certificate parse_certificate(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CertificateParseError("not valid JSON");
    return certificate_from_json(j);
}

} // namespace schilling
