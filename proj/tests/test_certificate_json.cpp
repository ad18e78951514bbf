#include "schilling/certificate_json.hpp"

#include <doctest.h>

using namespace schilling;

TEST_CASE("certificate JSON round-trips") {
    for (const Rat& q : {Rat(2, 5), Rat(1, 4), Rat(1, 3)}) {
        const Certificate cert = replay_paper_proof(q, Seed{3, -1});
        const std::string text = serialize_certificate(cert);
        const Certificate back = parse_certificate(text);
        CHECK(back.q == cert.q);
        CHECK(back.regime.tag == cert.regime.tag);
        CHECK(back.seed.n == cert.seed.n);
        CHECK(back.seed.epsilon == cert.seed.epsilon);
        CHECK(back.verdict == cert.verdict);
        CHECK(back.finalSet == cert.finalSet);
        REQUIRE(back.steps.size() == cert.steps.size());
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            CHECK(back.steps[i].rule == cert.steps[i].rule);
            CHECK(back.steps[i].domain == cert.steps[i].domain);
            CHECK(back.steps[i].produced == cert.steps[i].produced);
            CHECK(back.steps[i].paperTag == cert.steps[i].paperTag);
            CHECK(back.steps[i].detail == cert.steps[i].detail);
        }
        // byte-identical second serialization
        CHECK(serialize_certificate(back) == text);
        CHECK(verify_certificate(back).ok);
    }
}

TEST_CASE("zeroset JSON keeps infinite rays and flags") {
    ZeroSet s;
    s = insert(s, Interval{Bound::neg_inf(), Bound::open(Rat(-2, 3))});
    s = insert(s, Interval{Bound::open(Rat(2, 3)), Bound::pos_inf()});
    s = insert(s, Interval{Bound::at(Rat(0)), Bound::open(Rat(1, 3))});
    s = insert(s, Rat(1, 2));
    CHECK(zeroset_from_json(zeroset_to_json(s)) == s);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_certificate("not json"), CertificateParseError);
    CHECK_THROWS_AS(parse_certificate("{}"), CertificateParseError);
    CHECK_THROWS_AS(parse_certificate(""), CertificateParseError);
}
