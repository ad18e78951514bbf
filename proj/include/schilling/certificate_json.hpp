#pragma once

#include "schilling/prover.hpp"

#include <json.hpp>

namespace schilling {

struct CertificateParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certificate wire format. Rationals are "num/den" strings; infinite
// endpoints are "-inf" / "+inf". parse(serialize(c)) == c.
nlohmann::json zeroset_to_json(const ZeroSet& set);
ZeroSet zeroset_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

} // namespace schilling
