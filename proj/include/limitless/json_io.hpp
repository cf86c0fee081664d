#pragma once

#include <json.hpp>

#include "limitless/certify.hpp"
#include "limitless/modulus.hpp"
#include "limitless/multivar.hpp"
#include "limitless/quad.hpp"
#include "limitless/uldcheck.hpp"

namespace limitless {

using Json = nlohmann::json;

// Rationals travel as exact "num/den" strings.
Json to_json(const Rational& r);
Json to_json(const Interval& iv);
Json to_json(const Polynomial& p); // coefficient array, low to high
Json to_json(const BivariatePolynomial& b);
Json to_json(const CertifiedBound& cb);
Json to_json(const MonotonicityCertificate& cert);
Json to_json(const Modulus& m);
Json to_json(const VerificationReport& rep);
Json to_json(const IntegralEnclosure& enc);
Json to_json(const MixedPartialsReport& rep);

Rational rational_from_json(const Json& j);
Interval interval_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
CertifiedBound certified_bound_from_json(const Json& j);
MonotonicityCertificate certificate_from_json(const Json& j);
Modulus modulus_from_json(const Json& j);

} // namespace limitless
