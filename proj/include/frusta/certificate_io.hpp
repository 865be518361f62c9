#pragma once

#include <string>

#include "frusta/certificate.hpp"

namespace frusta {

// JSON interchange form. Rationals are strings ("p/q" or "p"), motions are
// nine matrix entries plus translation plus orientation sign, solids carry
// either a catalog spec with a pose or an explicit polytope literal. The
// version field is mandatory and unknown fields are rejected.
inline constexpr int kCertificateFormatVersion = 1;

std::string render_certificate(const RearrangementCertificate& cert);

// Throws Error with a location-annotated message on any malformed input.
RearrangementCertificate parse_certificate(const std::string& text);

void write_certificate_file(const RearrangementCertificate& cert, const std::string& path);
RearrangementCertificate read_certificate_file(const std::string& path);

}  // namespace frusta
