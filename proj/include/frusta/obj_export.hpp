#pragma once

#include <iosfwd>
#include <string>

#include "frusta/certificate.hpp"

namespace frusta {

// ASCII Wavefront OBJ. One named object per solid and per piece (pieces are
// written at their target placement). Vertex lines carry decimal
// approximations with the requested number of significant digits; the exact
// rational coordinates ride along in a comment line per vertex, so nothing
// is lost to rounding.
void export_obj(std::ostream& os, const ConvexPolytope& solid, int digits = 12);
void export_obj(std::ostream& os, const RearrangementCertificate& cert, int digits = 12);

void write_obj_file(const ConvexPolytope& solid, const std::string& path, int digits = 12);
void write_obj_file(const RearrangementCertificate& cert, const std::string& path, int digits = 12);

}  // namespace frusta
