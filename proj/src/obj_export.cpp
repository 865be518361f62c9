#include "frusta/obj_export.hpp"

#include <fstream>
#include <ostream>

namespace frusta {

namespace {

std::string object_name(std::string name) {
  for (char& c : name)
    if (c == ' ' || c == '\t') c = '-';
  return name;
}

// Appends one "o" block; `offset` tracks the global 1-based vertex numbering.
void write_object(std::ostream& os, const ConvexPolytope& solid, const std::string& name,
                  int digits, long long& offset) {
  os << "o " << object_name(name) << "\n";
  for (const auto& v : solid.vertices()) {
    os << "# exact: " << v.x.str() << " " << v.y.str() << " " << v.z.str() << "\n";
    os << "v " << v.x.decimal_significant(digits) << " " << v.y.decimal_significant(digits)
       << " " << v.z.decimal_significant(digits) << "\n";
  }
  for (const auto& face : solid.faces()) {
    for (size_t i = 1; i + 1 < face.cycle.size(); ++i) {
      os << "f " << offset + face.cycle[0] + 1 << " " << offset + face.cycle[i] + 1 << " "
         << offset + face.cycle[i + 1] + 1 << "\n";
    }
  }
  offset += static_cast<long long>(solid.vertices().size());
}

}  // namespace

void export_obj(std::ostream& os, const ConvexPolytope& solid, int digits) {
  long long offset = 0;
  write_object(os, solid, solid.label().empty() ? "solid" : solid.label(), digits, offset);
}

void export_obj(std::ostream& os, const RearrangementCertificate& cert, int digits) {
  long long offset = 0;
  for (const auto& s : cert.sources) write_object(os, s.poly, "source-" + s.id, digits, offset);
  for (const auto& t : cert.targets) write_object(os, t.poly, "target-" + t.id, digits, offset);
  for (const auto& r : cert.regions) write_object(os, r.poly, "region-" + r.id, digits, offset);
  for (const auto& piece : cert.pieces)
    write_object(os, transform(piece.poly, piece.target_motion), "piece-" + piece.id, digits,
                 offset);
}

void write_obj_file(const ConvexPolytope& solid, const std::string& path, int digits) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  export_obj(out, solid, digits);
}

void write_obj_file(const RearrangementCertificate& cert, const std::string& path, int digits) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  export_obj(out, cert, digits);
}

}  // namespace frusta
