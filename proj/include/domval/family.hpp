#ifndef DOMVAL_FAMILY_HPP
#define DOMVAL_FAMILY_HPP

#include <string_view>

#include "domval/errors.hpp"

namespace domval {

enum class Family { path, cycle, ladder, prism };

constexpr const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::ladder: return "ladder";
    case Family::prism: return "prism";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  if (s == "ladder") return Family::ladder;
  if (s == "prism") return Family::prism;
  throw DomainError("unknown family: " + std::string(s));
}

// A concrete family instance: which family, and its order parameter n.
struct FamilyId {
  Family family;
  int n;
};

}  // namespace domval

#endif
