#include "glwidth/vector.hpp"

#include <sstream>

#include "glwidth/index_set.hpp"

namespace glwidth {

Vector Vector::projectedTo(const IndexSet& s) const {
  Vector r;
  for (const auto& [i, c] : entries_)
    if (s.contains(i)) r.entries_.emplace(i, c);
  return r;
}

bool Vector::supportInside(const IndexSet& s) const {
  for (const auto& [i, c] : entries_)
    if (!s.contains(i)) return false;
  return true;
}

std::string Vector::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : entries_) {
    if (!first) os << " + ";
    first = false;
    if (!c.isOne()) os << c.str() << "*";
    os << "e" << i;
  }
  return os.str();
}

}  // namespace glwidth
