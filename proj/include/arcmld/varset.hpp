#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace arcmld {

// Ordered list of named variables. Polynomials only interoperate when their
// variable sets compare equal (by content, so lifted copies are compatible).
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  // Returns -1 when absent.
  int index_of(const std::string& name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }
  bool operator!=(const VarSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace arcmld
