#pragma once

#include <string>
#include <vector>

namespace exlen {

/// Outcome of one structural check. Failures are violations of the
/// length-category contract; notes carry scope information (bounds used).
struct Report {
  std::string name;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void note(std::string msg) { notes.push_back(std::move(msg)); }
  void absorb(const Report& other) {
    for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
  }
};

}  // namespace exlen
