#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stochsym {

/// The variable layout of a problem: n state variables, one time variable and
/// m Wiener variables. All names are distinct, nonempty identifiers.
class VarSpace {
 public:
  VarSpace(std::vector<std::string> states, std::string time,
           std::vector<std::string> wieners);

  std::size_t n() const { return states_.size(); }
  std::size_t m() const { return wieners_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& time() const { return time_; }
  const std::vector<std::string>& wieners() const { return wieners_; }

  bool contains(const std::string& name) const;
  bool is_state(const std::string& name) const;
  bool is_wiener(const std::string& name) const;
  std::optional<std::size_t> state_index(const std::string& name) const;
  std::optional<std::size_t> wiener_index(const std::string& name) const;

  std::vector<std::string> all_names() const;

  /// Same layout with the state names replaced (used by coordinate changes).
  VarSpace with_states(std::vector<std::string> states) const;

  friend bool operator==(const VarSpace& a, const VarSpace& b) {
    return a.states_ == b.states_ && a.time_ == b.time_ &&
           a.wieners_ == b.wieners_;
  }
  friend bool operator!=(const VarSpace& a, const VarSpace& b) {
    return !(a == b);
  }

  static bool valid_identifier(const std::string& name);

 private:
  std::vector<std::string> states_;
  std::string time_;
  std::vector<std::string> wieners_;
};

}  // namespace stochsym
