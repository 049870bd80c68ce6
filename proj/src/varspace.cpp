#include "stochsym/varspace.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace stochsym {

bool VarSpace::valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  // Function names are reserved words in the expression grammar.
  static const std::set<std::string> reserved = {"exp", "log", "sqrt", "sin",
                                                 "cos"};
  return reserved.find(name) == reserved.end();
}

VarSpace::VarSpace(std::vector<std::string> states, std::string time,
                   std::vector<std::string> wieners)
    : states_(std::move(states)),
      time_(std::move(time)),
      wieners_(std::move(wieners)) {
  if (states_.empty()) throw std::invalid_argument("need at least one state variable");
  if (wieners_.empty())
    throw std::invalid_argument("need at least one Wiener variable");
  std::set<std::string> seen;
  auto add = [&](const std::string& name) {
    if (!valid_identifier(name))
      throw std::invalid_argument("invalid variable name: '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable name: '" + name + "'");
  };
  for (const auto& s : states_) add(s);
  add(time_);
  for (const auto& w : wieners_) add(w);
}

bool VarSpace::contains(const std::string& name) const {
  return is_state(name) || name == time_ || is_wiener(name);
}

bool VarSpace::is_state(const std::string& name) const {
  return std::find(states_.begin(), states_.end(), name) != states_.end();
}

bool VarSpace::is_wiener(const std::string& name) const {
  return std::find(wieners_.begin(), wieners_.end(), name) != wieners_.end();
}

std::optional<std::size_t> VarSpace::state_index(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> VarSpace::wiener_index(
    const std::string& name) const {
  auto it = std::find(wieners_.begin(), wieners_.end(), name);
  if (it == wieners_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - wieners_.begin());
}

std::vector<std::string> VarSpace::all_names() const {
  std::vector<std::string> out = states_;
  out.push_back(time_);
  out.insert(out.end(), wieners_.begin(), wieners_.end());
  return out;
}

VarSpace VarSpace::with_states(std::vector<std::string> states) const {
  return VarSpace(std::move(states), time_, wieners_);
}

}  // namespace stochsym
