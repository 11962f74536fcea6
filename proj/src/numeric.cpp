#include "ltlcount/numeric.hpp"

#include <cstdlib>

namespace ltlcount {

std::string ext_nat::to_string(bool unicode) const {
  if (is_impossible())
    return unicode ? "−" : "-";
  if (is_inf())
    return unicode ? "∞" : "inf";
  return std::to_string(v_);
}

std::optional<ext_nat> ext_nat::parse(const std::string& text) {
  if (text == "-" || text == "−")
    return impossible();
  if (text == "inf" || text == "∞")
    return inf();
  if (text.empty())
    return std::nullopt;
  for (char c : text)
    if (c < '0' || c > '9')
      return std::nullopt;
  return fin(std::strtoll(text.c_str(), nullptr, 10));
}

std::string count_pair::to_string(bool unicode) const {
  return "(" + s.to_string(unicode) + "," + f.to_string(unicode) + ")";
}

std::optional<count_pair> count_pair::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    return std::nullopt;
  auto comma = text.find(',');
  if (comma == std::string::npos)
    return std::nullopt;
  auto s = ext_nat::parse(text.substr(1, comma - 1));
  auto f = ext_nat::parse(text.substr(comma + 1, text.size() - comma - 2));
  if (!s || !f)
    return std::nullopt;
  return count_pair{*s, *f};
}

std::string to_string(verdict3 v) {
  switch (v) {
    case verdict3::bot: return "false";
    case verdict3::unknown: return "inconclusive";
    case verdict3::top: return "true";
  }
  return "?";
}

std::string to_string(verdict5 v) {
  switch (v) {
    case verdict5::false_: return "false";
    case verdict5::presumably_false: return "presumably-false";
    case verdict5::unknown: return "inconclusive";
    case verdict5::presumably_true: return "presumably-true";
    case verdict5::true_: return "true";
  }
  return "?";
}

std::string to_symbol(verdict3 v) {
  switch (v) {
    case verdict3::bot: return "⊥";
    case verdict3::unknown: return "?";
    case verdict3::top: return "⊤";
  }
  return "?";
}

std::string to_symbol(verdict5 v) {
  switch (v) {
    case verdict5::false_: return "⊥";
    case verdict5::presumably_false: return "⊥_P";
    case verdict5::unknown: return "?";
    case verdict5::presumably_true: return "⊤_P";
    case verdict5::true_: return "⊤";
  }
  return "?";
}

}  // namespace ltlcount
