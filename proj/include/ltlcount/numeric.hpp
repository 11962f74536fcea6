#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ltlcount {

/*! \brief Natural number extended with "infinite" and "impossible".
 *
 * Total order: 0 < 1 < ... < inf < impossible.
 */
class ext_nat {
public:
  static constexpr int64_t inf_value = INT64_MAX - 1;
  static constexpr int64_t impossible_value = INT64_MAX;

  constexpr ext_nat() : v_(0) {}

  static constexpr ext_nat fin(int64_t n) {
    assert(n >= 0 && n < inf_value);
    return ext_nat(n);
  }
  static constexpr ext_nat inf() { return ext_nat(inf_value); }
  static constexpr ext_nat impossible() { return ext_nat(impossible_value); }

  constexpr bool is_fin() const { return v_ < inf_value; }
  constexpr bool is_inf() const { return v_ == inf_value; }
  constexpr bool is_impossible() const { return v_ == impossible_value; }

  /* valid only when is_fin() */
  constexpr int64_t value() const {
    assert(is_fin());
    return v_;
  }

  friend constexpr auto operator<=>(ext_nat a, ext_nat b) = default;

  /* finite values add; otherwise the larger special symbol wins */
  friend constexpr ext_nat operator+(ext_nat a, ext_nat b) {
    if (a.is_fin() && b.is_fin())
      return fin(a.v_ + b.v_);
    return a < b ? b : a;
  }

  std::string to_string(bool unicode = false) const;
  static std::optional<ext_nat> parse(const std::string& text);

private:
  explicit constexpr ext_nat(int64_t raw) : v_(raw) {}
  int64_t v_;
};

constexpr ext_nat min(ext_nat a, ext_nat b) { return a < b ? a : b; }
constexpr ext_nat max(ext_nat a, ext_nat b) { return a < b ? b : a; }

/*! \brief Pair of satisfaction / violation witness counts. */
struct count_pair {
  ext_nat s;
  ext_nat f;

  friend constexpr bool operator==(count_pair, count_pair) = default;

  std::string to_string(bool unicode = false) const;
  static std::optional<count_pair> parse(const std::string& text);
};

constexpr count_pair swap(count_pair p) { return {p.f, p.s}; }

constexpr count_pair inc(count_pair p) {
  return {p.s + ext_nat::fin(1), p.f + ext_nat::fin(1)};
}

/* minmax: shortest way to satisfy, longest way to violate */
constexpr count_pair join(count_pair p, count_pair q) {
  return {min(p.s, q.s), max(p.f, q.f)};
}

constexpr count_pair meet(count_pair p, count_pair q) {
  return {max(p.s, q.s), min(p.f, q.f)};
}

/* p "at most as true as" q: q satisfies no later and violates no sooner */
constexpr bool pair_leq(count_pair p, count_pair q) {
  return p.s >= q.s && p.f <= q.f;
}

/*! \brief Three-valued verdict, ordered bot < unknown < top. */
enum class verdict3 : int { bot = 0, unknown = 1, top = 2 };

constexpr verdict3 neg3(verdict3 v) {
  return static_cast<verdict3>(2 - static_cast<int>(v));
}
constexpr verdict3 or3(verdict3 a, verdict3 b) { return a < b ? b : a; }
constexpr verdict3 and3(verdict3 a, verdict3 b) { return a < b ? a : b; }

/*! \brief Five-valued verdict, ordered false < presumably_false < unknown
 *         < presumably_true < true. */
enum class verdict5 : int {
  false_ = 0,
  presumably_false = 1,
  unknown = 2,
  presumably_true = 3,
  true_ = 4
};

constexpr verdict5 neg5(verdict5 v) {
  return static_cast<verdict5>(4 - static_cast<int>(v));
}
constexpr verdict5 or5(verdict5 a, verdict5 b) { return a < b ? b : a; }
constexpr verdict5 and5(verdict5 a, verdict5 b) { return a < b ? a : b; }

std::string to_string(verdict3 v);
/* "true", "presumably-true", "inconclusive", "presumably-false", "false" */
std::string to_string(verdict5 v);
/* symbols for table output */
std::string to_symbol(verdict3 v);
std::string to_symbol(verdict5 v);

}  // namespace ltlcount
