#include "ltlcount/tltl.hpp"

#include "ltlcount/mu.hpp"
#include "ltlcount/predictor.hpp"

namespace ltlcount {

bool tltl_eval(const trace& t, const formula& f, size_t i, next_mode mode) {
  size_t n = t.length();
  switch (f->kind) {
    case op::prop:
      return i <= n && t.holds(f->name, i);
    case op::true_:
      return true;
    case op::false_:
      return false;
    case op::not_:
      return !tltl_eval(t, f->left, i, mode);
    case op::and_:
      return tltl_eval(t, f->left, i, mode) && tltl_eval(t, f->right, i, mode);
    case op::or_:
      return tltl_eval(t, f->left, i, mode) || tltl_eval(t, f->right, i, mode);
    case op::implies:
      return !tltl_eval(t, f->left, i, mode) ||
             tltl_eval(t, f->right, i, mode);
    case op::next:
      if (i + 1 > n)
        return mode == next_mode::weak;
      return tltl_eval(t, f->left, i + 1, mode);
    case op::finally_:
      for (size_t j = i; j <= n; ++j)
        if (tltl_eval(t, f->left, j, mode))
          return true;
      return false;
    case op::globally:
      for (size_t j = i; j <= n; ++j)
        if (!tltl_eval(t, f->left, j, mode))
          return false;
      return true;
    case op::until:
      for (size_t j = i; j <= n; ++j) {
        if (tltl_eval(t, f->right, j, mode))
          return true;
        if (!tltl_eval(t, f->left, j, mode))
          return false;
      }
      return false;
  }
  return false;
}

comparison comparison_row(const trace& t, const formula& f) {
  comparison c;
  c.counting = verdict(t, f);
  core_arena arena;
  c.three = mu_eval(t, to_core(f, arena), 1);
  c.truncated_strong = tltl_eval(t, f, 1, next_mode::strong);
  c.truncated_weak = tltl_eval(t, f, 1, next_mode::weak);
  return c;
}

}  // namespace ltlcount
