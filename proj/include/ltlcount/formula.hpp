#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ltlcount {

/*! \brief Surface LTL syntax, as written by the user. */
enum class op : uint8_t {
  prop,
  true_,
  false_,
  not_,
  and_,
  or_,
  implies,
  next,
  finally_,
  globally,
  until
};

struct formula_node;
using formula = std::shared_ptr<const formula_node>;

struct formula_node {
  op kind;
  std::string name;  // prop only
  formula left;      // unary child or left operand
  formula right;     // binary right operand
};

formula mk_prop(std::string name);
formula mk_true();
formula mk_false();
formula mk_not(formula f);
formula mk_and(formula l, formula r);
formula mk_or(formula l, formula r);
formula mk_implies(formula l, formula r);
formula mk_next(formula f);
formula mk_finally(formula f);
formula mk_globally(formula f);
formula mk_until(formula l, formula r);

bool equal(const formula& a, const formula& b);

/* canonical concrete syntax; parse(render(f)) == f */
std::string render(const formula& f);

struct parse_error : std::runtime_error {
  parse_error(std::string msg, size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
  size_t position;
};

/* grammar:
 *   formula := implies ; implies := or ("->" implies)? ; or := and ("|" and)* ;
 *   and := until ("&" until)* ; until := unary ("U" until)? ;
 *   unary := ("!"|"~"|"X"|"F"|"G") unary | atom ;
 *   atom := "true" | "false" | IDENT | "(" formula ")"
 * Unicode aliases: NOT SIGN for !, OR/AND signs for |/&, RIGHTWARDS ARROW for ->.
 */
formula parse(const std::string& text);

/*! \brief Core fragment: prop, not, or, next, finally, until.
 *
 * Nodes are interned per arena, so structural equality is pointer equality.
 * A not node's child is never itself a not node.
 */
enum class core_op : uint8_t { prop, not_, or_, next, finally_, until };

struct core_node;
using core = const core_node*;

struct core_node {
  core_op kind;
  std::string name;  // prop only
  core left = nullptr;
  core right = nullptr;
  uint32_t id = 0;  // dense, per arena, in creation order
};

/*! \brief Intern pool for core formulas. Must outlive the nodes it hands out. */
class core_arena {
public:
  core prop(const std::string& name);
  core not_(core child);  // rejects a not child; use negate() for that
  core or_(core l, core r);
  core next(core child);
  core finally_(core child);
  core until(core l, core r);

  size_t size() const { return nodes_.size(); }

private:
  core intern(core_op kind, const std::string& name, core l, core r);

  std::map<std::tuple<core_op, std::string, core, core>, uint32_t> index_;
  std::vector<std::unique_ptr<core_node>> nodes_;
};

/* rewrite to the core fragment; And/Implies/Globally/True/False eliminated,
 * double negations removed */
core to_core(const formula& f, core_arena& arena);

/* not(g) -> g, otherwise wraps in not */
core negate(core f, core_arena& arena);

std::string render(core f);

/* maximum number of nested next operators on any root-to-leaf path */
int x_depth(core f);

/* all subformulas plus their negations, children before parents, deduplicated */
std::vector<core> subformula_closure(core f, core_arena& arena);

enum class polarity : uint8_t { pos, neg, mixed };

/* per-proposition parity of negations along paths; Implies negates its left
 * subtree, Globally contributes two negations (net even), True/False count as
 * mixed occurrences of the rewrite proposition */
std::map<std::string, polarity> polarities(const formula& f);

/* proposition names appearing in f, sorted */
std::set<std::string> propositions(const formula& f);

}  // namespace ltlcount
