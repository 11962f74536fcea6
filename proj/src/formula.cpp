#include "ltlcount/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace ltlcount {

namespace {

formula mk(op kind, std::string name, formula l, formula r) {
  auto n = std::make_shared<formula_node>();
  n->kind = kind;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

}  // namespace

formula mk_prop(std::string name) {
  assert(!name.empty());
  return mk(op::prop, std::move(name), nullptr, nullptr);
}
formula mk_true() { return mk(op::true_, "", nullptr, nullptr); }
formula mk_false() { return mk(op::false_, "", nullptr, nullptr); }
formula mk_not(formula f) { return mk(op::not_, "", std::move(f), nullptr); }
formula mk_and(formula l, formula r) {
  return mk(op::and_, "", std::move(l), std::move(r));
}
formula mk_or(formula l, formula r) {
  return mk(op::or_, "", std::move(l), std::move(r));
}
formula mk_implies(formula l, formula r) {
  return mk(op::implies, "", std::move(l), std::move(r));
}
formula mk_next(formula f) { return mk(op::next, "", std::move(f), nullptr); }
formula mk_finally(formula f) {
  return mk(op::finally_, "", std::move(f), nullptr);
}
formula mk_globally(formula f) {
  return mk(op::globally, "", std::move(f), nullptr);
}
formula mk_until(formula l, formula r) {
  return mk(op::until, "", std::move(l), std::move(r));
}

bool equal(const formula& a, const formula& b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind || a->name != b->name)
    return false;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

// ---------------------------------------------------------------- rendering

namespace {

// precedence levels: implies 0 < or 1 < and 2 < until 3 < unary/atom 4
int level_of(op k) {
  switch (k) {
    case op::implies: return 0;
    case op::or_: return 1;
    case op::and_: return 2;
    case op::until: return 3;
    default: return 4;
  }
}

void render_to(const formula& f, int min_level, std::string& out) {
  int lvl = level_of(f->kind);
  bool parens = lvl < min_level;
  if (parens)
    out += '(';
  switch (f->kind) {
    case op::prop:
      out += f->name;
      break;
    case op::true_:
      out += "true";
      break;
    case op::false_:
      out += "false";
      break;
    case op::not_:
      out += '!';
      render_to(f->left, 4, out);
      break;
    case op::next:
      out += "X ";
      render_to(f->left, 4, out);
      break;
    case op::finally_:
      out += "F ";
      render_to(f->left, 4, out);
      break;
    case op::globally:
      out += "G ";
      render_to(f->left, 4, out);
      break;
    case op::until:  // right-associative
      render_to(f->left, lvl + 1, out);
      out += " U ";
      render_to(f->right, lvl, out);
      break;
    case op::and_:
      render_to(f->left, lvl, out);
      out += " & ";
      render_to(f->right, lvl + 1, out);
      break;
    case op::or_:
      render_to(f->left, lvl, out);
      out += " | ";
      render_to(f->right, lvl + 1, out);
      break;
    case op::implies:  // right-associative
      render_to(f->left, lvl + 1, out);
      out += " -> ";
      render_to(f->right, lvl, out);
      break;
  }
  if (parens)
    out += ')';
}

}  // namespace

std::string render(const formula& f) {
  std::string out;
  render_to(f, 0, out);
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

enum class tok {
  ident, true_, false_, not_, and_, or_, implies,
  next, finally_, globally, until, lparen, rparen, end
};

struct token {
  tok kind;
  std::string text;
  size_t pos;
};

const char* tok_name(tok t) {
  switch (t) {
    case tok::ident: return "identifier";
    case tok::true_: return "'true'";
    case tok::false_: return "'false'";
    case tok::not_: return "'!'";
    case tok::and_: return "'&'";
    case tok::or_: return "'|'";
    case tok::implies: return "'->'";
    case tok::next: return "'X'";
    case tok::finally_: return "'F'";
    case tok::globally: return "'G'";
    case tok::until: return "'U'";
    case tok::lparen: return "'('";
    case tok::rparen: return "')'";
    case tok::end: return "end of input";
  }
  return "?";
}

std::vector<token> lex(const std::string& text) {
  std::vector<token> out;
  size_t i = 0;
  auto starts = [&](const char* s) {
    return text.compare(i, std::char_traits<char>::length(s), s) == 0;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    size_t pos = i;
    if (c == '(') { out.push_back({tok::lparen, "(", pos}); ++i; continue; }
    if (c == ')') { out.push_back({tok::rparen, ")", pos}); ++i; continue; }
    if (c == '!' || c == '~') { out.push_back({tok::not_, {c}, pos}); ++i; continue; }
    if (c == '&') { out.push_back({tok::and_, "&", pos}); ++i; continue; }
    if (c == '|') { out.push_back({tok::or_, "|", pos}); ++i; continue; }
    if (starts("->")) { out.push_back({tok::implies, "->", pos}); i += 2; continue; }
    if (starts("¬")) { out.push_back({tok::not_, "¬", pos}); i += 2; continue; }
    if (starts("∨")) { out.push_back({tok::or_, "∨", pos}); i += 3; continue; }
    if (starts("∧")) { out.push_back({tok::and_, "∧", pos}); i += 3; continue; }
    if (starts("→")) { out.push_back({tok::implies, "→", pos}); i += 3; continue; }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      i = j;
      if (word == "true") out.push_back({tok::true_, word, pos});
      else if (word == "false") out.push_back({tok::false_, word, pos});
      else if (word == "X") out.push_back({tok::next, word, pos});
      else if (word == "F") out.push_back({tok::finally_, word, pos});
      else if (word == "G") out.push_back({tok::globally, word, pos});
      else if (word == "U") out.push_back({tok::until, word, pos});
      else out.push_back({tok::ident, word, pos});
      continue;
    }
    throw parse_error("unexpected character '" + std::string(1, c) +
                          "' at position " + std::to_string(pos),
                      pos);
  }
  out.push_back({tok::end, "", text.size()});
  return out;
}

class parser {
public:
  explicit parser(const std::string& text) : toks_(lex(text)) {}

  formula run() {
    formula f = implies_expr();
    expect(tok::end, "operator or end of input");
    return f;
  }

private:
  const token& peek() const { return toks_[pos_]; }
  token take() { return toks_[pos_++]; }
  bool accept(tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(tok k, const char* what) {
    if (!accept(k))
      fail(what);
  }
  [[noreturn]] void fail(const std::string& expected) {
    const token& t = peek();
    throw parse_error("syntax error at position " + std::to_string(t.pos) +
                          ": expected " + expected + ", got " +
                          tok_name(t.kind),
                      t.pos);
  }

  formula implies_expr() {
    formula l = or_expr();
    if (accept(tok::implies))
      return mk_implies(std::move(l), implies_expr());
    return l;
  }
  formula or_expr() {
    formula l = and_expr();
    while (accept(tok::or_))
      l = mk_or(std::move(l), and_expr());
    return l;
  }
  formula and_expr() {
    formula l = until_expr();
    while (accept(tok::and_))
      l = mk_and(std::move(l), until_expr());
    return l;
  }
  formula until_expr() {
    formula l = unary_expr();
    if (accept(tok::until))
      return mk_until(std::move(l), until_expr());
    return l;
  }
  formula unary_expr() {
    switch (peek().kind) {
      case tok::not_: take(); return mk_not(unary_expr());
      case tok::next: take(); return mk_next(unary_expr());
      case tok::finally_: take(); return mk_finally(unary_expr());
      case tok::globally: take(); return mk_globally(unary_expr());
      default: return atom();
    }
  }
  formula atom() {
    switch (peek().kind) {
      case tok::true_: take(); return mk_true();
      case tok::false_: take(); return mk_false();
      case tok::ident: return mk_prop(take().text);
      case tok::lparen: {
        take();
        formula f = implies_expr();
        expect(tok::rparen, "')'");
        return f;
      }
      default:
        fail("'true', 'false', identifier, '(' or a unary operator "
             "('!', '~', 'X', 'F', 'G')");
    }
  }

  std::vector<token> toks_;
  size_t pos_ = 0;
};

}  // namespace

formula parse(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw parse_error("empty formula", 0);
  return parser(text).run();
}

// --------------------------------------------------------------- core arena

core core_arena::intern(core_op kind, const std::string& name, core l, core r) {
  auto key = std::make_tuple(kind, name, l, r);
  auto it = index_.find(key);
  if (it != index_.end())
    return nodes_[it->second].get();
  auto node = std::make_unique<core_node>();
  node->kind = kind;
  node->name = name;
  node->left = l;
  node->right = r;
  node->id = static_cast<uint32_t>(nodes_.size());
  core out = node.get();
  index_.emplace(std::move(key), node->id);
  nodes_.push_back(std::move(node));
  return out;
}

core core_arena::prop(const std::string& name) {
  return intern(core_op::prop, name, nullptr, nullptr);
}
core core_arena::not_(core child) {
  assert(child->kind != core_op::not_);
  return intern(core_op::not_, "", child, nullptr);
}
core core_arena::or_(core l, core r) {
  return intern(core_op::or_, "", l, r);
}
core core_arena::next(core child) {
  return intern(core_op::next, "", child, nullptr);
}
core core_arena::finally_(core child) {
  return intern(core_op::finally_, "", child, nullptr);
}
core core_arena::until(core l, core r) {
  return intern(core_op::until, "", l, r);
}

core negate(core f, core_arena& arena) {
  if (f->kind == core_op::not_)
    return f->left;
  return arena.not_(f);
}

namespace {

void collect_props(const formula& f, std::set<std::string>& out) {
  if (!f)
    return;
  if (f->kind == op::prop)
    out.insert(f->name);
  collect_props(f->left, out);
  collect_props(f->right, out);
}

core to_core_rec(const formula& f, core_arena& a, const std::string& taut) {
  switch (f->kind) {
    case op::prop:
      return a.prop(f->name);
    case op::true_: {
      core q = a.prop(taut);
      return a.or_(q, a.not_(q));
    }
    case op::false_: {
      core q = a.prop(taut);
      return a.not_(a.or_(q, a.not_(q)));
    }
    case op::not_:
      return negate(to_core_rec(f->left, a, taut), a);
    case op::or_:
      return a.or_(to_core_rec(f->left, a, taut),
                   to_core_rec(f->right, a, taut));
    case op::and_: {
      core l = to_core_rec(f->left, a, taut);
      core r = to_core_rec(f->right, a, taut);
      return negate(a.or_(negate(l, a), negate(r, a)), a);
    }
    case op::implies: {
      core l = to_core_rec(f->left, a, taut);
      core r = to_core_rec(f->right, a, taut);
      return a.or_(negate(l, a), r);
    }
    case op::next:
      return a.next(to_core_rec(f->left, a, taut));
    case op::finally_:
      return a.finally_(to_core_rec(f->left, a, taut));
    case op::globally: {
      core c = to_core_rec(f->left, a, taut);
      return negate(a.finally_(negate(c, a)), a);
    }
    case op::until:
      return a.until(to_core_rec(f->left, a, taut),
                     to_core_rec(f->right, a, taut));
  }
  return nullptr;
}

}  // namespace

std::set<std::string> propositions(const formula& f) {
  std::set<std::string> out;
  collect_props(f, out);
  return out;
}

core to_core(const formula& f, core_arena& arena) {
  auto props = propositions(f);
  std::string taut = props.empty() ? "_t" : *props.begin();
  return to_core_rec(f, arena, taut);
}

std::string render(core f) {
  // core ops reuse the surface renderer's precedence rules
  std::function<void(core, int, std::string&)> rec = [&](core g, int min_level,
                                                         std::string& out) {
    int lvl;
    switch (g->kind) {
      case core_op::or_: lvl = 1; break;
      case core_op::until: lvl = 3; break;
      default: lvl = 4; break;
    }
    bool parens = lvl < min_level;
    if (parens)
      out += '(';
    switch (g->kind) {
      case core_op::prop:
        out += g->name;
        break;
      case core_op::not_:
        out += '!';
        rec(g->left, 4, out);
        break;
      case core_op::next:
        out += "X ";
        rec(g->left, 4, out);
        break;
      case core_op::finally_:
        out += "F ";
        rec(g->left, 4, out);
        break;
      case core_op::or_:
        rec(g->left, lvl, out);
        out += " | ";
        rec(g->right, lvl + 1, out);
        break;
      case core_op::until:
        rec(g->left, lvl + 1, out);
        out += " U ";
        rec(g->right, lvl, out);
        break;
    }
    if (parens)
      out += ')';
  };
  std::string out;
  rec(f, 0, out);
  return out;
}

int x_depth(core f) {
  switch (f->kind) {
    case core_op::prop:
      return 0;
    case core_op::next:
      return 1 + x_depth(f->left);
    case core_op::not_:
    case core_op::finally_:
      return x_depth(f->left);
    case core_op::or_:
    case core_op::until:
      return std::max(x_depth(f->left), x_depth(f->right));
  }
  return 0;
}

namespace {

void closure_rec(core f, core_arena& a, std::set<core>& seen,
                 std::vector<core>& out) {
  if (f->left)
    closure_rec(f->left, a, seen, out);
  if (f->right)
    closure_rec(f->right, a, seen, out);
  if (seen.insert(f).second)
    out.push_back(f);
  core n = negate(f, a);
  if (seen.insert(n).second)
    out.push_back(n);
}

}  // namespace

std::vector<core> subformula_closure(core f, core_arena& arena) {
  std::set<core> seen;
  std::vector<core> out;
  closure_rec(f, arena, seen, out);
  return out;
}

namespace {

void polarity_rec(const formula& f, bool odd, const std::string& taut,
                  std::map<std::string, std::pair<bool, bool>>& seen) {
  switch (f->kind) {
    case op::prop: {
      auto& e = seen[f->name];
      (odd ? e.second : e.first) = true;
      break;
    }
    case op::true_:
    case op::false_: {
      // rewrites to q | !q: the tautology proposition occurs with both parities
      auto& e = seen[taut];
      e.first = e.second = true;
      break;
    }
    case op::not_:
      polarity_rec(f->left, !odd, taut, seen);
      break;
    case op::implies:
      polarity_rec(f->left, !odd, taut, seen);
      polarity_rec(f->right, odd, taut, seen);
      break;
    case op::and_:
    case op::or_:
    case op::until:
      polarity_rec(f->left, odd, taut, seen);
      polarity_rec(f->right, odd, taut, seen);
      break;
    case op::next:
    case op::finally_:
    case op::globally:  // two rewrite negations cancel on the child path
      polarity_rec(f->left, odd, taut, seen);
      break;
  }
}

}  // namespace

std::map<std::string, polarity> polarities(const formula& f) {
  auto props = propositions(f);
  std::string taut = props.empty() ? "_t" : *props.begin();
  std::map<std::string, std::pair<bool, bool>> seen;
  polarity_rec(f, false, taut, seen);
  std::map<std::string, polarity> out;
  for (auto& [name, par] : seen) {
    if (par.first && par.second)
      out[name] = polarity::mixed;
    else
      out[name] = par.first ? polarity::pos : polarity::neg;
  }
  return out;
}

}  // namespace ltlcount
