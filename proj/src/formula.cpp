#include "lambek/formula.hpp"

#include <functional>

namespace lambek {

namespace {

FormulaPtr make(Conn k, std::string n, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<const Formula>(k, std::move(n), std::move(l),
                                         std::move(r));
}

const FormulaPtr kTop = make(Conn::Top, "", nullptr, nullptr);
const FormulaPtr kBot = make(Conn::Bot, "", nullptr, nullptr);
const FormulaPtr kUnit = make(Conn::Unit, "", nullptr, nullptr);

}  // namespace

FormulaPtr atom(const std::string& name) {
  return make(Conn::Atom, name, nullptr, nullptr);
}
FormulaPtr top() { return kTop; }
FormulaPtr bot() { return kBot; }
FormulaPtr unit() { return kUnit; }
FormulaPtr mul(FormulaPtr l, FormulaPtr r) {
  return make(Conn::Mul, "", std::move(l), std::move(r));
}
FormulaPtr ldiv(FormulaPtr l, FormulaPtr r) {
  return make(Conn::LDiv, "", std::move(l), std::move(r));
}
FormulaPtr rdiv(FormulaPtr l, FormulaPtr r) {
  return make(Conn::RDiv, "", std::move(l), std::move(r));
}
FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return make(Conn::And, "", std::move(l), std::move(r));
}
FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return make(Conn::Or, "", std::move(l), std::move(r));
}
FormulaPtr box(FormulaPtr arg, const std::string& index) {
  return make(Conn::Box, index, std::move(arg), nullptr);
}
FormulaPtr dia(FormulaPtr arg, const std::string& index) {
  return make(Conn::Dia, index, std::move(arg), nullptr);
}

bool equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.name != b.name) return false;
  if ((a.left == nullptr) != (b.left == nullptr)) return false;
  if (a.left && !equal(*a.left, *b.left)) return false;
  if ((a.right == nullptr) != (b.right == nullptr)) return false;
  if (a.right && !equal(*a.right, *b.right)) return false;
  return true;
}

std::size_t hash_value(const Formula& f) {
  std::size_t h = static_cast<std::size_t>(f.kind) * 0x9e3779b97f4a7c15ull;
  h ^= std::hash<std::string>{}(f.name) + (h << 6) + (h >> 2);
  if (f.left) h ^= hash_value(*f.left) + 0x9e3779b9 + (h << 6) + (h >> 2);
  if (f.right) h ^= hash_value(*f.right) + 0x7f4a7c15 + (h << 6) + (h >> 2);
  return h;
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
  if ((a.left != nullptr) != (b.left != nullptr)) return a.left ? 1 : -1;
  if (a.left)
    if (int c = compare(*a.left, *b.left); c != 0) return c;
  if ((a.right != nullptr) != (b.right != nullptr)) return a.right ? 1 : -1;
  if (a.right)
    if (int c = compare(*a.right, *b.right); c != 0) return c;
  return 0;
}

namespace {

// Binding strength, loosest first: | < & < \,/ < * < box/dia < primary.
int level(Conn k) {
  switch (k) {
    case Conn::Or:
      return 0;
    case Conn::And:
      return 1;
    case Conn::LDiv:
    case Conn::RDiv:
      return 2;
    case Conn::Mul:
      return 3;
    case Conn::Box:
    case Conn::Dia:
      return 4;
    default:
      return 5;
  }
}

const char* op_token(Conn k) {
  switch (k) {
    case Conn::Or:
      return " | ";
    case Conn::And:
      return " & ";
    case Conn::LDiv:
      return " \\ ";
    case Conn::RDiv:
      return " / ";
    case Conn::Mul:
      return " * ";
    default:
      return "";
  }
}

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Conn::Atom:
      out += f.name;
      return;
    case Conn::Top:
      out += "top";
      return;
    case Conn::Bot:
      out += "bot";
      return;
    case Conn::Unit:
      out += "1";
      return;
    case Conn::Box:
    case Conn::Dia: {
      out += (f.kind == Conn::Box) ? "box" : "dia";
      if (f.name != kDefaultIndex) {
        out += '[';
        out += f.name;
        out += ']';
      }
      out += ' ';
      bool parens = level(f.left->kind) < 4;
      if (parens) out += '(';
      print_rec(*f.left, out);
      if (parens) out += ')';
      return;
    }
    default: {
      int lv = level(f.kind);
      bool nonassoc = (f.kind == Conn::LDiv || f.kind == Conn::RDiv);
      bool lp = nonassoc ? level(f.left->kind) <= lv : level(f.left->kind) < lv;
      bool rp = level(f.right->kind) <= lv;
      if (lp) out += '(';
      print_rec(*f.left, out);
      if (lp) out += ')';
      out += op_token(f.kind);
      if (rp) out += '(';
      print_rec(*f.right, out);
      if (rp) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var,
                      const FormulaPtr& g) {
  switch (f->kind) {
    case Conn::Atom:
      return f->name == var ? g : f;
    case Conn::Top:
    case Conn::Bot:
    case Conn::Unit:
      return f;
    case Conn::Box:
    case Conn::Dia: {
      FormulaPtr arg = substitute(f->left, var, g);
      if (arg == f->left) return f;
      return std::make_shared<const Formula>(f->kind, f->name, arg, nullptr);
    }
    default: {
      FormulaPtr l = substitute(f->left, var, g);
      FormulaPtr r = substitute(f->right, var, g);
      if (l == f->left && r == f->right) return f;
      return std::make_shared<const Formula>(f->kind, f->name, l, r);
    }
  }
}

FormulaPtr substitute_all(const FormulaPtr& f,
                          const std::map<std::string, FormulaPtr>& sub) {
  switch (f->kind) {
    case Conn::Atom: {
      auto it = sub.find(f->name);
      return it == sub.end() ? f : it->second;
    }
    case Conn::Top:
    case Conn::Bot:
    case Conn::Unit:
      return f;
    case Conn::Box:
    case Conn::Dia: {
      FormulaPtr arg = substitute_all(f->left, sub);
      if (arg == f->left) return f;
      return std::make_shared<const Formula>(f->kind, f->name, arg, nullptr);
    }
    default: {
      FormulaPtr l = substitute_all(f->left, sub);
      FormulaPtr r = substitute_all(f->right, sub);
      if (l == f->left && r == f->right) return f;
      return std::make_shared<const Formula>(f->kind, f->name, l, r);
    }
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Conn::Atom) out.insert(f.name);
  if (f.left) collect_atoms(*f.left, out);
  if (f.right) collect_atoms(*f.right, out);
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

void collect_indices(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Conn::Box || f.kind == Conn::Dia) out.insert(f.name);
  if (f.left) collect_indices(*f.left, out);
  if (f.right) collect_indices(*f.right, out);
}

void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  out.push_back(f);
  if (f->left) collect_subformulas(f->left, out);
  if (f->right) collect_subformulas(f->right, out);
}

int node_count(const Formula& f) {
  int n = 1;
  if (f.left) n += node_count(*f.left);
  if (f.right) n += node_count(*f.right);
  return n;
}

std::string print_sequent(const Sequent& s) {
  return print_formula(s.lhs) + " |- " + print_formula(s.rhs);
}

std::set<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> out;
  collect_atoms(*s.lhs, out);
  collect_atoms(*s.rhs, out);
  return out;
}

std::set<std::string> indices_of(const Sequent& s) {
  std::set<std::string> out;
  collect_indices(*s.lhs, out);
  collect_indices(*s.rhs, out);
  return out;
}

Sequent substitute(const Sequent& s, const std::string& var,
                   const FormulaPtr& g) {
  return {substitute(s.lhs, var, g), substitute(s.rhs, var, g)};
}

}  // namespace lambek
