#include "lambek/saturate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "lambek/budget.hpp"

namespace lambek {

namespace {

struct FormulaHash {
  std::size_t operator()(const FormulaPtr& f) const { return hash_value(*f); }
};
struct FormulaEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return equal(*a, *b);
  }
};

class Universe {
 public:
  int add(const FormulaPtr& f) {
    auto it = index_.find(f);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(items_.size());
    items_.push_back(f);
    index_.emplace(f, id);
    return id;
  }
  int find(const FormulaPtr& f) const {
    auto it = index_.find(f);
    return it == index_.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(items_.size()); }
  const FormulaPtr& operator[](int i) const { return items_[i]; }
  const std::vector<FormulaPtr>& items() const { return items_; }

 private:
  std::vector<FormulaPtr> items_;
  std::unordered_map<FormulaPtr, int, FormulaHash, FormulaEq> index_;
};

// Row-bitset sequent store: derived[i] = mask of j with (i |- j).
class SequentStore {
 public:
  explicit SequentStore(int n)
      : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  bool get(int i, int j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1;
  }
  bool set(int i, int j) {
    std::uint64_t& w = rows_[i * words_ + j / 64];
    std::uint64_t b = std::uint64_t{1} << (j % 64);
    if (w & b) return false;
    w |= b;
    dirty_ = true;
    return true;
  }
  // cut rule as reachability: row[i] |= row[j] whenever (i |- j)
  void transitive_close() {
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i) {
        if (i == k || !get(i, k)) continue;
        for (int w = 0; w < words_; ++w) {
          std::uint64_t add = rows_[k * words_ + w] & ~rows_[i * words_ + w];
          if (add) {
            rows_[i * words_ + w] |= add;
            dirty_ = true;
          }
        }
      }
  }
  bool consume_dirty() {
    bool d = dirty_;
    dirty_ = false;
    return d;
  }

 private:
  int n_, words_;
  std::vector<std::uint64_t> rows_;
  bool dirty_ = false;
};

// One-binding structural match of a schema pattern against a formula.
bool match(const Formula& pat, const FormulaPtr& f,
           std::map<std::string, FormulaPtr>& binding) {
  if (pat.kind == Conn::Atom) {
    auto it = binding.find(pat.name);
    if (it == binding.end()) {
      binding.emplace(pat.name, f);
      return true;
    }
    return equal(it->second, f);
  }
  if (pat.kind != f->kind || pat.name != f->name) return false;
  if (pat.left && !match(*pat.left, f->left, binding)) return false;
  if (pat.right && !match(*pat.right, f->right, binding)) return false;
  return true;
}

FormulaPtr apply_binding(const FormulaPtr& pat,
                         const std::map<std::string, FormulaPtr>& binding) {
  return substitute_all(pat, binding);
}

}  // namespace

SaturateResult saturate(const Sequent& goal, const std::vector<Schema>& axioms,
                        const SearchConfig& cfg, const Signature& sig) {
  SaturateResult res;
  res.notes.push_back(
      "a negative verdict means the goal was not derived inside this finite "
      "universe at this depth; it is not a refutation");
  res.notes.push_back(
      "schema instantiation is restricted to formulas of the universe, so "
      "closure under arbitrary substitution is deliberately not attempted");

  std::uint64_t max_universe =
      cfg.max_universe ? cfg.max_universe : workbench_budget();

  // atom pool for instantiating schemata
  std::set<std::string> pool_set = atoms_of(goal);
  if (pool_set.empty()) pool_set.insert("p");
  std::vector<std::string> pool(pool_set.begin(), pool_set.end());

  Universe uni;
  auto add_with_subformulas = [&](const FormulaPtr& f) {
    std::vector<FormulaPtr> subs;
    collect_subformulas(f, subs);
    for (const auto& g : subs) uni.add(g);
    if (static_cast<std::uint64_t>(uni.size()) > max_universe)
      throw BudgetError("saturate: universe size guard exceeded");
  };

  add_with_subformulas(goal.lhs);
  add_with_subformulas(goal.rhs);
  int goal_l = uni.find(goal.lhs), goal_r = uni.find(goal.rhs);

  // axiom instances over the atom pool
  std::vector<Sequent> axiom_sequents;
  for (const Schema& sch : axioms)
    for (const Sequent& s : sch.sequents) axiom_sequents.push_back(s);
  for (const Sequent& s : axiom_sequents) {
    std::set<std::string> vars = atoms_of(s);
    std::vector<std::string> vlist(vars.begin(), vars.end());
    std::vector<std::size_t> odo(vlist.size(), 0);
    for (;;) {
      std::map<std::string, FormulaPtr> sub;
      for (std::size_t i = 0; i < vlist.size(); ++i)
        sub.emplace(vlist[i], atom(pool[odo[i]]));
      add_with_subformulas(substitute_all(s.lhs, sub));
      add_with_subformulas(substitute_all(s.rhs, sub));
      std::size_t k = 0;
      while (k < odo.size() && ++odo[k] == pool.size()) odo[k++] = 0;
      if (k == odo.size()) break;
    }
  }

  // composition rounds, bounded by the largest formula seen so far
  int max_nodes = 1;
  for (const auto& f : uni.items()) max_nodes = std::max(max_nodes, node_count(*f));
  for (int round = 0; round < cfg.formula_universe_depth; ++round) {
    int snapshot = uni.size();
    for (int i = 0; i < snapshot; ++i)
      for (int j = 0; j < snapshot; ++j) {
        int total = node_count(*uni[i]) + node_count(*uni[j]) + 1;
        if (total > max_nodes) continue;
        add_with_subformulas(mul(uni[i], uni[j]));
        add_with_subformulas(ldiv(uni[i], uni[j]));
        add_with_subformulas(rdiv(uni[i], uni[j]));
      }
  }

  int n = uni.size();
  SequentStore store(n);

  // structure lookup tables
  struct Key {
    Conn kind;
    std::string name;
    int l, r;
    bool operator<(const Key& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (name != o.name) return name < o.name;
      if (l != o.l) return l < o.l;
      return r < o.r;
    }
  };
  std::map<Key, int> by_parts;
  for (int i = 0; i < n; ++i) {
    const FormulaPtr& f = uni[i];
    int l = f->left ? uni.find(f->left) : -1;
    int r = f->right ? uni.find(f->right) : -1;
    by_parts[{f->kind, f->name, l, r}] = i;
  }
  auto lookup = [&](Conn k, const std::string& nm, int l, int r) {
    auto it = by_parts.find({k, nm, l, r});
    return it == by_parts.end() ? -1 : it->second;
  };

  // reflexivity
  for (int i = 0; i < n; ++i) store.set(i, i);

  // schema instances inside the universe: match the left side, enumerate
  // unbound variables, probe the right side
  for (const Sequent& s : axiom_sequents) {
    std::set<std::string> vars = atoms_of(s);
    for (int i = 0; i < n; ++i) {
      std::map<std::string, FormulaPtr> binding;
      if (!match(*s.lhs, uni[i], binding)) continue;
      std::vector<std::string> unbound;
      for (const std::string& v : vars)
        if (!binding.count(v)) unbound.push_back(v);
      std::vector<int> odo(unbound.size(), 0);
      for (;;) {
        std::map<std::string, FormulaPtr> full = binding;
        for (std::size_t k = 0; k < unbound.size(); ++k)
          full.emplace(unbound[k], uni[odo[k]]);
        int r = uni.find(apply_binding(s.rhs, full));
        if (r >= 0) store.set(i, r);
        std::size_t k = 0;
        while (k < odo.size() && ++odo[k] == n) odo[k++] = 0;
        if (k == odo.size()) break;
      }
    }
  }

  // modal monotonicity index pairs: s1 precedes s2
  std::vector<std::pair<int, int>> mono_pairs;
  for (int s1 = 0; s1 < sig.size(); ++s1)
    for (int s2 = 0; s2 < sig.size(); ++s2)
      if (sig.prec(s1, s2)) mono_pairs.emplace_back(s1, s2);

  // closure
  store.consume_dirty();
  for (bool grew = true; grew;) {
    store.transitive_close();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!store.get(i, j)) continue;
        // or-left: (i |- j) & (k |- j) gives (i|k |- j)
        for (int k = 0; k < n; ++k) {
          if (store.get(k, j)) {
            int d = lookup(Conn::Or, "", i, k);
            if (d >= 0) store.set(d, j);
          }
          // and-right: (i |- j) & (i |- k) gives (i |- j&k)
          if (store.get(i, k)) {
            int c = lookup(Conn::And, "", j, k);
            if (c >= 0) store.set(i, c);
          }
        }
        // residuation, downward: (a*b |- j) gives (b |- a\j), (a |- j/b)
        const FormulaPtr& lf = uni[i];
        if (lf->kind == Conn::Mul) {
          int a = uni.find(lf->left), b = uni.find(lf->right);
          int ad = lookup(Conn::LDiv, "", a, j);
          if (ad >= 0) store.set(b, ad);
          int rd = lookup(Conn::RDiv, "", j, b);
          if (rd >= 0) store.set(a, rd);
        }
        // residuation, upward: (b |- a\c) gives (a*b |- c)
        const FormulaPtr& rf = uni[j];
        if (rf->kind == Conn::LDiv) {
          int a = uni.find(rf->left), c = uni.find(rf->right);
          int m = lookup(Conn::Mul, "", a, i);
          if (m >= 0) store.set(m, c);
        }
        if (rf->kind == Conn::RDiv) {
          int c = uni.find(rf->left), b = uni.find(rf->right);
          int m = lookup(Conn::Mul, "", i, b);
          if (m >= 0) store.set(m, c);
        }
        // indexed modal monotonicity
        for (auto [s1, s2] : mono_pairs) {
          int bi = lookup(Conn::Box, sig.indices[s2], i, -1);
          int bj = lookup(Conn::Box, sig.indices[s1], j, -1);
          if (bi >= 0 && bj >= 0) store.set(bi, bj);
          int di = lookup(Conn::Dia, sig.indices[s2], i, -1);
          int dj = lookup(Conn::Dia, sig.indices[s1], j, -1);
          if (di >= 0 && dj >= 0) store.set(di, dj);
        }
      }
    grew = store.consume_dirty();
  }

  res.universe = uni.items();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (store.get(i, j)) res.derived.emplace_back(i, j);
  res.derivable = store.get(goal_l, goal_r);
  res.verdict = res.derivable ? "derivable" : "not derived at this depth";
  return res;
}

}  // namespace lambek
