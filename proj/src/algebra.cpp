#include "lambek/algebra.hpp"

#include <algorithm>

namespace lambek {

namespace {

std::string en(const Algebra& a, int x) { return a.elems[x]; }

// Greatest element of the mask under a's order, or -1.
int greatest_of(const Algebra& a, Mask s) {
  int best = -1;
  for_bits(s, [&](int c) {
    if (subset(s, a.down(c))) best = c;
  });
  return best;
}

}  // namespace

Mask Algebra::down(int x) const {
  Mask m = 0;
  for (int c = 0; c < size(); ++c)
    if (leq(c, x)) m |= bit(c);
  return m;
}

int Algebra::modality(const std::string& name) const {
  for (std::size_t i = 0; i < modalities.size(); ++i)
    if (modalities[i] == name) return static_cast<int>(i);
  return -1;
}

CheckReport check_lattice(const Algebra& a) {
  CheckReport rep;
  int n = a.size();
  if (n == 0) {
    rep.fail("carrier-empty", {});
    return rep;
  }
  for (int x = 0; x < n; ++x)
    if (!a.leq(x, x)) rep.fail("order-reflexive", {en(a, x)});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && a.leq(x, y) && a.leq(y, x))
        rep.fail("order-antisymmetric", {en(a, x), en(a, y)});
      if (a.leq(x, y))
        for (int z = 0; z < n; ++z)
          if (a.leq(y, z) && !a.leq(x, z))
            rep.fail("order-transitive", {en(a, x), en(a, y), en(a, z)});
    }
  if (!rep.passed()) return rep;

  std::vector<Mask> dn(n);
  for (int x = 0; x < n; ++x) dn[x] = a.down(x);

  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = greatest_of(a, dn[x] & dn[y]);
      if (m < 0) {
        rep.fail("meet-missing", {en(a, x), en(a, y)});
        continue;
      }
      meet[x][y] = m;
      Mask ub = a.up[x] & a.up[y];
      int j = -1;
      for_bits(ub, [&](int c) {
        if (subset(ub, a.up[c])) j = c;
      });
      if (j < 0) {
        rep.fail("join-missing", {en(a, x), en(a, y)});
        continue;
      }
      join[x][y] = j;
    }
  if (!rep.passed()) return rep;

  bool has_bot = false, has_top = false;
  for (int x = 0; x < n; ++x) {
    if (a.up[x] == full_mask(n)) has_bot = true;
    if (dn[x] == full_mask(n)) has_top = true;
  }
  if (!has_bot) rep.fail("bot-missing", {});
  if (!has_top) rep.fail("top-missing", {});
  if (!rep.passed()) return rep;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) {
          rep.fail("not-distributive", {en(a, x), en(a, y), en(a, z)});
          return rep;
        }
  return rep;
}

void finalize_lattice(Algebra& a) {
  CheckReport rep = check_lattice(a);
  if (!rep.passed())
    throw AlgebraError("lattice check failed: " + rep.violations[0].condition);
  int n = a.size();
  std::vector<Mask> dn(n);
  for (int x = 0; x < n; ++x) dn[x] = a.down(x);
  a.meet_tab.assign(n, std::vector<int>(n, -1));
  a.join_tab.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.meet_tab[x][y] = greatest_of(a, dn[x] & dn[y]);
      Mask ub = a.up[x] & a.up[y];
      for_bits(ub, [&](int c) {
        if (subset(ub, a.up[c])) a.join_tab[x][y] = c;
      });
    }
  for (int x = 0; x < n; ++x) {
    if (a.up[x] == full_mask(n)) a.bot = x;
    if (dn[x] == full_mask(n)) a.top = x;
  }
}

CheckReport check_monoid(const Algebra& a) {
  CheckReport rep;
  int n = a.size();
  if (a.eps < 0 || a.eps >= n) {
    rep.fail("eps-missing", {});
    return rep;
  }
  for (int x = 0; x < n; ++x) {
    if (a.mul[a.eps][x] != x) rep.fail("unit-left", {en(a, x)});
    if (a.mul[x][a.eps] != x) rep.fail("unit-right", {en(a, x)});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]])
          rep.fail("mul-not-associative", {en(a, x), en(a, y), en(a, z)});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int x2 = 0; x2 < n; ++x2)
        if (a.leq(x, x2)) {
          if (!a.leq(a.mul[x][y], a.mul[x2][y]))
            rep.fail("mul-not-monotone-left", {en(a, x), en(a, x2), en(a, y)});
          if (!a.leq(a.mul[y][x], a.mul[y][x2]))
            rep.fail("mul-not-monotone-right", {en(a, x), en(a, x2), en(a, y)});
        }
  return rep;
}

void derive_residuals(Algebra& a) {
  if (a.meet_tab.empty()) finalize_lattice(a);
  int n = a.size();
  CheckReport mono = check_monoid(a);
  for (const auto& v : mono.violations)
    if (v.condition.rfind("mul-not-monotone", 0) == 0)
      throw AlgebraError("mul not monotone at (" + v.witness[0] + "," +
                         v.witness[1] + "," + v.witness[2] + ")");

  a.ldiv_tab.assign(n, std::vector<int>(n, -1));
  a.rdiv_tab.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c) {
      Mask s = 0;
      for (int b = 0; b < n; ++b)
        if (a.leq(a.mul[x][b], c)) s |= bit(b);
      if (!s)
        throw AlgebraError("not residuated: empty candidate set for " +
                           en(a, x) + " \\ " + en(a, c));
      int m = greatest_of(a, s);
      if (m < 0)
        throw AlgebraError("not residuated: no max for " + en(a, x) + " \\ " +
                           en(a, c));
      a.ldiv_tab[x][c] = m;

      Mask t = 0;
      for (int b = 0; b < n; ++b)
        if (a.leq(a.mul[b][x], c)) t |= bit(b);
      int m2 = greatest_of(a, t);
      if (m2 < 0)
        throw AlgebraError("not residuated: no max for " + en(a, c) + " / " +
                           en(a, x));
      a.rdiv_tab[c][x] = m2;
    }

  // three-way equivalence, exhaustively
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool e1 = a.leq(b, a.ldiv_tab[x][c]);
        bool e2 = a.leq(a.mul[x][b], c);
        bool e3 = a.leq(x, a.rdiv_tab[c][b]);
        if (e1 != e2 || e2 != e3)
          throw AlgebraError("residuation equivalence fails at (" + en(a, x) +
                             "," + en(a, b) + "," + en(a, c) + ")");
      }
}

void finalize_algebra(Algebra& a) {
  finalize_lattice(a);
  derive_residuals(a);
}

CheckReport check_rdma(const Algebra& a) {
  CheckReport rep;
  int n = a.size();
  for (std::size_t m = 0; m < a.modalities.size(); ++m) {
    const auto& bx = a.box_tab[m];
    const auto& di = a.dia_tab[m];
    const std::string& idx = a.modalities[m];
    if (bx[a.top] != a.top) rep.fail("box-top", {idx});
    if (di[a.bot] != a.bot) rep.fail("dia-bot", {idx});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (bx[a.meet_tab[x][y]] != a.meet_tab[bx[x]][bx[y]])
          rep.fail("box-meet", {idx, en(a, x), en(a, y)});
        if (di[a.join_tab[x][y]] != a.join_tab[di[x]][di[y]])
          rep.fail("dia-join", {idx, en(a, x), en(a, y)});
        if (!a.leq(a.mul[bx[x]][bx[y]], bx[a.mul[x][y]]))
          rep.fail("box-mul", {idx, en(a, x), en(a, y)});
      }
  }
  return rep;
}

CheckReport validate_algebra(const Algebra& a) {
  CheckReport rep = check_lattice(a);
  if (!rep.passed()) return rep;
  rep.merge(check_monoid(a));
  if (!rep.passed()) return rep;
  Algebra copy = a;
  try {
    finalize_algebra(copy);
  } catch (const AlgebraError& e) {
    rep.fail("residuation", {e.what()});
    return rep;
  }
  rep.merge(check_rdma(copy));
  return rep;
}

std::vector<int> join_irreducibles(const Algebra& a) {
  int n = a.size();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    Mask strictly_below = a.down(x) & ~bit(x);
    if (!strictly_below) continue;  // bottom
    int covers = 0;
    for_bits(strictly_below, [&](int c) {
      // c covered by x: nothing strictly between
      bool between = false;
      for_bits(strictly_below & ~bit(c), [&](int d) {
        if (a.leq(c, d)) between = true;
      });
      if (!between) ++covers;
    });
    if (covers == 1) out.push_back(x);
  }
  return out;
}

std::vector<int> meet_irreducibles(const Algebra& a) {
  int n = a.size();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    Mask strictly_above = a.up[x] & ~bit(x);
    if (!strictly_above) continue;  // top
    int covered = 0;
    for_bits(strictly_above, [&](int c) {
      bool between = false;
      for_bits(strictly_above & ~bit(c), [&](int d) {
        if (a.leq(d, c)) between = true;
      });
      if (!between) ++covered;
    });
    if (covered == 1) out.push_back(x);
  }
  return out;
}

int kappa(const Algebra& a, int j) {
  std::vector<int> ji = join_irreducibles(a);
  if (std::find(ji.begin(), ji.end(), j) == ji.end())
    throw AlgebraError("kappa: " + en(a, j) + " is not join irreducible");
  Mask outside = full_mask(a.size()) & ~a.up[j];
  int acc = a.bot;
  for_bits(outside, [&](int x) { acc = a.join_tab[acc][x]; });
  return acc;
}

CheckReport kappa_report(const Algebra& a) {
  CheckReport rep;
  std::vector<int> ji = join_irreducibles(a);
  std::vector<int> mi = meet_irreducibles(a);
  std::vector<int> img;
  for (int j : ji) {
    int k = kappa(a, j);
    img.push_back(k);
    if (std::find(mi.begin(), mi.end(), k) == mi.end())
      rep.fail("kappa-not-meet-irreducible", {en(a, j), en(a, k)});
  }
  for (int m : mi)
    if (std::count(img.begin(), img.end(), m) != 1)
      rep.fail("kappa-not-bijective", {en(a, m)});
  for (std::size_t i = 0; i < ji.size(); ++i)
    for (std::size_t k = 0; k < ji.size(); ++k)
      if (a.leq(ji[i], ji[k]) != a.leq(img[i], img[k]))
        rep.fail("kappa-not-order-iso", {en(a, ji[i]), en(a, ji[k])});
  // primes of a finite distributive lattice are the principal upsets of the
  // join irreducibles
  std::vector<Filter> pf = prime_filters(a);
  if (pf.size() != ji.size()) {
    rep.fail("prime-count-mismatch",
             {std::to_string(pf.size()), std::to_string(ji.size())});
  } else {
    for (std::size_t i = 0; i < ji.size(); ++i) {
      bool found = false;
      for (const Filter& p : pf)
        if (p.elements == a.up[ji[i]]) found = true;
      if (!found) rep.fail("prime-not-principal-ji", {en(a, ji[i])});
    }
  }
  return rep;
}

bool is_filter(const Algebra& a, Mask s) {
  if (!s) return false;
  bool ok = true;
  for_bits(s, [&](int x) {
    if (!subset(a.up[x], s)) ok = false;
    for_bits(s, [&](int y) {
      if (!has(s, a.meet_tab[x][y])) ok = false;
    });
  });
  return ok;
}

bool is_proper_filter(const Algebra& a, Mask s) {
  return is_filter(a, s) && s != full_mask(a.size());
}

bool is_prime_filter(const Algebra& a, Mask s) {
  if (!is_proper_filter(a, s)) return false;
  int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (has(s, a.join_tab[x][y]) && !has(s, x) && !has(s, y)) return false;
  return true;
}

std::vector<Filter> filters(const Algebra& a) {
  // every filter of a finite lattice is a principal upset
  std::vector<Filter> out;
  for (int x = 0; x < a.size(); ++x) out.push_back({a.up[x]});
  return out;
}

std::vector<Filter> prime_filters(const Algebra& a) {
  std::vector<Filter> out;
  for (const Filter& f : filters(a))
    if (is_prime_filter(a, f.elements)) out.push_back(f);
  return out;
}

namespace {

Mask raw_product_upclosed(const Algebra& a, Mask x, Mask y) {
  Mask out = 0;
  for_bits(x, [&](int p) {
    for_bits(y, [&](int q) { out |= a.up[a.mul[p][q]]; });
  });
  return out;
}

}  // namespace

Filter filter_product(const Algebra& a, const Filter& x, const Filter& y) {
  Mask res = raw_product_upclosed(a, x.elements, y.elements);
  if (!is_filter(a, res))
    throw std::logic_error("filter_product did not produce a filter");
  return {res};
}

CheckReport check_filter_lemma(const Algebra& a) {
  CheckReport rep;
  std::vector<Filter> fs = filters(a);
  // raw (not up-closed) products, for item 1
  auto raw = [&](Mask x, Mask y) {
    Mask out = 0;
    for_bits(x, [&](int p) {
      for_bits(y, [&](int q) { out |= bit(a.mul[p][q]); });
    });
    return out;
  };
  for (const Filter& x : fs)
    for (const Filter& y : fs) {
      Mask rawxy = raw(x.elements, y.elements);
      Mask upxy = raw_product_upclosed(a, x.elements, y.elements);
      for (const Filter& z : fs)
        if (subset(rawxy, z.elements) != subset(upxy, z.elements))
          rep.fail("filter-lemma-1",
                   {en(a, std::countr_zero(x.elements)),
                    en(a, std::countr_zero(y.elements)),
                    en(a, std::countr_zero(z.elements))});
      if (!is_filter(a, upxy))
        rep.fail("filter-lemma-2", {std::to_string(x.elements),
                                    std::to_string(y.elements)});
    }
  // item 3: prime extension property
  std::vector<Filter> pf = prime_filters(a);
  for (const Filter& x : fs)
    for (const Filter& y : fs)
      for (const Filter& z : pf) {
        if (!subset(raw(x.elements, y.elements), z.elements)) continue;
        bool found = false;
        for (const Filter& x2 : pf) {
          if (!subset(x.elements, x2.elements)) continue;
          for (const Filter& y2 : pf) {
            if (!subset(y.elements, y2.elements)) continue;
            if (subset(raw(x2.elements, y2.elements), z.elements))
              found = true;
          }
        }
        if (!found)
          rep.fail("filter-lemma-3",
                   {std::to_string(x.elements), std::to_string(y.elements),
                    std::to_string(z.elements)});
      }
  return rep;
}

CompiledFormula compile_term(const Algebra& a,
                             const std::vector<std::string>& atom_order,
                             const Formula& f) {
  CompiledFormula cf;
  struct Rec {
    const Algebra& a;
    const std::vector<std::string>& atoms;
    CompiledFormula& out;
    void go(const Formula& g) {
      if (g.left) go(*g.left);
      if (g.right) go(*g.right);
      int arg = -1;
      if (g.kind == Conn::Atom) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
          if (atoms[i] == g.name) arg = static_cast<int>(i);
        if (arg < 0) throw InputError("missing atom '" + g.name + "'");
      } else if (g.kind == Conn::Box || g.kind == Conn::Dia) {
        arg = a.modality(g.name);
        if (arg < 0) throw InputError("unknown modal index '" + g.name + "'");
      }
      out.ops.push_back({g.kind, arg});
    }
  } rec{a, atom_order, cf};
  rec.go(f);
  return cf;
}

int eval_term_compiled(const Algebra& a, const CompiledFormula& cf,
                       const int* slots) {
  int stack[64];
  int sp = 0;
  for (const auto& op : cf.ops) {
    switch (op.kind) {
      case Conn::Atom:
        stack[sp++] = slots[op.arg];
        break;
      case Conn::Top:
        stack[sp++] = a.top;
        break;
      case Conn::Bot:
        stack[sp++] = a.bot;
        break;
      case Conn::Unit:
        stack[sp++] = a.eps;
        break;
      case Conn::And: {
        int y = stack[--sp];
        stack[sp - 1] = a.meet_tab[stack[sp - 1]][y];
        break;
      }
      case Conn::Or: {
        int y = stack[--sp];
        stack[sp - 1] = a.join_tab[stack[sp - 1]][y];
        break;
      }
      case Conn::Mul: {
        int y = stack[--sp];
        stack[sp - 1] = a.mul[stack[sp - 1]][y];
        break;
      }
      case Conn::LDiv: {
        int y = stack[--sp];
        stack[sp - 1] = a.ldiv_tab[stack[sp - 1]][y];
        break;
      }
      case Conn::RDiv: {
        int y = stack[--sp];
        stack[sp - 1] = a.rdiv_tab[stack[sp - 1]][y];
        break;
      }
      case Conn::Box:
        stack[sp - 1] = a.box_tab[op.arg][stack[sp - 1]];
        break;
      case Conn::Dia:
        stack[sp - 1] = a.dia_tab[op.arg][stack[sp - 1]];
        break;
    }
  }
  return stack[0];
}

int eval_term(const Algebra& a, const std::map<std::string, int>& assignment,
              const Formula& f) {
  std::set<std::string> names = atoms_of(f);
  std::vector<std::string> order(names.begin(), names.end());
  std::vector<int> slots;
  for (const std::string& nm : order) {
    auto it = assignment.find(nm);
    if (it == assignment.end()) throw InputError("missing atom '" + nm + "'");
    slots.push_back(it->second);
  }
  CompiledFormula cf = compile_term(a, order, f);
  return eval_term_compiled(a, cf, slots.data());
}

}  // namespace lambek
