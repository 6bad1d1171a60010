#include "lambek/frame.hpp"

#include <algorithm>

namespace lambek {

int Frame::modality(const std::string& name) const {
  for (std::size_t i = 0; i < modalities.size(); ++i)
    if (modalities[i] == name) return static_cast<int>(i);
  return -1;
}

int Frame::world(const std::string& name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return -1;
}

Frame Frame::blank(int n) {
  Frame f;
  f.worlds.resize(n);
  for (int i = 0; i < n; ++i) f.worlds[i] = "w" + std::to_string(i);
  f.up.assign(n, 0);
  for (int i = 0; i < n; ++i) f.up[i] = bit(i);
  f.rel.assign(static_cast<std::size_t>(n) * n, 0);
  f.box_rel.assign(1, std::vector<Mask>(n, 0));
  f.dia_rel.assign(1, std::vector<Mask>(n, 0));
  return f;
}

bool is_upset(const std::vector<Mask>& up, Mask s) {
  Mask closure = 0;
  for_bits(s, [&](int u) { closure |= up[u]; });
  return closure == s;
}

std::vector<Mask> upsets_of_order(const std::vector<Mask>& up) {
  int n = static_cast<int>(up.size());
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (is_upset(up, s)) out.push_back(s);
    if (n == 0) break;
  }
  return out;
}

std::vector<Mask> upsets(const Frame& f) { return upsets_of_order(f.up); }

namespace {

std::string wname(const Frame& f, int w) { return f.worlds[w]; }

void check_order(const Frame& f, CheckReport& rep) {
  int n = f.size();
  for (int u = 0; u < n; ++u)
    if (!f.leq(u, u)) rep.fail("order-reflexive", {wname(f, u)});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u != v && f.leq(u, v) && f.leq(v, u))
        rep.fail("order-antisymmetric", {wname(f, u), wname(f, v)});
      if (f.leq(u, v) && !subset(f.up[v], f.up[u]))
        for (int w = 0; w < n; ++w)
          if (f.leq(v, w) && !f.leq(u, w))
            rep.fail("order-transitive",
                     {wname(f, u), wname(f, v), wname(f, w)});
    }
}

}  // namespace

CheckReport validate_frame(const Frame& f) {
  CheckReport rep;
  int n = f.size();
  check_order(f, rep);
  if (!rep.passed()) return rep;  // remaining conditions presuppose an order

  if (f.box_rel.size() != f.modalities.size() ||
      f.dia_rel.size() != f.modalities.size()) {
    rep.fail("modal-relation-arity", {});
    return rep;
  }

  // (1) product/box compatibility, per index
  for (std::size_t m = 0; m < f.modalities.size(); ++m) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for_bits(f.r(u, v), [&](int w) {
          for_bits(f.box_rel[m][w], [&](int w2) {
            bool ok = false;
            for_bits(f.box_rel[m][u], [&](int x) {
              for_bits(f.box_rel[m][v], [&](int y) {
                if (has(f.r(x, y), w2)) ok = true;
              });
            });
            if (!ok)
              rep.fail("box-product-compat",
                       {wname(f, u), wname(f, v), wname(f, w), wname(f, w2),
                        f.modalities[m]});
          });
        });
  }

  // (2) associativity of the ternary relation
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      for (int u2 = 0; u2 < n; ++u2)
        for (int v2 = 0; v2 < n; ++v2) {
          bool lhs = false, rhs = false;
          for_bits(f.r(u, w), [&](int x) {
            if (has(f.r(x, u2), v2)) lhs = true;
          });
          for_bits(f.r(w, u2), [&](int y) {
            if (has(f.r(u, y), v2)) rhs = true;
          });
          if (lhs != rhs)
            rep.fail("product-assoc",
                     {wname(f, u), wname(f, w), wname(f, u2), wname(f, v2)});
        }

  // (3) monotonicity: down in the first two arguments, up in the third
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mask rv = f.r(u, v);
      for (int u2 = 0; u2 < n; ++u2)
        if (f.leq(u2, u) && !subset(rv, f.r(u2, v)))
          rep.fail("product-mono-left", {wname(f, u2), wname(f, u), wname(f, v)});
      for (int v2 = 0; v2 < n; ++v2)
        if (f.leq(v2, v) && !subset(rv, f.r(u, v2)))
          rep.fail("product-mono-mid", {wname(f, v2), wname(f, v), wname(f, u)});
      Mask upclosed = 0;
      for_bits(rv, [&](int w) { upclosed |= f.up[w]; });
      if (upclosed != rv)
        rep.fail("product-mono-right", {wname(f, u), wname(f, v)});
    }

  // (4) unit worlds commute
  for_bits(f.unit_set, [&](int o) {
    for (int v = 0; v < n; ++v)
      if (f.r(v, o) != f.r(o, v))
        rep.fail("unit-comm", {wname(f, o), wname(f, v)});
  });

  // (5) v <= w iff some unit world witnesses the product
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      bool wit = false;
      for_bits(f.unit_set, [&](int o) {
        if (has(f.r(v, o), w)) wit = true;
      });
      if (f.leq(v, w) && !wit)
        rep.fail("unit-witness-missing", {wname(f, v), wname(f, w)});
      if (!f.leq(v, w) && wit)
        rep.fail("unit-witness-extra", {wname(f, v), wname(f, w)});
    }

  // (6) unit set upward closed
  if (!is_upset(f.up, f.unit_set))
    for_bits(f.unit_set, [&](int o) {
      for_bits(f.up[o] & ~f.unit_set, [&](int v) {
        rep.fail("unit-set-not-upclosed", {wname(f, o), wname(f, v)});
      });
    });

  // (7) order interaction of the modal relations, per index
  for (std::size_t m = 0; m < f.modalities.size(); ++m)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (f.leq(u, v)) {
          if (!subset(f.box_rel[m][v], f.box_rel[m][u]))
            rep.fail("box-order",
                     {wname(f, u), wname(f, v), f.modalities[m]});
          if (!subset(f.dia_rel[m][u], f.dia_rel[m][v]))
            rep.fail("dia-order",
                     {wname(f, u), wname(f, v), f.modalities[m]});
        }

  // (8) successor closure in the second argument. The preimage operators
  // cannot see more than the upward closure of a box successor set or the
  // downward closure of a dia successor set, so relations must be in that
  // closed form for the frame to be recoverable from its algebra of upsets;
  // the ternary relation's condition (3) plays the same role for the
  // product.
  for (std::size_t m = 0; m < f.modalities.size(); ++m)
    for (int u = 0; u < n; ++u) {
      if (!is_upset(f.up, f.box_rel[m][u]))
        rep.fail("box-successors-upclosed", {wname(f, u), f.modalities[m]});
      Mask di = f.dia_rel[m][u];
      for_bits(di, [&](int w) {
        for (int w2 = 0; w2 < n; ++w2)
          if (f.leq(w2, w) && !has(di, w2)) {
            rep.fail("dia-successors-downclosed",
                     {wname(f, u), wname(f, w2), f.modalities[m]});
            return;
          }
      });
    }

  return rep;
}

CheckReport validate_model(const Model& m) {
  CheckReport rep;
  for (const auto& [name, val] : m.valuation) {
    if (!subset(val, full_mask(m.frame.size()))) {
      rep.fail("valuation-out-of-range", {name});
      continue;
    }
    if (!is_upset(m.frame.up, val))
      for_bits(val, [&](int u) {
        for_bits(m.frame.up[u] & ~val, [&](int v) {
          rep.fail("valuation-not-upset",
                   {name, m.frame.worlds[u], m.frame.worlds[v]});
        });
      });
  }
  return rep;
}

CompiledFormula compile_formula(const Frame& f,
                                const std::vector<std::string>& atom_order,
                                const Formula& formula) {
  CompiledFormula cf;
  struct Rec {
    const Frame& f;
    const std::vector<std::string>& atoms;
    CompiledFormula& out;
    void go(const Formula& g) {
      if (g.left) go(*g.left);
      if (g.right) go(*g.right);
      int arg = -1;
      if (g.kind == Conn::Atom) {
        for (std::size_t i = 0; i < atoms.size(); ++i)
          if (atoms[i] == g.name) arg = static_cast<int>(i);
      } else if (g.kind == Conn::Box || g.kind == Conn::Dia) {
        arg = f.modality(g.name);
        if (arg < 0)
          throw InputError("unknown modal index '" + g.name + "'");
      }
      out.ops.push_back({g.kind, arg});
    }
  } rec{f, atom_order, cf};
  rec.go(formula);
  return cf;
}

Mask eval_compiled(const Frame& f, const CompiledFormula& cf,
                   const Mask* slots) {
  int n = f.size();
  Mask all = full_mask(n);
  Mask stack[64];
  int sp = 0;
  for (const auto& op : cf.ops) {
    switch (op.kind) {
      case Conn::Atom:
        stack[sp++] = op.arg >= 0 ? slots[op.arg] : 0;
        break;
      case Conn::Top:
        stack[sp++] = all;
        break;
      case Conn::Bot:
        stack[sp++] = 0;
        break;
      case Conn::Unit:
        stack[sp++] = f.unit_set;
        break;
      case Conn::And: {
        Mask b = stack[--sp];
        stack[sp - 1] &= b;
        break;
      }
      case Conn::Or: {
        Mask b = stack[--sp];
        stack[sp - 1] |= b;
        break;
      }
      case Conn::Mul: {
        Mask b = stack[--sp];
        Mask a = stack[sp - 1];
        Mask res = 0;
        for_bits(a, [&](int u) {
          for_bits(b, [&](int v) { res |= f.r(u, v); });
        });
        stack[sp - 1] = res;
        break;
      }
      case Conn::LDiv: {
        // a \ b = { w | for all u in a: R u w _ lands in b }
        Mask b = stack[--sp];
        Mask a = stack[sp - 1];
        Mask res = 0;
        for (int w = 0; w < n; ++w) {
          bool ok = true;
          for_bits(a, [&](int u) {
            if (!subset(f.r(u, w), b)) ok = false;
          });
          if (ok) res |= bit(w);
        }
        stack[sp - 1] = res;
        break;
      }
      case Conn::RDiv: {
        // b / a = { w | for all u in a: R w u _ lands in b }
        Mask a = stack[--sp];
        Mask b = stack[sp - 1];
        Mask res = 0;
        for (int w = 0; w < n; ++w) {
          bool ok = true;
          for_bits(a, [&](int u) {
            if (!subset(f.r(w, u), b)) ok = false;
          });
          if (ok) res |= bit(w);
        }
        stack[sp - 1] = res;
        break;
      }
      case Conn::Box: {
        Mask a = stack[sp - 1];
        const std::vector<Mask>& succ = f.box_rel[op.arg];
        Mask res = 0;
        for (int w = 0; w < n; ++w)
          if (subset(succ[w], a)) res |= bit(w);
        stack[sp - 1] = res;
        break;
      }
      case Conn::Dia: {
        Mask a = stack[sp - 1];
        const std::vector<Mask>& succ = f.dia_rel[op.arg];
        Mask res = 0;
        for (int w = 0; w < n; ++w)
          if (succ[w] & a) res |= bit(w);
        stack[sp - 1] = res;
        break;
      }
    }
  }
  return stack[0];
}

Mask truth_set(const Model& m, const Formula& f) {
  std::set<std::string> names = atoms_of(f);
  std::vector<std::string> order(names.begin(), names.end());
  std::vector<Mask> slots(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = m.valuation.find(order[i]);
    if (it != m.valuation.end()) slots[i] = it->second;
  }
  CompiledFormula cf = compile_formula(m.frame, order, f);
  Mask res = eval_compiled(m.frame, cf, slots.data());
  if (!is_upset(m.frame.up, res))
    throw std::logic_error(
        "persistence violated for '" + print_formula(f) +
        "': frame or model does not satisfy its invariants");
  return res;
}

bool holds(const Model& m, const Sequent& s) {
  return subset(truth_set(m, *s.lhs), truth_set(m, *s.rhs));
}

}  // namespace lambek
