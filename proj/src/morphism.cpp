#include "lambek/morphism.hpp"

namespace lambek {

namespace {

std::string w1(const Frame& f, int u) { return f.worlds[u]; }

}  // namespace

CheckReport is_bounded_morphism(const Frame& f1, const Frame& f2,
                                const std::vector<int>& f) {
  CheckReport rep;
  int n1 = f1.size(), n2 = f2.size();
  if (static_cast<int>(f.size()) != n1) {
    rep.fail("map-not-total", {});
    return rep;
  }
  for (int u = 0; u < n1; ++u)
    if (f[u] < 0 || f[u] >= n2) {
      rep.fail("map-out-of-range", {w1(f1, u)});
      return rep;
    }
  if (f1.modalities != f2.modalities) {
    rep.fail("modalities-mismatch", {});
    return rep;
  }

  // order preservation
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n1; ++v)
      if (f1.leq(u, v) && !f2.leq(f[u], f[v]))
        rep.fail("not-monotone", {w1(f1, u), w1(f1, v)});

  // forth
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n1; ++v)
      for_bits(f1.r(u, v), [&](int w) {
        if (!has(f2.r(f[u], f[v]), f[w]))
          rep.fail("forth", {w1(f1, u), w1(f1, v), w1(f1, w)});
      });

  // back, first argument fixed: R2 f(u) v' w' needs v, w with
  // v' <= f(v), f(w) <= w', R1 u v w
  for (int u = 0; u < n1; ++u)
    for (int v2 = 0; v2 < n2; ++v2)
      for_bits(f2.r(f[u], v2), [&](int w2) {
        bool ok = false;
        for (int v = 0; v < n1 && !ok; ++v) {
          if (!f2.leq(v2, f[v])) continue;
          for_bits(f1.r(u, v), [&](int w) {
            if (f2.leq(f[w], w2)) ok = true;
          });
        }
        if (!ok)
          rep.fail("back-first", {w1(f1, u), f2.worlds[v2], f2.worlds[w2]});
      });

  // back, second argument fixed
  for (int v = 0; v < n1; ++v)
    for (int u2 = 0; u2 < n2; ++u2)
      for_bits(f2.r(u2, f[v]), [&](int w2) {
        bool ok = false;
        for (int u = 0; u < n1 && !ok; ++u) {
          if (!f2.leq(u2, f[u])) continue;
          for_bits(f1.r(u, v), [&](int w) {
            if (f2.leq(f[w], w2)) ok = true;
          });
        }
        if (!ok)
          rep.fail("back-second", {f2.worlds[u2], w1(f1, v), f2.worlds[w2]});
      });

  // back, third argument fixed
  for (int w = 0; w < n1; ++w)
    for (int u2 = 0; u2 < n2; ++u2)
      for (int v2 = 0; v2 < n2; ++v2) {
        if (!has(f2.r(u2, v2), f[w])) continue;
        bool ok = false;
        for (int u = 0; u < n1 && !ok; ++u) {
          if (!f2.leq(u2, f[u])) continue;
          for (int v = 0; v < n1 && !ok; ++v) {
            if (!f2.leq(v2, f[v])) continue;
            if (has(f1.r(u, v), w)) ok = true;
          }
        }
        if (!ok)
          rep.fail("back-third", {f2.worlds[u2], f2.worlds[v2], w1(f1, w)});
      }

  // modal successor images: f[R(x)] = R(f(x)), per index, both relations
  for (std::size_t m = 0; m < f1.modalities.size(); ++m)
    for (int x = 0; x < n1; ++x) {
      Mask img_box = 0, img_dia = 0;
      for_bits(f1.box_rel[m][x], [&](int y) { img_box |= bit(f[y]); });
      for_bits(f1.dia_rel[m][x], [&](int y) { img_dia |= bit(f[y]); });
      if (img_box != f2.box_rel[m][f[x]])
        rep.fail("box-image", {w1(f1, x), f1.modalities[m]});
      if (img_dia != f2.dia_rel[m][f[x]])
        rep.fail("dia-image", {w1(f1, x), f1.modalities[m]});
    }

  // unit sets: preimage of O2 is O1
  for (int u = 0; u < n1; ++u)
    if (has(f1.unit_set, u) != has(f2.unit_set, f[u]))
      rep.fail("unit-preimage", {w1(f1, u)});

  return rep;
}

CheckReport check_truth_preservation(const Model& m1, const Model& m2,
                                     const std::vector<int>& f,
                                     const std::vector<FormulaPtr>& formulas) {
  CheckReport rep;
  CheckReport bm = is_bounded_morphism(m1.frame, m2.frame, f);
  if (!bm.passed()) {
    rep.fail("precondition-not-bounded-morphism", {});
    rep.merge(bm);
    return rep;
  }
  // atom agreement on the atoms of the supplied formulas
  std::set<std::string> atoms;
  for (const auto& g : formulas) collect_atoms(*g, atoms);
  for (const std::string& a : atoms) {
    auto v1 = m1.valuation.count(a) ? m1.valuation.at(a) : 0;
    auto v2 = m2.valuation.count(a) ? m2.valuation.at(a) : 0;
    for (int u = 0; u < m1.frame.size(); ++u)
      if (has(v1, u) != has(v2, f[u]))
        rep.fail("precondition-atom-agreement", {a, m1.frame.worlds[u]});
  }
  if (!rep.passed()) return rep;

  for (const auto& g : formulas) {
    Mask t1 = truth_set(m1, *g);
    Mask t2 = truth_set(m2, *g);
    for (int u = 0; u < m1.frame.size(); ++u)
      if (has(t1, u) != has(t2, f[u]))
        rep.fail("truth-not-preserved",
                 {print_formula(*g), m1.frame.worlds[u]});
  }
  return rep;
}

}  // namespace lambek
