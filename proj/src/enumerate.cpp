#include "lambek/enumerate.hpp"

#include <algorithm>
#include <map>

#include "lambek/budget.hpp"
#include "lambek/duality.hpp"

namespace lambek {

namespace {

// All partial orders on n labeled points, as up-mask vectors, in ascending
// order of the strict-pair bitmask.
void for_each_poset(int n, const std::function<bool(const std::vector<Mask>&)>& sink) {
  if (n == 0) {
    sink({});
    return;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    bool ok = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1) up[pairs[k].first] |= bit(pairs[k].second);
    // antisymmetry
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (has(up[i], j) && has(up[j], i)) ok = false;
    // transitivity
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (i != j && has(up[i], j) && !subset(up[j], up[i])) ok = false;
    if (ok && !sink(up)) return;
  }
}

struct SlotGroup {
  std::vector<std::pair<int, int>> members;  // slots sharing one value
  std::vector<Mask> domain;                  // candidate values, ascending
  bool touches_unit = false;
};

// Enumerates ternary relations for a fixed order and unit set by
// backtracking over slot groups with monotonicity, associativity, and
// unit-witness pruning.
class RelationSearch {
 public:
  RelationSearch(const std::vector<Mask>& up, Mask unit,
                 const std::function<bool(const std::vector<Mask>&)>& emit)
      : n_(static_cast<int>(up.size())), up_(up), unit_(unit), emit_(emit) {
    ups_ = upsets_of_order(up_);
    build_groups();
    slot_val_.assign(n_ * n_, 0);
    slot_set_.assign(n_ * n_, false);
  }

  bool run() { return go(0); }

 private:
  int idx(int u, int v) const { return u * n_ + v; }

  void build_groups() {
    std::vector<bool> grouped(n_ * n_, false);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (grouped[idx(u, v)]) continue;
        SlotGroup g;
        g.members.push_back({u, v});
        grouped[idx(u, v)] = true;
        if ((has(unit_, u) || has(unit_, v)) && u != v &&
            !grouped[idx(v, u)]) {
          g.members.push_back({v, u});
          grouped[idx(v, u)] = true;
        }
        Mask cap = full_mask(n_);
        for (auto [a, b] : g.members) {
          if (has(unit_, b)) cap &= up_[a];
          if (has(unit_, a)) cap &= up_[b];
          g.touches_unit |= has(unit_, a) || has(unit_, b);
        }
        for (Mask s : ups_)
          if (subset(s, cap)) g.domain.push_back(s);
        groups_.push_back(std::move(g));
      }
    unit_groups_left_ = 0;
    for (const auto& g : groups_)
      if (g.touches_unit) ++unit_groups_left_;
  }

  bool mono_ok(int u, int v) const {
    // shrinking an argument can only grow the witness set
    Mask val = slot_val_[idx(u, v)];
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!slot_set_[idx(a, b)] || (a == u && b == v)) continue;
        if (has(up_[a], u) && has(up_[b], v) &&
            !subset(val, slot_val_[idx(a, b)]))
          return false;
        if (has(up_[u], a) && has(up_[v], b) &&
            !subset(slot_val_[idx(a, b)], val))
          return false;
      }
    return true;
  }

  // associativity instances whose touched slots are all assigned
  bool assoc_ok_partial() const {
    for (int u = 0; u < n_; ++u)
      for (int w = 0; w < n_; ++w) {
        if (!slot_set_[idx(u, w)]) continue;
        for (int u2 = 0; u2 < n_; ++u2) {
          if (!slot_set_[idx(w, u2)]) continue;
          bool all_known = true;
          Mask lhs = 0, rhs = 0;
          for_bits(slot_val_[idx(u, w)], [&](int x) {
            if (!slot_set_[idx(x, u2)])
              all_known = false;
            else
              lhs |= slot_val_[idx(x, u2)];
          });
          for_bits(slot_val_[idx(w, u2)], [&](int y) {
            if (!slot_set_[idx(u, y)])
              all_known = false;
            else
              rhs |= slot_val_[idx(u, y)];
          });
          if (all_known && lhs != rhs) return false;
        }
      }
    return true;
  }

  bool unit_witness_ok() const {
    // v <= w iff some o in the unit set has w in slot (v, o)
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w) {
        bool wit = false;
        for_bits(unit_, [&](int o) {
          if (has(slot_val_[idx(v, o)], w)) wit = true;
        });
        if (wit != has(up_[v], w)) return false;
      }
    return true;
  }

  bool go(std::size_t gi) {
    if (gi == groups_.size()) return emit_(slot_val_);
    const SlotGroup& g = groups_[gi];
    for (Mask val : g.domain) {
      for (auto [u, v] : g.members) {
        slot_val_[idx(u, v)] = val;
        slot_set_[idx(u, v)] = true;
      }
      bool ok = true;
      for (auto [u, v] : g.members)
        if (!mono_ok(u, v)) ok = false;
      if (ok && !assoc_ok_partial()) ok = false;
      if (g.touches_unit) --unit_groups_left_;
      if (ok && unit_groups_left_ == 0 && g.touches_unit &&
          !unit_witness_ok())
        ok = false;
      bool cont = !ok || go(gi + 1);
      if (g.touches_unit) ++unit_groups_left_;
      for (auto [u, v] : g.members) slot_set_[idx(u, v)] = false;
      if (!cont) return false;
    }
    return true;
  }

  int n_;
  std::vector<Mask> up_;
  Mask unit_;
  std::function<bool(const std::vector<Mask>&)> emit_;
  std::vector<Mask> ups_;
  std::vector<SlotGroup> groups_;
  std::vector<Mask> slot_val_;
  std::vector<bool> slot_set_;
  int unit_groups_left_ = 0;
};

Frame make_core(int n, const std::vector<Mask>& up, Mask unit,
                const std::vector<Mask>& slots) {
  Frame f = Frame::blank(n);
  f.up = up;
  f.unit_set = unit;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) f.r(u, v) = slots[u * n + v];
  return f;
}

}  // namespace

std::vector<std::vector<Mask>> valid_box_families(const Frame& core) {
  int n = core.size();
  std::vector<std::vector<Mask>> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= (std::uint64_t{1} << n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> fam(n);
    std::uint64_t c = code;
    for (int u = n - 1; u >= 0; --u) {
      fam[u] = c & full_mask(n);
      c >>= n;
    }
    bool ok = true;
    // antitone in the source, upward closed successor sets
    for (int u = 0; u < n && ok; ++u) {
      if (!is_upset(core.up, fam[u])) ok = false;
      for (int v = 0; v < n && ok; ++v)
        if (core.leq(u, v) && !subset(fam[v], fam[u])) ok = false;
    }
    if (!ok) continue;
    // compatibility with the ternary relation
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v) {
        Mask need = 0;
        for_bits(core.r(u, v), [&](int w) { need |= fam[w]; });
        if (!need) continue;
        Mask have = 0;
        for_bits(fam[u], [&](int x) {
          for_bits(fam[v], [&](int y) { have |= core.r(x, y); });
        });
        if (!subset(need, have)) ok = false;
      }
    if (ok) out.push_back(std::move(fam));
  }
  return out;
}

std::vector<std::vector<Mask>> valid_dia_families(const Frame& core) {
  int n = core.size();
  std::vector<std::vector<Mask>> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= (std::uint64_t{1} << n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Mask> fam(n);
    std::uint64_t c = code;
    for (int u = n - 1; u >= 0; --u) {
      fam[u] = c & full_mask(n);
      c >>= n;
    }
    bool ok = true;
    // monotone in the source, downward closed successor sets
    for (int u = 0; u < n && ok; ++u) {
      for_bits(fam[u], [&](int w) {
        for (int w2 = 0; w2 < n; ++w2)
          if (core.leq(w2, w) && !has(fam[u], w2)) ok = false;
      });
      for (int v = 0; v < n && ok; ++v)
        if (core.leq(u, v) && !subset(fam[u], fam[v])) ok = false;
    }
    if (ok) out.push_back(std::move(fam));
  }
  return out;
}

Frame assemble_frame(const Frame& core, const std::vector<Mask>& box_family,
                     const std::vector<Mask>& dia_family) {
  Frame f = core;
  f.box_rel[0] = box_family;
  f.dia_rel[0] = dia_family;
  return f;
}

std::vector<std::uint64_t> frame_encoding(const Frame& f) {
  int n = f.size();
  std::vector<std::uint64_t> enc;
  enc.push_back(n);
  std::uint64_t leq = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (f.leq(u, v)) leq |= std::uint64_t{1} << (u * n + v);
  enc.push_back(leq);
  enc.push_back(f.unit_set);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) enc.push_back(f.r(u, v));
  for (const auto& fam : f.box_rel)
    for (int u = 0; u < n; ++u) enc.push_back(fam[u]);
  for (const auto& fam : f.dia_rel)
    for (int u = 0; u < n; ++u) enc.push_back(fam[u]);
  return enc;
}

namespace {

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for_bits(m, [&](int i) { out |= bit(perm[i]); });
  return out;
}

std::vector<std::uint64_t> frame_encoding_permuted(const Frame& f,
                                                   const std::vector<int>& p) {
  int n = f.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[p[i]] = i;
  std::vector<std::uint64_t> enc;
  enc.push_back(n);
  std::uint64_t leq = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (f.leq(inv[u], inv[v])) leq |= std::uint64_t{1} << (u * n + v);
  enc.push_back(leq);
  enc.push_back(permute_mask(f.unit_set, p));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      enc.push_back(permute_mask(f.r(inv[u], inv[v]), p));
  for (const auto& fam : f.box_rel)
    for (int u = 0; u < n; ++u) enc.push_back(permute_mask(fam[inv[u]], p));
  for (const auto& fam : f.dia_rel)
    for (int u = 0; u < n; ++u) enc.push_back(permute_mask(fam[inv[u]], p));
  return enc;
}

}  // namespace

bool is_canonical_representative(const Frame& f) {
  int n = f.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint64_t> self = frame_encoding(f);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (frame_encoding_permuted(f, perm) < self) return false;
  return true;
}

namespace {

EnumStats enumerate_impl(const SearchConfig& cfg, bool full,
                         const std::function<bool(const Frame&)>& sink) {
  EnumStats stats;
  std::uint64_t budget = cfg.max_frames ? cfg.max_frames : workbench_budget();
  bool stop = false;
  for (int n = 1; n <= cfg.max_worlds && !stop; ++n) {
    for_each_poset(n, [&](const std::vector<Mask>& up) {
      std::vector<Mask> ups = upsets_of_order(up);
      for (Mask unit : ups) {
        if (!unit) continue;  // reflexive pairs need a unit witness
        RelationSearch search(up, unit, [&](const std::vector<Mask>& slots) {
          Frame core = make_core(n, up, unit, slots);
          if (!full) {
            if (cfg.dedup_iso && !is_canonical_representative(core))
              return true;
            if (stats.emitted >= budget) {
              stats.completed = false;
              stats.stopped_at = "cores emitted: " +
                                 std::to_string(stats.emitted) +
                                 ", at size " + std::to_string(n);
              stop = true;
              return false;
            }
            ++stats.emitted;
            return sink(core);
          }
          auto boxes = valid_box_families(core);
          auto dias = valid_dia_families(core);
          for (const auto& bx : boxes)
            for (const auto& di : dias) {
              Frame frame = assemble_frame(core, bx, di);
              if (cfg.dedup_iso && !is_canonical_representative(frame))
                continue;
              if (stats.emitted >= budget) {
                stats.completed = false;
                stats.stopped_at = "frames emitted: " +
                                   std::to_string(stats.emitted) +
                                   ", at size " + std::to_string(n);
                stop = true;
                return false;
              }
              ++stats.emitted;
              if (!sink(frame)) {
                stop = true;
                return false;
              }
            }
          return true;
        });
        if (!search.run() || stop) break;
      }
      return !stop;
    });
  }
  return stats;
}

}  // namespace

EnumStats enumerate_frames(const SearchConfig& cfg,
                           const std::function<bool(const Frame&)>& sink) {
  return enumerate_impl(cfg, true, sink);
}

EnumStats enumerate_cores(const SearchConfig& cfg,
                          const std::function<bool(const Frame&)>& sink) {
  return enumerate_impl(cfg, false, sink);
}

std::vector<Algebra> distributive_lattices_meet_product(int max_size) {
  std::vector<Algebra> out;
  for (int np = 0; np <= 4; ++np) {
    for_each_poset(np, [&](const std::vector<Mask>& up) {
      // one representative poset per isomorphism class
      if (np > 0) {
        std::vector<int> perm(np);
        for (int i = 0; i < np; ++i) perm[i] = i;
        std::vector<Mask> enc;
        for (int i = 0; i < np; ++i) enc.push_back(up[i]);
        while (std::next_permutation(perm.begin(), perm.end())) {
          std::vector<int> inv(np);
          for (int i = 0; i < np; ++i) inv[perm[i]] = i;
          std::vector<Mask> enc2(np);
          for (int i = 0; i < np; ++i) enc2[i] = permute_mask(up[inv[i]], perm);
          if (enc2 < enc) return true;  // not canonical
        }
      }
      // lattice of downsets
      std::vector<Mask> downs;
      for (Mask s = 0; s <= full_mask(np); ++s) {
        bool ok = true;
        for_bits(s, [&](int u) {
          for (int v = 0; v < np; ++v)
            if (has(up[v], u) && !has(s, v)) ok = false;
        });
        if (ok) downs.push_back(s);
        if (np == 0) break;
      }
      int m = static_cast<int>(downs.size());
      if (m > max_size) return true;
      Algebra a;
      a.elems.resize(m);
      a.up.assign(m, 0);
      for (int i = 0; i < m; ++i) {
        a.elems[i] = "e" + std::to_string(i);
        for (int j = 0; j < m; ++j)
          if (subset(downs[i], downs[j])) a.up[i] |= bit(j);
      }
      std::map<Mask, int> index;
      for (int i = 0; i < m; ++i) index[downs[i]] = i;
      a.mul.assign(m, std::vector<int>(m, -1));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          a.mul[i][j] = index.at(downs[i] & downs[j]);
      a.eps = index.at(full_mask(np));
      a.box_tab.assign(1, std::vector<int>(m));
      a.dia_tab.assign(1, std::vector<int>(m));
      for (int i = 0; i < m; ++i) a.box_tab[0][i] = a.dia_tab[0][i] = i;
      finalize_algebra(a);
      out.push_back(std::move(a));
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const Algebra& x, const Algebra& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.up < y.up;
  });
  return out;
}

}  // namespace lambek
