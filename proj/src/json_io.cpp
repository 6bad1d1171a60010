#include "lambek/json_io.hpp"

#include <fstream>

namespace lambek {

namespace {

int index_of(const std::vector<std::string>& names, const std::string& name,
             const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw InputError(std::string("unknown ") + what + " '" + name + "'");
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string())
      throw InputError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

Frame frame_from_json(const Json& j) {
  Frame f;
  f.worlds = string_list(j.at("worlds"), "worlds");
  int n = static_cast<int>(f.worlds.size());
  if (n > kMaxElems) throw InputError("too many worlds (limit 64)");
  f.up.assign(n, 0);
  for (const auto& pair : j.at("leq")) {
    int u = index_of(f.worlds, pair.at(0), "world");
    int v = index_of(f.worlds, pair.at(1), "world");
    f.up[u] |= bit(v);
  }
  f.rel.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& triple : j.value("R", Json::array())) {
    int u = index_of(f.worlds, triple.at(0), "world");
    int v = index_of(f.worlds, triple.at(1), "world");
    int w = index_of(f.worlds, triple.at(2), "world");
    f.r(u, v) |= bit(w);
  }
  f.unit_set = 0;
  for (const auto& o : j.value("O", Json::array()))
    f.unit_set |= bit(index_of(f.worlds, o, "world"));
  if (j.contains("modalities"))
    f.modalities = string_list(j.at("modalities"), "modalities");
  f.box_rel.assign(f.modalities.size(), std::vector<Mask>(n, 0));
  f.dia_rel.assign(f.modalities.size(), std::vector<Mask>(n, 0));
  auto load_rel = [&](const char* key, std::vector<std::vector<Mask>>& out) {
    if (!j.contains(key)) return;
    for (const auto& [idx, pairs] : j.at(key).items()) {
      int m = index_of(f.modalities, idx, "modal index");
      for (const auto& pair : pairs) {
        int u = index_of(f.worlds, pair.at(0), "world");
        int v = index_of(f.worlds, pair.at(1), "world");
        out[m][u] |= bit(v);
      }
    }
  };
  load_rel("box", f.box_rel);
  load_rel("dia", f.dia_rel);
  return f;
}

Json frame_to_json(const Frame& f) {
  Json j;
  j["worlds"] = f.worlds;
  Json leq = Json::array();
  for (int u = 0; u < f.size(); ++u)
    for_bits(f.up[u], [&](int v) {
      leq.push_back({f.worlds[u], f.worlds[v]});
    });
  j["leq"] = leq;
  Json r = Json::array();
  for (int u = 0; u < f.size(); ++u)
    for (int v = 0; v < f.size(); ++v)
      for_bits(f.r(u, v), [&](int w) {
        r.push_back({f.worlds[u], f.worlds[v], f.worlds[w]});
      });
  j["R"] = r;
  Json o = Json::array();
  for_bits(f.unit_set, [&](int u) { o.push_back(f.worlds[u]); });
  j["O"] = o;
  j["modalities"] = f.modalities;
  Json box = Json::object(), dia = Json::object();
  for (std::size_t m = 0; m < f.modalities.size(); ++m) {
    Json bpairs = Json::array(), dpairs = Json::array();
    for (int u = 0; u < f.size(); ++u) {
      for_bits(f.box_rel[m][u], [&](int v) {
        bpairs.push_back({f.worlds[u], f.worlds[v]});
      });
      for_bits(f.dia_rel[m][u], [&](int v) {
        dpairs.push_back({f.worlds[u], f.worlds[v]});
      });
    }
    box[f.modalities[m]] = bpairs;
    dia[f.modalities[m]] = dpairs;
  }
  j["box"] = box;
  j["dia"] = dia;
  return j;
}

Model model_from_json(const Json& j) {
  Model m;
  m.frame = frame_from_json(j);
  if (j.contains("valuation"))
    for (const auto& [atom, worlds] : j.at("valuation").items()) {
      Mask v = 0;
      for (const auto& w : worlds)
        v |= bit(index_of(m.frame.worlds, w, "world"));
      m.valuation[atom] = v;
    }
  return m;
}

Json model_to_json(const Model& m) {
  Json j = frame_to_json(m.frame);
  Json val = Json::object();
  for (const auto& [atom, mask] : m.valuation) {
    Json worlds = Json::array();
    for_bits(mask, [&](int w) { worlds.push_back(m.frame.worlds[w]); });
    val[atom] = worlds;
  }
  j["valuation"] = val;
  return j;
}

Algebra algebra_from_json(const Json& j) {
  Algebra a;
  a.elems = string_list(j.at("elements"), "elements");
  int n = a.size();
  if (n > kMaxElems) throw InputError("too many elements (limit 64)");
  a.up.assign(n, 0);
  for (const auto& pair : j.at("leq")) {
    int x = index_of(a.elems, pair.at(0), "element");
    int y = index_of(a.elems, pair.at(1), "element");
    a.up[x] |= bit(y);
  }
  a.mul.assign(n, std::vector<int>(n, -1));
  for (const auto& triple : j.at("mul")) {
    int x = index_of(a.elems, triple.at(0), "element");
    int y = index_of(a.elems, triple.at(1), "element");
    int z = index_of(a.elems, triple.at(2), "element");
    a.mul[x][y] = z;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.mul[x][y] < 0)
        throw InputError("mul table incomplete at (" + a.elems[x] + "," +
                         a.elems[y] + ")");
  a.eps = index_of(a.elems, j.at("eps"), "element");
  if (j.contains("modalities"))
    a.modalities = string_list(j.at("modalities"), "modalities");
  a.box_tab.assign(a.modalities.size(), std::vector<int>(n, -1));
  a.dia_tab.assign(a.modalities.size(), std::vector<int>(n, -1));
  auto load_tab = [&](const char* key, std::vector<std::vector<int>>& out) {
    if (j.contains(key))
      for (const auto& [idx, pairs] : j.at(key).items()) {
        int m = index_of(a.modalities, idx, "modal index");
        for (const auto& pair : pairs) {
          int x = index_of(a.elems, pair.at(0), "element");
          int y = index_of(a.elems, pair.at(1), "element");
          out[m][x] = y;
        }
      }
    for (auto& tab : out)
      for (int x = 0; x < n; ++x)
        if (tab[x] < 0)
          throw InputError(std::string(key) + " table incomplete at " +
                           a.elems[x]);
  };
  if (!j.contains("box") && !j.contains("dia")) {
    // modal-free input: identity modalities
    for (int x = 0; x < n; ++x) a.box_tab[0][x] = a.dia_tab[0][x] = x;
  } else {
    load_tab("box", a.box_tab);
    load_tab("dia", a.dia_tab);
  }
  return a;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["elements"] = a.elems;
  Json leq = Json::array();
  for (int x = 0; x < a.size(); ++x)
    for_bits(a.up[x], [&](int y) { leq.push_back({a.elems[x], a.elems[y]}); });
  j["leq"] = leq;
  Json mul = Json::array();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      mul.push_back({a.elems[x], a.elems[y], a.elems[a.mul[x][y]]});
  j["mul"] = mul;
  j["eps"] = a.elems[a.eps];
  j["modalities"] = a.modalities;
  Json box = Json::object(), dia = Json::object();
  for (std::size_t m = 0; m < a.modalities.size(); ++m) {
    Json bpairs = Json::array(), dpairs = Json::array();
    for (int x = 0; x < a.size(); ++x) {
      bpairs.push_back({a.elems[x], a.elems[a.box_tab[m][x]]});
      dpairs.push_back({a.elems[x], a.elems[a.dia_tab[m][x]]});
    }
    box[a.modalities[m]] = bpairs;
    dia[a.modalities[m]] = dpairs;
  }
  j["box"] = box;
  j["dia"] = dia;
  if (!a.ldiv_tab.empty()) {
    Json ld = Json::array(), rd = Json::array();
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) {
        ld.push_back({a.elems[x], a.elems[y], a.elems[a.ldiv_tab[x][y]]});
        rd.push_back({a.elems[x], a.elems[y], a.elems[a.rdiv_tab[x][y]]});
      }
    j["ldiv"] = ld;
    j["rdiv"] = rd;
  }
  return j;
}

Signature signature_from_json(const Json& j) {
  Signature sig;
  sig.indices = string_list(j.at("indices"), "indices");
  int n = sig.size();
  sig.preceq.assign(n, 0);
  for (int i = 0; i < n; ++i) sig.preceq[i] = bit(i);  // reflexive closure
  for (const auto& pair : j.value("preceq", Json::array())) {
    int x = index_of(sig.indices, pair.at(0), "index");
    int y = index_of(sig.indices, pair.at(1), "index");
    sig.preceq[x] |= bit(y);
  }
  // transitive closure
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < n; ++i)
      for_bits(sig.preceq[i], [&](int k) {
        Mask add = sig.preceq[k] & ~sig.preceq[i];
        if (add) {
          sig.preceq[i] |= add;
          grew = true;
        }
      });
  }
  for (const auto& w : j.value("W", Json::array()))
    sig.W |= bit(index_of(sig.indices, w, "index"));
  for (const auto& c : j.value("C", Json::array()))
    sig.C |= bit(index_of(sig.indices, c, "index"));
  for (const auto& e : j.value("E", Json::array()))
    sig.E |= bit(index_of(sig.indices, e, "index"));
  return sig;
}

Json signature_to_json(const Signature& sig) {
  Json j;
  j["indices"] = sig.indices;
  Json preceq = Json::array();
  for (int i = 0; i < sig.size(); ++i)
    for_bits(sig.preceq[i], [&](int k) {
      preceq.push_back({sig.indices[i], sig.indices[k]});
    });
  j["preceq"] = preceq;
  auto names = [&](Mask m) {
    Json out = Json::array();
    for_bits(m, [&](int i) { out.push_back(sig.indices[i]); });
    return out;
  };
  j["W"] = names(sig.W);
  j["C"] = names(sig.C);
  j["E"] = names(sig.E);
  return j;
}

Json report_to_json(const CheckReport& rep) {
  Json j;
  j["passed"] = rep.passed();
  Json v = Json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"condition", viol.condition}, {"witness", viol.witness}});
  j["violations"] = v;
  j["notes"] = rep.notes;
  return j;
}

Json sequent_to_json(const Sequent& s) {
  return {{"lhs", print_formula(s.lhs)},
          {"rhs", print_formula(s.rhs)},
          {"text", print_sequent(s)}};
}

Json completion_to_json(const Completion& c) {
  Json j;
  Algebra ext = extension_algebra(c);
  j["extension"] = algebra_to_json(ext);
  Json embed = Json::object();
  for (int x = 0; x < c.base.size(); ++x)
    embed[c.base.elems[x]] = ext.elems[c.embed[x]];
  j["embed"] = embed;
  CheckReport rep = certify_completion(c);
  rep.merge(check_density(c));
  rep.merge(check_compactness(c));
  j["report"] = report_to_json(rep);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace lambek
