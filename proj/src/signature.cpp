#include "lambek/signature.hpp"

#include <algorithm>

namespace lambek {

int Signature::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (indices[i] == name) return i;
  return -1;
}

Signature Signature::monomodal() {
  Signature s;
  s.indices = {kDefaultIndex};
  s.preceq = {bit(0)};
  return s;
}

CheckReport validate_signature(const Signature& sig) {
  CheckReport rep;
  int n = sig.size();
  for (int i = 0; i < n; ++i)
    if (!sig.prec(i, i)) rep.fail("preceq-reflexive", {sig.indices[i]});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sig.prec(i, j) && !subset(sig.preceq[j], sig.preceq[i]))
        for (int k = 0; k < n; ++k)
          if (sig.prec(j, k) && !sig.prec(i, k))
            rep.fail("preceq-transitive",
                     {sig.indices[i], sig.indices[j], sig.indices[k]});
  auto up_closed = [&](Mask set, const char* which) {
    for (int i = 0; i < n; ++i)
      if (has(set, i))
        for (int j = 0; j < n; ++j)
          if (sig.prec(i, j) && !has(set, j))
            rep.fail(std::string(which) + "-not-upward-closed",
                     {sig.indices[i], sig.indices[j]});
  };
  up_closed(sig.W, "W");
  up_closed(sig.C, "C");
  up_closed(sig.E, "E");
  Mask wc = sig.W & sig.C;
  if (!subset(wc, sig.E))
    for_bits(wc & ~sig.E, [&](int i) {
      rep.fail("W-and-C-not-in-E", {sig.indices[i]});
    });
  return rep;
}

namespace {

const FormulaPtr P = atom("p");
const FormulaPtr Q = atom("q");
const FormulaPtr R_ = atom("r");

}  // namespace

std::vector<Schema> base_axioms(const Signature& sig) {
  std::vector<Schema> out;
  out.push_back({"identity", {{P, P}}});
  out.push_back({"bot", {{bot(), P}}});
  out.push_back({"top", {{P, top()}}});
  out.push_back({"lattice",
                 {{P, disj(P, Q)},
                  {Q, disj(P, Q)},
                  {conj(P, Q), P},
                  {conj(P, Q), Q}}});
  out.push_back(
      {"distributivity", {{conj(P, disj(Q, R_)), disj(conj(P, Q), conj(P, R_))}}});
  out.push_back({"associativity",
                 {{mul(mul(P, Q), R_), mul(P, mul(Q, R_))},
                  {mul(P, mul(Q, R_)), mul(mul(P, Q), R_)}}});
  out.push_back({"unit",
                 {{mul(P, unit()), P},
                  {P, mul(P, unit())},
                  {mul(unit(), P), P},
                  {P, mul(unit(), P)}}});
  Schema dia_or{"dia-or", {}}, dia_bot{"dia-bot", {}}, box_and{"box-and", {}},
      box_top{"box-top", {}}, box_mul{"box-mul", {}};
  for (const std::string& s : sig.indices) {
    dia_or.sequents.push_back({dia(disj(P, Q), s), disj(dia(P, s), dia(Q, s))});
    dia_bot.sequents.push_back({dia(bot(), s), bot()});
    box_and.sequents.push_back({conj(box(P, s), box(Q, s)), box(conj(P, Q), s)});
    box_top.sequents.push_back({top(), box(top(), s)});
    box_mul.sequents.push_back({mul(box(P, s), box(Q, s)), box(mul(P, Q), s)});
  }
  out.push_back(std::move(dia_or));
  out.push_back(std::move(dia_bot));
  out.push_back(std::move(box_and));
  out.push_back(std::move(box_top));
  out.push_back(std::move(box_mul));
  return out;
}

Schema structural_axioms(StructuralAxiom which, const std::string& s) {
  auto bp = box(P, s);
  switch (which) {
    case StructuralAxiom::Exch:
      return {"exch", {{mul(bp, Q), mul(Q, bp)}, {mul(Q, bp), mul(bp, Q)}}};
    case StructuralAxiom::Contr:
      return {"contr", {{bp, mul(bp, bp)}}};
    case StructuralAxiom::WeakContrL:
      return {"weak-contr-l", {{mul(bp, Q), mul(mul(bp, Q), bp)}}};
    case StructuralAxiom::WeakContrR:
      return {"weak-contr-r", {{mul(Q, bp), mul(mul(bp, Q), bp)}}};
    case StructuralAxiom::Weak:
      return {"weak", {{bp, unit()}}};
    case StructuralAxiom::Mingle:
      return {"mingle",
              {{box(conj(P, Q), s), mul(bp, box(Q, s))},
               {mul(bp, box(Q, s)), box(conj(P, Q), s)}}};
    case StructuralAxiom::K4Resid:
      return {"k4resid",
              {{box(ldiv(P, Q), s), ldiv(dia(P, s), dia(Q, s))},
               {box(rdiv(P, Q), s), rdiv(dia(P, s), dia(Q, s))}}};
  }
  throw InputError("unknown structural axiom");
}

Schema structural_axioms(const std::string& name, const std::string& index) {
  static const std::vector<std::pair<std::string, StructuralAxiom>> table = {
      {"exch", StructuralAxiom::Exch},
      {"contr", StructuralAxiom::Contr},
      {"weak-contr-l", StructuralAxiom::WeakContrL},
      {"weak-contr-r", StructuralAxiom::WeakContrR},
      {"weak", StructuralAxiom::Weak},
      {"mingle", StructuralAxiom::Mingle},
      {"k4resid", StructuralAxiom::K4Resid},
  };
  for (const auto& [n, w] : table)
    if (n == name) return structural_axioms(w, index);
  throw InputError("unknown structural axiom name: " + name);
}

std::vector<Schema> all_structural_axioms(const std::string& index) {
  std::vector<Schema> out;
  for (auto w : {StructuralAxiom::Exch, StructuralAxiom::Contr,
                 StructuralAxiom::WeakContrL, StructuralAxiom::WeakContrR,
                 StructuralAxiom::Weak, StructuralAxiom::Mingle,
                 StructuralAxiom::K4Resid})
    out.push_back(structural_axioms(w, index));
  return out;
}

std::vector<Sequent> subexp_axioms(const Signature& sig) {
  CheckReport rep = validate_signature(sig);
  if (!rep.passed()) {
    std::string msg = "invalid signature:";
    for (const auto& v : rep.violations) {
      msg += " " + v.condition + "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        msg += (i ? "," : "") + v.witness[i];
      msg += ")";
    }
    throw InputError(msg);
  }
  std::vector<Sequent> out;
  auto add = [&](Sequent s) {
    for (const Sequent& t : out)
      if (equal(t, s)) return;
    out.push_back(std::move(s));
  };
  int n = sig.size();
  // Promotion: box_{s1} p * box_{s2} q |- box_s (p * q) whenever s ⪯ s1, s2.
  for (int s = 0; s < n; ++s)
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2)
        if (sig.prec(s, s1) && sig.prec(s, s2))
          add({mul(box(P, sig.indices[s1]), box(Q, sig.indices[s2])),
               box(mul(P, Q), sig.indices[s])});
  for (int i = 0; i < n; ++i) {
    const std::string& s = sig.indices[i];
    auto bp = box(P, s);
    add({bp, P});
    add({bp, box(bp, s)});
    if (has(sig.C, i)) {
      add({mul(bp, Q), mul(mul(bp, Q), bp)});
      add({mul(Q, bp), mul(mul(bp, Q), bp)});
    }
    if (has(sig.E, i)) {
      add({mul(bp, Q), mul(P, box(Q, s))});
      add({mul(P, box(Q, s)), mul(bp, Q)});
    }
    if (has(sig.W, i)) add({bp, unit()});
    // Normality pairs for both modalities.
    add({box(conj(P, Q), s), conj(bp, box(Q, s))});
    add({conj(bp, box(Q, s)), box(conj(P, Q), s)});
    add({box(top(), s), top()});
    add({top(), box(top(), s)});
    add({dia(disj(P, Q), s), disj(dia(P, s), dia(Q, s))});
    add({disj(dia(P, s), dia(Q, s)), dia(disj(P, Q), s)});
    add({dia(bot(), s), bot()});
    add({bot(), dia(bot(), s)});
    add({P, dia(P, s)});
    add({dia(dia(P, s), s), dia(P, s)});
  }
  return out;
}

}  // namespace lambek
