#include <doctest.h>

#include <random>

#include "lambek/parser.hpp"
#include "lambek/signature.hpp"

using namespace lambek;

namespace {

FormulaPtr random_formula(std::mt19937_64& rng, int depth,
                          const std::vector<std::string>& indices) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 10);
  std::uniform_int_distribution<int> atom_pick(0, 3);
  std::uniform_int_distribution<int> idx_pick(
      0, static_cast<int>(indices.size()) - 1);
  static const char* names[] = {"p", "q", "r", "zed_1"};
  switch (pick(rng)) {
    case 0:
    case 1:
      return atom(names[atom_pick(rng)]);
    case 2:
      return top();
    case 3:
      return bot();
    case 4:
      return unit();
    case 5:
      return mul(random_formula(rng, depth - 1, indices),
                 random_formula(rng, depth - 1, indices));
    case 6:
      return ldiv(random_formula(rng, depth - 1, indices),
                  random_formula(rng, depth - 1, indices));
    case 7:
      return rdiv(random_formula(rng, depth - 1, indices),
                  random_formula(rng, depth - 1, indices));
    case 8:
      return conj(random_formula(rng, depth - 1, indices),
                  random_formula(rng, depth - 1, indices));
    case 9:
      return disj(random_formula(rng, depth - 1, indices),
                  random_formula(rng, depth - 1, indices));
    default:
      return (rng() & 1) ? box(random_formula(rng, depth - 1, indices),
                               indices[idx_pick(rng)])
                         : dia(random_formula(rng, depth - 1, indices),
                               indices[idx_pick(rng)]);
  }
}

bool contains_sequent(const std::vector<Sequent>& list, const Sequent& s) {
  for (const auto& t : list)
    if (equal(t, s)) return true;
  return false;
}

std::vector<Sequent> flatten(const std::vector<Schema>& schemata) {
  std::vector<Sequent> out;
  for (const auto& sch : schemata)
    for (const auto& s : sch.sequents) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("parser follows the declared precedence") {
  FormulaPtr f = parse_formula("box p * box q");
  CHECK(equal(f, mul(box(atom("p")), box(atom("q")))));

  CHECK(equal(parse_formula("1 * (p | bot)"),
              mul(unit(), disj(atom("p"), bot()))));

  // unary binds tightest, then *, then residuals, then &, then |
  CHECK(equal(parse_formula("p * q \\ r & s | t"),
              disj(conj(ldiv(mul(atom("p"), atom("q")), atom("r")), atom("s")),
                   atom("t"))));
  CHECK(equal(parse_formula("box[0] p"), box(atom("p"))));
  CHECK(equal(parse_formula("dia[s] p"), dia(atom("p"), "s")));
  CHECK(equal(parse_formula("box box p"), box(box(atom("p")))));
}

TEST_CASE("residual chains require parentheses") {
  CHECK_THROWS_AS(parse_formula("p \\ q \\ r"), ParseError);
  CHECK_THROWS_AS(parse_formula("p / q \\ r"), ParseError);
  CHECK_NOTHROW(parse_formula("p \\ (q \\ r)"));
  CHECK_NOTHROW(parse_formula("(p / q) / r"));
}

TEST_CASE("syntax errors carry position and expectations") {
  try {
    parse_formula("p * ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
    CHECK(!e.expected.empty());
  }
  CHECK_THROWS_AS(parse_formula("box [p"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("top top"), ParseError);
}

TEST_CASE("printing is minimal and round-trips") {
  CHECK(print_formula(box(atom("p"))) == "box p");
  CHECK(print_formula(mul(mul(atom("p"), atom("q")), atom("r"))) ==
        "p * q * r");
  CHECK(print_formula(mul(atom("p"), mul(atom("q"), atom("r")))) ==
        "p * (q * r)");
  CHECK(print_formula(ldiv(atom("p"), rdiv(atom("q"), atom("r")))) ==
        "p \\ (q / r)");
  CHECK(print_formula(box(mul(atom("p"), atom("q")))) == "box (p * q)");
  CHECK(print_formula(dia(atom("p"), "s")) == "dia[s] p");
  CHECK(print_sequent({unit(), top()}) == "1 |- top");
}

TEST_CASE("parse after print is the identity on random formulas") {
  std::mt19937_64 rng(20240817);
  std::vector<std::string> indices = {"0", "s", "t"};
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, 5, indices);
    CAPTURE(print_formula(f));
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("substitution") {
  FormulaPtr f = conj(atom("p"), atom("q"));
  CHECK(equal(substitute(f, "p", dia(atom("r"))),
              conj(dia(atom("r")), atom("q"))));
  CHECK(equal(substitute(atom("p"), "q", atom("r")), atom("p")));
  CHECK(equal(substitute(mul(box(atom("p")), atom("p")), "p", unit()),
              mul(box(unit()), unit())));
  // substituting an atom by itself changes nothing, on random formulas
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr g = random_formula(rng, 4, {"0"});
    CHECK(equal(substitute(g, "p", atom("p")), g));
  }
  // simultaneous substitution does not chase images
  FormulaPtr h = substitute_all(conj(atom("p"), atom("q")),
                                {{"p", atom("q")}, {"q", atom("r")}});
  CHECK(equal(h, conj(atom("q"), atom("r"))));
}

TEST_CASE("base axioms of the monomodal signature") {
  auto schemata = base_axioms(Signature::monomodal());
  CHECK(schemata.size() == 12);
  auto all = flatten(schemata);
  CHECK(all.size() == 19);
  CHECK(contains_sequent(all, parse_sequent("p & (q | r) |- p & q | p & r")));
  CHECK(contains_sequent(all, parse_sequent("box p * box q |- box (p * q)")));
  CHECK(contains_sequent(all, parse_sequent("dia (p | q) |- dia p | dia q")));
  CHECK(contains_sequent(all, parse_sequent("top |- box top")));
  CHECK(contains_sequent(all, parse_sequent("p * 1 |- p")));
  CHECK(contains_sequent(all, parse_sequent("p |- 1 * p")));
}

TEST_CASE("base axioms instantiate the modal schemata per index") {
  Signature sig;
  sig.indices = {"s", "t"};
  sig.preceq = {bit(0), bit(1)};
  auto all = flatten(base_axioms(sig));
  CHECK(contains_sequent(all, parse_sequent("dia[s] bot |- bot")));
  CHECK(contains_sequent(all, parse_sequent("dia[t] bot |- bot")));
  CHECK(contains_sequent(all,
                         parse_sequent("box[t] p * box[t] q |- box[t] (p * q)")));
}

TEST_CASE("structural axiom schemata") {
  auto exch = structural_axioms(StructuralAxiom::Exch);
  CHECK(exch.sequents.size() == 2);
  CHECK(contains_sequent(exch.sequents, parse_sequent("box p * q |- q * box p")));
  CHECK(contains_sequent(exch.sequents, parse_sequent("q * box p |- box p * q")));

  auto weak = structural_axioms("weak");
  CHECK(weak.sequents.size() == 1);
  CHECK(equal(weak.sequents[0], parse_sequent("box p |- 1")));

  auto k4 = structural_axioms(StructuralAxiom::K4Resid);
  CHECK(contains_sequent(k4.sequents,
                         parse_sequent("box (p \\ q) |- dia p \\ dia q")));
  CHECK(contains_sequent(k4.sequents,
                         parse_sequent("box (p / q) |- dia p / dia q")));

  auto mingle = structural_axioms(StructuralAxiom::Mingle);
  CHECK(mingle.sequents.size() == 2);
  CHECK(contains_sequent(mingle.sequents,
                         parse_sequent("box (p & q) |- box p * box q")));

  auto contr = structural_axioms(StructuralAxiom::Contr);
  CHECK(equal(contr.sequents[0], parse_sequent("box p |- box p * box p")));

  CHECK(structural_axioms(StructuralAxiom::WeakContrL).sequents.size() == 1);
  CHECK(contains_sequent(
      structural_axioms("weak-contr-r").sequents,
      parse_sequent("q * box p |- box p * q * box p")));

  CHECK_THROWS_AS(structural_axioms("frobnicate"), InputError);
  CHECK(all_structural_axioms().size() == 7);
}

TEST_CASE("signature validation") {
  Signature sig;
  sig.indices = {"s", "t"};
  sig.preceq = {bit(0) | bit(1), bit(1)};  // s before t
  sig.W = bit(0);
  auto rep = validate_signature(sig);
  REQUIRE(!rep.passed());
  CHECK(rep.violations[0].condition == "W-not-upward-closed");
  CHECK(rep.violations[0].witness ==
        std::vector<std::string>{"s", "t"});

  Signature bad;
  bad.indices = {"s"};
  bad.preceq = {bit(0)};
  bad.W = bad.C = bit(0);
  auto rep2 = validate_signature(bad);
  REQUIRE(!rep2.passed());
  CHECK(rep2.violations[0].condition == "W-and-C-not-in-E");
  CHECK(rep2.violations[0].witness == std::vector<std::string>{"s"});

  Signature ok;
  ok.indices = {"s"};
  ok.preceq = {bit(0)};
  CHECK(validate_signature(ok).passed());

  Signature irref;
  irref.indices = {"s"};
  irref.preceq = {0};
  CHECK(!validate_signature(irref).passed());
}

TEST_CASE("subexponential axiom generation") {
  Signature w;
  w.indices = {"s"};
  w.preceq = {bit(0)};
  w.W = bit(0);
  auto axs = subexp_axioms(w);
  CHECK(contains_sequent(axs, parse_sequent("box[s] p |- 1")));

  Signature noc;
  noc.indices = {"s"};
  noc.preceq = {bit(0)};
  auto axs2 = subexp_axioms(noc);
  CHECK(!contains_sequent(axs2,
                          parse_sequent("box[s] p * q |- box[s] p * q * box[s] p")));

  // promotion instances for a two-element chain of indices: the lower index
  // admits all four source pairs, the upper only itself
  Signature two;
  two.indices = {"s", "t"};
  two.preceq = {bit(0) | bit(1), bit(1)};
  auto axs3 = subexp_axioms(two);
  int promotions = 0;
  for (const auto& s : axs3)
    if (s.lhs->kind == Conn::Mul && s.lhs->left->kind == Conn::Box &&
        s.lhs->right->kind == Conn::Box && s.rhs->kind == Conn::Box &&
        s.rhs->left->kind == Conn::Mul)
      ++promotions;
  CHECK(promotions == 5);
  CHECK(contains_sequent(
      axs3, parse_sequent("box[s] p * box[t] q |- box[s] (p * q)")));
  CHECK(!contains_sequent(
      axs3, parse_sequent("box[s] p * box[s] q |- box[t] (p * q)")));

  Signature invalid;
  invalid.indices = {"s"};
  invalid.preceq = {bit(0)};
  invalid.W = invalid.C = bit(0);
  CHECK_THROWS_AS(subexp_axioms(invalid), InputError);
}

TEST_CASE("full subexponential signature covers the structural axioms") {
  Signature sig;
  sig.indices = {"s"};
  sig.preceq = {bit(0)};
  sig.W = sig.C = sig.E = bit(0);
  auto axs = subexp_axioms(sig);
  CHECK(contains_sequent(axs, parse_sequent("box[s] p |- 1")));
  CHECK(contains_sequent(
      axs, parse_sequent("box[s] p * q |- box[s] p * q * box[s] p")));
  CHECK(contains_sequent(
      axs, parse_sequent("q * box[s] p |- box[s] p * q * box[s] p")));
  CHECK(contains_sequent(axs, parse_sequent("box[s] p * q |- p * box[s] q")));
  CHECK(contains_sequent(axs, parse_sequent("p * box[s] q |- box[s] p * q")));
}
