#include <doctest.h>

#include "lambek/inequation.hpp"
#include "lambek/json_io.hpp"
#include "lambek/parser.hpp"

using namespace lambek;

namespace {

// Chain 0 < 1 < ... < k-1 with meet as product, top as unit, identity
// modalities.
Algebra chain(int k) {
  Algebra a;
  for (int i = 0; i < k; ++i) a.elems.push_back("e" + std::to_string(i));
  a.up.assign(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) a.up[i] |= bit(j);
  a.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.mul[i][j] = std::min(i, j);
  a.eps = k - 1;
  a.box_tab.assign(1, std::vector<int>(k));
  a.dia_tab.assign(1, std::vector<int>(k));
  for (int i = 0; i < k; ++i) a.box_tab[0][i] = a.dia_tab[0][i] = i;
  return a;
}

// 0 < a,b < 1 with meet product.
Algebra square() {
  Algebra a;
  a.elems = {"0", "a", "b", "1"};
  a.up = {full_mask(4), bit(1) | bit(3), bit(2) | bit(3), bit(3)};
  auto meet = [](int x, int y) {
    if (x == y) return x;
    if (x == 0 || y == 0) return 0;
    if (x == 3) return y;
    if (y == 3) return x;
    return 0;  // a and b
  };
  a.mul.assign(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) a.mul[x][y] = meet(x, y);
  a.eps = 3;
  a.box_tab.assign(1, {0, 1, 2, 3});
  a.dia_tab.assign(1, {0, 1, 2, 3});
  return a;
}

// Diamond with three incomparable middles: not distributive.
Algebra m3() {
  Algebra a;
  a.elems = {"0", "x", "y", "z", "1"};
  a.up = {full_mask(5), bit(1) | bit(4), bit(2) | bit(4), bit(3) | bit(4),
          bit(4)};
  a.mul.assign(5, std::vector<int>(5));
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q) {
      int m = (p == q) ? p : (p == 4 ? q : (q == 4 ? p : 0));
      a.mul[p][q] = m;
    }
  a.eps = 4;
  a.box_tab.assign(1, {0, 1, 2, 3, 4});
  a.dia_tab.assign(1, {0, 1, 2, 3, 4});
  return a;
}

// brute-force oracles

std::vector<int> ji_oracle(const Algebra& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size(); ++x) {
    if (a.down(x) == bit(x)) continue;  // bottom
    bool irreducible = true;
    for (int b = 0; b < a.size(); ++b)
      for (int c = 0; c < a.size(); ++c)
        if (b != x && c != x && a.leq(b, x) && a.leq(c, x) &&
            a.join_tab[b][c] == x)
          irreducible = false;
    if (irreducible) out.push_back(x);
  }
  return out;
}

std::vector<Mask> filters_oracle(const Algebra& a) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(a.size()); ++s)
    if (is_filter(a, s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("lattice checks") {
  Algebra two = chain(2);
  CHECK(check_lattice(two).passed());
  CHECK(check_lattice(square()).passed());

  auto rep = check_lattice(m3());
  REQUIRE(!rep.passed());
  CHECK(rep.violations[0].condition == "not-distributive");
  CHECK(rep.violations[0].witness.size() == 3);

  Algebra broken = chain(2);
  broken.up[1] = 0;  // not reflexive
  CHECK(!check_lattice(broken).passed());
}

TEST_CASE("residual derivation on the two-chain") {
  Algebra a = chain(2);
  finalize_algebra(a);
  // a \ c is top when a <= c, else c
  CHECK(a.ldiv_tab[1][0] == 0);
  CHECK(a.ldiv_tab[0][0] == 1);
  CHECK(a.ldiv_tab[0][1] == 1);
  CHECK(a.ldiv_tab[1][1] == 1);
  // eight-case brute force of the three-way equivalence
  for (int x = 0; x < 2; ++x)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        CHECK(a.leq(b, a.ldiv_tab[x][c]) == a.leq(a.mul[x][b], c));
        CHECK(a.leq(a.mul[x][b], c) == a.leq(x, a.rdiv_tab[c][b]));
      }
}

TEST_CASE("non-monotone product is rejected with a witness") {
  Algebra a = chain(2);
  a.mul[1][1] = 0;
  a.mul[0][0] = 1;  // order-reversing
  CHECK_THROWS_WITH_AS(derive_residuals(a),
                       doctest::Contains("mul not monotone"), AlgebraError);
}

TEST_CASE("modal law checks") {
  Algebra a = square();
  finalize_algebra(a);
  CHECK(check_rdma(a).passed());

  SUBCASE("a box table that is not a meet homomorphism is reported") {
    Algebra b = square();
    b.box_tab[0] = {0, 3, 3, 3};  // box(a & b) = 0 but box a & box b = 1
    finalize_algebra(b);
    auto rep = check_rdma(b);
    REQUIRE(!rep.passed());
    CHECK(rep.violations[0].condition == "box-meet");
  }
  SUBCASE("two-chain with identity modalities passes") {
    Algebra c = chain(2);
    finalize_algebra(c);
    CHECK(check_rdma(c).passed());
  }
}

TEST_CASE("irreducibles against the direct definition") {
  for (Algebra a : {chain(2), chain(3), square()}) {
    finalize_algebra(a);
    CHECK(join_irreducibles(a) == ji_oracle(a));
  }
  Algebra sq = square();
  finalize_algebra(sq);
  CHECK(join_irreducibles(sq) == std::vector<int>{1, 2});
  CHECK(meet_irreducibles(sq) == std::vector<int>{1, 2});

  Algebra three = chain(3);
  finalize_algebra(three);
  CHECK(join_irreducibles(three) == std::vector<int>{1, 2});
  CHECK(meet_irreducibles(three) == std::vector<int>{0, 1});

  Algebra two = chain(2);
  finalize_algebra(two);
  CHECK(join_irreducibles(two) == std::vector<int>{1});
  CHECK(meet_irreducibles(two) == std::vector<int>{0});
}

TEST_CASE("kappa is the join of the complement of the upset") {
  Algebra two = chain(2);
  finalize_algebra(two);
  CHECK(kappa(two, 1) == 0);
  CHECK_THROWS_AS(kappa(two, 0), AlgebraError);  // bottom is not irreducible

  Algebra sq = square();
  finalize_algebra(sq);
  CHECK(kappa(sq, 1) == 2);  // kappa(a) = b
  CHECK(kappa(sq, 2) == 1);

  Algebra three = chain(3);
  finalize_algebra(three);
  CHECK(kappa(three, 1) == 0);
  CHECK(kappa(three, 2) == 1);

  for (Algebra a : {chain(2), chain(3), chain(4), square()}) {
    finalize_algebra(a);
    CHECK(kappa_report(a).passed());
  }
}

TEST_CASE("filters and primes") {
  Algebra three = chain(3);
  finalize_algebra(three);
  auto fs = filters(three);
  REQUIRE(fs.size() == 3);
  // oracle: subset enumeration finds exactly the principal upsets
  std::vector<Mask> masks;
  for (const auto& f : fs) masks.push_back(f.elements);
  std::sort(masks.begin(), masks.end());
  auto oracle = filters_oracle(three);
  std::sort(oracle.begin(), oracle.end());
  CHECK(masks == oracle);

  auto primes = prime_filters(three);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0].elements == three.up[1]);
  CHECK(primes[1].elements == three.up[2]);

  Algebra sq = square();
  finalize_algebra(sq);
  auto sq_primes = prime_filters(sq);
  REQUIRE(sq_primes.size() == 2);
  CHECK(sq_primes[0].elements == sq.up[1]);  // up(a)
  CHECK(sq_primes[1].elements == sq.up[2]);  // up(b)
  CHECK(filters_oracle(sq).size() == filters(sq).size());

  Algebra two = chain(2);
  finalize_algebra(two);
  auto two_primes = prime_filters(two);
  REQUIRE(two_primes.size() == 1);
  CHECK(two_primes[0].elements == bit(1));
}

TEST_CASE("filter products") {
  Algebra three = chain(3);
  finalize_algebra(three);
  Filter up_eps{three.up[three.eps]};
  for (const Filter& y : filters(three))
    CHECK(filter_product(three, up_eps, y).elements == y.elements);
  Filter up_m{three.up[1]};
  CHECK(filter_product(three, up_m, up_m).elements == three.up[1]);
}

TEST_CASE("filter lemma holds on the fixtures") {
  for (Algebra a : {chain(2), chain(3), chain(4), square()}) {
    finalize_algebra(a);
    CHECK(check_filter_lemma(a).passed());
  }
}

TEST_CASE("term evaluation") {
  Algebra sq = square();
  finalize_algebra(sq);
  std::map<std::string, int> env{{"p", 1}, {"q", 2}};
  CHECK(eval_term(sq, env, *parse_formula("1 * p")) == 1);
  CHECK(eval_term(sq, env, *parse_formula("p & top")) == 1);
  CHECK(eval_term(sq, env, *parse_formula("p | q")) == 3);
  CHECK(eval_term(sq, env, *parse_formula("p & q")) == 0);
  CHECK(eval_term(sq, env, *parse_formula("box p")) == 1);
  CHECK_THROWS_AS(eval_term(sq, env, *parse_formula("zz")), InputError);
  CHECK_THROWS_AS(eval_term(sq, env, *parse_formula("box[s] p")), InputError);
}

TEST_CASE("inequation checking") {
  Algebra sq = square();
  finalize_algebra(sq);
  CHECK(check_inequation(sq, parse_sequent("p |- p")).holds);
  CHECK(check_inequation(sq, parse_sequent("box p * box q |- box (p * q)"))
            .holds);
  CHECK(check_inequation(sq, parse_sequent("p * q |- q * p")).holds);

  auto res = check_inequation(sq, parse_sequent("p |- q"));
  REQUIRE(!res.holds);
  // p scans most significant: p=0 holds under every q, so the least failure
  // is p=a against q=0
  CHECK(res.counterassignment.at("p") == "a");
  CHECK(res.counterassignment.at("q") == "0");

  SUBCASE("serial and parallel agree, verdict and witness") {
    for (const char* s : {"p |- q", "p & q |- p * q", "p |- box dia p",
                          "dia (p | q) |- dia p | dia q"}) {
      auto a = check_inequation_serial(sq, parse_sequent(s));
      auto b = check_inequation(sq, parse_sequent(s));
      CHECK(a.holds == b.holds);
      CHECK(a.counterassignment == b.counterassignment);
    }
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(
        check_inequation(sq, parse_sequent("p & q & r & s1 |- p"), 100),
        BudgetError);
  }
}

TEST_CASE("umbrella validation and json round trip") {
  Algebra sq = square();
  CHECK(validate_algebra(sq).passed());
  CHECK(!validate_algebra(m3()).passed());

  finalize_algebra(sq);
  Json j = algebra_to_json(sq);
  CHECK(j.contains("ldiv"));
  Algebra back = algebra_from_json(j);
  finalize_algebra(back);
  CHECK(back.elems == sq.elems);
  CHECK(back.mul == sq.mul);
  CHECK(back.ldiv_tab == sq.ldiv_tab);
  CHECK(back.rdiv_tab == sq.rdiv_tab);

  Json missing = j;
  missing["mul"] = Json::array();
  CHECK_THROWS_AS(algebra_from_json(missing), InputError);
}
