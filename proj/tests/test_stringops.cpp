#include <doctest.h>

#include "stringhom/stringops.hpp"

using namespace stringhom;

TEST_CASE("grading dictionary round trips") {
  for (int d : {2, 3, 4, 6})
    for (int p = -5; p <= 12; ++p) {
      CHECK(Grading::lm_from_hh(Grading::hh_from_lm(p, d), d) == p);
      CHECK(Grading::string_from_cyclic(Grading::cyclic_from_string(p)) == p);
      CHECK(Grading::string_from_lie(Grading::lie_from_string(p, d), d) == p);
      CHECK(Grading::hh_dual_from_lm(p) == Grading::hh_from_lm(p, d) - d);
    }
  CHECK(Grading::lie_from_string(4, 6) == 0);
}

TEST_CASE("builtin spaces") {
  CHECK(builtin_space("s2").d == 2);
  CHECK(builtin_space("cp2").d == 4);
  CHECK(builtin_space("cp3").d == 6);
  CHECK(builtin_space("s5").d == 5);
  auto s = builtin_space("s3xs3");
  CHECK(s.d == 6);
  CHECK(s.spec.basis.label(1) == "a");
  CHECK(s.spec.basis.label(3) == "ab");
  CHECK_THROWS_AS(builtin_space("torus"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_space("s"), std::invalid_argument);
}

TEST_CASE("loop homology of S^2 and S^3") {
  for (const auto& r : loop_homology(builtin_space("s2"), 0, 8)) {
    CHECK(r.rank == 1);
    CHECK(r.dual_rank == 1);
    CHECK(r.stabilized);
  }
  std::vector<std::size_t> s3;
  for (const auto& r : loop_homology(builtin_space("s3"), 0, 8)) {
    CHECK(r.rank == r.dual_rank);
    s3.push_back(r.rank);
  }
  CHECK(s3 == std::vector<std::size_t>{1, 0, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("loop unit sits in degree d and acts as the identity") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    auto s = builtin_space(name);
    LoopClass u = loop_unit(s);
    CHECK(u.lm_degree == s.d);
    for (int p = 0; p <= s.d + 2; ++p)
      for (const auto& x : loop_classes(s, p)) {
        LoopClass ux = loop_product(s, u, x);
        CHECK(ux.lm_degree == x.lm_degree);
        CHECK(loop_equal(s, ux, x));
        CHECK(loop_is_zero(s, loop_bracket(s, u, x)));
      }
  }
}

TEST_CASE("loop operations honour the degree contracts and commute") {
  auto s = builtin_space("s3xs3");
  for (int p = 2; p <= 9; ++p)
    for (int q = p; q <= 9; ++q)
      for (const auto& x : loop_classes(s, p))
        for (const auto& y : loop_classes(s, q)) {
          LoopClass xy = loop_product(s, x, y), yx = loop_product(s, y, x);
          CHECK(xy.lm_degree == p + q - s.d);
          CHECK(loop_bracket(s, x, y).lm_degree == p + q - s.d + 1);
          int k = Grading::hh_from_lm(p, s.d) * Grading::hh_from_lm(q, s.d);
          CHECK(loop_equal(s, xy, loop_combination(yx, (k & 1) ? -1 : 1, yx, 0)));
        }
}

TEST_CASE("frozen loop product table on S^2") {
  auto s = builtin_space("s2");
  LoopTable t = loop_table(s, 1, 1, false);
  REQUIRE(t.left.size() == 1);
  CHECK(t.out == 0);
  CHECK(t.out_basis.size() == 1);
  LoopTable u = loop_table(s, 2, 1, false);
  CHECK(u.coeff == std::vector<std::vector<std::vector<Rational>>>{{{Rational(1)}}});
  CHECK_FALSE(loop_table(s, 2, 2, false).all_zero());
}

TEST_CASE("string homology agrees with the negative cyclic side") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    CAPTURE(name);
    for (const auto& r : string_homology(builtin_space(name), 0, 8)) {
      CHECK(r.agree);
      CHECK(r.stabilized);
    }
  }
}

TEST_CASE("sl2 in Lie degree zero on S^3 x S^3") {
  auto s = builtin_space("s3xs3");
  BracketTable t = string_bracket_table(s, Grading::string_from_lie(0, s.d), Grading::string_from_lie(0, s.d));
  CHECK(t.left.size() == 3);
  CHECK_FALSE(t.all_zero());
  auto b = find_sl2_basis(t);
  REQUIRE(b);
  // frozen: E = aa, H = ab, F = -bb/4
  CHECK(b->e == std::vector<Rational>{1, 0, 0});
  CHECK(b->h == std::vector<Rational>{0, 1, 0});
  CHECK(b->f == std::vector<Rational>{0, 0, Rational(-1, 4)});
}

TEST_CASE("sl2 survives the orientation flip") {
  auto s = orientation_flip(builtin_space("s3xs3"));
  BracketTable t = string_bracket_table(s, 4, 4);
  CHECK(t.left.size() == 3);
  CHECK_FALSE(t.all_zero());
  CHECK(find_sl2_basis(t));
}

TEST_CASE("string brackets vanish for spheres and CP^2") {
  for (auto name : {"s2", "s3", "cp2"}) {
    auto s = builtin_space(name);
    for (int n = 0; n <= 8; ++n)
      for (int k = n; n + k <= 12; ++k) {
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(string_bracket_table(s, n, k).all_zero());
      }
  }
}

TEST_CASE("cyclic classes sit in degrees of the parity of d") {
  for (auto name : {"s2", "s3", "cp2"}) {
    auto s = builtin_space(name);
    for (const auto& r : string_homology(s, 0, 10))
      if (r.rank) CHECK(((s.d - r.cyclic_degree) & 1) == 0);
  }
}

TEST_CASE("string bracket antisymmetry on classes") {
  auto s = builtin_space("s3xs3");
  for (int n : {2, 4, 5})
    for (int k : {2, 4, 5}) {
      auto xs = string_classes(s, n), ys = string_classes(s, k);
      int L1 = Grading::lie_from_string(n, s.d), L2 = Grading::lie_from_string(k, s.d);
      for (const auto& x : xs)
        for (const auto& y : ys) {
          StringClass a = string_bracket(s, x, y), b = string_bracket(s, y, x);
          CHECK(a.n == n + k - s.d + 2);
          add_poly(a.necklaces, b.necklaces, ((L1 * L2) & 1) ? -1 : 1);
          CHECK(a.necklaces.empty());
        }
    }
}

TEST_CASE("rescaling the pairing rescales the bracket and keeps the ranks") {
  auto s = builtin_space("s3xs3");
  auto r = with_scaled_pairing(s, 4);
  for (ComplexId id : {ComplexId::HOCH_VV, ComplexId::HOCH_VVDUAL, ComplexId::CYCLIC}) {
    auto a = cohomology(s.structure, id, -4, 6), b = cohomology(r.structure, id, -4, 6);
    for (std::size_t i = 0; i < a.degrees.size(); ++i) CHECK(a.degrees[i].rank == b.degrees[i].rank);
  }
  BracketTable t = string_bracket_table(s, 4, 4), u = string_bracket_table(r, 4, 4);
  REQUIRE(t.coeff.size() == u.coeff.size());
  for (std::size_t i = 0; i < t.coeff.size(); ++i)
    for (std::size_t j = 0; j < t.coeff[i].size(); ++j)
      for (std::size_t l = 0; l < t.coeff[i][j].size(); ++l) CHECK(u.coeff[i][j][l] * 4 == t.coeff[i][j][l]);
}

TEST_CASE("loop bracket is nontrivial on spheres") {
  CHECK_FALSE(loop_table(builtin_space("s2"), 1, 3, true).all_zero());
  CHECK_FALSE(loop_table(builtin_space("s3"), 0, 2, true).all_zero());
  CHECK(loop_table(builtin_space("s2"), 2, 2, true).all_zero());
}
