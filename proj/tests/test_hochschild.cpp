#include <doctest.h>

#include "stringhom/bar_oracle.hpp"
#include "stringhom/stringops.hpp"

using namespace stringhom;

namespace {

std::vector<std::size_t> ranks(const SpaceModel& s, ComplexId id, int lo, int hi) {
  std::vector<std::size_t> r;
  for (const auto& d : cohomology(s.structure, id, lo, hi).degrees) {
    CHECK(d.stabilized);
    CHECK(d.authoritative);
    r.push_back(d.rank);
  }
  return r;
}

using V = std::vector<std::size_t>;

HHClass combine(const HHClass& a, const Rational& ca, const HHClass& b, const Rational& cb) {
  HHClass r{a.degree, a.representative.scaled(ca)};
  r.representative.add(b.representative, cb);
  return r;
}

}  // namespace

TEST_CASE("frozen HH(V,V) ranks, degrees -8..4") {
  CHECK(ranks(builtin_space("s2"), ComplexId::HOCH_VV, -8, 4) == V{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0});
  CHECK(ranks(builtin_space("s3"), ComplexId::HOCH_VV, -8, 4) == V{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0});
  CHECK(ranks(builtin_space("cp2"), ComplexId::HOCH_VV, -8, 4) == V{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(ranks(builtin_space("s3xs3"), ComplexId::HOCH_VV, -8, 4) == V{13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 2});
}

TEST_CASE("frozen HH(V,V*) ranks, degrees -12..0") {
  CHECK(ranks(builtin_space("s2"), ComplexId::HOCH_VVDUAL, -12, 0) == V(13, 1));
  CHECK(ranks(builtin_space("s3"), ComplexId::HOCH_VVDUAL, -12, 0) == V{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1});
  CHECK(ranks(builtin_space("cp2"), ComplexId::HOCH_VVDUAL, -12, 0) == V(13, 1));
  CHECK(ranks(builtin_space("s3xs3"), ComplexId::HOCH_VVDUAL, -12, 0) ==
        V{11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 2, 0, 1});
}

TEST_CASE("frozen cyclic ranks, degrees 0..10") {
  CHECK(ranks(builtin_space("s2"), ComplexId::CYCLIC, 0, 10) == V{0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(ranks(builtin_space("s3"), ComplexId::CYCLIC, 0, 10) == V{0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(ranks(builtin_space("cp2"), ComplexId::CYCLIC, 0, 10) == V{0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(ranks(builtin_space("s3xs3"), ComplexId::CYCLIC, 0, 10) == V{0, 0, 0, 2, 0, 3, 1, 4, 2, 5, 3});
}

TEST_CASE("S^2 Hochschild cohomology vanishes above degree 2") {
  auto s = builtin_space("s2");
  CHECK(ranks(s, ComplexId::HOCH_VV, 3, 8) == V(6, 0));
}

TEST_CASE("d^2 = 0 on every slice") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    auto s = builtin_space(name);
    for (ComplexId id : {ComplexId::HOCH_VV, ComplexId::HOCH_VVDUAL, ComplexId::CYCLIC})
      for (int n = -6; n <= 6; ++n) {
        CAPTURE(name);
        CAPTURE(complex_name(id));
        CAPTURE(n);
        int step = differential_step(id);
        int W = std::max(stabilization_cap(s.structure.alphabet, id, n),
                         stabilization_cap(s.structure.alphabet, id, n + step));
        ComplexSlice a = build_slice(s.structure, id, n, W), b = build_slice(s.structure, id, n + step, W);
        CHECK((b.matrix * a.matrix).is_zero());
      }
  }
}

TEST_CASE("truncated slices are flagged") {
  auto s = builtin_space("s3xs3");
  ComplexSlice full = build_slice(s.structure, ComplexId::HOCH_VV, -4, stabilization_cap(s.structure.alphabet, ComplexId::HOCH_VV, -4));
  CHECK(full.authoritative);
  ComplexSlice cut = build_slice(s.structure, ComplexId::HOCH_VV, -4, 2);
  CHECK_FALSE(cut.authoritative);
}

TEST_CASE("a field with nonzero square is reported as an invariant breach") {
  AInfinityStructure broken;
  broken.alphabet = Alphabet({1, 1}, std::nullopt, {"x", "y"});
  broken.m = Derivation(1, 2);
  broken.m.images[0] = Poly{{Word{1, 1}, Rational(1)}};
  broken.m.images[1] = Poly{{Word{0, 0}, Rational(1)}};
  CHECK_THROWS_AS(cohomology_at(broken, ComplexId::HOCH_VV, 1, 4), InvariantBreach);
}

TEST_CASE("bar model agrees with the derivation model") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    CAPTURE(name);
    auto s = builtin_space(name);
    for (int n = -4; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(bar_oracle_rank(s.spec, Coefficients::V, n) ==
            cohomology_at(s.structure, ComplexId::HOCH_VV, n, stabilization_cap(s.structure.alphabet, ComplexId::HOCH_VV, n)).rank);
      CHECK(bar_oracle_rank(s.spec, Coefficients::VDUAL, n - s.d) ==
            cohomology_at(s.structure, ComplexId::HOCH_VVDUAL, n - s.d,
                          stabilization_cap(s.structure.alphabet, ComplexId::HOCH_VVDUAL, n - s.d))
                .rank);
    }
  }
}

TEST_CASE("bar model differential squares to zero") {
  auto spec = builtin_space("s3xs3").spec;
  for (auto c : {Coefficients::V, Coefficients::VDUAL})
    for (int n = -3; n <= 3; ++n) {
      BarSpace a = bar_space(spec, c, n), b = bar_space(spec, c, n + 1), e = bar_space(spec, c, n + 2);
      CHECK((bar_differential(spec, c, b, e) * bar_differential(spec, c, a, b)).is_zero());
    }
}

TEST_CASE("contraction with the pairing is a chain isomorphism shifting degree by d") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    auto s = builtin_space(name);
    const Alphabet& a = s.structure.alphabet;
    for (int n = -5; n <= s.d; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      int W = std::max({stabilization_cap(a, ComplexId::HOCH_VV, n), stabilization_cap(a, ComplexId::HOCH_VV, n + 1),
                        stabilization_cap(a, ComplexId::HOCH_VVDUAL, n - s.d),
                        stabilization_cap(a, ComplexId::HOCH_VVDUAL, n + 1 - s.d)});
      ComplexSlice vv = build_slice(s.structure, ComplexId::HOCH_VV, n, W);
      ComplexSlice vd = build_slice(s.structure, ComplexId::HOCH_VVDUAL, n - s.d, W);
      SparseMatrix D0 = duality_matrix(s.structure, s.form, vv.domain, vd.domain);
      SparseMatrix D1 = duality_matrix(s.structure, s.form, vv.codomain, vd.codomain);
      CHECK((D1 * vv.matrix).entries() == (vd.matrix * D0).entries());
      CHECK(D0.rows() == D0.cols());
      CHECK(rank(D0) == D0.cols());
    }
  }
}

TEST_CASE("hamiltonian is a chain map onto the symplectic fields") {
  for (auto name : {"s2", "cp2", "s3xs3"}) {
    auto s = builtin_space(name);
    for (int P = 1; P <= 9; ++P) {
      CAPTURE(name);
      CAPTURE(P);
      HamiltonianCheck h = check_hamiltonian(s, P);
      CHECK(h.chain_map);
      CHECK(h.injective);
      CHECK(h.onto_symplectic);
    }
  }
}

TEST_CASE("unit class is the identity for the cup product") {
  for (auto name : {"s2", "s3xs3"}) {
    auto s = builtin_space(name);
    CoboundaryTester T(s.structure);
    HHClass u = unit_class(s.structure);
    CHECK(u.degree == 0);
    CHECK(is_cocycle(s.structure, u.representative));
    for (int N = -3; N <= s.d; ++N)
      for (const auto& x : hh_classes(s.structure, N)) {
        CHECK(T.is_coboundary(combine(cup_product(s.structure, u, x), 1, x, -1)));
        CHECK(T.is_coboundary(combine(cup_product(s.structure, x, u), 1, x, -1)));
      }
  }
}

TEST_CASE("Gerstenhaber identities modulo coboundaries") {
  auto s = product_space(sphere(2), sphere(3));
  CoboundaryTester T(s.structure);
  std::vector<HHClass> cls;
  for (int N = -3; N <= s.d; ++N)
    for (const auto& c : hh_classes(s.structure, N)) cls.push_back(c);
  REQUIRE(cls.size() >= 10);
  auto cup = [&](const HHClass& x, const HHClass& y) { return cup_product(s.structure, x, y); };
  auto br = [&](const HHClass& x, const HHClass& y) { return gerstenhaber_bracket(s.structure, x, y); };
  auto odd = [](int k) { return (k & 1) != 0; };
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) {
      const auto &x = cls[i], &y = cls[j];
      CHECK(is_cocycle(s.structure, cup(x, y).representative));
      CHECK(is_cocycle(s.structure, br(x, y).representative));
      CHECK(T.is_coboundary(combine(cup(x, y), 1, cup(y, x), odd(x.degree * y.degree) ? 1 : -1)));
      CHECK(combine(br(x, y), 1, br(y, x), odd((x.degree - 1) * (y.degree - 1)) ? -1 : 1).representative.is_zero());
      const auto& z = cls[(i + j) % cls.size()];
      CHECK(combine(cup(cup(x, y), z), 1, cup(x, cup(y, z)), -1).representative.is_zero());
      // [x, y z] = [x, y] z + (-1)^{(|x|-1)|y|} y [x, z]
      HHClass rhs = combine(cup(br(x, y), z), 1, cup(y, br(x, z)), odd((x.degree - 1) * y.degree) ? -1 : 1);
      CHECK(T.is_coboundary(combine(br(x, cup(y, z)), 1, rhs, -1)));
      // [x,[y,z]] = [[x,y],z] + (-1)^{(|x|-1)(|y|-1)} [y,[x,z]]
      HHClass jac = combine(br(x, br(y, z)), 1, br(br(x, y), z), -1);
      jac = combine(jac, 1, br(y, br(x, z)), odd((x.degree - 1) * (y.degree - 1)) ? 1 : -1);
      CHECK(jac.representative.is_zero());
    }
}
