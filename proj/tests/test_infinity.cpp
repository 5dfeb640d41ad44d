#include <doctest.h>

#include "stringhom/stringops.hpp"

#include <algorithm>

using namespace stringhom;

namespace {

bool has_failure(const ValidationReport& r, const std::string& kind, std::vector<std::string> labels,
                 const FrobeniusAlgebraSpec& s) {
  for (const auto& f : r.failures) {
    if (f.kind != kind) continue;
    std::vector<std::string> w;
    for (auto i : f.witness) w.push_back(s.basis.label(i));
    if (w == labels) return true;
  }
  return false;
}

std::vector<Poly> necklace_basis(const SpaceModel& s, int word_degree) {
  std::vector<Poly> out;
  WordSpace ws = enumerate_wordspace(s.structure.alphabet, ComplexId::NECKLACES, word_degree, word_degree + 1);
  for (const auto& e : ws.basis) out.push_back(Poly{{e.word, Rational(1)}});
  return out;
}

}  // namespace

TEST_CASE("builtin algebras validate") {
  for (const auto& spec : {sphere_algebra(2), sphere_algebra(3), projective_algebra(2), point_algebra(),
                           tensor_algebra(sphere_algebra(3), sphere_algebra(3)),
                           tensor_algebra(sphere_algebra(2), projective_algebra(2))}) {
    CAPTURE(spec.name);
    CHECK(validate_frobenius(spec).ok());
  }
  auto cp2 = projective_algebra(2);
  CHECK(cp2.size() == 3);
  CHECK(cp2.dimension == 4);
  CHECK(cp2.degree(2) == 4);
}

TEST_CASE("validation names the offending basis elements") {
  auto s = builtin_space("s3xs3").spec;
  std::size_t a = 1, ab = 3;
  REQUIRE(s.basis.label(a) == "a");
  s.pair(a, ab) = 1;
  auto rep = validate_frobenius(s);
  CHECK_FALSE(rep.ok());
  CHECK(has_failure(rep, "pairing-degree", {"a", "ab"}, s));

  auto zero = sphere_algebra(2);
  std::fill(zero.pairing.begin(), zero.pairing.end(), Rational(0));
  CHECK(has_failure(validate_frobenius(zero), "nondegeneracy", {"x"}, zero));

  auto h1 = sphere_algebra(2);
  h1.basis.elements[1].second = 1;
  h1.dimension = 1;
  CHECK(has_failure(validate_frobenius(h1), "simply-connected", {"x"}, h1));

  auto noncomm = sphere_algebra(2);
  noncomm.c(1, 1, 1) = 1;  // x*x = x breaks homogeneity
  CHECK_FALSE(validate_frobenius(noncomm).ok());
  CHECK_THROWS_AS(make_space(noncomm), ValidationError);
}

TEST_CASE("unit_first moves the unit to index 0") {
  auto s = sphere_algebra(2);
  std::vector<Rational> one(2, Rational(1));
  FrobeniusAlgebraSpec swapped = s;
  swapped.basis.elements = {s.basis.elements[1], s.basis.elements[0]};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      swapped.pair(1 - i, 1 - j) = s.pair(i, j);
      for (std::size_t k = 0; k < 2; ++k) swapped.c(1 - i, 1 - j, 1 - k) = s.c(i, j, k);
    }
  CHECK(*swapped.unit_index() == 1);
  CHECK(same_structure(unit_first(swapped), s));
}

TEST_CASE("frozen structure field and symplectic tensor of S^2") {
  auto s = builtin_space("s2");
  const Alphabet& a = s.structure.alphabet;
  CHECK(a.size() == 2);
  CHECK(a.degree(Letter{0}) == -1);
  CHECK(a.degree(Letter{1}) == 1);
  CHECK(s.structure.m.images[0] == Poly{{Word{0, 0}, Rational(1)}});
  CHECK(s.structure.m.images[1] == Poly{{Word{0, 1}, Rational(1)}, {Word{1, 0}, Rational(1)}});
  CHECK(s.form.omega_tensor == Poly{{Word{0, 1}, Rational(2)}, {Word{1, 0}, Rational(2)}});
}

TEST_CASE("frozen structure field of S^3 x S^3") {
  auto s = builtin_space("s3xs3");
  // letters: 1, a, b, ab
  CHECK(s.structure.m.images[3] == Poly{{Word{0, 3}, Rational(1)},
                                        {Word{1, 2}, Rational(1)},
                                        {Word{2, 1}, Rational(-1)},
                                        {Word{3, 0}, Rational(1)}});
  CHECK(s.form.omega_tensor == Poly{{Word{0, 3}, Rational(2)},
                                    {Word{1, 2}, Rational(2)},
                                    {Word{2, 1}, Rational(-2)},
                                    {Word{3, 0}, Rational(2)}});
}

TEST_CASE("structure fields square to zero, kill shuffles and preserve the form") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    CAPTURE(name);
    auto s = builtin_space(name);
    CHECK(check_square_zero(s.structure.alphabet, s.structure.m, 6));
    CHECK(check_cinfinity(s.structure.alphabet, s.structure.m));
    CHECK(is_symplectic(s.structure.alphabet, s.structure.m, s.form));
    CHECK(s.structure.minimal);
  }
}

TEST_CASE("square-zero witness for a broken field") {
  // x, y odd; m(x) = y y, m(y) = x x gives m^2(x) = x x y - y x x
  Alphabet a({1, 1}, std::nullopt, {"x", "y"});
  Derivation m(1, 2);
  m.images[0] = Poly{{Word{1, 1}, Rational(1)}};
  m.images[1] = Poly{{Word{0, 0}, Rational(1)}};
  auto w = square_zero_witness(a, m, 4);
  REQUIRE(w);
  CHECK(w->coefficient != 0);
  CHECK_FALSE(check_square_zero(a, m, 4));
}

TEST_CASE("commutator: antisymmetry and Jacobi") {
  auto s = builtin_space("s3xs3");
  const Alphabet& a = s.structure.alphabet;
  std::vector<Derivation> fields;
  for (int deg = 4; deg <= 8; deg += 1)
    for (const auto& q : necklace_basis(s, deg)) fields.push_back(hamiltonian(a, s.form, q, s.d));
  fields.push_back(s.structure.m);
  for (const auto& x : fields)
    for (const auto& y : fields) {
      Derivation xy = commutator(a, x, y), yx = commutator(a, y, x);
      int sg = ((x.degree * y.degree) & 1) ? 1 : -1;
      xy.add(yx, -sg);
      CHECK(xy.is_zero());
    }
  for (std::size_t i = 0; i + 2 < fields.size(); i += 3) {
    const auto &x = fields[i], &y = fields[i + 1], &z = fields[i + 2];
    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    Derivation lhs = commutator(a, x, commutator(a, y, z));
    lhs.add(commutator(a, commutator(a, x, y), z), -1);
    lhs.add(commutator(a, y, commutator(a, x, z)), ((x.degree * y.degree) & 1) ? 1 : -1);
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("hamiltonian fields are symplectic with the expected degree") {
  for (auto name : {"s2", "cp2", "s3xs3"}) {
    CAPTURE(name);
    auto s = builtin_space(name);
    for (int deg = 2; deg <= 8; ++deg)
      for (const auto& q : necklace_basis(s, deg)) {
        Derivation h = hamiltonian(s.structure.alphabet, s.form, q, s.d);
        CHECK(h.degree == hamiltonian_degree(deg, s.d));
        CHECK(is_symplectic(s.structure.alphabet, h, s.form));
      }
  }
}

TEST_CASE("frozen hamiltonian of the ab necklace on S^3 x S^3") {
  auto s = builtin_space("s3xs3");
  Derivation h = hamiltonian(s.structure.alphabet, s.form, Poly{{Word{1, 2}, Rational(1)}}, s.d);
  CHECK(h.degree == 0);
  CHECK(h.images[1] == Poly{{Word{1}, Rational(1)}});
  CHECK(h.images[2] == Poly{{Word{2}, Rational(-1)}});
  CHECK(h.images[0].empty());
  CHECK(h.images[3].empty());
}

TEST_CASE("necklace bracket: antisymmetry and Jacobi at the necklace level") {
  auto s = builtin_space("s3xs3");
  const Alphabet& a = s.structure.alphabet;
  std::vector<std::pair<int, Poly>> qs;
  for (int deg = 4; deg <= 7; ++deg)
    for (const auto& q : necklace_basis(s, deg)) qs.push_back({hamiltonian_degree(deg, s.d), q});
  auto br = [&](const Poly& x, const Poly& y) {
    auto r = necklace_bracket(a, s.form, s.d, x, y);
    REQUIRE(r.solved);
    return r.necklaces;
  };
  for (const auto& [lx, x] : qs)
    for (const auto& [ly, y] : qs) {
      Poly d = br(x, y);
      add_poly(d, br(y, x), ((lx * ly) & 1) ? -1 : 1);
      CHECK(d.empty());
    }
  for (std::size_t i = 0; i + 2 < qs.size(); ++i) {
    const auto& [lx, x] = qs[i];
    const auto& [ly, y] = qs[i + 1];
    const auto& z = qs[i + 2].second;
    Poly lhs = br(x, br(y, z));
    add_poly(lhs, br(br(x, y), z), -1);
    add_poly(lhs, br(y, br(x, z)), ((lx * ly) & 1) ? 1 : -1);
    CHECK(lhs.empty());
  }
}

TEST_CASE("orientation flip is absorbed by a sign rescaling unless d = 0 mod 4") {
  for (auto name : {"s2", "s3", "s3xs3"}) {
    CAPTURE(name);
    auto spec = builtin_space(name).spec;
    auto lambda = flip_absorbing_rescaling(spec);
    REQUIRE(lambda);
    CHECK((*lambda)[0] == 1);
    CHECK(same_structure(rescale_basis(spec, *lambda), negate_pairing(spec)));
  }
  CHECK_FALSE(flip_absorbing_rescaling(builtin_space("cp2").spec));
  auto s3 = builtin_space("s3").spec;
  CHECK(*flip_absorbing_rescaling(s3) == std::vector<Rational>{1, -1});
  CHECK(same_structure(negate_pairing(negate_pairing(s3)), s3));
}
