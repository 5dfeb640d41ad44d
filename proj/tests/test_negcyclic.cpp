#include <doctest.h>

#include "stringhom/stringops.hpp"

using namespace stringhom;

TEST_CASE("Tsygan bicomplex identities on finite windows") {
  for (auto name : {"s2", "s3", "cp2", "s3xs3"}) {
    CAPTURE(name);
    auto s = builtin_space(name);
    BicomplexCheck c = check_bicomplex(s.structure, 8, 4);
    CAPTURE(c.failure);
    CHECK(c.vertical_square_zero);
    CHECK(c.squares_anticommute);
    CHECK(c.row_identities);
    CHECK(c.bar_column_acyclic);
  }
}

TEST_CASE("Connes operator squares to zero and anticommutes with the differential") {
  auto s = builtin_space("s3xs3");
  const Alphabet& a = s.structure.alphabet;
  for (int n = -8; n <= 0; ++n) {
    WordSpace ws = enumerate_wordspace(a, ComplexId::HOCH_VVDUAL, n, 12);
    for (const auto& e : ws.basis) {
      OneForm f{{e, Rational(1)}};
      CHECK(connes_operator(a, connes_operator(a, f)).empty());
      OneForm lb = lie_operator(a, s.structure.m, connes_operator(a, f));
      for (const auto& [g, c] : connes_operator(a, lie_operator(a, s.structure.m, f))) add_term(lb, g, c);
      // the constant form is quotiented out
      if (a.unit()) lb.erase(BasisElement{Word{}, *a.unit()});
      CHECK(lb.empty());
    }
  }
}

TEST_CASE("frozen negative cyclic ranks agree with cyclic ranks one degree up") {
  using V = std::vector<std::size_t>;
  std::map<std::string, V> frozen = {{"s2", {0, 0, 1, 0, 1, 0, 1, 0, 1}},
                                     {"s3", {0, 0, 0, 1, 0, 1, 0, 1, 0}},
                                     {"cp2", {0, 0, 1, 0, 1, 0, 1, 0, 1}},
                                     {"s3xs3", {0, 0, 0, 2, 0, 3, 1, 4, 2}}};
  for (const auto& [name, expect] : frozen) {
    CAPTURE(name);
    auto s = builtin_space(name);
    auto rep = hc_minus(s.structure, -1, 7);
    V got;
    for (const auto& d : rep.degrees) {
      got.push_back(d.rank);
      CHECK(d.agree);
      CHECK(d.column_stable);
      CHECK(d.weight_stable);
      CHECK(d.authoritative);
    }
    CHECK(got == expect);
  }
}

TEST_CASE("too few columns are flagged as non-authoritative") {
  auto s = builtin_space("s2");
  HCMinusOptions o;
  o.columns = 1;
  auto rep = hc_minus(s.structure, 5, 5, o);
  CHECK_FALSE(rep.degrees[0].authoritative);
  CHECK(hc_minus_column_cap(5) == 4);
  CHECK(hc_minus_column_cap(-3) == 1);
}
