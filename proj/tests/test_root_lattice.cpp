#include <doctest.h>

#include <set>

#include "cbasis/root_lattice.hpp"
#include "support.hpp"

using namespace cbasis;
using testing_support::run;
using testing_support::unit;

TEST_CASE("rank bounds") {
  CHECK_THROWS(CartanType::A(0));
  CHECK_THROWS(CartanType::D(3));
  CHECK_NOTHROW(CartanType::D(4));
  CHECK(CartanType::D(5).name() == "D5");
}

TEST_CASE("Gram matrix equals the Euclidean realization") {
  for (Family f : {Family::A, Family::D}) {
    for (int n = (f == Family::A ? 1 : 4); n <= 9; ++n) {
      const CartanType t(f, n);
      const IntMatrix g = gram_matrix(t);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          CHECK(g(i - 1, j - 1) == testing_support::euclidean_inner(f, unit(n, i), unit(n, j)));
    }
  }
}

TEST_CASE("Gram matrix spot values") {
  const IntMatrix a3 = gram_matrix(CartanType::A(3));
  CHECK(a3 == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const IntMatrix d4 = gram_matrix(CartanType::D(4));
  CHECK(d4(1, 3) == -1);
  CHECK(d4(2, 3) == 0);
  CHECK(inner(CartanType::D(5), unit(5, 4), unit(5, 5)) == 0);
}

TEST_CASE("inner products used by the constructions") {
  const CartanType a11 = CartanType::A(11);
  CHECK(inner(a11, run(11, 2, 9), run(11, 5, 7)) == 0);
  CHECK(inner(a11, run(11, 2, 9), unit(11, 9)) ==
        testing_support::euclidean_inner(Family::A, run(11, 2, 9), unit(11, 9)));
  for (int n = 5; n <= 9; ++n) {
    const CartanType d = CartanType::D(n);
    for (int m = 1; m <= n - 3; ++m) {
      Root tail = run(n, m + 1, n - 2);
      tail[n - 1] = 1;
      CHECK(inner(d, run(n, m + 1, n - 1), tail) == 0);
    }
  }
}

TEST_CASE("reflections") {
  const CartanType a = CartanType::A(6);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 6; ++j)
      CHECK(reflect(a, unit(6, i + j), run(6, i, i + j - 1)) == run(6, i, i + j));
  const Root b = run(6, 2, 4);
  CHECK(reflect(a, b, b) == Int{-1} * b);
  CHECK_THROWS(reflect(a, Int{2} * unit(6, 1), b));

  // Doubled run from reflecting in alpha_1 + ... + alpha_{n-2} + alpha_n.
  // The run alpha_1 + ... + alpha_{n-1} is orthogonal to the mirror, so p
  // starts at 2 (the last spike tail is never labelled 1).
  for (int n = 4; n <= 9; ++n) {
    const CartanType d = CartanType::D(n);
    Root mirror = run(n, 1, n - 2);
    mirror[n - 1] = 1;
    CHECK(reflect(d, mirror, run(n, 1, n - 1)) == run(n, 1, n - 1));
    for (int p = 2; p <= n - 1; ++p) {
      Root expected(n, 0);
      for (int i = 1; i <= n - 2; ++i) expected[i - 1] = i < p ? 1 : 2;
      expected[n - 2] = expected[n - 1] = 1;
      CHECK(reflect(d, mirror, run(n, p, n - 1)) == expected);
    }
  }
}

TEST_CASE("is_root agrees with enumeration over small coefficient boxes") {
  for (Family f : {Family::A, Family::D}) {
    for (int n = (f == Family::A ? 1 : 4); n <= 5; ++n) {
      const CartanType t(f, n);
      const auto euclid = testing_support::euclidean_positive_roots(f, n);
      Root c(n, -2);
      int found = 0;
      while (true) {
        auto e = testing_support::euclidean(f, c);
        std::vector<Int> neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        const bool oracle = euclid.count(e) || euclid.count(neg);
        CHECK(is_root(t, c) == oracle);
        found += oracle;
        std::size_t i = 0;
        while (i < c.size() && c[i] == 2) c[i++] = -2;
        if (i == c.size()) break;
        ++c[i];
      }
      // Every root has coefficients in -2..2 for these ranks.
      CHECK(found == 2 * static_cast<int>(euclid.size()));
    }
  }
  CHECK(is_root(CartanType::A(3), run(3, 1, 2)));
  Root a1a3{1, 0, 1};
  CHECK_FALSE(is_root(CartanType::A(3), a1a3));
}

TEST_CASE("positive roots match the Euclidean list") {
  for (Family f : {Family::A, Family::D}) {
    for (int n = (f == Family::A ? 1 : 4); n <= 11; ++n) {
      const CartanType t(f, n);
      const auto roots = positive_roots(t);
      std::set<std::vector<Int>> mapped;
      for (const Root& r : roots) {
        for (Int c : r) CHECK(c >= 0);
        mapped.insert(testing_support::euclidean(f, r));
      }
      CHECK(mapped == testing_support::euclidean_positive_roots(f, n));
      CHECK(roots.size() == static_cast<std::size_t>(f == Family::A ? n * (n + 1) / 2 : n * (n - 1)));
    }
  }
  CHECK(positive_roots(CartanType::A(2)) ==
        std::vector<Root>{unit(2, 1), unit(2, 2), run(2, 1, 2)});
  CHECK(positive_roots(CartanType::A(11)).size() == 66);
  CHECK(positive_roots(CartanType::D(4)).size() == 12);
}

TEST_CASE("Z-basis test") {
  const CartanType a = CartanType::A(4);
  std::vector<Root> pi{unit(4, 1), unit(4, 2), unit(4, 3), unit(4, 4)};
  CHECK(is_z_basis(a, pi));
  CHECK(coefficient_determinant(a, pi) == 1);
  auto tri = pi;
  tri[0] = run(4, 1, 2);
  CHECK(is_z_basis(a, tri));
  auto doubled = pi;
  doubled[0] = Int{2} * unit(4, 1);
  CHECK_FALSE(is_z_basis(a, doubled));
  CHECK(coefficient_determinant(a, doubled) == 2);
  CHECK_THROWS(is_z_basis(a, std::vector<Root>{unit(4, 1)}));
}

TEST_CASE("root formatting") {
  CHECK(format_root(Root{1, 0, 2}) == "a1 + 2a3");
  CHECK(format_root(Root{0, -1, 1}) == "-a2 + a3");
  CHECK(format_root(Root{0, 0}) == "0");
}
