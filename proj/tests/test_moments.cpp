#include <catch2/catch_amalgamated.hpp>

#include "ctm/moments.hpp"

using ctm::BigInt;
using ctm::GroupFamily;
using ctm::GroupKind;
using ctm::Rational;

TEST_CASE("symplectic moments, frozen values") {
  REQUIRE(ctm::moment_symplectic(4, 1, 0) == 1);
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(ctm::moment_symplectic(n, 1, 1) == Rational(1, 2 * n));
    REQUIRE(ctm::moment_symplectic(n, 2, 1) == Rational(BigInt(1), ctm::pow(BigInt(2 * n), 3)));
  }
  REQUIRE(ctm::moment_symplectic(3, 1, 2) == Rational(47, 42));
  REQUIRE(ctm::moment_symplectic(5, 1, 2) == Rational(229, 220));
  REQUIRE(ctm::moment_symplectic(6, 1, 2) == Rational(401, 390));
  REQUIRE(ctm::moment_symplectic(12, 1, 2) == Rational(3323, 3300));
  REQUIRE(ctm::moment_symplectic(3, 2, 2) == Rational(10589, 10584));
  REQUIRE(ctm::moment_symplectic(4, 1, 3) == Rational(5, 12));
  // Small ranks sit in the bounded-tableau regime and stay valid.
  REQUIRE(ctm::moment_symplectic(1, 1, 2) == Rational(4, 3));
  REQUIRE(ctm::moment_symplectic(1, 1, 4) == Rational(16, 5));
  REQUIRE(ctm::moment_symplectic(2, 1, 4) == Rational(34, 7));
}

TEST_CASE("orthogonal moments, frozen values") {
  REQUIRE(ctm::moment_so_even(4, 1, 1) == Rational(1, 8));
  REQUIRE(ctm::moment_so_even(4, 1, 2) == Rational(149, 140));
  REQUIRE(ctm::moment_so_odd(5, 1, 2) == Rational(739, 715));
  REQUIRE(ctm::moment_so_odd(4, 1, 3) == Rational(1082, 3003));

  SECTION("the expansion is refused outside n > r") {
    REQUIRE_THROWS_AS(ctm::moment_so_even(2, 1, 3), ctm::RegimeError);
    REQUIRE_THROWS_AS(ctm::moment_so_even(3, 1, 3), ctm::RegimeError);
    REQUIRE_THROWS_AS(ctm::moment_so_odd(3, 1, 3), ctm::RegimeError);
    REQUIRE_NOTHROW(ctm::moment_so_odd(4, 1, 3));
  }
}

TEST_CASE("unitary moments, frozen values") {
  REQUIRE(ctm::moment_unitary(5, 1, 1, 1) == Rational(25, 24));
  REQUIRE(ctm::moment_unitary(10, 1, 1, 1) == Rational(100, 99));
  REQUIRE(ctm::moment_unitary(20, 1, 1, 1) == Rational(400, 399));
  REQUIRE(ctm::moment_unitary(20, 1, 2, 0) == Rational(4, 399));
  REQUIRE(ctm::moment_unitary(3, 1, 2, 1) == Rational(9, 10));
  REQUIRE(ctm::moment_unitary(3, 1, 2, 2) == Rational(739, 270));
  REQUIRE(ctm::moment_unitary(3, 2, 1, 1) == Rational(513, 512));
  REQUIRE(ctm::moment_unitary(4, 2, 1, 0) == Rational(1, 64));
  for (int n = 1; n <= 6; ++n) REQUIRE(ctm::moment_unitary(n, 1, 1, 0) == Rational(1, n));

  SECTION("swapping r and s conjugates a real value") {
    for (int n : {2, 5})
      for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
          REQUIRE(ctm::moment_unitary(n, 1, r, s) == ctm::moment_unitary(n, 1, s, r));
  }

  SECTION("s is rejected for real-trace families") {
    REQUIRE_THROWS_AS(ctm::trace_moment({GroupKind::Symplectic, 3}, 1, 1, 1),
                      std::domain_error);
  }
}

TEST_CASE("Gaussian limit moments") {
  const long long expected[] = {1, 0, 1, 0, 3, 0, 15, 0, 105};
  for (int r = 0; r <= 8; ++r) REQUIRE(ctm::gaussian_moment(r) == expected[r]);
  REQUIRE(ctm::complex_gaussian_moment(0, 0) == 1);
  REQUIRE(ctm::complex_gaussian_moment(1, 1) == 1);
  REQUIRE(ctm::complex_gaussian_moment(2, 2) == 2);
  REQUIRE(ctm::complex_gaussian_moment(3, 3) == 6);
  REQUIRE(ctm::complex_gaussian_moment(2, 1) == 0);
  REQUIRE(ctm::gaussian_limit(GroupKind::Symplectic, 6) == 15);
  REQUIRE(ctm::gaussian_limit(GroupKind::Unitary, 2, 2) == 2);
}

TEST_CASE("identity sums: tableau counts against defining-power traces") {
  // Summing count * dim over the final layer evaluates a power of the defining
  // character at the identity, which is the matrix size to the r-th power.
  for (int n : {2, 3, 5}) {
    for (int r = 0; r <= 4; ++r) {
      BigInt sp_sum = 0;
      for (const auto& [shape, count] : ctm::updown_distribution(r, n))
        sp_sum += count * ctm::dim_symplectic(shape, n);
      REQUIRE(sp_sum == ctm::pow(BigInt(2 * n), static_cast<unsigned>(r)));
    }
    for (int r = 0; r < n; ++r) {
      BigInt so_e = 0, so_o = 0;
      for (const auto& [shape, count] : ctm::updown_distribution(r)) {
        so_e += count * ctm::dim_so_even(shape, n);
        so_o += count * ctm::dim_so_odd(shape, n);
      }
      REQUIRE(so_e == ctm::pow(BigInt(2 * n), static_cast<unsigned>(r)));
      REQUIRE(so_o == ctm::pow(BigInt(2 * n + 1), static_cast<unsigned>(r)));
    }
  }
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      BigInt u_sum = 0;
      for (const auto& [shape, count] :
           ctm::staircase_distribution(3, ctm::TypeVector::canonical(r, s)))
        u_sum += count * ctm::dim_unitary(shape, 3);
      REQUIRE(u_sum == ctm::pow(BigInt(3), static_cast<unsigned>(r + s)));
    }
}

TEST_CASE("gap to the Gaussian limit decays like 1/n") {
  for (int r : {2, 4}) {
    const Rational limit(ctm::gaussian_moment(r));
    Rational gap3 = ctm::moment_symplectic(3, 1, r) - limit;
    if (gap3 < 0) gap3 = -gap3;
    const Rational c = gap3 * 3;
    for (int n = 4; n <= 12; ++n) {
      Rational gap = ctm::moment_symplectic(n, 1, r) - limit;
      if (gap < 0) gap = -gap;
      REQUIRE(gap <= c / n);
    }
  }
}

TEST_CASE("clt report rows") {
  auto rows = ctm::clt_report(GroupKind::Symplectic, 1, 2, 0, {3, 6, 12});
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0].n == 3);
  REQUIRE(rows[0].terms == 3);
  REQUIRE(rows[0].exact == Rational(47, 42));
  REQUIRE(rows[0].limit == 1);
  REQUIRE(rows[0].gap == Rational(5, 42));
  REQUIRE(rows[1].gap > rows[2].gap);
  REQUIRE(rows[0].gap > rows[1].gap);

  // At r = 4 the n = 3 layer loses the four-row shape to the height bound.
  auto r4 = ctm::clt_report(GroupKind::Symplectic, 1, 4, 0, {3, 4});
  REQUIRE(r4[0].terms == 7);
  REQUIRE(r4[1].terms == 8);

  auto u = ctm::clt_report(GroupKind::Unitary, 1, 1, 1, {10});
  REQUIRE(u[0].exact == Rational(100, 99));
  REQUIRE(u[0].limit == 1);
  REQUIRE(u[0].gap == Rational(1, 99));

  REQUIRE_THROWS_AS(ctm::clt_report(GroupKind::SpecialOrthogonalEven, 1, 3, 0, {3}),
                    ctm::RegimeError);
}

TEST_CASE("minimum admissible ranks") {
  REQUIRE(ctm::min_admissible_rank(GroupKind::Symplectic, 5) == 1);
  REQUIRE(ctm::min_admissible_rank(GroupKind::Unitary, 5, 2) == 1);
  REQUIRE(ctm::min_admissible_rank(GroupKind::SpecialOrthogonalEven, 3) == 4);
  REQUIRE(ctm::min_admissible_rank(GroupKind::SpecialOrthogonalOdd, 2) == 3);
}
