#include <catch2/catch_amalgamated.hpp>

#include "hm/invariants.hpp"

using hm::GroupFamily;

TEST_CASE("degree bookkeeping matches pinned examples") {
  // p = 2, g = 2, (v, w) = (-1, 0)
  hm::UppInvariants a = hm::upp_from_degrees(2, 2, -1, 0);
  CHECK(a.m == 11);
  CHECK(a.m_tilde == 5);
  CHECK(a.deg_u1 == 3);
  CHECK(a.deg_u2 == 4);
  CHECK(a.toledo == -1);
  CHECK(a.in_range);

  // p = 1, g = 2, (v, w) = (0, 0): balanced pair.
  hm::UppInvariants b = hm::upp_from_degrees(1, 2, 0, 0);
  CHECK(b.m == 2);
  CHECK(b.m_tilde == 2);
  CHECK(b.toledo == 0);
  CHECK(b.toledo_opposite == 0);
  CHECK(b.line_degree == 0);
  CHECK(b.in_range);
}

TEST_CASE("determinant-balanced locus freezes the first invariant") {
  hm::SuppInvariants a = hm::supp_invariants(2, 2, 0);
  CHECK(a.m == 12);
  CHECK(a.m_tilde == 4);
  CHECK(2 * a.full.deg_u1 == a.m - a.m_tilde);

  hm::SuppInvariants b = hm::supp_invariants(1, 2, 1);
  CHECK(b.m == 2);
  CHECK(b.m_tilde == 4);
  // 2 deg U1 = p(2p-1)(2g-2) - m_tilde, here -2.
  CHECK(2 * b.full.deg_u1 == 1ll * 1 * (2 * 1 - 1) * (2 * 2 - 2) - b.m_tilde);
  CHECK(2 * b.full.deg_u1 == -2);

  // m never depends on w; m_tilde moves linearly.
  for (int p = 1; p <= 4; ++p)
    for (int g = 2; g <= 6; ++g)
      for (long long w = -20; w <= 20; w += 7) {
        hm::SuppInvariants s = hm::supp_invariants(p, g, w);
        CHECK(s.m == (4ll * p * p - 2 * p) * (g - 1));
        CHECK(s.m_tilde == 2 * w + 2ll * p * (g - 1));
        CHECK(s.full.v == -w);
      }
}

TEST_CASE("symplectic pair dimension counts") {
  hm::SpInvariants a = hm::sp2p2p_invariants(1, 2);
  CHECK(a.moduli_dim == 10);
  CHECK(a.base_dim == 3);
  CHECK(a.fiber_dim == 7);

  hm::SpInvariants b = hm::sp2p2p_invariants(2, 3);
  CHECK(b.moduli_dim == 72);
  CHECK(b.base_dim == 20);
  CHECK(b.fiber_dim == 52);

  for (int p = 1; p <= 5; ++p)
    for (int g = 2; g <= 10; ++g) {
      hm::SpInvariants s = hm::sp2p2p_invariants(p, g);
      CAPTURE(p, g);
      CHECK(s.moduli_dim == s.base_dim + s.fiber_dim);
      CHECK(s.spectral_genus == 4ll * p * p * (g - 1) + 1);
      // dim of the ambient fibration: 3g_s - 3 of the cover.
      CHECK(3 * s.spectral_genus - 3 == 12ll * p * p * (g - 1));
      CHECK(s.line_degree == -2ll * p * (g - 1));
    }
}

TEST_CASE("spectral curve genera") {
  CHECK(hm::classical_spectral_genus(2, 2) == 5);
  CHECK(hm::upp_spectral_genus(2, 2) == 17);
  CHECK(hm::upp_quotient_genus(2, 2) == 7);
  CHECK(hm::so_even_desing_genus(2, 2) == 13);
  for (int p = 1; p <= 5; ++p)
    for (int g = 2; g <= 10; ++g) {
      CAPTURE(p, g);
      // The pairing cover is the classical cover of doubled rank.
      CHECK(hm::upp_spectral_genus(p, g) == hm::classical_spectral_genus(2 * p, g));
      // Double cover relation: the involution quotient satisfies
      // (g_cover - 1) = 2 (g_quot - 1) + 2p(g-1).
      CHECK(hm::upp_spectral_genus(p, g) - 1 ==
            2 * (hm::upp_quotient_genus(p, g) - 1) + 2ll * p * (g - 1));
    }
}

TEST_CASE("section counts and base dimensions") {
  CHECK(hm::canonical_power_sections(1, 4) == 4);
  CHECK(hm::canonical_power_sections(2, 4) == 9);
  CHECK(hm::canonical_power_sections(3, 2) == 5);
  CHECK_THROWS_AS(hm::canonical_power_sections(0, 3), std::domain_error);

  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 8; ++g) {
      CAPTURE(n, g);
      // Full linear family: dim equals the classical spectral genus.
      CHECK(hm::hitchin_base_dim(GroupFamily::GL, n, g) ==
            hm::classical_spectral_genus(n, g));
      // Trace-free family drops the degree-one term.
      if (n >= 2)
        CHECK(hm::hitchin_base_dim(GroupFamily::SL, n, g) ==
              hm::hitchin_base_dim(GroupFamily::GL, n, g) - g);
      // Symplectic family matches the integrable-system base.
      CHECK(hm::hitchin_base_dim(GroupFamily::Sp, n, g) ==
            hm::sp2p2p_invariants(n, g).base_dim);
      CHECK(hm::hitchin_base_dim(GroupFamily::SOOdd, n, g) ==
            hm::hitchin_base_dim(GroupFamily::Sp, n, g));
      // Even orthogonal family: closed form n(2n-1)(g-1) once the Pfaffian
      // degree n reaches 2; at n = 1 the Pfaffian is the canonical class
      // itself and contributes g sections.
      if (n >= 2)
        CHECK(hm::hitchin_base_dim(GroupFamily::SOEven, n, g) ==
              1ll * n * (2 * n - 1) * (g - 1));
      else
        CHECK(hm::hitchin_base_dim(GroupFamily::SOEven, n, g) == g);
    }
}

TEST_CASE("pushforward degree preserves Euler characteristics") {
  CHECK(hm::direct_image_degree(0, 2, 2, 5) == -2);
  for (int n = 1; n <= 5; ++n)
    for (int g = 2; g <= 6; ++g) {
      long long g_s = hm::classical_spectral_genus(n, g);
      for (long long dm = -9; dm <= 9; dm += 3) {
        long long pushed = hm::direct_image_degree(dm, n, g, g_s);
        CHECK(dm + 1 - g_s == pushed + 1ll * n * (1 - g));
      }
    }
}

TEST_CASE("component data in the fundamental half-range") {
  hm::UppComponent c = hm::upp_component(2, 2, 0);
  CHECK(c.rank_bound == 7);
  CHECK(c.total == 17);
  CHECK_THROWS_AS(hm::upp_component(2, 2, -1), std::out_of_range);
  CHECK_THROWS_AS(hm::upp_component(2, 2, 4), std::out_of_range);
  CHECK_NOTHROW(hm::upp_component(2, 2, 3));
  for (int p = 1; p <= 5; ++p)
    for (int g = 2; g <= 10; ++g)
      for (long long mt = 0; mt < 2ll * p * (g - 1); ++mt) {
        hm::UppComponent k = hm::upp_component(p, g, mt);
        CHECK(k.rank_bound == (4ll * p - 1) * (g - 1) - mt);
        CHECK(k.total == hm::upp_spectral_genus(p, g));
      }
}

TEST_CASE("round trip between degrees and invariants is exact") {
  for (int p = 1; p <= 5; ++p)
    for (int g = 2; g <= 10; ++g)
      for (long long v = -50; v <= 50; v += 9)
        for (long long w = -50; w <= 50; w += 11) {
          hm::UppInvariants fwd = hm::upp_from_degrees(p, g, v, w);
          hm::UppInvariants back = hm::upp_from_invariants(p, g, fwd.m, fwd.m_tilde);
          REQUIRE(back.v == v);
          REQUIRE(back.w == w);
          REQUIRE((fwd.m - fwd.m_tilde) % 2 == 0);
          // Window flag agrees with the Toledo bound.
          REQUIRE(fwd.in_range == (std::abs(fwd.toledo) <= 2ll * p * (g - 1)));
          // Difference of the section counts recovers the line degree.
          REQUIRE(fwd.h_plus - fwd.h_minus == fwd.line_degree);
          REQUIRE(fwd.deg_u1 + fwd.deg_u2 == fwd.m - 2ll * p * (g - 1));
          REQUIRE(fwd.line_degree == fwd.toledo);
        }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(hm::upp_from_degrees(0, 2, 0, 0), std::domain_error);
  CHECK_THROWS_AS(hm::upp_from_degrees(1, 1, 0, 0), std::domain_error);
  CHECK_THROWS_AS(hm::upp_from_invariants(1, 2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(hm::sp2p2p_invariants(1, 0), std::domain_error);
  CHECK_THROWS_AS(hm::hitchin_base_dim(GroupFamily::GL, 0, 3), std::domain_error);
  // Flag, not throw, for out-of-window degrees.
  CHECK_FALSE(hm::upp_from_degrees(1, 2, 10, 0).in_range);
  CHECK(hm::upp_from_invariants(1, 2, 4, 2).in_range);
}
