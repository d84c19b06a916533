#pragma once

// Exact integer invariants of rank-2p spectral data over a genus-g curve:
// degree bookkeeping for U(p,p) and SU(p,p) bundle pairs, dimension counts
// for the Sp(2p,2p) moduli, spectral-curve genera, Hitchin base dimensions,
// and the component bound attached to a fixed discriminant invariant.
//
// Everything is closed-form integer arithmetic; routines either return a
// value for every admissible parameter set or reject inadmissible input
// loudly (parity mismatches and out-of-range discriminants throw,
// invariants that merely leave the stability window set a flag).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hm {

namespace detail {

inline void require_curve(int g) {
  if (g < 2) throw std::domain_error("base curve genus must be at least 2");
}

inline void require_rank(int p) {
  if (p < 1) throw std::domain_error("rank parameter must be positive");
}

}  // namespace detail

// Degree data of a U(p,p) pair (U1, U2) with deg U1 = v, deg U2 = w.
struct UppInvariants {
  int p = 0, g = 0;
  long long v = 0, w = 0;          // bundle degrees
  long long m = 0;                 // discriminant-side invariant
  long long m_tilde = 0;           // pairing-side invariant
  long long deg_u1 = 0, deg_u2 = 0;
  long long toledo = 0;            // v - w normalisation
  long long toledo_opposite = 0;   // w - v normalisation (both appear in use)
  long long line_degree = 0;       // 2p(g-1) - m_tilde
  long long h_plus = 0, h_minus = 0;
  bool in_range = false;           // 0 <= m_tilde <= 4p(g-1)
};

inline UppInvariants upp_from_degrees(int p, int g, long long v, long long w) {
  detail::require_rank(p);
  detail::require_curve(g);
  UppInvariants r;
  r.p = p;
  r.g = g;
  r.v = v;
  r.w = w;
  long long gm1 = g - 1;
  r.m = v + w + (4ll * p * p - 2 * p) * gm1;
  r.m_tilde = w - v + 2ll * p * gm1;
  r.deg_u1 = (r.m - r.m_tilde) / 2;
  r.deg_u2 = (r.m + r.m_tilde) / 2 - 2ll * p * gm1;
  r.toledo = v - w;
  r.toledo_opposite = w - v;
  r.line_degree = 2ll * p * gm1 - r.m_tilde;
  r.h_plus = (r.m - r.m_tilde) / 2 + (1ll * p - 2ll * p * p) * gm1;
  r.h_minus = (r.m + r.m_tilde) / 2 - (1ll * p + 2ll * p * p) * gm1;
  r.in_range = r.m_tilde >= 0 && r.m_tilde <= 4ll * p * gm1;
  return r;
}

// Inverse direction: recover degrees from the invariant pair.  The two
// invariants of a genuine pair always share parity; mismatched input is a
// caller error.
inline UppInvariants upp_from_invariants(int p, int g, long long m, long long m_tilde) {
  detail::require_rank(p);
  detail::require_curve(g);
  if (((m - m_tilde) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("invariant pair must have equal parity");
  long long gm1 = g - 1;
  long long v = (m - m_tilde) / 2 + (2ll * p - 2ll * p * p) * gm1;
  long long w = (m + m_tilde) / 2 - 2ll * p * p * gm1;
  return upp_from_degrees(p, g, v, w);
}

// SU(p,p) locus: determinants cancel, so v = -w and m is constant.
struct SuppInvariants {
  int p = 0, g = 0;
  long long w = 0;
  long long m = 0;        // (4p^2-2p)(g-1), independent of w
  long long m_tilde = 0;  // 2w + 2p(g-1)
  UppInvariants full;     // the underlying U(p,p) data at v = -w
};

inline SuppInvariants supp_invariants(int p, int g, long long w) {
  SuppInvariants r;
  r.p = p;
  r.g = g;
  r.w = w;
  r.full = upp_from_degrees(p, g, -w, w);
  r.m = r.full.m;
  r.m_tilde = r.full.m_tilde;
  return r;
}

// Dimension counts for the Sp(2p,2p) moduli and its integrable system.
struct SpInvariants {
  int p = 0, g = 0;
  long long moduli_dim = 0;      // 2p(4p+1)(g-1)
  long long base_dim = 0;        // (2p^2+p)(g-1)
  long long fiber_dim = 0;       // (6p^2+p)(g-1)
  long long spectral_genus = 0;  // 4p^2(g-1)+1
  long long line_degree = 0;     // -2p(g-1)
};

inline SpInvariants sp2p2p_invariants(int p, int g) {
  detail::require_rank(p);
  detail::require_curve(g);
  SpInvariants r;
  r.p = p;
  r.g = g;
  long long gm1 = g - 1;
  r.moduli_dim = 2ll * p * (4 * p + 1) * gm1;
  r.base_dim = (2ll * p * p + p) * gm1;
  r.fiber_dim = (6ll * p * p + p) * gm1;
  r.spectral_genus = 4ll * p * p * gm1 + 1;
  r.line_degree = -2ll * p * gm1;
  return r;
}

// Genus of the degree-n spectral cover inside the cotangent surface.
inline long long classical_spectral_genus(int n, int g) {
  detail::require_rank(n);
  detail::require_curve(g);
  return 1 + 1ll * n * n * (g - 1);
}

// Genus of the rank-2p pairing cover (n = 2p case of the classical count).
inline long long upp_spectral_genus(int p, int g) {
  detail::require_rank(p);
  detail::require_curve(g);
  return 4ll * p * p * (g - 1) + 1;
}

// Genus of the quotient of that cover by its base involution.
inline long long upp_quotient_genus(int p, int g) {
  detail::require_rank(p);
  detail::require_curve(g);
  return (2ll * p * p - p) * (g - 1) + 1;
}

// Genus of the desingularised even orthogonal spectral curve.
inline long long so_even_desing_genus(int n, int g) {
  detail::require_rank(n);
  detail::require_curve(g);
  return 1 + 2ll * n * (2 * n - 1) * (g - 1);
}

enum class GroupFamily { GL, SL, Sp, SOOdd, SOEven };

// h^0 of the d-th power of the canonical bundle on a genus-g curve.
inline long long canonical_power_sections(int d, int g) {
  detail::require_curve(g);
  if (d < 1) throw std::domain_error("canonical power must be positive");
  return d == 1 ? g : (2ll * d - 1) * (g - 1);
}

// Dimension of the Hitchin base: the sum of section counts over the degrees
// of the invariant polynomials of the family.
inline long long hitchin_base_dim(GroupFamily family, int n, int g) {
  detail::require_rank(n);
  detail::require_curve(g);
  long long total = 0;
  switch (family) {
    case GroupFamily::GL:
      for (int d = 1; d <= n; ++d) total += canonical_power_sections(d, g);
      break;
    case GroupFamily::SL:
      for (int d = 2; d <= n; ++d) total += canonical_power_sections(d, g);
      break;
    case GroupFamily::Sp:
    case GroupFamily::SOOdd:
      for (int d = 2; d <= 2 * n; d += 2) total += canonical_power_sections(d, g);
      break;
    case GroupFamily::SOEven:
      for (int d = 2; d <= 2 * n - 2; d += 2) total += canonical_power_sections(d, g);
      total += canonical_power_sections(n, g);  // Pfaffian
      break;
  }
  return total;
}

// Degree of the pushforward of a line bundle of degree deg_m along an
// n-sheeted spectral cover of genus g_s over a genus-g base.
inline long long direct_image_degree(long long deg_m, int n, int g, long long g_s) {
  detail::require_rank(n);
  detail::require_curve(g);
  return deg_m + (1 - g_s) - 1ll * n * (1 - g);
}

// Component count bound attached to one value of the pairing invariant,
// restricted to the fundamental half-range 0 <= m_tilde < 2p(g-1).
struct UppComponent {
  int p = 0, g = 0;
  long long m_tilde = 0;
  long long rank_bound = 0;  // (4p-1)(g-1) - m_tilde
  long long total = 0;       // 4p^2(g-1) + 1
};

inline UppComponent upp_component(int p, int g, long long m_tilde) {
  detail::require_rank(p);
  detail::require_curve(g);
  if (m_tilde < 0 || m_tilde >= 2ll * p * (g - 1))
    throw std::out_of_range("pairing invariant outside the fundamental half-range");
  UppComponent r;
  r.p = p;
  r.g = g;
  r.m_tilde = m_tilde;
  r.rank_bound = (4ll * p - 1) * (g - 1) - m_tilde;
  r.total = 4ll * p * p * (g - 1) + 1;
  return r;
}

}  // namespace hm
