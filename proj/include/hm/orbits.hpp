#pragma once

// Orbit enumeration for linear group actions on the packed state space
// GF(2)^(6g-6).  A state is a 32-bit word whose low 2g bits hold the
// face-boundary coordinates and whose high 4g-6 bits hold the
// succession-class coordinates of a point of P[2].
//
// Generators are applied through split lookup tables (one table per half of
// the state word), so a full breadth-first sweep touches each (state,
// generator) pair once with two loads and an xor.  Seeds are scanned in
// ascending order, which makes the orbit numbering and every recorded
// artefact deterministic: orbit k is discovered at its minimal
// representative.
//
// Expected totals for the full block-triangular group: 2^(2g) + g - 1 orbits
// (one singleton per state with vanishing succession part, plus one orbit
// per weight class), and 2^(2g+1) + 2g - 3 connected components after the
// doubling rule (every orbit counts twice except the self-paired middle
// class).

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hm/copeland.hpp"
#include "hm/generators.hpp"
#include "hm/gf2.hpp"

namespace hm {

struct OrbitOptions {
  int max_state_bits = 30;        // refuse larger spaces unless forced
  bool force = false;             // bypass the guard
  bool record_partition = false;  // keep the full state -> orbit map
  int threads = 1;                // parallelism for table construction only
};

// Reads HM_MAX_STATE_BITS from the environment when present.
inline OrbitOptions default_orbit_options() {
  OrbitOptions opts;
  if (const char* env = std::getenv("HM_MAX_STATE_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 31)
      opts.max_state_bits = static_cast<int>(v);
  }
  return opts;
}

struct OrbitSummary {
  int state_bits = 0;
  std::uint64_t n_states = 0;
  std::uint64_t n_orbits = 0;
  std::uint64_t n_singletons = 0;
  std::uint64_t largest_orbit = 0;
  std::vector<std::uint32_t> orbit_reps;    // minimal representative, discovery order
  std::vector<std::uint64_t> orbit_sizes;   // aligned with orbit_reps
  std::vector<std::uint32_t> partition;     // state -> orbit index (record_partition)
};

namespace detail {

inline std::uint32_t pack_column(const Gf2Matrix& m, int c) {
  std::uint32_t out = 0;
  for (int r = 0; r < m.rows(); ++r)
    if (m.get(r, c)) out |= (1u << r);
  return out;
}

// Lookup tables for one generator: image = lo[v & lo_mask] ^ hi[v >> lo_bits].
struct ApplyTable {
  std::vector<std::uint32_t> lo, hi;
};

inline ApplyTable build_apply_table(const Gf2Matrix& m, int lo_bits, int hi_bits) {
  ApplyTable t;
  int n = m.rows();
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) cols[static_cast<std::size_t>(c)] = pack_column(m, c);
  t.lo.assign(std::size_t{1} << lo_bits, 0);
  for (std::uint32_t v = 1; v < t.lo.size(); ++v) {
    std::uint32_t low = v & (~v + 1);
    t.lo[v] = t.lo[v ^ low] ^ cols[static_cast<std::size_t>(__builtin_ctz(low))];
  }
  t.hi.assign(std::size_t{1} << hi_bits, 0);
  for (std::uint32_t v = 1; v < t.hi.size(); ++v) {
    std::uint32_t low = v & (~v + 1);
    t.hi[v] = t.hi[v ^ low] ^ cols[static_cast<std::size_t>(lo_bits + __builtin_ctz(low))];
  }
  return t;
}

}  // namespace detail

// Breadth-first orbit enumeration of <generators> acting on GF(2)^state_bits.
inline OrbitSummary enumerate_orbits(const std::vector<Gf2Matrix>& generators, int state_bits,
                                     const OrbitOptions& opts = OrbitOptions{}) {
  if (state_bits < 1 || state_bits > 31)
    throw std::invalid_argument("state space must use between 1 and 31 bits");
  if (!opts.force && state_bits > opts.max_state_bits)
    throw std::runtime_error(
        "state space of " + std::to_string(state_bits) + " bits exceeds the guard of " +
        std::to_string(opts.max_state_bits) +
        " bits; raise HM_MAX_STATE_BITS or request forced enumeration");
  for (const auto& m : generators)
    if (m.rows() != state_bits || m.cols() != state_bits)
      throw std::invalid_argument("generator dimension does not match the state space");

  const int lo_bits = (state_bits + 1) / 2;
  const int hi_bits = state_bits - lo_bits;
  const std::uint32_t lo_mask = (1u << lo_bits) - 1;
  const std::uint64_t n_states = std::uint64_t{1} << state_bits;

  std::vector<detail::ApplyTable> tables(generators.size());
  int n_threads = opts.threads > 1 ? opts.threads : 1;
  if (n_threads == 1) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      tables[i] = detail::build_apply_table(generators[i], lo_bits, hi_bits);
  } else {
    std::vector<std::thread> pool;
    std::size_t stride = (generators.size() + static_cast<std::size_t>(n_threads) - 1) /
                         static_cast<std::size_t>(n_threads);
    for (int w = 0; w < n_threads; ++w) {
      std::size_t begin = static_cast<std::size_t>(w) * stride;
      std::size_t end = std::min(begin + stride, generators.size());
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i)
          tables[i] = detail::build_apply_table(generators[i], lo_bits, hi_bits);
      });
    }
    for (auto& th : pool) th.join();
  }

  OrbitSummary out;
  out.state_bits = state_bits;
  out.n_states = n_states;

  std::vector<std::uint64_t> visited(static_cast<std::size_t>((n_states + 63) / 64), 0);
  auto is_visited = [&visited](std::uint32_t v) {
    return (visited[v >> 6] >> (v & 63)) & 1u;
  };
  auto mark = [&visited](std::uint32_t v) { visited[v >> 6] |= std::uint64_t{1} << (v & 63); };

  if (opts.record_partition) out.partition.assign(static_cast<std::size_t>(n_states), 0);

  std::vector<std::uint32_t> stack;
  for (std::uint64_t seed64 = 0; seed64 < n_states; ++seed64) {
    std::uint32_t seed = static_cast<std::uint32_t>(seed64);
    if (is_visited(seed)) continue;
    std::uint32_t orbit_index = static_cast<std::uint32_t>(out.orbit_reps.size());
    out.orbit_reps.push_back(seed);
    mark(seed);
    if (opts.record_partition) out.partition[seed] = orbit_index;
    stack.push_back(seed);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      ++size;
      std::uint32_t v_lo = v & lo_mask;
      std::uint32_t v_hi = v >> lo_bits;
      for (const auto& t : tables) {
        std::uint32_t w = t.lo[v_lo] ^ t.hi[v_hi];
        if (!is_visited(w)) {
          mark(w);
          if (opts.record_partition) out.partition[w] = orbit_index;
          stack.push_back(w);
        }
      }
    }
    out.orbit_sizes.push_back(size);
    if (size == 1) ++out.n_singletons;
    if (size > out.largest_orbit) out.largest_orbit = size;
  }
  out.n_orbits = out.orbit_reps.size();
  return out;
}

// Generators induced by all edge reflections of the complex.
inline std::vector<Gf2Matrix> graph_generators_on_p2(const CopelandComplex& cx,
                                                     const P2Projection& p) {
  std::vector<Gf2Matrix> gens;
  gens.reserve(static_cast<std::size_t>(cx.c1_dim()));
  for (int e = 0; e < cx.c1_dim(); ++e) gens.push_back(induced_on_p2(p, sigma_on_c1(cx, e)));
  return gens;
}

inline OrbitSummary graph_orbits(const CopelandComplex& cx, const P2Projection& p,
                                 const OrbitOptions& opts = OrbitOptions{}) {
  return enumerate_orbits(graph_generators_on_p2(cx, p), p.s_dim + p.x_dim, opts);
}

inline OrbitSummary theorem_orbits(const CopelandComplex& cx, const P2Projection& p,
                                   const OrbitOptions& opts = OrbitOptions{}) {
  return enumerate_orbits(theorem_group(cx, p).generators, p.s_dim + p.x_dim, opts);
}

// Closed-form totals for the full block-triangular group action.
inline std::uint64_t orbit_count_formula(int genus) {
  return (std::uint64_t{1} << (2 * genus)) + static_cast<std::uint64_t>(genus) - 1;
}

inline std::uint64_t component_count_formula(int genus) {
  return (std::uint64_t{1} << (2 * genus + 1)) + 2 * static_cast<std::uint64_t>(genus) - 3;
}

// Orbit invariant of a packed state.  States with vanishing succession part
// are fixed points and keyed individually (negative keys); otherwise the key
// is the weight class of the lifted boundary, an integer in 1..g-1.
inline std::int64_t orbit_invariant_key(const CopelandComplex& cx, const P2Projection& p,
                                        std::uint32_t state) {
  std::uint32_t x_part = state >> p.s_dim;
  if (x_part == 0) return -static_cast<std::int64_t>(state) - 1;
  Gf2Vector d(cx.n_vertices);
  for (int i = 0; i < p.x_dim; ++i)
    if ((x_part >> i) & 1) d += cx.boundary.column(cx.prime_edge_id(i + 1));
  int w = d.weight();
  if (w == 0 || w % 2 != 0)
    throw std::logic_error("boundary weight of a nonzero lift must be positive and even");
  int m = w / 2;
  int cls = std::min(m, 2 * cx.genus - 2 - m);
  return cls;
}

// The doubling rule: every orbit corresponds to two components except those
// in the self-paired middle weight class g-1.
inline std::uint64_t component_count_from_orbits(const CopelandComplex& cx,
                                                 const P2Projection& p,
                                                 const OrbitSummary& summary) {
  std::uint64_t self_paired = 0;
  for (std::uint32_t rep : summary.orbit_reps)
    if (orbit_invariant_key(cx, p, rep) == cx.genus - 1) ++self_paired;
  return 2 * summary.n_orbits - self_paired;
}

// Two deterministic enumerations describe the same set partition exactly when
// their orbit maps coincide (discovery order pins indices to minimal
// representatives).
inline bool partitions_identical(const OrbitSummary& a, const OrbitSummary& b) {
  if (a.partition.empty() || b.partition.empty())
    throw std::invalid_argument("partition comparison requires record_partition");
  return a.n_states == b.n_states && a.partition == b.partition;
}

}  // namespace hm
