#pragma once

// Check suites and byte-stable emission.  Each suite re-runs a family of
// structural verifications and reports one CheckItem per property; emission
// to JSON, CSV or plain text is deterministic byte-for-byte across runs.
// Wall-clock timings are always measured but only included in emitted output
// when HM_EMIT_TIMINGS=1, so that default output never varies between runs.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hm/copeland.hpp"
#include "hm/generators.hpp"
#include "hm/invariants.hpp"
#include "hm/orbits.hpp"

namespace hm {

using ordered_json = nlohmann::ordered_json;

inline bool emit_timings() {
  const char* e = std::getenv("HM_EMIT_TIMINGS");
  return e != nullptr && std::string(e) == "1";
}

struct SuiteOptions {
  int min_genus = 3;
  int max_genus = 4;
  std::uint64_t seed = 0;
  int threads = 1;
  bool force = false;
  int max_state_bits = 30;

  OrbitOptions orbit_options() const {
    OrbitOptions o = default_orbit_options();
    if (max_state_bits != 30) o.max_state_bits = max_state_bits;
    o.force = force;
    o.threads = threads;
    return o;
  }
};

struct SuiteResult {
  std::string suite;
  int genus = 0;  // 0 for genus-independent suites
  std::vector<CheckItem> items;
  double elapsed_seconds = 0.0;

  bool pass() const { return checklist_passes(items); }
};

struct SuiteReport {
  std::vector<SuiteResult> results;
  bool all_pass = true;
};

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline SuiteResult run_graph_suite(int genus) {
  SuiteResult r;
  r.suite = "graph";
  r.genus = genus;
  CopelandComplex cx = build_complex(genus);
  r.items = validate_checklist(cx);
  return r;
}

inline SuiteResult run_generator_suite(int genus, std::uint64_t seed) {
  SuiteResult r;
  r.suite = "generators";
  r.genus = genus;
  CopelandComplex cx = build_complex(genus);
  P2Projection p = p2_projection(cx);
  r.items = verify_group_relations(cx, p, seed, 100);
  return r;
}

inline SuiteResult run_orbit_suite(int genus, const OrbitOptions& base_opts) {
  SuiteResult r;
  r.suite = "orbits";
  r.genus = genus;
  CopelandComplex cx = build_complex(genus);
  P2Projection p = p2_projection(cx);

  OrbitOptions opts = base_opts;
  bool exhaustive = (p.s_dim + p.x_dim) <= 18;  // full partitions only when cheap
  opts.record_partition = exhaustive;

  OrbitSummary group = theorem_orbits(cx, p, opts);
  OrbitSummary graph = graph_orbits(cx, p, opts);

  r.items.push_back(make_check("O1.orbit_count", group.n_orbits == orbit_count_formula(genus),
                               std::to_string(orbit_count_formula(genus)),
                               std::to_string(group.n_orbits)));

  std::uint64_t expect_singletons = std::uint64_t{1} << (2 * genus);
  bool reps_lead = true;
  for (std::uint64_t i = 0; i < expect_singletons && i < group.orbit_reps.size(); ++i)
    if (group.orbit_reps[i] != i || group.orbit_sizes[i] != 1) reps_lead = false;
  r.items.push_back(make_check(
      "O2.singletons",
      group.n_singletons == expect_singletons && reps_lead,
      std::to_string(expect_singletons) + " fixed states, enumerated first",
      std::to_string(group.n_singletons) + (reps_lead ? ", leading" : ", misplaced")));

  if (exhaustive) {
    r.items.push_back(make_check("O3.partition_agreement",
                                 partitions_identical(graph, group),
                                 "identical state partitions from both generating sets",
                                 graph.n_orbits == group.n_orbits ? "identical" : "different"));
  } else {
    r.items.push_back(make_check("O3.count_agreement", graph.n_orbits == group.n_orbits,
                                 "equal orbit totals from both generating sets",
                                 std::to_string(graph.n_orbits) + " vs " +
                                     std::to_string(group.n_orbits)));
  }

  bool keys_ok = true;
  std::vector<std::int64_t> rep_keys(group.orbit_reps.size());
  for (std::size_t k = 0; k < group.orbit_reps.size(); ++k)
    rep_keys[k] = orbit_invariant_key(cx, p, group.orbit_reps[k]);
  if (exhaustive) {
    for (std::uint64_t v = 0; v < group.n_states && keys_ok; ++v)
      if (orbit_invariant_key(cx, p, static_cast<std::uint32_t>(v)) !=
          rep_keys[group.partition[static_cast<std::uint32_t>(v)]])
        keys_ok = false;
  }
  std::set<std::int64_t> distinct(rep_keys.begin(), rep_keys.end());
  keys_ok = keys_ok && distinct.size() == group.n_orbits;
  r.items.push_back(make_check("O4.invariant_keys", keys_ok,
                               "one key per orbit, constant along orbits",
                               std::to_string(distinct.size()) + " keys for " +
                                   std::to_string(group.n_orbits) + " orbits"));

  std::uint64_t middle = 0;
  for (std::int64_t k : rep_keys)
    if (k == genus - 1) ++middle;
  std::uint64_t components = component_count_from_orbits(cx, p, group);
  r.items.push_back(make_check(
      "O5.components",
      components == component_count_formula(genus) && middle == 1,
      std::to_string(component_count_formula(genus)) + " with one self-paired class",
      std::to_string(components) + " with " + std::to_string(middle) + " self-paired"));

  return r;
}

inline SuiteResult run_invariant_suite() {
  SuiteResult r;
  r.suite = "invariants";
  r.genus = 0;

  // Pinned examples.
  {
    UppInvariants a = upp_from_degrees(2, 2, -1, 0);
    UppInvariants b = upp_from_degrees(1, 2, 0, 0);
    SuppInvariants s0 = supp_invariants(2, 2, 0);
    SuppInvariants s1 = supp_invariants(1, 2, 1);
    SpInvariants c = sp2p2p_invariants(1, 2);
    SpInvariants d = sp2p2p_invariants(2, 3);
    UppComponent k = upp_component(2, 2, 0);
    bool ok = a.m == 11 && a.m_tilde == 5 && a.deg_u1 == 3 && a.deg_u2 == 4 && b.m == 2 &&
              b.m_tilde == 2 && b.toledo == 0 && s0.m == 12 && s0.m_tilde == 4 && s1.m == 2 &&
              s1.m_tilde == 4 && c.moduli_dim == 10 && c.base_dim == 3 && c.fiber_dim == 7 &&
              d.moduli_dim == 72 && d.base_dim == 20 && d.fiber_dim == 52 &&
              classical_spectral_genus(2, 2) == 5 && upp_quotient_genus(2, 2) == 7 &&
              so_even_desing_genus(2, 2) == 13 && direct_image_degree(0, 2, 2, 5) == -2 &&
              k.rank_bound == 7 && k.total == 17;
    r.items.push_back(make_check("I1.pinned_examples", ok, "all reference values reproduced",
                                 ok ? "reproduced" : "mismatch"));
  }

  // Exact round trip and internal identities over the full sweep window.
  {
    bool ok = true;
    long long cases = 0;
    for (int p = 1; p <= 5 && ok; ++p)
      for (int g = 2; g <= 10 && ok; ++g)
        for (long long v = -50; v <= 50 && ok; ++v)
          for (long long w = -50; w <= 50; ++w) {
            UppInvariants f = upp_from_degrees(p, g, v, w);
            UppInvariants back = upp_from_invariants(p, g, f.m, f.m_tilde);
            ++cases;
            if (back.v != v || back.w != w || (f.m - f.m_tilde) % 2 != 0 ||
                f.h_plus - f.h_minus != f.line_degree || f.line_degree != f.toledo ||
                f.deg_u1 + f.deg_u2 != f.m - 2ll * p * (g - 1) ||
                f.in_range != (f.m_tilde >= 0 && f.m_tilde <= 4ll * p * (g - 1))) {
              ok = false;
              break;
            }
          }
    r.items.push_back(make_check("I2.round_trip", ok,
                                 "exact inversion over p<=5, g<=10, |v|,|w|<=50",
                                 std::to_string(cases) + " tuples checked"));
  }

  // Balanced locus consistency.
  {
    bool ok = true;
    for (int p = 1; p <= 5 && ok; ++p)
      for (int g = 2; g <= 10 && ok; ++g)
        for (long long w = -50; w <= 50; ++w) {
          SuppInvariants s = supp_invariants(p, g, w);
          if (s.m != (4ll * p * p - 2 * p) * (g - 1) ||
              s.m_tilde != 2 * w + 2ll * p * (g - 1) || s.full.v != -w) {
            ok = false;
            break;
          }
        }
    r.items.push_back(make_check("I3.balanced_locus", ok,
                                 "fixed first invariant, linear second invariant",
                                 ok ? "holds" : "violated"));
  }

  // Dimension identities.
  {
    bool ok = true;
    for (int p = 1; p <= 5 && ok; ++p)
      for (int g = 2; g <= 10; ++g) {
        SpInvariants s = sp2p2p_invariants(p, g);
        if (s.moduli_dim != s.base_dim + s.fiber_dim ||
            3 * s.spectral_genus - 3 != 12ll * p * p * (g - 1) ||
            hitchin_base_dim(GroupFamily::Sp, p, g) != s.base_dim ||
            hitchin_base_dim(GroupFamily::GL, 2 * p, g) != upp_spectral_genus(p, g)) {
          ok = false;
          break;
        }
      }
    r.items.push_back(make_check("I4.dimension_identities", ok,
                                 "moduli = base + fiber; base matches section counts",
                                 ok ? "holds" : "violated"));
  }

  // Component data across the admissible half-range.
  {
    bool ok = true;
    for (int p = 1; p <= 5 && ok; ++p)
      for (int g = 2; g <= 10 && ok; ++g)
        for (long long mt = 0; mt < 2ll * p * (g - 1); ++mt) {
          UppComponent k = upp_component(p, g, mt);
          if (k.rank_bound != (4ll * p - 1) * (g - 1) - mt ||
              k.total != upp_spectral_genus(p, g)) {
            ok = false;
            break;
          }
        }
    r.items.push_back(make_check("I5.component_range", ok,
                                 "rank bound linear in the invariant, constant total",
                                 ok ? "holds" : "violated"));
  }

  return r;
}

inline SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (opts.min_genus < 3 || opts.max_genus < opts.min_genus)
    throw std::invalid_argument("genus range must satisfy 3 <= min <= max");
  SuiteReport rep;
  auto add = [&rep](SuiteResult&& r, double seconds) {
    r.elapsed_seconds = seconds;
    rep.all_pass = rep.all_pass && r.pass();
    rep.results.push_back(std::move(r));
  };
  auto timed = [&add](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    auto t1 = std::chrono::steady_clock::now();
    add(std::move(r), std::chrono::duration<double>(t1 - t0).count());
  };

  bool known = false;
  if (suite == "graph" || suite == "all") {
    known = true;
    for (int g = opts.min_genus; g <= opts.max_genus; ++g)
      timed([g] { return run_graph_suite(g); });
  }
  if (suite == "generators" || suite == "all") {
    known = true;
    for (int g = opts.min_genus; g <= opts.max_genus; ++g)
      timed([g, &opts] { return run_generator_suite(g, opts.seed); });
  }
  if (suite == "orbits" || suite == "all") {
    known = true;
    OrbitOptions oo = opts.orbit_options();
    for (int g = opts.min_genus; g <= opts.max_genus; ++g)
      timed([g, &oo] { return run_orbit_suite(g, oo); });
  }
  if (suite == "invariants" || suite == "all") {
    known = true;
    timed([] { return run_invariant_suite(); });
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return rep;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

inline ordered_json report_json(const SuiteReport& rep) {
  bool timings = emit_timings();
  ordered_json j;
  j["format"] = "hm-report/1";
  ordered_json suites = ordered_json::array();
  for (const auto& r : rep.results) {
    ordered_json s;
    s["suite"] = r.suite;
    if (r.genus > 0) s["genus"] = r.genus;
    s["pass"] = r.pass();
    if (timings) s["elapsed_seconds"] = r.elapsed_seconds;
    ordered_json items = ordered_json::array();
    for (const auto& it : r.items) {
      ordered_json o;
      o["id"] = it.id;
      o["pass"] = it.pass;
      o["expected"] = it.expected;
      o["observed"] = it.observed;
      items.push_back(o);
    }
    s["items"] = items;
    suites.push_back(s);
  }
  j["suites"] = suites;
  j["all_pass"] = rep.all_pass;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string report_csv(const SuiteReport& rep) {
  bool timings = emit_timings();
  std::ostringstream os;
  os << "suite,genus,item,pass,expected,observed";
  if (timings) os << ",elapsed_seconds";
  os << "\n";
  for (const auto& r : rep.results)
    for (const auto& it : r.items) {
      os << r.suite << "," << r.genus << "," << csv_field(it.id) << ","
         << (it.pass ? "true" : "false") << "," << csv_field(it.expected) << ","
         << csv_field(it.observed);
      if (timings) os << "," << r.elapsed_seconds;
      os << "\n";
    }
  return os.str();
}

inline std::string report_text(const SuiteReport& rep) {
  bool timings = emit_timings();
  std::ostringstream os;
  int total = 0, passed = 0;
  for (const auto& r : rep.results) {
    os << "== " << r.suite;
    if (r.genus > 0) os << " (genus " << r.genus << ")";
    if (timings) os << " [" << r.elapsed_seconds << "s]";
    os << "\n";
    for (const auto& it : r.items) {
      ++total;
      if (it.pass) ++passed;
      os << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << it.id << ": expected " << it.expected
         << "; observed " << it.observed << "\n";
    }
  }
  os << (rep.all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << " (" << passed << "/"
     << total << ")\n";
  return os.str();
}

// Serialised description of the labeled graph.
inline ordered_json graph_json(const CopelandComplex& cx) {
  ordered_json j;
  j["format"] = "copeland/1";
  j["genus"] = cx.genus;
  j["vertices"] = cx.n_vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& e : cx.edges) {
    ordered_json o;
    o["id"] = e.id;
    o["v1"] = e.v1;
    o["v2"] = e.v2;
    o["label"] = label_str(e.label);
    o["klass"] = e.klass == EdgeClass::Prime ? "prime" : "chord";
    edges.push_back(o);
  }
  j["edges"] = edges;
  ordered_json faces = ordered_json::array();
  for (const auto& f : cx.faces) {
    ordered_json o;
    o["start"] = f.start;
    o["vertices"] = f.vertex_count;
    ordered_json ids = ordered_json::array();
    for (int eid : f.prime_edges) ids.push_back(eid);
    o["prime_edges"] = ids;
    o["chord"] = f.chord;
    faces.push_back(o);
  }
  j["faces"] = faces;
  ordered_json rel;
  rel["x1"] = cx.x1.to_hex();
  rel["x2"] = cx.x2.to_hex();
  rel["x3"] = cx.x3.to_hex();
  rel["x4"] = cx.x4.to_hex();
  rel["x5"] = cx.x5.to_hex();
  j["relations"] = rel;
  ordered_json special;
  special["u_chord"] = cx.special_u_chord;
  special["l_chord"] = cx.special_l_chord;
  special["dropped_prime"] = cx.dropped_prime;
  j["special"] = special;
  ordered_json beta = ordered_json::array();
  for (const auto& b : cx.basis_beta_tilde) beta.push_back(b.to_hex());
  j["basis_beta_tilde"] = beta;
  return j;
}

inline std::string graph_text(const CopelandComplex& cx) {
  std::ostringstream os;
  os << "genus " << cx.genus << ": " << cx.n_vertices << " vertices, " << cx.edges.size()
     << " edges, " << cx.faces.size() << " faces\n";
  for (const auto& e : cx.edges)
    os << "  edge " << e.id << " (" << e.v1 << "," << e.v2 << ") " << label_str(e.label) << " "
       << (e.klass == EdgeClass::Prime ? "prime" : "chord") << "\n";
  return os.str();
}

inline ordered_json generators_json(const CopelandComplex& cx, const P2Projection& p,
                                    std::uint64_t seed) {
  TheoremGroup tg = theorem_group(cx, p);
  ordered_json j;
  j["format"] = "hm-generators/1";
  j["genus"] = cx.genus;
  j["s_dim"] = tg.s_dim;
  j["x_dim"] = tg.x_dim;
  j["n_elementary"] = tg.n_elementary;
  j["n_transposition"] = tg.n_transposition;
  j["n_generators"] = tg.n_elementary + tg.n_transposition;
  ordered_json items = ordered_json::array();
  for (const auto& it : verify_group_relations(cx, p, seed, 100)) {
    ordered_json o;
    o["id"] = it.id;
    o["pass"] = it.pass;
    o["expected"] = it.expected;
    o["observed"] = it.observed;
    items.push_back(o);
  }
  j["relations"] = items;
  return j;
}

inline ordered_json orbits_json(const CopelandComplex& cx, const P2Projection& p,
                                const OrbitSummary& s, const std::string& source) {
  ordered_json j;
  j["format"] = "hm-orbits/1";
  j["genus"] = cx.genus;
  j["source"] = source;
  j["state_bits"] = s.state_bits;
  j["n_states"] = s.n_states;
  j["n_orbits"] = s.n_orbits;
  j["n_singletons"] = s.n_singletons;
  j["largest_orbit"] = s.largest_orbit;
  j["orbit_count_formula"] = orbit_count_formula(cx.genus);
  j["component_count_formula"] = component_count_formula(cx.genus);
  j["components_from_orbits"] = component_count_from_orbits(cx, p, s);
  ordered_json classes;
  for (std::size_t k = 0; k < s.orbit_reps.size(); ++k) {
    std::int64_t key = orbit_invariant_key(cx, p, s.orbit_reps[k]);
    if (key < 0) continue;  // singletons: keyed by their own state
    std::string name = "class_" + std::to_string(key);
    if (!classes.contains(name)) {
      ordered_json o;
      o["representative"] = s.orbit_reps[k];
      o["size"] = s.orbit_sizes[k];
      classes[name] = o;
    }
  }
  j["classes"] = classes;
  return j;
}

}  // namespace hm
