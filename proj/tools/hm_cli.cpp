// Command-line front end: emit the labeled graph, the generator verification
// report, orbit enumerations, spectral invariants, or run the check suites.
//
// Exit codes: 0 on success (and all checks passing), 1 when a check suite
// reports failures, 2 for usage errors, domain errors and guard refusals.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hm/copeland.hpp"
#include "hm/generators.hpp"
#include "hm/invariants.hpp"
#include "hm/orbits.hpp"
#include "hm/report.hpp"

namespace {

int write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

std::string json_payload(const hm::ordered_json& j) { return j.dump(2) + "\n"; }

hm::ordered_json upp_json(const hm::UppInvariants& r) {
  hm::ordered_json j;
  j["p"] = r.p;
  j["g"] = r.g;
  j["v"] = r.v;
  j["w"] = r.w;
  j["m"] = r.m;
  j["m_tilde"] = r.m_tilde;
  j["deg_u1"] = r.deg_u1;
  j["deg_u2"] = r.deg_u2;
  j["toledo"] = r.toledo;
  j["toledo_opposite"] = r.toledo_opposite;
  j["line_degree"] = r.line_degree;
  j["h_plus"] = r.h_plus;
  j["h_minus"] = r.h_minus;
  j["in_range"] = r.in_range;
  return j;
}

std::string invariants_text(const hm::ordered_json& j) {
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_structured()) continue;
    out += it.key() + ": " + it.value().dump() + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annular-graph monodromy actions and spectral invariants"};
  app.require_subcommand(1);

  // ---- graph ----
  auto* graph_cmd = app.add_subcommand("graph", "Emit the labeled graph for one genus");
  int graph_genus = 3;
  std::string graph_emit = "json", graph_out;
  graph_cmd->add_option("--genus", graph_genus, "surface genus (>= 3)")->capture_default_str();
  graph_cmd->add_option("--emit", graph_emit, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  graph_cmd->add_option("--out", graph_out, "output path (default stdout)");

  // ---- generators ----
  auto* gen_cmd =
      app.add_subcommand("generators", "Emit generator counts and relation verification");
  int gen_genus = 3;
  std::uint64_t gen_seed = 0;
  std::string gen_emit = "json", gen_out;
  gen_cmd->add_option("--genus", gen_genus, "surface genus (>= 3)")->capture_default_str();
  gen_cmd->add_option("--seed", gen_seed, "seed for randomized closure checks")
      ->capture_default_str();
  gen_cmd->add_option("--emit", gen_emit, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  // ---- orbits ----
  auto* orb_cmd = app.add_subcommand("orbits", "Enumerate orbits on the packed state space");
  int orb_genus = 3, orb_threads = 1;
  bool orb_force = false;
  std::string orb_source = "group", orb_emit = "json", orb_out;
  orb_cmd->add_option("--genus", orb_genus, "surface genus (>= 3)")->capture_default_str();
  orb_cmd->add_option("--source", orb_source, "generating set")
      ->check(CLI::IsMember({"group", "graph"}))
      ->capture_default_str();
  orb_cmd->add_flag("--force", orb_force, "bypass the state-space size guard");
  orb_cmd->add_option("--threads", orb_threads, "threads for table construction")
      ->capture_default_str();
  orb_cmd->add_option("--emit", orb_emit, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  orb_cmd->add_option("--out", orb_out, "output path (default stdout)");

  // ---- invariants ----
  auto* inv_cmd = app.add_subcommand("invariants", "Compute spectral invariants");
  std::string inv_family = "upp", inv_emit = "json", inv_out;
  int inv_p = 1, inv_g = 2;
  long long inv_v = 0, inv_w = 0, inv_mtilde = 0;
  inv_cmd->add_option("--family", inv_family, "invariant family")
      ->check(CLI::IsMember({"upp", "supp", "sp", "component", "genera"}))
      ->capture_default_str();
  inv_cmd->add_option("--p", inv_p, "rank parameter")->capture_default_str();
  inv_cmd->add_option("--g", inv_g, "base curve genus (>= 2)")->capture_default_str();
  inv_cmd->add_option("--v", inv_v, "degree of the first bundle (upp)")->capture_default_str();
  inv_cmd->add_option("--w", inv_w, "degree of the second bundle (upp, supp)")
      ->capture_default_str();
  inv_cmd->add_option("--mtilde", inv_mtilde, "pairing invariant (component)")
      ->capture_default_str();
  inv_cmd->add_option("--emit", inv_emit, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  inv_cmd->add_option("--out", inv_out, "output path (default stdout)");

  // ---- check ----
  auto* check_cmd = app.add_subcommand("check", "Run verification suites");
  std::string check_suite = "all", check_emit = "text", check_out;
  hm::SuiteOptions sopts;
  check_cmd->add_option("--suite", check_suite, "suite selection")
      ->check(CLI::IsMember({"graph", "generators", "orbits", "invariants", "all"}))
      ->capture_default_str();
  check_cmd->add_option("--min-genus", sopts.min_genus, "smallest genus")->capture_default_str();
  check_cmd->add_option("--max-genus", sopts.max_genus, "largest genus")->capture_default_str();
  check_cmd->add_option("--seed", sopts.seed, "seed for randomized closure checks")
      ->capture_default_str();
  check_cmd->add_option("--threads", sopts.threads, "threads for orbit table construction")
      ->capture_default_str();
  check_cmd->add_flag("--force", sopts.force, "bypass the state-space size guard");
  check_cmd->add_option("--max-state-bits", sopts.max_state_bits, "state-space size guard")
      ->capture_default_str();
  check_cmd->add_option("--emit", check_emit, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  check_cmd->add_option("--out", check_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (graph_cmd->parsed()) {
      hm::CopelandComplex cx = hm::build_complex(graph_genus);
      return write_output(graph_emit == "json" ? json_payload(hm::graph_json(cx))
                                               : hm::graph_text(cx),
                          graph_out);
    }

    if (gen_cmd->parsed()) {
      hm::CopelandComplex cx = hm::build_complex(gen_genus);
      hm::P2Projection p = hm::p2_projection(cx);
      hm::ordered_json j = hm::generators_json(cx, p, gen_seed);
      if (gen_emit == "json") return write_output(json_payload(j), gen_out);
      std::string text = "genus " + std::to_string(gen_genus) + ": " +
                         j["n_generators"].dump() + " generators (" + j["n_elementary"].dump() +
                         " elementary, " + j["n_transposition"].dump() + " transpositions)\n";
      for (const auto& it : j["relations"])
        text += std::string(it["pass"].get<bool>() ? "  [PASS] " : "  [FAIL] ") +
                it["id"].get<std::string>() + "\n";
      return write_output(text, gen_out);
    }

    if (orb_cmd->parsed()) {
      hm::CopelandComplex cx = hm::build_complex(orb_genus);
      hm::P2Projection p = hm::p2_projection(cx);
      hm::OrbitOptions opts = hm::default_orbit_options();
      opts.force = orb_force;
      opts.threads = orb_threads;
      hm::OrbitSummary s = orb_source == "graph" ? hm::graph_orbits(cx, p, opts)
                                                 : hm::theorem_orbits(cx, p, opts);
      if (orb_emit == "json")
        return write_output(json_payload(hm::orbits_json(cx, p, s, orb_source)), orb_out);
      std::string text = "genus " + std::to_string(orb_genus) + " (" + orb_source + "): " +
                         std::to_string(s.n_orbits) + " orbits over " +
                         std::to_string(s.n_states) + " states, " +
                         std::to_string(s.n_singletons) + " singletons, largest " +
                         std::to_string(s.largest_orbit) + "\n";
      return write_output(text, orb_out);
    }

    if (inv_cmd->parsed()) {
      hm::ordered_json j;
      j["format"] = "hm-invariants/1";
      j["family"] = inv_family;
      if (inv_family == "upp") {
        hm::ordered_json body = upp_json(hm::upp_from_degrees(inv_p, inv_g, inv_v, inv_w));
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
      } else if (inv_family == "supp") {
        hm::SuppInvariants s = hm::supp_invariants(inv_p, inv_g, inv_w);
        j["p"] = s.p;
        j["g"] = s.g;
        j["w"] = s.w;
        j["m"] = s.m;
        j["m_tilde"] = s.m_tilde;
        j["full"] = upp_json(s.full);
      } else if (inv_family == "sp") {
        hm::SpInvariants s = hm::sp2p2p_invariants(inv_p, inv_g);
        j["p"] = s.p;
        j["g"] = s.g;
        j["moduli_dim"] = s.moduli_dim;
        j["base_dim"] = s.base_dim;
        j["fiber_dim"] = s.fiber_dim;
        j["spectral_genus"] = s.spectral_genus;
        j["line_degree"] = s.line_degree;
      } else if (inv_family == "component") {
        hm::UppComponent c = hm::upp_component(inv_p, inv_g, inv_mtilde);
        j["p"] = c.p;
        j["g"] = c.g;
        j["m_tilde"] = c.m_tilde;
        j["rank_bound"] = c.rank_bound;
        j["total"] = c.total;
      } else {  // genera
        j["p"] = inv_p;
        j["g"] = inv_g;
        j["classical"] = hm::classical_spectral_genus(inv_p, inv_g);
        j["pairing_cover"] = hm::upp_spectral_genus(inv_p, inv_g);
        j["involution_quotient"] = hm::upp_quotient_genus(inv_p, inv_g);
        j["so_even_desingularised"] = hm::so_even_desing_genus(inv_p, inv_g);
        j["hitchin_gl"] = hm::hitchin_base_dim(hm::GroupFamily::GL, inv_p, inv_g);
        j["hitchin_sl"] = hm::hitchin_base_dim(hm::GroupFamily::SL, inv_p, inv_g);
        j["hitchin_sp"] = hm::hitchin_base_dim(hm::GroupFamily::Sp, inv_p, inv_g);
        j["hitchin_so_odd"] = hm::hitchin_base_dim(hm::GroupFamily::SOOdd, inv_p, inv_g);
        j["hitchin_so_even"] = hm::hitchin_base_dim(hm::GroupFamily::SOEven, inv_p, inv_g);
      }
      return write_output(inv_emit == "json" ? json_payload(j) : invariants_text(j), inv_out);
    }

    if (check_cmd->parsed()) {
      hm::SuiteReport rep = hm::run_suite(check_suite, sopts);
      std::string payload = check_emit == "json"  ? json_payload(hm::report_json(rep))
                            : check_emit == "csv" ? hm::report_csv(rep)
                                                  : hm::report_text(rep);
      int io = write_output(payload, check_out);
      if (io != 0) return io;
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
