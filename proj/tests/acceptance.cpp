// Acceptance gate: one line per criterion, pinned expectations and time
// bounds, exit 0 only if every criterion passes.
//
// Usage: hm_acceptance --cli /path/to/hm

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hm/copeland.hpp"
#include "hm/generators.hpp"
#include "hm/invariants.hpp"
#include "hm/orbits.hpp"
#include "hm/report.hpp"

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Orbit totals with per-genus time bounds.
void criterion_1() {
  struct Case {
    int genus;
    std::uint64_t expect;
    double bound;
  };
  const std::array<Case, 3> cases = {{{3, 66, 1.0}, {4, 259, 5.0}, {5, 1028, 60.0}}};
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    hm::CopelandComplex cx = hm::build_complex(c.genus);
    hm::P2Projection p = hm::p2_projection(cx);
    hm::OrbitSummary s = hm::theorem_orbits(cx, p);
    double dt = seconds_since(t0);
    bool ok = s.n_orbits == c.expect && dt < c.bound;
    pass = pass && ok;
    if (!detail.empty()) detail += ", ";
    detail += "g=" + std::to_string(c.genus) + ": " + std::to_string(s.n_orbits) + " in " +
              std::to_string(dt).substr(0, 5) + "s/" + std::to_string(c.bound).substr(0, 4) + "s";
  }
  report(1, pass, "orbit totals 66/259/1028 within time bounds", detail);
}

// Identical partitions from edge reflections and from the generated group.
void criterion_2() {
  bool pass = true;
  std::string detail;
  for (int g : {3, 4}) {
    hm::CopelandComplex cx = hm::build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    hm::OrbitOptions opts;
    opts.record_partition = true;
    bool same = hm::partitions_identical(hm::graph_orbits(cx, p, opts),
                                         hm::theorem_orbits(cx, p, opts));
    pass = pass && same;
    if (!detail.empty()) detail += ", ";
    detail += "g=" + std::to_string(g) + (same ? ": identical" : ": DIFFERENT");
  }
  report(2, pass, "reflection orbits equal generated-group orbits", detail);
}

// Structural relations of the generator family.
void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string first_fail;
  for (int g = 3; g <= 6; ++g) {
    hm::CopelandComplex cx = hm::build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    for (const auto& it : hm::verify_group_relations(cx, p, 0, 100))
      if (!it.pass) {
        pass = false;
        if (first_fail.empty()) first_fail = "g=" + std::to_string(g) + " " + it.id;
      }
  }
  double dt = seconds_since(t0);
  pass = pass && dt < 10.0;
  report(3, pass, "generator relations hold for genus 3..6 within 10s",
         (first_fail.empty() ? "all relations hold" : first_fail) + ", " +
             std::to_string(dt).substr(0, 5) + "s");
}

// Chain-level dimensions and bases.
void criterion_4() {
  bool pass = true;
  std::string first_fail;
  for (int g = 3; g <= 10; ++g) {
    hm::CopelandComplex cx = hm::build_complex(g);
    int r = hm::rank(cx.boundary);
    auto kernel = hm::kernel_basis(cx.boundary);
    bool even = true;
    for (int e = 0; e < cx.c1_dim(); ++e)
      if (cx.boundary.column(e).weight() % 2 != 0) even = false;
    std::vector<hm::Gf2Vector> z1 = cx.delta;
    z1.push_back(cx.x4);
    bool basis = hm::rank(hm::Gf2Matrix::from_rows(z1)) == 2 * g + 3;
    for (const auto& v : z1)
      if (!(cx.boundary * v).is_zero()) basis = false;
    std::vector<hm::Gf2Vector> rel = {cx.x1, cx.x2, cx.x3, cx.x4, cx.x5};
    bool rel4 = hm::rank(hm::Gf2Matrix::from_rows(rel)) == 4;
    bool ok = r == 4 * g - 5 && static_cast<int>(kernel.size()) == 2 * g + 3 && even && basis &&
              rel4;
    pass = pass && ok;
    if (!ok && first_fail.empty()) first_fail = "g=" + std::to_string(g);
  }
  report(4, pass, "boundary rank 4g-5, cycle space 2g+3 with explicit basis, genus 3..10",
         first_fail.empty() ? "all dimensions as expected" : first_fail);
}

// Cycles fixed pointwise by every reflection.
void criterion_5() {
  bool pass = true;
  std::string first_fail;
  for (int g = 3; g <= 8; ++g) {
    hm::CopelandComplex cx = hm::build_complex(g);
    auto kernel = hm::kernel_basis(cx.boundary);
    for (int e = 0; e < cx.c1_dim(); ++e) {
      hm::Gf2Matrix s = hm::sigma_on_c1(cx, e);
      for (const auto& z : kernel)
        if (!(s * z == z)) {
          pass = false;
          if (first_fail.empty())
            first_fail = "g=" + std::to_string(g) + " edge " + std::to_string(e);
        }
    }
  }
  report(5, pass, "cycle space fixed pointwise by all reflections, genus 3..8",
         first_fail.empty() ? "fixed everywhere" : first_fail);
}

// Component counts: closed form versus enumeration.
void criterion_6() {
  bool pass = true;
  std::string detail;
  for (int g : {3, 4}) {
    hm::CopelandComplex cx = hm::build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    hm::OrbitSummary s = hm::theorem_orbits(cx, p);
    std::uint64_t from_orbits = hm::component_count_from_orbits(cx, p, s);
    std::uint64_t formula = hm::component_count_formula(g);
    std::uint64_t middle = 0;
    for (std::uint32_t rep : s.orbit_reps)
      if (hm::orbit_invariant_key(cx, p, rep) == g - 1) ++middle;
    bool ok = from_orbits == formula && middle == 1;
    pass = pass && ok;
    if (!detail.empty()) detail += ", ";
    detail += "g=" + std::to_string(g) + ": " + std::to_string(from_orbits) + "/" +
              std::to_string(formula);
  }
  report(6, pass, "component totals from orbits match the closed form", detail);
}

// Exact invariant arithmetic over the full sweep window.
void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  long long cases = 0;
  for (int p = 1; p <= 5 && pass; ++p)
    for (int g = 2; g <= 10 && pass; ++g)
      for (long long v = -50; v <= 50 && pass; ++v)
        for (long long w = -50; w <= 50; ++w) {
          hm::UppInvariants f = hm::upp_from_degrees(p, g, v, w);
          hm::UppInvariants back = hm::upp_from_invariants(p, g, f.m, f.m_tilde);
          ++cases;
          if (back.v != v || back.w != w || f.h_plus - f.h_minus != f.toledo ||
              f.deg_u1 + f.deg_u2 != f.m - 2ll * p * (g - 1) ||
              f.in_range != (std::llabs(f.toledo) <= 2ll * p * (g - 1))) {
            pass = false;
            break;
          }
        }
  double dt = seconds_since(t0);
  pass = pass && dt < 5.0;
  report(7, pass, "exact invariant round trips over p<=5, g<=10, |v|,|w|<=50 within 5s",
         std::to_string(cases) + " tuples in " + std::to_string(dt).substr(0, 5) + "s");
}

// Byte-identical CLI reruns.
void criterion_8(const std::string& cli_path) {
  if (cli_path.empty()) {
    report(8, false, "byte-identical CLI reruns", "no --cli path provided");
    return;
  }
  unsetenv("HM_EMIT_TIMINGS");
  std::string cmd = "\"" + cli_path + "\" check --suite all --max-genus 4 2>/dev/null";
  auto run = [&cmd](std::string& out) -> int {
    out.clear();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return status == -1 ? -1 : WEXITSTATUS(status);
  };
  std::string first, second;
  int c1 = run(first);
  int c2 = run(second);
  bool pass = c1 == 0 && c2 == 0 && !first.empty() && first == second;
  report(8, pass, "two runs of 'check --suite all --max-genus 4' are byte-identical",
         "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + ", " +
             std::to_string(first.size()) + " vs " + std::to_string(second.size()) + " bytes" +
             (first == second ? ", equal" : ", DIFFERENT"));
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(cli_path);

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria failed\n", g_failures);
  return 1;
}
