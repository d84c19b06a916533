#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hm/copeland.hpp"
#include "hm/generators.hpp"

using hm::build_complex;
using hm::CopelandComplex;
using hm::Gf2Matrix;
using hm::Gf2Vector;

namespace {

// Direct reflection formula, independent of the matrix construction.
Gf2Vector reflect(const CopelandComplex& cx, int edge_id, const Gf2Vector& x) {
  Gf2Vector out = x;
  if (cx.chain_edge_pairing(x, edge_id)) out += cx.edge_chain(edge_id);
  return out;
}

Gf2Vector random_chain(const CopelandComplex& cx, std::mt19937_64& rng) {
  Gf2Vector v(cx.c1_dim());
  for (int i = 0; i < cx.c1_dim(); ++i) v.set(i, (rng() >> 11) & 1);
  return v;
}

}  // namespace

TEST_CASE("reflection matrices implement x + <x,e> e") {
  for (int g : {3, 5}) {
    CopelandComplex cx = build_complex(g);
    std::mt19937_64 rng(static_cast<std::uint64_t>(g));
    for (int e = 0; e < cx.c1_dim(); ++e) {
      Gf2Matrix s = hm::sigma_on_c1(cx, e);
      for (int t = 0; t < 6; ++t) {
        Gf2Vector x = random_chain(cx, rng);
        CHECK(s * x == reflect(cx, e, x));
      }
      CHECK(s * s == Gf2Matrix::identity(cx.c1_dim()));
    }
  }
}

TEST_CASE("hand-computed triangle reflection at genus 3") {
  CopelandComplex cx = build_complex(3);
  // The face starting at vertex 1 spans e_1 = (1,2), e_2 = (2,3) and closes
  // with the chord c = (1,3).
  const hm::Face* tri = nullptr;
  for (const auto& f : cx.faces)
    if (f.start == 1) tri = &f;
  REQUIRE(tri != nullptr);
  REQUIRE(tri->vertex_count == 3);
  int c = tri->chord;
  Gf2Vector e1 = cx.edge_chain(0), e2 = cx.edge_chain(1), cc = cx.edge_chain(c);

  // Conjugation word: outer, inner, outer.
  CHECK(hm::s_decomposition(cx, c) == std::vector<int>{1, 0, 1});

  Gf2Matrix s = hm::s_matrix(cx, c);
  CHECK(s * e1 == e2);  // the word carries e_1 across the face to e_2
  CHECK(s * cc == cc);

  Gf2Matrix sigma = hm::sigma_on_c1(cx, c);
  CHECK(sigma * e1 == e1 + cc);

  Gf2Matrix h = hm::h_generator(cx, c);
  Gf2Vector delta = cx.delta_of_chord(c);
  CHECK(h * e2 == e2 + delta);
  CHECK(h * cc == cc);

  // e_3 = (3,4) meets the chord in one endpoint.
  Gf2Vector e3 = cx.edge_chain(2);
  CHECK(s * e3 == e1 + e2 + e3);
  CHECK(sigma * e3 == e3 + cc);
  CHECK((h * (s * e3)) == e3 + cc);
}

TEST_CASE("quad conjugation words have length five") {
  CopelandComplex cx = build_complex(4);
  for (const auto& f : cx.faces) {
    auto word = hm::s_decomposition(cx, f.chord);
    CHECK(static_cast<int>(word.size()) == 2 * (f.vertex_count - 1) - 1);
    // Palindrome centred on the face's first succession edge.
    CHECK(word[word.size() / 2] == f.prime_edges.front());
    for (std::size_t i = 0; i < word.size(); ++i)
      CHECK(word[i] == word[word.size() - 1 - i]);
  }
  CHECK_THROWS_AS(hm::s_decomposition(cx, 0), std::invalid_argument);
}

TEST_CASE("chord reflections factor as h times the face word") {
  for (int g = 3; g <= 6; ++g) {
    CopelandComplex cx = build_complex(g);
    CAPTURE(g);
    for (const auto& f : cx.faces) {
      Gf2Matrix lhs = hm::sigma_on_c1(cx, f.chord);
      Gf2Matrix rhs = hm::h_generator(cx, f.chord) * hm::s_matrix(cx, f.chord);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("h is the identity on succession edges") {
  CopelandComplex cx = build_complex(4);
  for (int m = 1; m <= cx.n_vertices; ++m)
    CHECK(hm::h_generator(cx, cx.prime_edge_id(m)) == Gf2Matrix::identity(cx.c1_dim()));
}

TEST_CASE("block split and reassembly round-trip") {
  std::mt19937_64 rng(11);
  Gf2Matrix m(10, 10);
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 10; ++c) m.set(r, c, (rng() >> 9) & 1);
  hm::BlockView b = hm::split_blocks(m, 4);
  CHECK(hm::assemble_blocks(b) == m);
  CHECK(b.ss.rows() == 4);
  CHECK(b.xx.rows() == 6);
}

TEST_CASE("structural relation report passes for genus 3 through 6") {
  for (int g = 3; g <= 6; ++g) {
    CopelandComplex cx = build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    auto items = hm::verify_group_relations(cx, p, 0, 60);
    CAPTURE(g);
    REQUIRE(items.size() == 10);
    for (const auto& it : items) {
      CAPTURE(it.id, it.expected, it.observed);
      CHECK(it.pass);
    }
  }
}

TEST_CASE("generating set has the expected size and shape") {
  for (int g = 3; g <= 5; ++g) {
    CopelandComplex cx = build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    hm::TheoremGroup tg = hm::theorem_group(cx, p);
    CAPTURE(g);
    CHECK(tg.s_dim == 2 * g);
    CHECK(tg.x_dim == 4 * g - 6);
    CHECK(tg.n_elementary == 2 * g * (4 * g - 6));
    CHECK(tg.n_transposition == 4 * g - 5);
    CHECK(tg.generators.size() ==
          static_cast<std::size_t>(tg.n_elementary + tg.n_transposition));
    for (const auto& m : tg.generators) {
      hm::BlockView b = hm::split_blocks(m, tg.s_dim);
      CHECK(b.ss.is_identity());
      CHECK(b.xs.is_zero());
      // Every generator is an involution.
      CHECK(m * m == Gf2Matrix::identity(tg.s_dim + tg.x_dim));
    }
  }
  // Pinned smallest case: 36 elementaries plus 7 transpositions.
  CopelandComplex c3 = build_complex(3);
  hm::TheoremGroup tg3 = hm::theorem_group(c3, hm::p2_projection(c3));
  CHECK(tg3.generators.size() == 43);
}

TEST_CASE("transposition blocks satisfy symmetric group relations") {
  CopelandComplex cx = build_complex(4);
  hm::P2Projection p = hm::p2_projection(cx);
  hm::TheoremGroup tg = hm::theorem_group(cx, p);
  std::vector<Gf2Matrix> pi;
  for (int i = tg.n_elementary; i < static_cast<int>(tg.generators.size()); ++i)
    pi.push_back(hm::split_blocks(tg.generators[static_cast<std::size_t>(i)], tg.s_dim).xx);
  REQUIRE(static_cast<int>(pi.size()) == 4 * cx.genus - 5);
  Gf2Matrix id = Gf2Matrix::identity(tg.x_dim);
  for (std::size_t t = 0; t < pi.size(); ++t) {
    CHECK(pi[t] * pi[t] == id);
    if (t + 1 < pi.size()) CHECK(pi[t] * pi[t + 1] * pi[t] == pi[t + 1] * pi[t] * pi[t + 1]);
    for (std::size_t u = t + 2; u < pi.size(); ++u) CHECK(pi[t] * pi[u] == pi[u] * pi[t]);
  }
}

TEST_CASE("products of generators stay block triangular") {
  CopelandComplex cx = build_complex(3);
  hm::P2Projection p = hm::p2_projection(cx);
  hm::TheoremGroup tg = hm::theorem_group(cx, p);
  std::mt19937_64 rng(5);
  Gf2Matrix prod = Gf2Matrix::identity(tg.s_dim + tg.x_dim);
  for (int t = 0; t < 200; ++t) {
    prod = prod * tg.generators[static_cast<std::size_t>(rng() % tg.generators.size())];
    if (t % 20 != 0) continue;
    hm::BlockView b = hm::split_blocks(prod, tg.s_dim);
    CHECK(b.ss.is_identity());
    CHECK(b.xs.is_zero());
  }
}

TEST_CASE("induced quotient action of chord reflections keeps block form") {
  for (int g : {3, 4}) {
    CopelandComplex cx = build_complex(g);
    hm::P2Projection p = hm::p2_projection(cx);
    for (const auto& f : cx.faces) {
      Gf2Matrix ind = hm::induced_on_p2(p, hm::sigma_on_c1(cx, f.chord));
      hm::BlockView b = hm::split_blocks(ind, p.s_dim);
      CAPTURE(g, f.start);
      CHECK(b.ss.is_identity());
      CHECK(b.xs.is_zero());
      CHECK(ind * ind == Gf2Matrix::identity(p.s_dim + p.x_dim));
    }
  }
}
