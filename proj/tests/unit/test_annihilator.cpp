#include <doctest.h>

#include "lpa/annihilator.hpp"
#include "lpa/decision.hpp"
#include "lpa/expression.hpp"
#include "lpa/structure.hpp"

#include <random>

using namespace lpa;

namespace {

const FieldSpec kQi = FieldSpec::gaussian_conj();
const char* const kLine = "u; v; e: u -> v;";

struct Lab {
  GraphRef g;
  FDAlgebra a;
  explicit Lab(std::string_view text, FieldSpec f = kQi) : g(share(parse_graph(text))), a(g, f) {}
  Element operator()(std::string_view t) const { return parse_element(g, a.field(), t); }
  SubspaceBasis span(std::initializer_list<const char*> xs) const {
    SubspaceBasis n;
    for (const char* x : xs) n.vectors.push_back(a.coords((*this)(x)));
    return n;
  }
};

bool same_span(const FDAlgebra& a, const SubspaceBasis& x, const SubspaceBasis& y) {
  if (x.dim() != y.dim()) return false;
  for (const Coords& v : y.vectors)
    if (!contains(a, x, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("finite-dimensional model") {
  Lab L(kLine);
  CHECK(L.a.dimension() == 4);
  CHECK_THROWS_AS(FDAlgebra(share(gallery("loop")), kQi), std::invalid_argument);
  for (const char* name : {"line(2)", "line(4)", "hooked(line(1))"}) {
    Graph g = gallery(name);
    if (!is_acyclic(g)) continue;
    FDAlgebra a(share(g), kQi);
    std::size_t expected = 0;
    for (VertexId w : sinks(g)) expected += paths_ending_at(g, w, false).size() * paths_ending_at(g, w, false).size();
    CHECK(a.dimension() == expected);
  }
  // Coordinates round trip and agree with element arithmetic.
  for (std::size_t i = 0; i < L.a.dimension(); ++i)
    for (std::size_t j = 0; j < L.a.dimension(); ++j) {
      Element bi = L.a.basis_element(i), bj = L.a.basis_element(j);
      CHECK(L.a.element(L.a.multiply(L.a.coords(bi), L.a.coords(bj))) == bi * bj);
      CHECK(L.a.element(L.a.star(L.a.coords(bi))) == bi.star());
    }
}

TEST_CASE("right annihilators on the line algebra") {
  Lab L(kLine);
  CHECK(right_annihilator_fd(L.a, {L("0")}).dim() == 4);
  CHECK(right_annihilator_fd(L.a, {L("1")}).dim() == 0);
  auto n = right_annihilator_fd(L.a, {L("e")});
  CHECK(same_span(L.a, n, L.span({"u", "e"})));

  // Independent check through the matrix model: a is in ann_r(e) iff
  // embed(e) embed(a) = 0.
  StructureMap sm(L.g);
  auto ee = sm.embed(L("e"));
  std::size_t killed = 0;
  for (std::size_t k = 0; k < L.a.dimension(); ++k) {
    Element b = L.a.basis_element(k);
    bool zero = StructureMap::multiply(ee, sm.embed(b))[0].entries.is_zero();
    CHECK(zero == contains(L.a, n, L.a.coords(b)));
    killed += zero;
  }
  CHECK(killed == n.dim());
}

TEST_CASE("generators") {
  Lab L(kLine);
  SubspaceBasis zero;
  CHECK(idempotent_generator(L.a, zero)->is_zero());
  CHECK(projection_generator(L.a, zero)->is_zero());

  auto n = L.span({"u", "e"});
  CHECK(*idempotent_generator(L.a, n) == L("u"));
  CHECK(*projection_generator(L.a, n) == L("u"));

  auto all = L.span({"u", "v", "e", "e*"});
  CHECK(*idempotent_generator(L.a, all) == L("1"));
  CHECK(*projection_generator(L.a, all) == L("1"));

  CHECK_THROWS_AS(idempotent_generator(L.a, L.span({"e"})), std::invalid_argument);
  CHECK_THROWS_AS(projection_generator(L.a, L.span({"e"})), std::invalid_argument);

  // (v + e) A; over the positive definite field the projection with the
  // same image also generates it.
  auto image = L.span({"v + e", "e* + u"});
  auto idem = idempotent_generator(L.a, image);
  REQUIRE(idem);
  CHECK(is_idempotent(*idem));
  CHECK(generates(L.a, *idem, image));
  auto proj = projection_generator(L.a, image);
  REQUIRE(proj);
  CHECK(is_projection(*proj));
  CHECK(*proj == L("(1/2) u + (1/2) e + (1/2) e* + (1/2) v"));
}

TEST_CASE("annihilator invariants on samples") {
  for (const char* name : {"line(2)", "line(3)"}) {
    auto g = share(gallery(name));
    FDAlgebra a(g, kQi);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 60; ++k) {
      std::vector<Element> xs;
      for (int j = 0; j < 1 + k % 3; ++j) {
        Coords c(a.dimension());
        c[rng() % a.dimension()] = Scalar(1);
        c[rng() % a.dimension()] += Scalar::i();
        xs.push_back(a.element(c));
      }
      auto n = right_annihilator_fd(a, xs);
      CHECK(is_right_ideal(a, n));
      for (const Element& x : xs)
        for (const Coords& v : n.vectors) CHECK((x * a.element(v)).is_zero());
      auto e = idempotent_generator(a, n);
      REQUIRE(e);
      CHECK(is_idempotent(*e));
      CHECK(contains(a, n, a.coords(*e)));
      CHECK(generates(a, *e, n));
      auto p = projection_generator(a, n);
      REQUIRE(p);
      CHECK(is_projection(*p));
      CHECK(generates(a, *p, n));
    }
  }
}

TEST_CASE("non-positive-definite field loses projection generators") {
  Lab L(kLine, FieldSpec::gaussian_id());
  // In M_2 coordinates u + i e is [[0, 0], [i, 1]]; it kills the column
  // (1, -i), which has zero transpose-length.
  for (const char* x : {"u + i e", "i v - e*"}) {
    CAPTURE(x);
    auto n = right_annihilator_fd(L.a, {L(x)});
    CHECK(n.dim() == 2);
    CHECK(idempotent_generator(L.a, n));
    CHECK_FALSE(projection_generator(L.a, n));

    Lab C(kLine);
    auto m = right_annihilator_fd(C.a, {C(x)});
    CHECK(projection_generator(C.a, m));
  }
  auto plain = right_annihilator_fd(L.a, {L("u + 2 e")});
  CHECK(projection_generator(L.a, plain));
}

TEST_CASE("oracles") {
  auto line = share(parse_graph(kLine));
  auto pass = baer_star_oracle_fd(FDAlgebra(line, kQi), OracleOptions{100, 3, 9});
  CHECK(pass.pass);
  CHECK(pass.counts.singletons == 4);
  CHECK(pass.counts.pairs == 6);
  CHECK(pass.counts.random == 100);
  CHECK(pass.counts.structured > 0);

  auto fail = baer_star_oracle_fd(FDAlgebra(line, FieldSpec::gaussian_id()), OracleOptions{1000, 3, 9});
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.witness);
  FDAlgebra aid(line, FieldSpec::gaussian_id());
  CHECK_FALSE(projection_generator(aid, right_annihilator_fd(aid, *fail.witness)));

  CHECK(baer_star_oracle_fd(FDAlgebra(share(Graph()), kQi)).pass);
  CHECK(FDAlgebra(share(Graph()), kQi).dimension() == 0);

  for (const char* name : {"line(3)", "line(4)"}) {
    auto g = share(gallery(name));
    CHECK(baer_oracle_fd(FDAlgebra(g, kQi), OracleOptions{30, 3, 1}).pass);
    CHECK(baer_oracle_fd(FDAlgebra(g, FieldSpec::gaussian_id()), OracleOptions{30, 3, 1}).pass);
  }
}
