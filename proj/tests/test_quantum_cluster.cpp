#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <random>
#include <set>

#include "skein/quantum_cluster.hpp"

using namespace skein;
using json = nlohmann::json;

namespace {

ScalarQ sv(int k) { return ScalarQ::variable(Var::s, k); }

// Local configuration around a mutated edge e0: the crossing pairs (e1,e3)
// and (e2,e4) sit on opposite sides, (e0,e1) = pairing loads the exchange.
QLattice five_edge(int pairing = 1) {
  std::vector<std::vector<int>> b(5, std::vector<int>(5, 0));
  auto set = [&](int i, int j, int v) {
    b[i][j] = v;
    b[j][i] = -v;
  };
  set(0, 1, pairing);
  set(0, 2, -1);
  set(0, 3, 1);
  set(0, 4, -1);
  set(1, 2, 1);
  set(3, 4, 1);
  return QLattice(b);
}

// cyclic n-gon face form: consecutive edges pair to -1, others to 0
QLattice ngon(int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    b[i][j] += -1;
    b[j][i] += 1;
  }
  return QLattice(b);
}

// coefficients agree on every vector with |grade| <= win (truncation junk from
// composites of opposite mutations sits strictly below -win for large orders)
bool window_equal(const QTSeries& x, const QTSeries& y, int win) {
  std::set<LVec> keys;
  for (const auto& [v, c] : x.terms()) keys.insert(v);
  for (const auto& [v, c] : y.terms()) keys.insert(v);
  for (const auto& v : keys) {
    if (std::abs(x.grade(v)) > win) continue;
    if (!(x.coeff(v) == y.coeff(v))) return false;
  }
  return true;
}

std::vector<std::vector<int>> random_exchange(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<int>> b(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      int v = entry(rng);
      b[i][j] = v;
      b[j][i] = -v;
    }
  return b;
}

}  // namespace

TEST_CASE("quantum torus: exchange and associativity") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    QLattice lat(random_exchange(rng, 3));
    LVec v{coord(rng), coord(rng), coord(rng)};
    LVec w{coord(rng), coord(rng), coord(rng)};
    QTElement xv = QTElement::X(lat, v);
    QTElement xw = QTElement::X(lat, w);
    // X_v X_w = q^{(v,w)} X_w X_v
    CHECK(xv * xw == sv(2 * lat.pair(v, w)) * (xw * xv));

    LVec u{coord(rng), coord(rng), coord(rng)};
    QTElement a = QTElement::X(lat, u) + sv(1) * QTElement::X(lat, v);
    QTElement b = QTElement::X(lat, w) - QTElement::one(lat);
    QTElement c = QTElement::X(lat, v, sv(-2)) + QTElement::X(lat, u);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("quantum torus: rejects non-antisymmetric form") {
  CHECK_THROWS_AS(QLattice({{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("dilog: order 0 is the constant series 1") {
  QLattice lat(std::vector<std::vector<int>>{{0}});
  CHECK(dilog(lat, {1}, {1}, 0) == QTSeries::one(lat, {1}, 0));
}

TEST_CASE("dilog: linear coefficient resums to q^{1/2}/(q-1)") {
  QLattice lat(std::vector<std::vector<int>>{{0}});
  QTSeries d = dilog(lat, {1}, {1}, 4);
  // q^{1/2}/(q-1) = 1/(s - s^{-1})
  CHECK(d.coeff({1}) == ScalarQ::inv_brace(1));
  CHECK(d.coeff({0}) == ScalarQ(1));
  CHECK(d.coeff({2}) == sv(-1) * ScalarQ::inv_brace(1) * ScalarQ::inv_brace(2));
}

TEST_CASE("dilog: product and exponential expansions agree") {
  auto prod = dilog_coeffs_product(6);
  auto expo = dilog_coeffs_exp(6);
  REQUIRE(prod.size() == 7);
  REQUIRE(expo.size() == 7);
  for (int k = 0; k <= 6; ++k) CHECK(prod[k] == expo[k]);
}

TEST_CASE("dilog: non-positive grade is rejected") {
  QLattice lat(std::vector<std::vector<int>>{{0, 0}, {0, 0}});
  CHECK_THROWS_AS(dilog(lat, {-1, 0}, {1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(dilog(lat, {0, 0}, {1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(dilog(lat, {1, -2}, {1, 1}, 3), std::invalid_argument);
}

TEST_CASE("lattice mutation: pinned images on the five-edge configuration") {
  QLattice lat = five_edge();
  LatticeMutation nup = mutate_lattice(lat, 0, +1);
  CHECK(nup.apply({1, 0, 0, 0, 0}) == LVec{-1, 0, 0, 0, 0});
  CHECK(nup.apply({0, 0, 1, 0, 0}) == LVec{1, 0, 1, 0, 0});
  CHECK(nup.apply({0, 0, 0, 0, 1}) == LVec{1, 0, 0, 0, 1});
  CHECK(nup.apply({0, 1, 0, 0, 0}) == LVec{0, 1, 0, 0, 0});
  CHECK(nup.apply({0, 0, 0, 1, 0}) == LVec{0, 0, 0, 1, 0});
  // linear extension
  CHECK(nup.apply({0, 0, 1, 0, 1}) == LVec{2, 0, 1, 0, 1});

  LatticeMutation num = mutate_lattice(lat, 0, -1);
  CHECK(num.apply({0, 1, 0, 0, 0}) == LVec{1, 1, 0, 0, 0});
  CHECK(num.apply({0, 0, 1, 0, 0}) == LVec{0, 0, 1, 0, 0});
  CHECK(num.apply({1, 0, 0, 0, 0}) == LVec{-1, 0, 0, 0, 0});
}

TEST_CASE("exchange-matrix mutation is an involution") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_exchange(rng, 4);
    for (int k = 0; k < 4; ++k) CHECK(mutate_form(mutate_form(b, k), k) == b);
  }
}

TEST_CASE("mutation map: pinned generator images") {
  QLattice lat = five_edge();
  const LVec phi{-1, 0, 0, 0, 0};
  MutationMap mu = mutate_map(lat, 0, +1, phi, 5);

  // X_{e0} -> X_{-e0}
  CHECK(mu.gen_image(0) ==
        QTSeries::from(QTElement::X(lat, {-1, 0, 0, 0, 0}), phi, 5));

  // X_{e1} -> X_{e1}(1 + q^{1/2} X_{e0})
  QTSeries one_plus = QTSeries::one(lat, phi, 5);
  one_plus.add({1, 0, 0, 0, 0}, sv(1));
  CHECK(mu.gen_image(1) ==
        QTSeries::from(QTElement::X(lat, {0, 1, 0, 0, 0}), phi, 5) * one_plus);

  // X_{e4} -> X_{e4}(1 + q^{1/2} X_{-e0})^{-1}, a geometric series
  QTSeries inv_fac = QTSeries::one(lat, phi, 5);
  inv_fac.add({-1, 0, 0, 0, 0}, sv(1));
  QTSeries img4 =
      QTSeries::from(QTElement::X(lat, {0, 0, 0, 0, 1}), phi, 5) * inv_fac.inverse();
  CHECK(mu.gen_image(4) == img4);
  // closed form of the same series: alternating signs down the e0 line
  for (int n = 0; n <= 5; ++n)
    CHECK(mu.gen_image(4).coeff({-n, 0, 0, 0, 1}) == ScalarQ(n % 2 == 0 ? 1 : -1));
}

TEST_CASE("mutation map: conjugation factorization, positive route") {
  QLattice lat = five_edge();
  const LVec phi{1, 0, 0, 0, 0};  // makes Phi(X_{e0}) expandable
  const int order = 5, wide = 8;
  MutationMap mu = mutate_map(lat, 0, +1, phi, order);
  LatticeMutation nup = mutate_lattice(lat, 0, +1);
  QTSeries dl = dilog(lat, {1, 0, 0, 0, 0}, phi, wide);
  QTSeries dlinv = dl.inverse();
  for (int j = 0; j < 5; ++j) {
    QTSeries conj =
        dl * QTSeries::from(QTElement::X(lat, nup.apply(lat.basis(j))), phi, wide) *
        dlinv;
    CHECK(mu.gen_image(j) == conj.truncated(order));
  }
}

TEST_CASE("mutation map: conjugation factorization, negative route") {
  QLattice lat = five_edge();
  const LVec phi{-1, 0, 0, 0, 0};  // makes Phi(X_{-e0}) expandable
  const int order = 5, wide = 8;
  MutationMap mu = mutate_map(lat, 0, -1, phi, order);
  LatticeMutation num = mutate_lattice(lat, 0, -1);
  QTSeries dl = dilog(lat, {-1, 0, 0, 0, 0}, phi, wide);
  QTSeries dlinv = dl.inverse();
  for (int j = 0; j < 5; ++j) {
    QTSeries conj =
        dlinv * QTSeries::from(QTElement::X(lat, num.apply(lat.basis(j))), phi, wide) *
        dl;
    CHECK(mu.gen_image(j) == conj.truncated(order));
  }
}

TEST_CASE("mutation map: both factorizations give the same map") {
  QLattice lat = five_edge();
  const LVec phi{-1, 0, 0, 0, 0};
  MutationMap plus = mutate_map(lat, 0, +1, phi, 5);
  MutationMap minus = mutate_map(lat, 0, -1, phi, 5);
  for (int j = 0; j < 5; ++j) CHECK(plus.gen_image(j) == minus.gen_image(j));
}

TEST_CASE("mutation map: opposite mutations invert each other") {
  QLattice lat = five_edge();
  QLattice latp(mutate_form(lat.form_matrix(), 0), lat.labels());
  const LVec phi{-1, 0, 0, 0, 0};
  const int wide = 8, win = 3;
  MutationMap fwd = mutate_map(lat, 0, +1, phi, wide);   // primed -> unprimed
  MutationMap bwd = mutate_map(latp, 0, -1, phi, wide);  // unprimed -> primed
  for (int j = 0; j < 5; ++j) {
    QTSeries round = fwd.apply(bwd.gen_image(j));
    CHECK(window_equal(round, QTSeries::from(QTElement::X(lat, lat.basis(j)), phi, wide),
                       win));
    QTSeries round2 = bwd.apply(fwd.gen_image(j));
    CHECK(window_equal(round2,
                       QTSeries::from(QTElement::X(latp, latp.basis(j)), phi, wide),
                       win));
  }
}

TEST_CASE("mutation map: monomial images respect the torus relations") {
  QLattice lat = five_edge();
  QLattice dom(mutate_form(lat.form_matrix(), 0), lat.labels());
  const LVec phi{-1, 0, 0, 0, 0};
  const int wide = 8, win = 3;
  MutationMap mu = mutate_map(lat, 0, +1, phi, wide);

  // X_{e2} X_{-e2} = 1
  QTSeries prod = mu.apply(QTElement::X(dom, {0, 0, 1, 0, 0})) *
                  mu.apply(QTElement::X(dom, {0, 0, -1, 0, 0}));
  CHECK(window_equal(prod, QTSeries::one(lat, phi, wide), win));

  // X_{e1+e2} = q^{-(e1,e2)'/2} X_{e1} X_{e2} over the domain form
  QTSeries lhs = mu.apply(QTElement::X(dom, {0, 1, 1, 0, 0}));
  QTSeries rhs = sv(-dom.form(1, 2)) * (mu.apply(QTElement::X(dom, {0, 1, 0, 0, 0})) *
                                        mu.apply(QTElement::X(dom, {0, 0, 1, 0, 0})));
  CHECK(window_equal(lhs, rhs, win));

  // elements of the wrong torus are rejected
  CHECK_THROWS_AS(mu.apply(QTElement::X(lat, {0, 1, 0, 0, 0})), std::logic_error);
}

TEST_CASE("face relations: polygon normal forms") {
  QLattice tri = ngon(3);
  QTElement r = face_relation(tri, {0, 1, 2});
  QTElement expect = sv(-1) * QTElement::one(tri) + QTElement::X(tri, {1, 0, 0}) +
                     QTElement::X(tri, {1, 1, 0});
  CHECK(r == expect);

  QLattice bi = ngon(2);
  CHECK(face_relation(bi, {0, 1}) ==
        sv(-1) * QTElement::one(bi) + QTElement::X(bi, {1, 0}));

  CHECK(multiplicative_relation(tri, {0, 1, 2}) ==
        QTElement::X(tri, {1, 1, 1}) - sv(-2) * QTElement::one(tri));

  CHECK_THROWS_AS(face_relation(tri, {}), std::invalid_argument);
}

TEST_CASE("face relations: cyclic shift is absorbed by the multiplicative relation") {
  // q^{1/2} X_{last} R_f = R_{shifted f} + q^{1/2} M_f
  QLattice tri = ngon(3);
  QTElement lhs3 = sv(1) * (QTElement::X(tri, {0, 0, 1}) * face_relation(tri, {0, 1, 2}));
  QTElement rhs3 =
      face_relation(tri, {2, 0, 1}) + sv(1) * multiplicative_relation(tri, {0, 1, 2});
  CHECK(lhs3 == rhs3);

  QLattice sq = ngon(4);
  QTElement lhs4 =
      sv(1) * (QTElement::X(sq, {0, 0, 0, 1}) * face_relation(sq, {0, 1, 2, 3}));
  QTElement rhs4 =
      face_relation(sq, {3, 0, 1, 2}) + sv(1) * multiplicative_relation(sq, {0, 1, 2, 3});
  CHECK(lhs4 == rhs4);
}

TEST_CASE("global relation: genus-one configurations") {
  // theta graph on the torus: 3 edges, 2 vertices, 1 face, genus 1
  QLattice theta = ngon(3);
  QTElement g = global_relation(theta, {{0, 1, 2}});
  CHECK(g == QTElement::X(theta, {1, 1, 1}) - sv(4) * QTElement::one(theta));

  // honeycomb quotient: 6 edges, 4 vertices, 2 faces, still genus 1
  QLattice hex = ngon(6);
  QTElement g2 = global_relation(hex, {{0, 1, 2}, {3, 4, 5}});
  CHECK(g2 == QTElement::X(hex, {1, 1, 1, 1, 1, 1}) - sv(4) * QTElement::one(hex));

  // seed-level wrapper
  CSeed seed = CSeed::initial(ngon(3).form_matrix(), {}, {{0, 1, 2}},
                              {"e1", "e2", "e3"});
  CHECK(global_relation(seed) == g);
}

TEST_CASE("global relation: rejects non-cubic and odd-power configurations") {
  QLattice five = five_edge();
  CHECK_THROWS_AS(global_relation(five, {{0, 1, 2}}), std::domain_error);
  // 9 edges, 6 vertices, 1 face: genus 2 needs a square root of -q
  QLattice nine = ngon(9);
  CHECK_THROWS_AS(global_relation(nine, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}),
                  std::domain_error);
  // 3 edges, 2 vertices, 2 faces: odd Euler characteristic
  QLattice theta = ngon(3);
  CHECK_THROWS_AS(global_relation(theta, {{0, 1, 2}, {2, 1, 0}}), std::domain_error);
}

TEST_CASE("chromatic chain transport across a mutation") {
  CHECK(chromatic_mutation_check(6));
  CHECK(chromatic_mutation_check(0));  // constant terms only
  CHECK_FALSE(chromatic_mutation_check(4, 2));
}

TEST_CASE("dilogarithm pentagon in the rank-2 torus") {
  CHECK(qt_pentagon_check(1));
  CHECK(qt_pentagon_check(6));
  CHECK_FALSE(qt_pentagon_check(6, 2));
}

TEST_CASE("c-vectors: single mutation from the identity") {
  CSeed seed = CSeed::initial({{0, 1}, {-1, 0}}, {}, {}, {"e1", "e2"});
  MutationRecord rec;
  CSeed out = cvec_mutate(seed, 0, &rec);
  CHECK(rec.eps == 1);
  CHECK(rec.f == to_bigvec({1, 0}));
  CHECK(out.cvec(0) == to_bigvec({-1, 0}));
  CHECK(out.cvec(1) == to_bigvec({0, 1}));
  CHECK(out.B == to_bigmat({{0, -1}, {1, 0}}));
  // the arrow into the mutated vertex feeds the other column
  CSeed out1 = cvec_mutate(seed, 1);
  CHECK(out1.cvec(0) == to_bigvec({1, 1}));
  CHECK(out1.cvec(1) == to_bigvec({0, -1}));
}

TEST_CASE("c-vectors: double mutation is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    CSeed seed = CSeed::initial(random_exchange(rng, 4), {}, {},
                                {"e1", "e2", "e3", "e4"});
    // walk somewhere first
    std::uniform_int_distribution<int> idx(0, 3);
    for (int t = 0; t < 4; ++t) seed = cvec_mutate(seed, idx(rng));
    for (int k = 0; k < 4; ++k) {
      CSeed back = cvec_mutate(cvec_mutate(seed, k), k);
      CHECK(back.B == seed.B);
      CHECK(back.C == seed.C);
    }
  }
}

TEST_CASE("c-vectors: frozen and malformed states are rejected") {
  CSeed seed = CSeed::initial({{0, 1}, {-1, 0}}, {1}, {}, {"e1", "e2"});
  CHECK_THROWS_AS(cvec_mutate(seed, 1), std::invalid_argument);
  CHECK_THROWS_AS(cvec_mutate(seed, 5), std::invalid_argument);

  CSeed bad = CSeed::initial({{0, 1}, {-1, 0}}, {}, {}, {"e1", "e2"});
  bad.C = to_bigmat({{1, 0}, {-1, 0}});  // mixed-sign column
  CHECK_THROWS_AS(bad.tropical_sign(0), SignCoherenceError);
  CHECK_THROWS_AS(cvec_mutate(bad, 0), SignCoherenceError);
  bad.C = to_bigmat({{0, 0}, {0, 1}});  // zero column
  CHECK_THROWS_AS(bad.tropical_sign(0), SignCoherenceError);
}

TEST_CASE("c-vectors: rank-2 pentagon periodicity") {
  CSeed seed = CSeed::initial({{0, 1}, {-1, 0}}, {}, {}, {"e1", "e2"});
  SequenceResult res = cvec_sequence(seed, {0, 1, 0, 1, 0}, false);
  REQUIRE(res.records.size() == 5);
  const std::vector<int> eps = {1, 1, -1, -1, -1};
  const std::vector<LVec> fs = {{1, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 1}};
  for (int t = 0; t < 5; ++t) {
    CHECK(res.records[t].eps == eps[t]);
    CHECK(res.records[t].f == to_bigvec(fs[t]));
  }
  // the seed returns to a permutation of the start
  CHECK(res.seed.cvec(0) == to_bigvec({0, 1}));
  CHECK(res.seed.cvec(1) == to_bigvec({1, 0}));
  CHECK(res.seed.B == to_bigmat({{0, -1}, {1, 0}}));
}

TEST_CASE("c-vector sequences: empty sequence and composition order") {
  CSeed seed = loc_quiver_seed();
  SequenceResult res = cvec_sequence(seed, {});
  CHECK(res.records.empty());
  CHECK(res.seed.B == seed.B);
  CHECK(res.seed.C == seed.C);

  // right-to-left composition applies the written sequence back to front
  std::vector<int> ks = {1, 0, 4, 2, 0, 3};
  std::vector<int> rev(ks.rbegin(), ks.rend());
  SequenceResult rtl = cvec_sequence(seed, ks, true);
  SequenceResult ltr = cvec_sequence(seed, rev, false);
  CHECK(rtl.seed.B == ltr.seed.B);
  CHECK(rtl.seed.C == ltr.seed.C);
  REQUIRE(rtl.records.size() == ltr.records.size());
  for (size_t t = 0; t < rtl.records.size(); ++t)
    CHECK(rtl.records[t].f == ltr.records[t].f);
}

TEST_CASE("c-vector sequences: five-vertex seed, two routes, one multiset") {
  CSeed seed = loc_quiver_seed();
  const std::vector<int> seq1 = {1, 0, 4, 2, 0, 3};
  const std::vector<int> seq2 = {4, 2, 1, 0, 2, 3, 1, 2, 4};
  SequenceResult r1 = cvec_sequence(seed, seq1);
  SequenceResult r2 = cvec_sequence(seed, seq2);

  std::multiset<BigVec> expect;
  for (const LVec& v : std::vector<LVec>{{1, 0, 0, 0, 0},
                                         {0, 1, 0, 0, 0},
                                         {0, 0, 1, 0, 0},
                                         {-1, 0, -1, -1, 0},
                                         {0, -1, -1, 0, -1}})
    expect.insert(to_bigvec(v));
  CHECK(r1.cvectors() == expect);
  CHECK(r2.cvectors() == expect);

  // the tracked tropical vectors of the short route are the supports of the
  // two composite Baxter chains, interleaved
  const std::vector<LVec> fs = {{0, 0, 0, 1, 0}, {1, 0, 0, 1, 0}, {1, 0, 1, 1, 0},
                                {0, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 1, 1, 0, 1}};
  REQUIRE(r1.records.size() == 6);
  for (int t = 0; t < 6; ++t) {
    CHECK(r1.records[t].eps == 1);
    CHECK(r1.records[t].f == to_bigvec(fs[t]));
  }
}

TEST_CASE("c-vectors: sign coherence along random mutation walks") {
  std::mt19937 rng(4711);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> rankd(2, 6);
    const int rank = rankd(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < rank; ++i) labels.push_back("e" + std::to_string(i + 1));
    CSeed seed = CSeed::initial(random_exchange(rng, rank), {}, {}, labels);
    std::uniform_int_distribution<int> idx(0, rank - 1);
    for (int t = 0; t < 12; ++t) {
      seed = cvec_mutate(seed, idx(rng));
      for (int j = 0; j < rank; ++j) {
        int s = 0;
        CHECK_NOTHROW(s = seed.tropical_sign(j));
        CHECK((s == 1 || s == -1));
      }
    }
  }
}

TEST_CASE("automorphism series: single mutation is one dilogarithm") {
  CSeed seed = loc_quiver_seed();
  QLattice lat = seed.lattice();
  CHECK(auto_series(seed, {2}, 5) ==
        dilog(lat, {0, 0, 1, 0, 0}, LVec(5, 1), 5));
}

TEST_CASE("automorphism series: the two five-vertex routes agree") {
  CSeed seed = loc_quiver_seed();
  QTSeries a1 = auto_series(seed, {1, 0, 4, 2, 0, 3}, 5);
  QTSeries a2 = auto_series(seed, {4, 2, 1, 0, 2, 3, 1, 2, 4}, 5);
  CHECK(a1 == a2);
  CHECK_FALSE(a1 == QTSeries::one(seed.lattice(), LVec(5, 1), 5));
}

TEST_CASE("automorphism series: pentagon walk collapses to the identity") {
  CSeed seed = CSeed::initial({{0, 1}, {-1, 0}}, {}, {}, {"e1", "e2"});
  QTSeries prod = auto_series(seed, {0, 1, 0, 1, 0}, 6, false);
  CHECK(prod == QTSeries::one(seed.lattice(), {1, 1}, 6));
}

TEST_CASE("seed serialization round-trips") {
  CSeed seed = loc_quiver_seed();
  seed.faces = {{0, 1, 2}};
  seed = cvec_mutate(cvec_mutate(seed, 0), 2);
  json j = seed.to_json<json>();
  CHECK(j["rank"] == 5);
  CSeed back = CSeed::from_json(j);
  CHECK(back.B == seed.B);
  CHECK(back.C == seed.C);
  CHECK(back.frozen == seed.frozen);
  CHECK(back.faces == seed.faces);
  CHECK(back.labels == seed.labels);
}

TEST_CASE("seed parsing: schema fields and defaults") {
  json j = {{"rank", 2},
            {"B", {{0, 1}, {-1, 0}}},
            {"frozen", {1}},
            {"faces", json::array()},
            {"labels", {"x", "y"}}};
  CSeed seed = CSeed::from_json(j);
  CHECK(seed.rank == 2);
  CHECK(seed.frozen == std::set<int>{1});
  CHECK(seed.C == to_bigmat({{1, 0}, {0, 1}}));  // identity default
  CHECK(seed.labels == std::vector<std::string>{"x", "y"});

  json badb = j;
  badb["B"] = {{0, 1}, {2, 0}};
  CHECK_THROWS_AS(CSeed::from_json(badb), std::invalid_argument);
}
