#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "skein/partitions.hpp"

using namespace skein;
using json = nlohmann::json;

namespace {

ScalarQ sv(int k) { return ScalarQ::variable(Var::s, k); }

ModuleVector strip_sum(const Partition& lam, int n) {
  // direct Murnaghan-Nakayama side: sum over strips of (-1)^{ht} W_mu
  ModuleVector out;
  for (const auto& s : strip_additions(lam, n))
    out.add(s.result, ScalarQ(s.height % 2 == 0 ? 1 : -1));
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n)
    for (auto& p : all_partitions(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace

TEST_CASE("partition normalization and order") {
  CHECK(normalized({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(normalized({}) == Partition{});
  CHECK_THROWS_AS(normalized({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(normalized({2, -1}), std::invalid_argument);

  PartOrder lt;
  CHECK(lt(Partition{}, Partition{1}));
  CHECK(lt(Partition{2}, Partition{1, 1}));      // same weight: lex-descending first
  CHECK(lt(Partition{1, 1}, Partition{3}));      // weight dominates
  CHECK(!lt(Partition{1, 1}, Partition{2}));
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("strip additions: pinned examples") {
  auto one = strip_additions({}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].result == Partition{1});
  CHECK(one[0].height == 2);
  CHECK(one[0].contents == std::vector<int>{0});

  auto two = strip_additions({}, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].result == Partition{2});
  CHECK(two[0].height == 2);
  CHECK(two[0].contents == std::vector<int>{0, 1});
  CHECK(two[1].result == Partition{1, 1});
  CHECK(two[1].height == 3);
  CHECK(two[1].contents == std::vector<int>{-1, 0});

  auto box = strip_additions({1}, 1);
  REQUIRE(box.size() == 2);
  CHECK(box[0].result == Partition{2});
  CHECK(box[0].height == 2);
  CHECK(box[1].result == Partition{1, 1});
  CHECK(box[1].height == 2);
}

TEST_CASE("strip additions: shape validity and run property") {
  for (const auto& lam : partitions_up_to(7)) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& s : strip_additions(lam, n)) {
        // valid partition, correct box count
        CHECK(normalized(s.result) == s.result);
        CHECK(part_weight(s.result) == part_weight(lam) + n);
        // contents form a run of length n
        REQUIRE(static_cast<int>(s.contents.size()) == n);
        for (int i = 1; i < n; ++i) CHECK(s.contents[i] == s.contents[i - 1] + 1);
        // height counts the strip's rows plus one
        std::vector<int> rows;
        for (int i = 1; i <= static_cast<int>(s.result.size()); ++i)
          if (part_at(s.result, i) > part_at(lam, i)) rows.push_back(i);
        CHECK(s.height == static_cast<int>(rows.size()) + 1);
        // rows are consecutive (connectivity) and no 2x2 square:
        // each strip row below the first starts exactly one past the row above
        for (std::size_t i = 1; i < rows.size(); ++i) {
          CHECK(rows[i] == rows[i - 1] + 1);
          CHECK(part_at(s.result, rows[i]) == part_at(lam, rows[i] - 1) + 1);
        }
      }
    }
    // results are distinct and sorted
    auto all = strip_additions(lam, 3);
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(PartOrder{}(all[i - 1].result, all[i].result));
  }
}

TEST_CASE("hooks, contents, kappa") {
  auto [h0, c0, k0] = hooks_contents_kappa({});
  CHECK(h0.empty());
  CHECK(c0.empty());
  CHECK(k0 == 0);

  auto [h2, c2, k2] = hooks_contents_kappa({2});
  CHECK(h2 == std::vector<int>({1, 2}));
  CHECK(c2 == std::vector<int>({0, 1}));
  CHECK(k2 == 2);

  auto [h11, c11, k11] = hooks_contents_kappa({1, 1});
  CHECK(h11 == std::vector<int>({1, 2}));
  CHECK(c11 == std::vector<int>({-1, 0}));
  CHECK(k11 == -2);

  auto [h31, c31, k31] = hooks_contents_kappa({3, 1});
  CHECK(h31 == std::vector<int>({1, 1, 2, 4}));
  CHECK(c31 == std::vector<int>({-1, 0, 1, 2}));
  CHECK(k31 == 3 * (3 - 2 + 1) + 1 * (1 - 4 + 1));
}

TEST_CASE("sum of contents equals kappa/2") {
  for (const auto& lam : partitions_up_to(10)) {
    auto [hooks, contents, kappa] = hooks_contents_kappa(lam);
    long long csum = 0;
    for (int c : contents) csum += c;
    CHECK(2 * csum == kappa);
  }
}

TEST_CASE("power_times_schur: pinned examples") {
  {
    auto v = power_times_schur(1, {});
    REQUIRE(v.support_size() == 1);
    CHECK(v.coeff({1}) == ScalarQ(1));
  }
  {
    auto v = power_times_schur(2, {});
    REQUIRE(v.support_size() == 2);
    CHECK(v.coeff({2}) == ScalarQ(1));
    CHECK(v.coeff({1, 1}) == ScalarQ(-1));
  }
  {
    auto v = power_times_schur(1, {1});
    REQUIRE(v.support_size() == 2);
    CHECK(v.coeff({2}) == ScalarQ(1));
    CHECK(v.coeff({1, 1}) == ScalarQ(1));
  }
}

TEST_CASE("power_times_schur matches strip-addition expansion") {
  for (const auto& lam : partitions_up_to(6))
    for (int n = 1; n <= 4; ++n)
      CHECK(power_times_schur(n, lam) == strip_sum(lam, n));
}

TEST_CASE("principal specialization") {
  CHECK(principal_specialization({}) == ScalarQ(1));
  CHECK(principal_specialization({1}) == ScalarQ::inv_brace(1));
  CHECK(principal_specialization({2}) ==
        sv(1) * ScalarQ::inv_brace(1) * ScalarQ::inv_brace(2));
  // hook content formula cross-check: s_lambda(q^rho) = s^{kappa/2} / prod {hook}
  for (const auto& lam : partitions_up_to(6)) {
    auto [hooks, contents, kappa] = hooks_contents_kappa(lam);
    ScalarQ rhs = sv(static_cast<int>(kappa) / 2);
    for (int h : hooks) rhs *= ScalarQ::inv_brace(h);
    CHECK(principal_specialization(lam) == rhs);
  }
}

TEST_CASE("inverted principal specialization sign identity") {
  CHECK(inverted_specialization_check({}));
  CHECK(inverted_specialization_check({1}));
  CHECK(inverted_specialization_check({2, 1}));
  for (const auto& lam : partitions_up_to(6)) CHECK(inverted_specialization_check(lam));
}

TEST_CASE("module vector arithmetic and json") {
  ModuleVector v = ModuleVector::basis({2}, ScalarQ::variable(Var::a));
  v.add({1, 1}, -ScalarQ(1));
  ModuleVector w = v;
  w -= v;
  CHECK(w.is_zero());
  CHECK((ScalarQ(2) * v).coeff({2}) == ScalarQ(2) * ScalarQ::variable(Var::a));
  CHECK(v.truncated(1).is_zero());

  json j = v.to_json<json>();
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["partition"] == json::array({2}));
  CHECK(j[1]["partition"] == json::array({1, 1}));
  CHECK(ModuleVector::from_json(j) == v);

  // zero coefficients are never stored
  ModuleVector z;
  z.add({1}, ScalarQ(0));
  CHECK(z.is_zero());
  z.add({1}, ScalarQ(1));
  z.add({1}, ScalarQ(-1));
  CHECK(z.is_zero());
}
