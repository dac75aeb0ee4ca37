#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tricode/sss.hpp"

using namespace tricode;
using sss::Coefficients;

namespace {

F4Matrix m(const std::vector<std::string>& rows) {
  std::vector<F4Vector> out;
  for (const auto& r : rows) out.push_back(oracle::from_word(r));
  return F4Matrix::from_rows(out);
}

const auto kPair = GeneratorVectorPair::parse("2;1;1");
const F2Matrix kSecret = demote(m({"0110", "1001", "0110", "1101"}));

Coefficients coeffs(std::initializer_list<int> bits) {
  Coefficients x;
  for (int b : bits) x.push_back(F2(b != 0));
  return x;
}

sss::Dealing worked_example() {
  const std::vector<Coefficients> xs{coeffs({1, 1}), coeffs({0, 1})};
  return sss::deal_with(kPair, kSecret, xs);
}

F2Matrix random_secret(std::mt19937_64& rng, std::size_t n) {
  return oracle::random_f2_matrix(rng, 2 * n, 2 * n);
}

// Pairs whose H^T H is invertible, which deal() needs.
std::vector<GeneratorVectorPair> dealable_pairs(std::size_t n) {
  std::vector<GeneratorVectorPair> out;
  for (const auto& p : oracle::all_pairs(n)) {
    try {
      (void)projection(sss::share_basis(p));
      out.push_back(p);
    } catch (const Error&) {
    }
  }
  return out;
}

template <class Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn fn) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) idx.push_back(i);
    fn(idx);
  }
}

}  // namespace

TEST_CASE("worked example: H and its projection") {
  const auto h = sss::share_basis(kPair);
  CHECK(h == m({"10", "01", "w1", "1w"}));
  CHECK(projection(h) == m({"w0Ww", "0wwW", "WwW0", "wW0W"}));
}

TEST_CASE("worked example: shares, remainder and reconstruction") {
  const auto d = worked_example();
  REQUIRE(d.shares.size() == 2);
  CHECK(d.shares[0].v == oracle::from_word("11WW"));
  CHECK(d.shares[1].v == oracle::from_word("011w"));
  CHECK(d.shares[0].index == 1);
  CHECK(d.shares[1].index == 2);
  CHECK(d.bundle.remainder == m({"w1ww", "1www", "WWw0", "Ww0w"}));
  CHECK(d.bundle.generator == m({"10w1", "011w"}));
  CHECK(sss::reconstruct(d.shares, d.bundle) == kSecret);

  const auto k = m({"10", "11", "W1", "Ww"});
  CHECK(projection(k) == projection(sss::share_basis(kPair)));
  CHECK(sss::reconstruct_from_matrix(k, d.bundle.remainder) == kSecret);
}

TEST_CASE("R + Proj(H) is the secret") {
  const auto d = worked_example();
  CHECK(demote(d.bundle.remainder + projection(sss::share_basis(kPair))) == kSecret);
}

TEST_CASE("threshold: fewer than n independent shares fail") {
  const auto d = worked_example();
  for (const auto& share : d.shares) {
    F4Matrix k(4, 2);
    for (std::size_t i = 0; i < 4; ++i) k(i, 0) = share.v[i];
    CHECK_ERROR_KIND(sss::reconstruct_from_matrix(k, d.bundle.remainder), ErrorKind::SingularMatrix);
  }
  const std::vector<sss::Share> twice{d.shares[0], d.shares[0]};
  CHECK_ERROR_KIND(sss::reconstruct(twice, d.bundle), ErrorKind::SingularMatrix);
  CHECK_ERROR_KIND(sss::reconstruct(std::span(d.shares).first(1), d.bundle), ErrorKind::ShapeError);
  auto short_share = d.shares;
  short_share[1].v.pop_back();
  CHECK_ERROR_KIND(sss::reconstruct(short_share, d.bundle), ErrorKind::ShapeError);
}

TEST_CASE("projection invariance") {
  const auto h = sss::share_basis(kPair);
  CHECK(sss::projection_invariance_check(h, demote(m({"10", "11"}))));
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto pairs = dealable_pairs(n);
    for (int t = 0; t < 10; ++t) {
      const auto& p = pairs[rng() % pairs.size()];
      CHECK(sss::projection_invariance_check(sss::share_basis(p), oracle::random_invertible_f2(rng, n)));
    }
  }
}

TEST_CASE("participant bound") {
  CHECK(sss::max_participants(1).value == 1);
  CHECK(sss::max_participants(2).value == 6);
  CHECK(sss::max_participants(3).value == 168);
  CHECK(sss::max_participants(4).value == 15 * 14 * 12 * 8);
  CHECK_FALSE(sss::max_participants(2).note.empty());
  CHECK_ERROR_KIND(sss::max_participants(0), ErrorKind::TooLarge);
  CHECK_ERROR_KIND(sss::max_participants(9), ErrorKind::TooLarge);
}

TEST_CASE("subset independence") {
  const std::vector<Coefficients> good{coeffs({1, 0}), coeffs({0, 1}), coeffs({1, 1})};
  CHECK(sss::every_subset_independent(good, 2));
  const std::vector<Coefficients> repeated{coeffs({1, 0}), coeffs({1, 0}), coeffs({1, 1})};
  CHECK_FALSE(sss::every_subset_independent(repeated, 2));
  const std::vector<Coefficients> dependent{coeffs({1, 0, 0}), coeffs({0, 1, 0}), coeffs({1, 1, 0})};
  CHECK_FALSE(sss::every_subset_independent(dependent, 3));
  CHECK_ERROR_KIND(sss::deal_with(kPair, kSecret, repeated), ErrorKind::InfeasibleShareCount);
}

TEST_CASE("deal: round trip over every n-subset") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto pairs = dealable_pairs(n);
    REQUIRE_FALSE(pairs.empty());
    for (int t = 0; t < 6; ++t) {
      sss::DealerConfig cfg{pairs[rng() % pairs.size()], n + (t % 2), random_secret(rng, n), rng()};
      CAPTURE(cfg.pair.to_string());
      const auto d = sss::deal(cfg);
      REQUIRE(d.shares.size() == cfg.m);
      CHECK(sss::every_subset_independent(d.coefficients, n));
      for_each_subset(cfg.m, n, [&](const std::vector<std::size_t>& idx) {
        std::vector<sss::Share> pick;
        for (auto i : idx) pick.push_back(d.shares[i]);
        CHECK(sss::reconstruct(pick, d.bundle) == cfg.secret);
      });
      // n - 1 shares padded with a zero column.
      for_each_subset(cfg.m, n - 1, [&](const std::vector<std::size_t>& idx) {
        F4Matrix k(2 * n, n);
        for (std::size_t j = 0; j < idx.size(); ++j)
          for (std::size_t i = 0; i < 2 * n; ++i) k(i, j) = d.shares[idx[j]].v[i];
        CHECK_ERROR_KIND(sss::reconstruct_from_matrix(k, d.bundle.remainder), ErrorKind::SingularMatrix);
      });
    }
  }
}

TEST_CASE("deal is deterministic in the seed") {
  sss::DealerConfig cfg{kPair, 3, kSecret, 42};
  const auto a = sss::deal(cfg);
  const auto b = sss::deal(cfg);
  CHECK(a.shares == b.shares);
  CHECK(a.bundle.remainder == b.bundle.remainder);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = i + 1; j < a.coefficients.size(); ++j) CHECK(a.coefficients[i] != a.coefficients[j]);
}

TEST_CASE("deal errors") {
  CHECK_ERROR_KIND(sss::deal({kPair, 1, kSecret, 1}), ErrorKind::InfeasibleShareCount);
  // Over GF(2)^2 only three nonzero vectors exist.
  CHECK_ERROR_KIND(sss::deal({kPair, 4, kSecret, 1}), ErrorKind::InfeasibleShareCount);
  CHECK_ERROR_KIND(sss::deal({kPair, 2, F2Matrix(3, 3), 1}), ErrorKind::ShapeError);
  CHECK_ERROR_KIND(sss::deal({GeneratorVectorPair::parse("3;11;01"), 3, F2Matrix(6, 6), 1}), ErrorKind::SingularMatrix);
}

TEST_CASE("the remainder is useless with the wrong basis") {
  const auto d = worked_example();
  int detected = 0;
  for (const auto& other : dealable_pairs(2)) {
    if (other == kPair) continue;
    const auto wrong = projection(sss::share_basis(other)) + d.bundle.remainder;
    bool binary = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) binary = binary && wrong(i, j).is_binary();
    if (!binary || demote(wrong) != kSecret) ++detected;
    if (!binary) CHECK_ERROR_KIND(demote(wrong), ErrorKind::NonBinaryResult);
  }
  CHECK(detected > 0);
}
