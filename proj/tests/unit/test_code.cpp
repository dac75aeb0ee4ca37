#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tricode/code.hpp"

using namespace tricode;

namespace {

F4Matrix m(const std::vector<std::string>& rows) {
  std::vector<F4Vector> out;
  for (const auto& r : rows) out.push_back(oracle::from_word(r));
  return F4Matrix::from_rows(out);
}

// The two 3x3 tridiagonal generators worked by hand in the literature, and
// the codeword lists printed next to them (w^2 written as W).
const F4Matrix kFirst = m({"w10", "0w1", "01w"});
const F4Matrix kSecond = m({"w00", "1w1", "00w"});
const auto kFirstWords = oracle::words_of({"000", "w10", "0w1", "01w", "wW1", "w0w", "0WW", "wwW"});
const auto kSecondWords = oracle::words_of({"000", "w00", "1w1", "00w", "Ww1", "w0w", "1wW", "WwW"});

AdditiveCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t max_rows) {
  return AdditiveCode(oracle::random_f4_matrix(rng, rng() % (max_rows + 1), n));
}

}  // namespace

TEST_CASE("word packing") {
  const F4Vector v = oracle::from_word("0w1W");
  const Word w = pack(v);
  CHECK(w.ones == 0b1100);
  CHECK(w.omegas == 0b1010);
  CHECK(w.weight() == 3);
  CHECK(unpack(w, 4) == v);
  CHECK(unpack(reversed(w, 4), 4) == oracle::from_word("W1w0"));
  CHECK(unpack(conjugated(w), 4) == oracle::from_word("0W1w"));
}

TEST_CASE("enumerate_codewords reproduces the printed codeword lists") {
  CHECK(oracle::words_of(enumerate_codewords(AdditiveCode(kFirst))) == kFirstWords);
  CHECK(oracle::words_of(enumerate_codewords(AdditiveCode(kSecond))) == kSecondWords);
  CHECK(oracle::words_of(enumerate_codewords(AdditiveCode::trivial(3))) == oracle::words_of({"000"}));
}

TEST_CASE("codewords come out in Gray-code order over the basis") {
  const AdditiveCode code(kFirst);
  const auto words = code.codeword_words();
  REQUIRE(words.size() == 8);
  CHECK(words.front().is_zero());
  for (std::size_t i = 1; i < words.size(); ++i) {
    const Word step = words[i] ^ words[i - 1];
    CHECK(std::find(code.basis().begin(), code.basis().end(), step) != code.basis().end());
  }
}

TEST_CASE("codeword set is an additive group of size 2^rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto code = random_code(rng, 1 + trial % 6, 5);
    const auto words = oracle::words_of(enumerate_codewords(code));
    CHECK(words.size() == (std::size_t{1} << code.f2_rank()));
    CHECK(words == oracle::span_set(code.generator()));
    CHECK(words.count(std::string(code.length(), '0')) == 1);
    for (const auto& a : words)
      for (const auto& b : words) CHECK(words.count(oracle::word(oracle::add(oracle::from_word(a), oracle::from_word(b)))) == 1);
  }
}

TEST_CASE("rank guard") {
  CHECK_ERROR_KIND(enumerate_codewords(AdditiveCode::full_space(13)), ErrorKind::TooLarge);
  CHECK_ERROR_KIND(min_distance(AdditiveCode::full_space(13)), ErrorKind::TooLarge);
  CHECK(AdditiveCode::full_space(12).f2_rank() == 24);
  CHECK_ERROR_KIND(AdditiveCode(F4Matrix(1, 65)), ErrorKind::ShapeError);
}

TEST_CASE("min_distance") {
  CHECK(min_distance(AdditiveCode(kFirst)) == 2);
  CHECK(min_distance(AdditiveCode(kFirst)) == oracle::min_nonzero_weight(kFirstWords));
  // The printed list contains w00, so the distance is 1.
  CHECK(min_distance(AdditiveCode(kSecond)) == oracle::min_nonzero_weight(kSecondWords));
  CHECK(min_distance(AdditiveCode(kSecond)) == 1);
  for (std::size_t n : {1, 5, 33, 64}) {
    F4Matrix row(1, n);
    for (auto& x : row.row(0)) x = kOmega;
    CHECK(min_distance(AdditiveCode(row)) == n);
  }
  CHECK_ERROR_KIND(min_distance(AdditiveCode::trivial(4)), ErrorKind::NoNonzeroCodeword);
}

TEST_CASE("minimum distance equals minimum pairwise distance") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto code = random_code(rng, 1 + trial % 5, 5);
    if (code.f2_rank() == 0) continue;
    const auto words = oracle::words_of(enumerate_codewords(code));
    CHECK(min_distance(code) == oracle::min_pairwise_distance(words));
  }
}

TEST_CASE("long codes take the two-plane path") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto gen = oracle::random_f4_matrix(rng, 6, 40);
    const AdditiveCode code(gen);
    const auto span = oracle::span_set(gen);
    CHECK(min_distance(code) == oracle::min_nonzero_weight(span));
    CHECK(weight_distribution(code).counts == oracle::weight_tally(span, 40));
  }
}

TEST_CASE("weight_distribution") {
  // Tallies of the printed lists.
  CHECK(weight_distribution(AdditiveCode(kFirst)).counts == oracle::weight_tally(kFirstWords, 3));
  CHECK(weight_distribution(AdditiveCode(kFirst)).counts == std::vector<std::uint64_t>{1, 0, 5, 2});
  CHECK(weight_distribution(AdditiveCode(kSecond)).counts == oracle::weight_tally(kSecondWords, 3));
  CHECK(weight_distribution(AdditiveCode(kSecond)).counts == std::vector<std::uint64_t>{1, 2, 1, 4});
  CHECK(weight_distribution(AdditiveCode::trivial(4)).counts == std::vector<std::uint64_t>{1, 0, 0, 0, 0});
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto code = random_code(rng, 1 + trial % 6, 6);
    const auto dist = weight_distribution(code);
    CHECK(dist.total() == (std::uint64_t{1} << code.f2_rank()));
    CHECK(dist.counts == oracle::weight_tally(oracle::span_set(code.generator()), code.length()));
  }
}

TEST_CASE("inner products") {
  const F4Vector w{kOmega}, one{kOne}, zero{kZero};
  CHECK(hermitian_trace_inner(w, one) == F2(true));
  CHECK(hermitian_trace_inner(one, one) == F2(false));
  CHECK(trace_inner(one, one) == F2(false));
  CHECK(trace_inner(w, one) == F2(true));
  CHECK(trace_inner(zero, w) == F2(false));
  CHECK_ERROR_KIND(hermitian_trace_inner(w, F4Vector{kOne, kOne}), ErrorKind::ShapeError);
  CHECK_ERROR_KIND(trace_inner(w, F4Vector{}), ErrorKind::ShapeError);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_f4_matrix(rng, 2, 1 + trial % 6);
    const auto u = a.row_vector(0), v = a.row_vector(1);
    CHECK(hermitian_trace_inner(u, u) == F2(false));
    CHECK(hermitian_trace_inner(u, v) == hermitian_trace_inner(v, u));
    CHECK(trace_inner(u, v) == trace_inner(v, u));
    CHECK(hermitian_trace_inner(u, v).bit == oracle::hermitian_form(u, v));
    CHECK(trace_inner(u, v).bit == oracle::trace_form(u, v));
  }
}

TEST_CASE("duals of the trivial code and the full space") {
  for (std::size_t n : {1, 3, 5}) {
    CHECK(hermitian_dual(AdditiveCode::trivial(n)).f2_rank() == 2 * n);
    CHECK(trace_dual(AdditiveCode::trivial(n)).f2_rank() == 2 * n);
    CHECK(hermitian_dual(AdditiveCode::full_space(n)).f2_rank() == 0);
    CHECK(trace_dual(AdditiveCode::full_space(n)).f2_rank() == 0);
  }
}

TEST_CASE("graph code dual is generated by the transpose") {
  const AdditiveCode code(kFirst);
  CHECK(hermitian_dual(code).same_code(AdditiveCode(transpose(kFirst))));
}

TEST_CASE("kernel duals match the 4^n scan") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto code = random_code(rng, 1 + trial % 4, 6);
    const auto n = code.length();
    const auto herm = hermitian_dual(code);
    const auto tr = trace_dual(code);
    CHECK(code.f2_rank() + herm.f2_rank() == 2 * n);
    CHECK(code.f2_rank() + tr.f2_rank() == 2 * n);
    CHECK(oracle::words_of(enumerate_codewords(herm)) == oracle::dual_by_scan(code.generator(), oracle::hermitian_form));
    CHECK(oracle::words_of(enumerate_codewords(tr)) == oracle::dual_by_scan(code.generator(), oracle::trace_form));
  }
}

TEST_CASE("reversibility") {
  CHECK(is_reversible(AdditiveCode(m({"w1w"}))));
  CHECK_FALSE(is_reversible(AdditiveCode(m({"w10"}))));
  // 0w1 reverses to 1w0, which is not in the printed list.
  CHECK(oracle::reversible_by_scan(kFirstWords) == false);
  CHECK(is_reversible(AdditiveCode(kFirst)) == oracle::reversible_by_scan(kFirstWords));
  CHECK(is_reversible(AdditiveCode(kSecond)) == oracle::reversible_by_scan(kSecondWords));

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const auto code = random_code(rng, 1 + trial % 5, 3);
    CHECK(is_reversible(code) == oracle::reversible_by_scan(oracle::span_set(code.generator())));
  }
}

TEST_CASE("conjugate_code") {
  const AdditiveCode binary(m({"110", "011"}));
  CHECK(conjugate_code(binary).same_code(binary));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto code = random_code(rng, 1 + trial % 5, 5);
    const auto conj = conjugate_code(code);
    std::set<std::string> expected;
    for (const auto& w : oracle::span_set(code.generator())) {
      F4Vector v = oracle::from_word(w);
      for (auto& x : v) x = oracle::poly_mul(x, x);
      expected.insert(oracle::word(v));
    }
    CHECK(oracle::words_of(enumerate_codewords(conj)) == expected);
    CHECK(conjugate_code(conj).same_code(code));
    CHECK(weight_distribution(conj) == weight_distribution(code));
  }
}

TEST_CASE("direct_product") {
  const AdditiveCode first(kFirst);
  const auto padded = direct_product(first, AdditiveCode::trivial(2));
  std::set<std::string> expected;
  for (const auto& w : kFirstWords) expected.insert(w + "00");
  CHECK(oracle::words_of(enumerate_codewords(padded)) == expected);

  const auto square = direct_product(first, first);
  CHECK(square.length() == 6);
  CHECK(square.f2_rank() == 6);
  CHECK(min_distance(square) == 2);
  CHECK(oracle::min_nonzero_weight(oracle::span_set(square.generator())) == 2);
}

TEST_CASE("singleton_classify") {
  const DmaxTable table{{3, 2}};
  CHECK(singleton_classify(3, 3, 2, table) == SingletonVerdict::Extremal);
  CHECK(singleton_classify(3, 3, 1, table) == SingletonVerdict::NearOptimal);
  CHECK(singleton_classify(4, 4, 2) == SingletonVerdict::Unknown);
  CHECK(singleton_classify(4, 4, 3) == SingletonVerdict::Extremal);
  const DmaxTable six{{6, 4}};
  CHECK(singleton_classify(6, 6, 3, six) == SingletonVerdict::NearOptimal);
  CHECK(singleton_classify(6, 6, 2, six) == SingletonVerdict::Suboptimal);
  const DmaxTable eight{{8, 4}};
  CHECK(singleton_classify(8, 8, 4, eight) == SingletonVerdict::Optimal);
  CHECK_ERROR_KIND(singleton_classify(3, 3, 3), ErrorKind::BoundViolation);
  CHECK_ERROR_KIND(singleton_classify(10, 10, 5, DmaxTable{{10, 4}}), ErrorKind::BoundViolation);
  CHECK_ERROR_KIND(singleton_classify(3, 2, 2), ErrorKind::ShapeError);
  CHECK(verdict_name(SingletonVerdict::NearOptimal) == "NearOptimal");
}

TEST_CASE("code file format") {
  const std::string text = "3 3\nw 1 0\n0 w 1\n0 1 w\n";
  const auto code = parse_code(text);
  CHECK(code.generator() == kFirst);
  CHECK(render_code(code) == text);
  CHECK(parse_code("3 3\nw10\n0w1\n01w\n").generator() == kFirst);
  CHECK(parse_code("4 0\n").f2_rank() == 0);
  CHECK_ERROR_KIND(parse_code("3 2\nw10\n"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_code("3\n"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_code("2 1\nw2\n"), ErrorKind::ParseError);
}
