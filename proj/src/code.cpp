#include "tricode/code.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <iterator>
#include <sstream>

#include "tricode/kernels.hpp"

namespace tricode {

namespace {

constexpr std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

int highest_bit(Word w) {
  if (w.omegas != 0) return 64 + 63 - std::countl_zero(w.omegas);
  if (w.ones != 0) return 63 - std::countl_zero(w.ones);
  return -1;
}

bool bit_set(Word w, int b) {
  return b >= 64 ? ((w.omegas >> (b - 64)) & 1U) != 0 : ((w.ones >> b) & 1U) != 0;
}

void require_enumerable(const AdditiveCode& code) {
  if (code.f2_rank() > kMaxEnumerationRank) {
    throw Error(ErrorKind::TooLarge, "GF(2)-rank " + std::to_string(code.f2_rank()) +
                                         " exceeds the enumeration limit of " +
                                         std::to_string(kMaxEnumerationRank));
  }
}

std::vector<std::uint64_t> kernel_basis(const AdditiveCode& code) {
  std::vector<std::uint64_t> out;
  out.reserve(code.f2_rank());
  for (Word w : code.basis()) out.push_back(to_kernel_word(w));
  return out;
}

void require_same_length(std::span<const F4> u, std::span<const F4> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::ShapeError, "inner product: length mismatch");
}

// Dual for the form B(u, c) = sum_i Tr(u_i * twist(c_i)), where twist is the
// identity (trace form) or conjugation (Hermitian form). B is GF(2)-linear in
// u, so each basis row c contributes one equation on the 2n bits of u.
template <class Twist>
AdditiveCode dual_under(const AdditiveCode& code, Twist twist) {
  const std::size_t n = code.length();
  F2Matrix constraints(code.f2_rank(), 2 * n);
  for (std::size_t r = 0; r < code.f2_rank(); ++r) {
    const F4Vector c = unpack(code.basis()[r], n);
    for (std::size_t j = 0; j < n; ++j) {
      const F4 t = twist(c[j]);
      constraints(r, j) = trace(t);               // u_j = 1
      constraints(r, n + j) = trace(kOmega * t);  // u_j = w
    }
  }
  const F2Matrix kernel = kernel_f2(constraints);
  F4Matrix gen(kernel.rows(), n);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      gen(r, j) = F4::from_bits(static_cast<std::uint8_t>(kernel(r, j).bit | (kernel(r, n + j).bit << 1)));
    }
  }
  return AdditiveCode(std::move(gen));
}

}  // namespace

Word pack(std::span<const F4> v) {
  if (v.size() > kMaxCodeLength) throw Error(ErrorKind::ShapeError, "vector longer than 64");
  Word w;
  for (std::size_t j = 0; j < v.size(); ++j) {
    w.ones |= static_cast<std::uint64_t>(v[j].c0()) << j;
    w.omegas |= static_cast<std::uint64_t>(v[j].c1()) << j;
  }
  return w;
}

F4Vector unpack(Word w, std::size_t n) {
  F4Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = F4::from_bits(static_cast<std::uint8_t>(((w.ones >> j) & 1U) | (((w.omegas >> j) & 1U) << 1)));
  }
  return out;
}

Word reversed(Word w, std::size_t n) {
  if (n == 0) return {};
  const unsigned shift = static_cast<unsigned>(64 - n);
  return {reverse_bits(w.ones) >> shift, reverse_bits(w.omegas) >> shift};
}

AdditiveCode::AdditiveCode(F4Matrix generator) : n_(generator.cols()), generator_(std::move(generator)) {
  if (n_ > kMaxCodeLength) {
    throw Error(ErrorKind::ShapeError, "code length " + std::to_string(n_) + " exceeds " +
                                           std::to_string(kMaxCodeLength));
  }
  slot_.fill(-1);
  for (std::size_t i = 0; i < generator_.rows(); ++i) {
    const Word row = pack(generator_.row(i));
    const Word rest = reduce(row);
    if (rest.is_zero()) continue;
    basis_.push_back(row);
    slot_[static_cast<std::size_t>(highest_bit(rest))] = static_cast<std::int16_t>(echelon_.size());
    echelon_.push_back(rest);
  }
}

AdditiveCode AdditiveCode::trivial(std::size_t n) { return AdditiveCode(F4Matrix(0, n)); }

AdditiveCode AdditiveCode::full_space(std::size_t n) {
  F4Matrix gen(2 * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    gen(j, j) = kOne;
    gen(n + j, j) = kOmega;
  }
  return AdditiveCode(std::move(gen));
}

Word AdditiveCode::reduce(Word w) const {
  for (int b = highest_bit(w); b >= 0; --b) {
    if (!bit_set(w, b)) continue;
    const auto s = slot_[static_cast<std::size_t>(b)];
    if (s < 0) return w;
    w ^= echelon_[static_cast<std::size_t>(s)];
  }
  return w;
}

bool AdditiveCode::contains(Word w) const { return reduce(w).is_zero(); }

bool AdditiveCode::contains(std::span<const F4> v) const {
  if (v.size() != n_) return false;
  return contains(pack(v));
}

bool AdditiveCode::same_code(const AdditiveCode& other) const {
  if (n_ != other.n_ || f2_rank() != other.f2_rank()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](Word w) { return contains(w); });
}

std::vector<Word> AdditiveCode::codeword_words() const {
  require_enumerable(*this);
  const std::uint64_t total = std::uint64_t{1} << basis_.size();
  std::vector<Word> out;
  out.reserve(total);
  Word w;
  out.push_back(w);
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(w);
  }
  return out;
}

std::string_view verdict_name(SingletonVerdict v) {
  switch (v) {
    case SingletonVerdict::Extremal: return "Extremal";
    case SingletonVerdict::Optimal: return "Optimal";
    case SingletonVerdict::NearOptimal: return "NearOptimal";
    case SingletonVerdict::Suboptimal: return "Suboptimal";
    case SingletonVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::vector<F4Vector> enumerate_codewords(const AdditiveCode& code) {
  const auto words = code.codeword_words();
  std::vector<F4Vector> out;
  out.reserve(words.size());
  for (Word w : words) out.push_back(unpack(w, code.length()));
  return out;
}

std::size_t min_distance(const AdditiveCode& code) {
  if (code.f2_rank() == 0) {
    throw Error(ErrorKind::NoNonzeroCodeword, "the trivial code has no nonzero codeword");
  }
  require_enumerable(code);
  if (code.length() <= kernels::kMaxPackedLength) {
    const auto basis = kernel_basis(code);
    return kernels::min_weight(basis);
  }
  const auto basis = code.basis();
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  Word w;
  unsigned best = ~0U;
  for (std::uint64_t i = 1; i < total; ++i) {
    w ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, w.weight());
  }
  return best;
}

WeightDistribution weight_distribution(const AdditiveCode& code) {
  require_enumerable(code);
  WeightDistribution dist{std::vector<std::uint64_t>(code.length() + 1, 0)};
  if (code.length() <= kernels::kMaxPackedLength) {
    const auto basis = kernel_basis(code);
    kernels::weight_histogram(basis, dist.counts);
    return dist;
  }
  for (Word w : code.codeword_words()) dist.counts[w.weight()] += 1;
  return dist;
}

F2 hermitian_trace_inner(std::span<const F4> u, std::span<const F4> v) {
  require_same_length(u, v);
  F2 sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum = sum + trace(u[i] * conjugate(v[i]));
  return sum;
}

F2 trace_inner(std::span<const F4> u, std::span<const F4> v) {
  require_same_length(u, v);
  F4 sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return trace(sum);
}

AdditiveCode hermitian_dual(const AdditiveCode& code) {
  return dual_under(code, [](F4 x) { return conjugate(x); });
}

AdditiveCode trace_dual(const AdditiveCode& code) {
  return dual_under(code, [](F4 x) { return x; });
}

bool is_reversible(const AdditiveCode& code) {
  // Reversal is additive, so the image of the code is spanned by the
  // reversed basis rows.
  return std::all_of(code.basis().begin(), code.basis().end(),
                     [&](Word w) { return code.contains(reversed(w, code.length())); });
}

AdditiveCode conjugate_code(const AdditiveCode& code) {
  F4Matrix gen = code.generator();
  for (std::size_t i = 0; i < gen.rows(); ++i)
    for (auto& x : gen.row(i)) x = conjugate(x);
  return AdditiveCode(std::move(gen));
}

AdditiveCode direct_product(const AdditiveCode& first, const AdditiveCode& second) {
  return AdditiveCode(block_diagonal(first.generator(), second.generator()));
}

SingletonVerdict singleton_classify(std::size_t n, std::size_t k, std::size_t d,
                                    const DmaxTable& dmax_table) {
  if (k != n) {
    throw Error(ErrorKind::ShapeError, "Singleton classification needs an (n, 2^n) code, got k = " +
                                           std::to_string(k) + ", n = " + std::to_string(n));
  }
  const std::size_t bound = singleton_bound(n);
  if (d > bound) {
    throw Error(ErrorKind::BoundViolation, "distance " + std::to_string(d) +
                                               " exceeds the Singleton bound " + std::to_string(bound) +
                                               " for n = " + std::to_string(n));
  }
  if (d == bound) return SingletonVerdict::Extremal;
  const auto it = dmax_table.find(n);
  if (it == dmax_table.end()) return SingletonVerdict::Unknown;
  const std::size_t dmax = it->second;
  if (d > dmax) {
    throw Error(ErrorKind::BoundViolation, "distance " + std::to_string(d) + " exceeds d_max(" +
                                               std::to_string(n) + ") = " + std::to_string(dmax));
  }
  if (d == dmax) return SingletonVerdict::Optimal;
  if (d + 1 == dmax) return SingletonVerdict::NearOptimal;
  return SingletonVerdict::Suboptimal;
}

AdditiveCode parse_code(std::istream& in) {
  // The code header is "n k" (columns first), unlike the matrix header.
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') break;
  }
  std::istringstream header(line);
  long long n = -1;
  long long k = -1;
  std::string extra;
  if (!(header >> n >> k) || n < 0 || k < 0 || (header >> extra)) {
    throw Error(ErrorKind::ParseError, "bad code header '" + line + "', expected \"n k\"");
  }
  const std::string body{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return AdditiveCode(parse_f4_matrix(std::to_string(k) + " " + std::to_string(n) + "\n" + body));
}

AdditiveCode parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

std::string render_code(const AdditiveCode& code) {
  const F4Matrix& g = code.generator();
  std::string out = std::to_string(g.cols()) + " " + std::to_string(g.rows()) + "\n";
  for (std::size_t i = 0; i < g.rows(); ++i) out += render_row(g.row(i)) + "\n";
  return out;
}

}  // namespace tricode
