#include "tricode/tridiagonal.hpp"

#include <algorithm>
#include <charconv>

namespace tricode {

namespace {

std::vector<std::uint8_t> parse_bits(std::string_view text, std::size_t expected,
                                     std::string_view full) {
  if (text.size() != expected) {
    throw Error(ErrorKind::ParseError, "pair '" + std::string(full) + "': expected " +
                                           std::to_string(expected) + " bits, got '" +
                                           std::string(text) + "'");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(expected);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::ParseError, "pair '" + std::string(full) + "': bit strings use 0 and 1");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::uint64_t bits_to_index(const std::vector<std::uint8_t>& bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | b;
  return v;
}

std::vector<std::uint8_t> index_to_bits(std::uint64_t v, std::size_t width) {
  std::vector<std::uint8_t> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[width - 1 - i] = static_cast<std::uint8_t>((v >> i) & 1U);
  return bits;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

F4Vector full_vector(const std::vector<std::uint8_t>& tail) {
  F4Vector v{kOmega};
  for (auto b : tail) v.push_back(b != 0 ? kOne : kZero);
  return v;
}

}  // namespace

GeneratorVectorPair GeneratorVectorPair::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    parts.push_back(trim(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::ParseError, "pair '" + std::string(text) + "' is not of the form n;abits;bbits");
  }
  std::size_t n = 0;
  const auto& ns = parts[0];
  const auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (ec != std::errc{} || ptr != ns.data() + ns.size() || n < 2 || n > 64) {
    throw Error(ErrorKind::ParseError, "pair '" + std::string(text) + "': bad length '" + ns + "'");
  }
  GeneratorVectorPair pair;
  pair.n = n;
  pair.upper = parse_bits(parts[1], n - 1, text);
  pair.lower = parse_bits(parts[2], n - 1, text);
  return pair;
}

GeneratorVectorPair GeneratorVectorPair::from_vectors(std::span<const F4> a, std::span<const F4> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorKind::ShapeError, "generator vectors must have the same nonzero length");
  }
  if (a.front() != kOmega || b.front() != kOmega) {
    throw Error(ErrorKind::AlphabetError, "generator vectors must start with w");
  }
  GeneratorVectorPair pair;
  pair.n = a.size();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!a[i].is_binary() || !b[i].is_binary()) {
      throw Error(ErrorKind::AlphabetError, "generator vector entries after the first must be 0 or 1");
    }
    pair.upper.push_back(a[i].bits());
    pair.lower.push_back(b[i].bits());
  }
  return pair;
}

GeneratorVectorPair GeneratorVectorPair::from_indices(std::size_t n, std::uint64_t upper_bits,
                                                      std::uint64_t lower_bits) {
  return {n, index_to_bits(upper_bits, n - 1), index_to_bits(lower_bits, n - 1)};
}

std::string GeneratorVectorPair::to_string() const {
  std::string out = std::to_string(n) + ";";
  for (auto b : upper) out += b != 0 ? '1' : '0';
  out += ';';
  for (auto b : lower) out += b != 0 ? '1' : '0';
  return out;
}

F4Vector GeneratorVectorPair::upper_vector() const { return full_vector(upper); }
F4Vector GeneratorVectorPair::lower_vector() const { return full_vector(lower); }
std::uint64_t GeneratorVectorPair::upper_index() const { return bits_to_index(upper); }
std::uint64_t GeneratorVectorPair::lower_index() const { return bits_to_index(lower); }

bool GeneratorVectorPair::excluded_from_census() const {
  const auto zero = [](const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](auto b) { return b == 0; });
  };
  return zero(upper) || zero(lower);
}

TridiagonalGenerator build(const GeneratorVectorPair& pair, BuildOptions options) {
  const std::size_t min_n = options.allow_length_two ? 2 : 3;
  if (pair.n < min_n) {
    throw Error(ErrorKind::LengthError, "tridiagonal codes need n >= " + std::to_string(min_n) +
                                            ", got " + std::to_string(pair.n));
  }
  if (pair.upper.size() != pair.n - 1 || pair.lower.size() != pair.n - 1) {
    throw Error(ErrorKind::AlphabetError, "generator vector tails must have n - 1 entries");
  }
  const auto binary = [](std::uint8_t b) { return b <= 1; };
  if (!std::all_of(pair.upper.begin(), pair.upper.end(), binary) ||
      !std::all_of(pair.lower.begin(), pair.lower.end(), binary)) {
    throw Error(ErrorKind::AlphabetError, "generator vector tails must be 0 or 1");
  }

  F4Matrix a(pair.n, pair.n);
  for (std::size_t i = 0; i < pair.n; ++i) a(i, i) = kOmega;
  for (std::size_t i = 0; i + 1 < pair.n; ++i) {
    a(i, i + 1) = pair.upper[i] != 0 ? kOne : kZero;
    a(i + 1, i) = pair.lower[i] != 0 ? kOne : kZero;
  }
  return {pair, std::move(a)};
}

F2Matrix to_graph(const TridiagonalGenerator& gen) {
  F4Matrix gamma = gen.matrix;
  for (std::size_t i = 0; i < gamma.rows(); ++i) gamma(i, i) -= kOmega;
  return demote(gamma);
}

F4Matrix from_graph(const F2Matrix& adjacency) {
  if (!adjacency.square()) throw Error(ErrorKind::ShapeError, "adjacency matrix must be square");
  F4Matrix a = promote(adjacency);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, i).is_zero()) throw Error(ErrorKind::AlphabetError, "adjacency matrix has a loop");
    a(i, i) = kOmega;
  }
  return a;
}

bool is_graph_generator(const F4Matrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j ? a(i, j) != kOmega : !a(i, j).is_binary()) return false;
    }
  }
  return true;
}

bool is_reversible_pair(const GeneratorVectorPair& pair) {
  // a_i = b_{n-i} for i = 1..n-1; tails are 0-based so a_i = upper[i-1].
  const std::size_t m = pair.upper.size();
  for (std::size_t i = 1; i <= m; ++i) {
    if (pair.upper[i - 1] != pair.lower[pair.n - i - 1]) return false;
  }
  return true;
}

F4Matrix conjugation_generator(const TridiagonalGenerator& gen) {
  return F4Matrix::identity(gen.matrix.rows()) + gen.matrix;
}

F4Matrix double_generator(const TridiagonalGenerator& gen) {
  return hstack(F4Matrix::identity(gen.matrix.rows()), gen.matrix);
}

F4Matrix graph_dual_generator(const TridiagonalGenerator& gen) { return transpose(gen.matrix); }

}  // namespace tricode
