#include "tricode/gf4.hpp"

#include <string>

namespace tricode {

F4 inv(F4 x) {
  switch (x.bits()) {
    case F4::One: return kOne;
    case F4::Omega: return kOmega2;
    case F4::Omega2: return kOmega;
    default: throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(4)");
  }
}

char render_symbol(F4 x) {
  static constexpr char kSymbols[4] = {'0', '1', 'w', 'W'};
  return kSymbols[x.bits()];
}

F4 parse_symbol(char c) {
  switch (c) {
    case '0': return kZero;
    case '1': return kOne;
    case 'w': return kOmega;
    case 'W': return kOmega2;
    default: throw Error(ErrorKind::ParseError, std::string("unknown GF(4) symbol '") + c + "'");
  }
}

F4 parse_symbol(std::string_view token) {
  if (token.size() != 1) {
    throw Error(ErrorKind::ParseError, "unknown GF(4) symbol '" + std::string(token) + "'");
  }
  return parse_symbol(token.front());
}

}  // namespace tricode
