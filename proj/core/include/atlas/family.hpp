#pragma once

#include <string>

#include "atlas/errors.hpp"

namespace atlas {

// Lie type of the ambient group: A = gl(n), D = so(2l), B = so(2l+1).
enum class Family { A, D, B };

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::B: return 'B';
  }
  throw DomainError("bad family");
}

inline Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'D': case 'd': return Family::D;
    case 'B': case 'b': return Family::B;
    default: throw DomainError(std::string("unknown family: ") + c);
  }
}

// Rank parameter from the ambient dimension n: l for so(2l) / so(2l+1).
inline int rank_from_ambient(Family f, int n) {
  switch (f) {
    case Family::A:
      if (n < 2) throw DomainError("family A needs n >= 2");
      return n;
    case Family::D:
      if (n < 4 || n % 2 != 0) throw DomainError("family D needs even n >= 4");
      return n / 2;
    case Family::B:
      if (n < 3 || n % 2 != 1) throw DomainError("family B needs odd n >= 3");
      return (n - 1) / 2;
  }
  throw DomainError("bad family");
}

} // namespace atlas
