#pragma once

#include <map>
#include <vector>

#include "atlas/family.hpp"
#include "atlas/qsqrt2.hpp"

namespace atlas {

/*
  Partitions into lists.

  A list is an ordering of a finite subset of the non-negative integers; a
  PIL of a set A is a partition of A into lists.  A signed list carries a
  sign on each entry, subject to: entries are pairwise distinct in absolute
  value, the last entry is non-negative, and 0 (when present) is last.  A
  SPIL is a partition into signed lists.  PIL(n) indexes the orbits in the
  general linear case, SPIL(l) and SPIL(l u {0}) in the orthogonal cases.
*/

struct SignedList {
  std::vector<int> entries;

  SignedList() = default;
  explicit SignedList(std::vector<int> e) : entries(std::move(e)) { validate(); }

  void validate() const;
  int length() const { return static_cast<int>(entries.size()); }
  bool has_zero() const { return !entries.empty() && entries.back() == 0; }
  bool contains_abs(int v) const;

  friend bool operator==(const SignedList& x, const SignedList& y) { return x.entries == y.entries; }
  friend bool operator<(const SignedList& x, const SignedList& y) { return x.entries < y.entries; }
};

struct Pil {
  std::vector<std::vector<int>> lists; // kept sorted for canonical identity

  Pil() = default;
  explicit Pil(std::vector<std::vector<int>> ls);

  int ground_size() const;
  std::vector<int> ground() const;

  friend bool operator==(const Pil& x, const Pil& y) { return x.lists == y.lists; }
  friend bool operator<(const Pil& x, const Pil& y) { return x.lists < y.lists; }
};

struct Spil {
  std::vector<SignedList> lists; // kept sorted for canonical identity
  bool with_zero = false;

  Spil() = default;
  Spil(std::vector<SignedList> ls, bool zero);

  // Positive ground set (zero excluded).
  std::vector<int> ground() const;
  Pil abs() const;

  friend bool operator==(const Spil& x, const Spil& y) {
    return x.with_zero == y.with_zero && x.lists == y.lists;
  }
  friend bool operator<(const Spil& x, const Spil& y) {
    if (x.with_zero != y.with_zero) return x.with_zero < y.with_zero;
    return x.lists < y.lists;
  }
};

std::string to_json(const Pil& p);
std::string to_json(const Spil& s);

// All PILs of an explicit ground set of distinct positive integers.
std::vector<Pil> enumerate_pil(const std::vector<int>& ground);

// All SPILs of {1..l} (with_zero = false) or {0,1..l} (with_zero = true).
std::vector<Spil> enumerate_spil(int ell, bool with_zero);
// Same over an explicit positive ground set.
std::vector<Spil> enumerate_spil_set(const std::vector<int>& positives, bool with_zero);

// Lah number L(n,k) = n!/k! * C(n-1,k-1); requires 1 <= k <= n.
Integer lah(int n, int k);
Integer factorial(int n);
Integer binomial(int n, int k);

enum class CountMethod { Formula, Enumerate, Recursion, Egf };

// Orbit count for the family at rank parameter n (A: ambient n; D/B: l).
// All four methods agree; each is computed independently.
Integer count_orbits(Family family, int n_or_ell, CountMethod method);

struct SeriesTable {
  Family family;
  std::vector<Integer> values; // indexed from 0

  void check() const {
    if (values.empty() || values[0] != 1)
      throw DomainError("SeriesTable: values[0] must be 1");
  }
};

SeriesTable orbit_series(Family family, int upto, CountMethod method);

// b_n = sum_k L(n,k) a_k, b_0 = a_0.
std::vector<Integer> lah_transform(const std::vector<Integer>& a);
SeriesTable lah_transform(const SeriesTable& s);

/*
  Shift bijection between SPIL(A \ {x} u {0}) and SPIL_x(A), the SPILs of A
  in which +-x begins some list.  lambda moves the zero-terminated list
  (l_1,...,l_j,0) to (sgn(l_j) x, l_1,...,l_{j-1},|l_j|); the bare list (0)
  maps to the singleton (x).  gamma is the two-sided inverse.
*/
Spil shift_lambda(const Spil& sigma, int x);
Spil shift_gamma(const Spil& sigma, int x);

// Signed lists of length i over {1..l}, all sign patterns; |SLI(i,l)| =
// 2^i * l!/(l-i)!.
std::vector<SignedList> enumerate_signed_lists(int i, int ell);

// Block decompositions refining the enumerations by the K-orbit data.
// A: key (i,j) with sigma_1 the list containing n, sigma_1(i) = n and
//    len(sigma_1) = n - (j-i).
// D: key i with sigma_1 the list containing +-l and sigma_1(i) = +-l.
// B: key i with sigma_1 the zero list and len(sigma_1) = i+1.
std::map<std::pair<int, int>, std::vector<Pil>> block_partition_a(int n);
std::map<int, std::vector<Spil>> block_partition_spil(int ell, bool with_zero);

} // namespace atlas
