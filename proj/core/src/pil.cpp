#include "atlas/pil.hpp"

#include <algorithm>
#include <cstdlib>

#include "json.hpp"

namespace atlas {

namespace {

// Truncated power series over the rationals, coefficients 0..n.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, int upto) {
  Series out(upto + 1, Rational(0));
  for (int i = 0; i <= upto; ++i) {
    if (i >= static_cast<int>(a.size()) || a[i] == 0) continue;
    for (int j = 0; i + j <= upto; ++j) {
      if (j >= static_cast<int>(b.size()) || b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// exp(f) for f with zero constant term, via g' = f' g.
Series series_exp(const Series& f, int upto) {
  if (!f.empty() && f[0] != 0) throw DomainError("series_exp: nonzero constant term");
  Series g(upto + 1, Rational(0));
  g[0] = 1;
  for (int n = 1; n <= upto; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
      if (k >= static_cast<int>(f.size()) || f[k] == 0) continue;
      acc += Rational(k) * f[k] * g[n - k];
    }
    g[n] = acc / n;
  }
  return g;
}

// x/(1-cx) = sum_{n>=1} c^{n-1} x^n.
Series geometric_over(int c, int upto) {
  Series f(upto + 1, Rational(0));
  Integer pw = 1;
  for (int n = 1; n <= upto; ++n) {
    f[n] = Rational(pw);
    pw *= c;
  }
  return f;
}

// 1/(1-cx) = sum c^n x^n.
Series geometric(int c, int upto) {
  Series f(upto + 1, Rational(0));
  Integer pw = 1;
  for (int n = 0; n <= upto; ++n) {
    f[n] = Rational(pw);
    pw *= c;
  }
  return f;
}

Integer egf_coefficient_count(const Series& g, int n) {
  Rational v = g[n] * Rational(factorial(n));
  if (denominator(v) != 1)
    throw InternalInvariantError("egf coefficient is not an integer");
  return numerator(v);
}

Series family_egf(Family family, int upto) {
  switch (family) {
    case Family::A:
      return series_exp(geometric_over(1, upto), upto);
    case Family::D:
      return series_exp(geometric_over(2, upto), upto);
    case Family::B:
      return series_mul(series_exp(geometric_over(2, upto), upto), geometric(2, upto), upto);
  }
  throw DomainError("bad family");
}

Integer count_by_recursion(Family family, int n) {
  // Two-term recursions; initial terms 1,1 (A), 1,1 (D), 1,3 (B).
  Integer prev, cur;
  switch (family) {
    case Family::A: prev = 1; cur = 1; break;
    case Family::D: prev = 1; cur = 1; break;
    case Family::B: prev = 1; cur = 3; break;
  }
  if (n == 0) return prev;
  for (int m = 1; m < n; ++m) {
    Integer next;
    switch (family) {
      case Family::A: next = (2 * m + 1) * cur - Integer(m) * (m - 1) * prev; break;
      case Family::D: next = (4 * m + 1) * cur - 4 * Integer(m) * (m - 1) * prev; break;
      case Family::B: next = (4 * m + 3) * cur - 4 * Integer(m) * m * prev; break;
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

void enumerate_partitions_rec(const std::vector<int>& ground, size_t idx,
                              std::vector<std::vector<int>>& blocks,
                              std::vector<std::vector<std::vector<int>>>& out) {
  if (idx == ground.size()) {
    out.push_back(blocks);
    return;
  }
  // Recursive calls may reallocate `blocks`; index access stays valid.
  for (size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(ground[idx]);
    enumerate_partitions_rec(ground, idx + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({ground[idx]});
  enumerate_partitions_rec(ground, idx + 1, blocks, out);
  blocks.pop_back();
}

void cartesian_orderings(const std::vector<std::vector<std::vector<int>>>& per_block,
                         size_t idx, std::vector<std::vector<int>>& acc,
                         std::vector<Pil>& out) {
  if (idx == per_block.size()) {
    out.push_back(Pil(acc));
    return;
  }
  for (const auto& ordering : per_block[idx]) {
    acc.push_back(ordering);
    cartesian_orderings(per_block, idx + 1, acc, out);
    acc.pop_back();
  }
}

} // namespace

void SignedList::validate() const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 0 && i + 1 != entries.size())
      throw DomainError("SignedList: 0 must be the last entry");
    for (size_t j = i + 1; j < entries.size(); ++j)
      if (std::abs(entries[i]) == std::abs(entries[j]))
        throw DomainError("SignedList: repeated absolute value");
  }
  if (!entries.empty() && entries.back() < 0)
    throw DomainError("SignedList: last entry must be non-negative");
}

bool SignedList::contains_abs(int v) const {
  for (int e : entries)
    if (std::abs(e) == std::abs(v)) return true;
  return false;
}

Pil::Pil(std::vector<std::vector<int>> ls) : lists(std::move(ls)) {
  for (const auto& l : lists)
    if (l.empty()) throw DomainError("Pil: empty list");
  std::sort(lists.begin(), lists.end());
  std::vector<int> g = ground();
  for (size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] == g[i + 1]) throw DomainError("Pil: lists do not partition the ground set");
}

int Pil::ground_size() const {
  int s = 0;
  for (const auto& l : lists) s += static_cast<int>(l.size());
  return s;
}

std::vector<int> Pil::ground() const {
  std::vector<int> g;
  for (const auto& l : lists) g.insert(g.end(), l.begin(), l.end());
  std::sort(g.begin(), g.end());
  return g;
}

Spil::Spil(std::vector<SignedList> ls, bool zero) : lists(std::move(ls)), with_zero(zero) {
  bool saw_zero = false;
  for (auto& l : lists) {
    l.validate();
    if (l.has_zero()) saw_zero = true;
  }
  if (saw_zero != with_zero) throw DomainError("Spil: zero flag inconsistent with lists");
  std::sort(lists.begin(), lists.end());
  abs(); // validates the underlying partition
}

std::vector<int> Spil::ground() const {
  std::vector<int> g;
  for (const auto& l : lists)
    for (int e : l.entries)
      if (e != 0) g.push_back(std::abs(e));
  std::sort(g.begin(), g.end());
  for (size_t i = 0; i + 1 < g.size(); ++i)
    if (g[i] == g[i + 1]) throw DomainError("Spil: repeated ground element");
  return g;
}

Pil Spil::abs() const {
  std::vector<std::vector<int>> ls;
  for (const auto& l : lists) {
    std::vector<int> a;
    for (int e : l.entries) a.push_back(std::abs(e));
    ls.push_back(std::move(a));
  }
  return Pil(ls);
}

std::string to_json(const Pil& p) {
  nlohmann::json j = p.lists;
  return j.dump();
}

std::string to_json(const Spil& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : s.lists) j.push_back(l.entries);
  return j.dump();
}

std::vector<Pil> enumerate_pil(const std::vector<int>& ground) {
  if (ground.empty()) throw DomainError("enumerate_pil: empty ground set");
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<std::vector<int>> blocks;
  enumerate_partitions_rec(ground, 0, blocks, partitions);

  std::vector<Pil> out;
  for (const auto& part : partitions) {
    std::vector<std::vector<std::vector<int>>> per_block;
    for (const auto& block : part) {
      std::vector<int> sorted = block;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::vector<int>> orderings;
      do orderings.push_back(sorted);
      while (std::next_permutation(sorted.begin(), sorted.end()));
      per_block.push_back(std::move(orderings));
    }
    std::vector<std::vector<int>> acc;
    cartesian_orderings(per_block, 0, acc, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Spil> enumerate_spil(int ell, bool with_zero) {
  if (ell < 1) throw DomainError("enumerate_spil: ell must be >= 1");
  std::vector<int> positives(ell);
  for (int i = 0; i < ell; ++i) positives[i] = i + 1;
  return enumerate_spil_set(positives, with_zero);
}

std::vector<Spil> enumerate_spil_set(const std::vector<int>& positives, bool with_zero) {
  std::vector<int> ground = positives;
  if (with_zero) ground.push_back(0);
  std::vector<Spil> out;
  for (const Pil& p : enumerate_pil(ground)) {
    // 0, when present, must close its list.
    bool ok = true;
    for (const auto& l : p.lists)
      for (size_t i = 0; i < l.size(); ++i)
        if (l[i] == 0 && i + 1 != l.size()) ok = false;
    if (!ok) continue;
    // Sign every non-final entry; final entries stay non-negative.
    std::vector<std::pair<size_t, size_t>> signable;
    for (size_t li = 0; li < p.lists.size(); ++li)
      for (size_t ei = 0; ei + 1 < p.lists[li].size(); ++ei) signable.push_back({li, ei});
    size_t combos = size_t(1) << signable.size();
    for (size_t mask = 0; mask < combos; ++mask) {
      std::vector<SignedList> ls;
      std::vector<std::vector<int>> entries = p.lists;
      for (size_t b = 0; b < signable.size(); ++b)
        if (mask & (size_t(1) << b)) entries[signable[b].first][signable[b].second] *= -1;
      for (auto& e : entries) ls.push_back(SignedList(std::move(e)));
      out.push_back(Spil(std::move(ls), with_zero));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b = 1;
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

Integer lah(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw DomainError("lah: need 1 <= k <= n");
  return factorial(n) / factorial(k) * binomial(n - 1, k - 1);
}

Integer count_orbits(Family family, int n_or_ell, CountMethod method) {
  if (n_or_ell < 0) throw DomainError("count_orbits: negative size");
  int n = n_or_ell;
  if (n == 0) return 1;
  switch (method) {
    case CountMethod::Formula: {
      Integer total = 0;
      switch (family) {
        case Family::A:
          for (int k = 1; k <= n; ++k) total += lah(n, k);
          break;
        case Family::D:
          for (int k = 1; k <= n; ++k) total += boost::multiprecision::pow(Integer(2), n - k) * lah(n, k);
          break;
        case Family::B:
          for (int k = 1; k <= n + 1; ++k)
            total += boost::multiprecision::pow(Integer(2), n - k + 1) * factorial(n) /
                     factorial(k - 1) * binomial(n, k - 1);
          break;
      }
      return total;
    }
    case CountMethod::Enumerate:
      if (family == Family::A) {
        std::vector<int> g(n);
        for (int i = 0; i < n; ++i) g[i] = i + 1;
        return Integer(enumerate_pil(g).size());
      }
      return Integer(enumerate_spil(n, family == Family::B).size());
    case CountMethod::Recursion:
      return count_by_recursion(family, n);
    case CountMethod::Egf:
      return egf_coefficient_count(family_egf(family, n), n);
  }
  throw DomainError("bad count method");
}

SeriesTable orbit_series(Family family, int upto, CountMethod method) {
  SeriesTable t;
  t.family = family;
  for (int n = 0; n <= upto; ++n) t.values.push_back(count_orbits(family, n, method));
  t.check();
  return t;
}

std::vector<Integer> lah_transform(const std::vector<Integer>& a) {
  std::vector<Integer> b(a.size());
  if (!a.empty()) b[0] = a[0];
  for (size_t n = 1; n < a.size(); ++n) {
    Integer acc = 0;
    for (size_t k = 1; k <= n; ++k) acc += lah(static_cast<int>(n), static_cast<int>(k)) * a[k];
    b[n] = acc;
  }
  return b;
}

SeriesTable lah_transform(const SeriesTable& s) {
  SeriesTable t;
  t.family = s.family;
  t.values = lah_transform(s.values);
  return t;
}

Spil shift_lambda(const Spil& sigma, int x) {
  if (!sigma.with_zero) throw DomainError("shift_lambda: input must contain 0");
  if (x <= 0) throw DomainError("shift_lambda: x must be positive");
  for (const auto& l : sigma.lists)
    if (l.contains_abs(x)) throw DomainError("shift_lambda: x already in the ground set");
  std::vector<SignedList> out;
  bool found = false;
  for (const auto& l : sigma.lists) {
    if (!l.has_zero()) {
      out.push_back(l);
      continue;
    }
    found = true;
    std::vector<int> e = l.entries; // (l_1,...,l_j,0)
    e.pop_back();
    std::vector<int> ne;
    if (e.empty()) {
      ne = {x};
    } else {
      int last = e.back();
      ne.push_back(last < 0 ? -x : x);
      for (size_t i = 0; i + 1 < e.size(); ++i) ne.push_back(e[i]);
      ne.push_back(std::abs(last));
    }
    out.push_back(SignedList(std::move(ne)));
  }
  if (!found) throw InternalInvariantError("shift_lambda: zero list missing");
  return Spil(std::move(out), false);
}

Spil shift_gamma(const Spil& sigma, int x) {
  if (sigma.with_zero) throw DomainError("shift_gamma: input must not contain 0");
  if (x <= 0) throw DomainError("shift_gamma: x must be positive");
  std::vector<SignedList> out;
  bool found = false;
  for (const auto& l : sigma.lists) {
    if (l.entries.empty() || std::abs(l.entries.front()) != x) {
      out.push_back(l);
      continue;
    }
    found = true;
    bool negative = l.entries.front() < 0;
    std::vector<int> mu(l.entries.begin() + 1, l.entries.end());
    std::vector<int> ne;
    if (!mu.empty()) {
      ne = mu;
      if (negative) ne.back() = -ne.back();
    }
    ne.push_back(0);
    out.push_back(SignedList(std::move(ne)));
  }
  if (!found) throw DomainError("shift_gamma: no list begins with +-x");
  return Spil(std::move(out), true);
}

std::vector<SignedList> enumerate_signed_lists(int i, int ell) {
  if (i < 0 || i > ell) throw DomainError("enumerate_signed_lists: need 0 <= i <= ell");
  std::vector<SignedList> out;
  std::vector<int> current;
  std::vector<bool> used(ell + 1, false);
  // Depth-first over ordered choices with both signs.  Entries here carry no
  // last-entry constraint: they are the prefixes of zero-terminated lists.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == i) {
      SignedList sl;
      sl.entries = current;
      out.push_back(std::move(sl));
      return;
    }
    for (int v = 1; v <= ell; ++v) {
      if (used[v]) continue;
      used[v] = true;
      for (int s : {+1, -1}) {
        current.push_back(s * v);
        self(self, depth + 1);
        current.pop_back();
      }
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::map<std::pair<int, int>, std::vector<Pil>> block_partition_a(int n) {
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = i + 1;
  std::map<std::pair<int, int>, std::vector<Pil>> blocks;
  for (const Pil& p : enumerate_pil(g)) {
    for (const auto& l : p.lists) {
      auto it = std::find(l.begin(), l.end(), n);
      if (it == l.end()) continue;
      int i = static_cast<int>(it - l.begin()) + 1;
      int j = i + (n - static_cast<int>(l.size()));
      blocks[{i, j}].push_back(p);
      break;
    }
  }
  return blocks;
}

std::map<int, std::vector<Spil>> block_partition_spil(int ell, bool with_zero) {
  std::map<int, std::vector<Spil>> blocks;
  for (const Spil& s : enumerate_spil(ell, with_zero)) {
    if (with_zero) {
      for (const auto& l : s.lists)
        if (l.has_zero()) {
          blocks[l.length() - 1].push_back(s);
          break;
        }
    } else {
      for (const auto& l : s.lists) {
        bool hit = false;
        for (size_t i = 0; i < l.entries.size(); ++i)
          if (std::abs(l.entries[i]) == ell) {
            blocks[static_cast<int>(i) + 1].push_back(s);
            hit = true;
            break;
          }
        if (hit) break;
      }
    }
  }
  return blocks;
}

} // namespace atlas
