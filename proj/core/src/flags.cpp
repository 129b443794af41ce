#include "atlas/flags.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace atlas {

namespace {

std::string clause(const char* family, const char* id, const std::string& detail) {
  return std::string(family) + "." + id + ": " + detail;
}

bool kind_allowed(Family f, VecKind k) {
  switch (f) {
    case Family::A: return k == VecKind::Basis || k == VecKind::HatA;
    case Family::D: return k == VecKind::Basis || k == VecKind::HatD || k == VecKind::TildeD;
    case Family::B: return k == VecKind::Basis || k == VecKind::HatB1 || k == VecKind::HatB2;
  }
  return false;
}

void require_valid(const StandardFlag& flag, const char* who) {
  auto diags = validate_standard(flag);
  if (!diags.empty())
    throw DomainError(std::string(who) + ": flag " + flag.str() + " is not in standard form (" +
                      diags.front() + ")");
}

// Sorts the lists of a PIL/SPIL into the unique order used by gamma and
// returns them with the distinguished list (containing n, +-l, or 0) last.
template <typename List, typename LastEntry, typename IsFinal>
std::vector<List> order_lists(std::vector<List> lists, LastEntry last_entry, IsFinal is_final,
                              bool descending) {
  std::vector<List> rest, final_list;
  for (auto& l : lists) (is_final(l) ? final_list : rest).push_back(l);
  if (final_list.size() != 1) throw DomainError("gamma: distinguished list missing or repeated");
  std::sort(rest.begin(), rest.end(), [&](const List& x, const List& y) {
    return descending ? last_entry(x) > last_entry(y) : last_entry(x) < last_entry(y);
  });
  rest.push_back(final_list.front());
  return rest;
}

} // namespace

std::string FlagVector::str() const {
  std::ostringstream os;
  switch (kind) {
    case VecKind::Basis: os << "e" << index; break;
    case VecKind::HatA:
    case VecKind::HatD:
    case VecKind::HatB1: os << "h" << index; break;
    case VecKind::TildeD: os << "t" << index; break;
    case VecKind::HatB2: os << "h" << aux << "m" << index; break;
  }
  return os.str();
}

std::string StandardFlag::str() const {
  std::string s = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) s += "<";
    s += vectors[i].str();
  }
  return s + ")";
}

bool operator<(const StandardFlag& x, const StandardFlag& y) {
  if (x.family != y.family) return x.family < y.family;
  if (x.size != y.size) return x.size < y.size;
  return x.str() < y.str();
}

int flag_length(Family family, int size) {
  switch (family) {
    case Family::A: return size;
    case Family::D: return size - 1;
    case Family::B: return size;
  }
  throw DomainError("bad family");
}

std::vector<std::string> validate_standard(const StandardFlag& flag) {
  std::vector<std::string> out;
  const int size = flag.size;
  const auto& v = flag.vectors;
  const int len = flag.length();

  if (len != flag_length(flag.family, size)) {
    out.push_back(clause("flag", "length", "expected " +
                         std::to_string(flag_length(flag.family, size)) + " vectors, got " +
                         std::to_string(len)));
    return out;
  }

  for (const auto& fv : v)
    if (!kind_allowed(flag.family, fv.kind)) {
      out.push_back(clause("flag", "kind", "vector kind not allowed in this family"));
      return out;
    }

  // Index ranges.
  for (const auto& fv : v) {
    bool ok = true;
    switch (fv.kind) {
      case VecKind::Basis:
        ok = flag.family == Family::A ? (fv.index >= 1 && fv.index <= size)
                                      : (fv.index != 0 && std::abs(fv.index) <= size);
        break;
      case VecKind::HatA: ok = fv.index >= 1 && fv.index <= size - 1; break;
      case VecKind::HatD:
      case VecKind::TildeD: ok = fv.index >= 1 && fv.index <= size - 1; break;
      case VecKind::HatB1: ok = fv.index >= 1 && fv.index <= size; break;
      case VecKind::HatB2: ok = fv.index >= 1 && fv.index < fv.aux && fv.aux <= size; break;
    }
    if (!ok) out.push_back(clause("flag", "range", "index out of range in " + fv.str()));
  }
  if (!out.empty()) return out;

  // Each index accounted for exactly once.
  std::vector<int> seen(size + 1, 0);
  for (const auto& fv : v) seen[fv.slot_index()]++;
  for (int i = 1; i <= size; ++i)
    if (seen[i] > 1) out.push_back(clause("flag", "distinct", "index " + std::to_string(i) + " repeated"));

  if (flag.family == Family::A) {
    int en_pos = -1;
    for (int i = 0; i < len; ++i)
      if (v[i].is_basis() && v[i].index == size) en_pos = i;
    if (en_pos < 0) out.push_back(clause("A", "a", "e_n does not occur"));
    for (int i = (en_pos < 0 ? len : en_pos + 1); i < len; ++i)
      if (!v[i].is_basis())
        out.push_back(clause("A", "b", "non-basis vector after e_n at level " + std::to_string(i + 1)));
    int prev_hat = size + 1;
    for (int i = 0; i < len; ++i)
      if (v[i].kind == VecKind::HatA) {
        if (v[i].index >= prev_hat)
          out.push_back(clause("A", "c", "hat indices must strictly decrease"));
        prev_hat = v[i].index;
      }
    return out;
  }

  if (flag.family == Family::D) {
    const int ell = size;
    int pm_ell_pos = -1;
    bool has_el = false, has_minus_el = false, has_hat = false, has_tilde = false;
    for (int i = 0; i < len; ++i) {
      if (v[i].is_basis() && std::abs(v[i].index) == ell) {
        pm_ell_pos = i;
        (v[i].index > 0 ? has_el : has_minus_el) = true;
      }
      has_hat |= v[i].kind == VecKind::HatD;
      has_tilde |= v[i].kind == VecKind::TildeD;
    }
    if (pm_ell_pos >= 0)
      for (int i = pm_ell_pos + 1; i < len; ++i)
        if (!v[i].is_basis())
          out.push_back(clause("D", "a", "non-basis vector after e_{+-l}"));
    if (has_tilde && !has_el)
      out.push_back(clause("D", "b", "tilde vector requires e_l to occur"));
    int prev_hat = 0, prev_tilde = 0;
    for (int i = 0; i < len; ++i) {
      if (v[i].kind == VecKind::HatD) {
        if (v[i].index <= prev_hat) out.push_back(clause("D", "c", "hat indices must strictly increase"));
        prev_hat = v[i].index;
      }
      if (v[i].kind == VecKind::TildeD) {
        if (v[i].index <= prev_tilde) out.push_back(clause("D", "c", "tilde indices must strictly increase"));
        prev_tilde = v[i].index;
      }
    }
    for (const auto& x : v)
      if (!x.is_basis())
        for (const auto& y : v)
          if (y.is_basis() && y.index == -x.index)
            out.push_back(clause("D", "d", x.str() + " and " + y.str() + " cannot both occur"));
    if (has_hat && has_tilde)
      out.push_back(clause("D", "r.standardD", "hat and tilde vectors cannot both occur"));
    if (has_hat && has_el)
      out.push_back(clause("D", "r.standardD", "a hat vector excludes e_l"));
    if (has_tilde && has_minus_el)
      out.push_back(clause("D", "r.standardD", "a tilde vector excludes e_{-l}"));
    return out;
  }

  // Family B.
  int hat1_pos = -1, hat1_index = 0;
  for (int i = 0; i < len; ++i)
    if (v[i].kind == VecKind::HatB1) {
      hat1_pos = i;
      hat1_index = v[i].index;
    }
  if (hat1_pos >= 0)
    for (int i = hat1_pos + 1; i < len; ++i)
      if (!v[i].is_basis())
        out.push_back(clause("B", "a", "non-basis vector after the hat vector of the first kind"));
  int prev_j = 0;
  for (int i = 0; i < len; ++i)
    if (v[i].kind == VecKind::HatB2) {
      if (v[i].index <= prev_j)
        out.push_back(clause("B", "b", "second-kind indices must strictly increase"));
      prev_j = v[i].index;
      if (hat1_pos < 0)
        out.push_back(clause("B", "r:firstkind", "second-kind hat without the first-kind hat"));
      else if (v[i].aux != hat1_index)
        out.push_back(clause("B", "r:firstkind", "second-kind hat with foreign anchor index"));
      if (hat1_pos >= 0 && i > hat1_pos)
        out.push_back(clause("B", "a", "second-kind hat after the first-kind hat"));
    }
  return out;
}

std::string KOrbitId::str() const {
  switch (tag) {
    case Tag::ClosedA: return "Q" + std::to_string(i);
    case Tag::NonClosedA: return "Q" + std::to_string(i) + "," + std::to_string(j);
    case Tag::ClosedDPlus: return "Q+";
    case Tag::ClosedBPlus: return "Q+";
    case Tag::ClosedBMinus: return "Q-";
    case Tag::NonClosedD:
    case Tag::NonClosedB: return "Q" + std::to_string(i);
  }
  throw DomainError("bad korbit tag");
}

int KOrbitId::korbit_length(int ell) const {
  switch (tag) {
    case Tag::ClosedA:
    case Tag::ClosedDPlus:
    case Tag::ClosedBPlus:
    case Tag::ClosedBMinus: return 0;
    case Tag::NonClosedA: return j - i;
    case Tag::NonClosedD:
    case Tag::NonClosedB: return ell - i;
  }
  throw DomainError("bad korbit tag");
}

KOrbitId korbit_symbolic(const StandardFlag& flag) {
  require_valid(flag, "korbit_symbolic");
  const auto& v = flag.vectors;
  KOrbitId id;
  id.family = flag.family;
  switch (flag.family) {
    case Family::A: {
      int first_hat = -1, en_pos = -1;
      for (int i = 0; i < flag.length(); ++i) {
        if (v[i].kind == VecKind::HatA && first_hat < 0) first_hat = i;
        if (v[i].is_basis() && v[i].index == flag.size) en_pos = i;
      }
      if (first_hat < 0) {
        id.tag = KOrbitId::Tag::ClosedA;
        id.i = en_pos + 1;
      } else {
        id.tag = KOrbitId::Tag::NonClosedA;
        id.i = first_hat + 1;
        id.j = en_pos + 1;
      }
      return id;
    }
    case Family::D: {
      for (int i = 0; i < flag.length(); ++i) {
        bool special = !v[i].is_basis() || std::abs(v[i].index) == flag.size;
        if (special) {
          id.tag = KOrbitId::Tag::NonClosedD;
          id.i = i + 1;
          return id;
        }
      }
      id.tag = KOrbitId::Tag::ClosedDPlus;
      return id;
    }
    case Family::B: {
      for (int i = 0; i < flag.length(); ++i)
        if (!v[i].is_basis()) {
          id.tag = KOrbitId::Tag::NonClosedB;
          id.i = i; // hat block starts at position i+1
          return id;
        }
      int negatives = 0;
      for (const auto& fv : v)
        if (fv.index < 0) ++negatives;
      id.tag = negatives % 2 == 0 ? KOrbitId::Tag::ClosedBPlus : KOrbitId::Tag::ClosedBMinus;
      return id;
    }
  }
  throw DomainError("bad family");
}

StandardFlag gamma(const Pil& model, int n) {
  if (model.ground_size() != n) throw DomainError("gamma: PIL ground set must be {1..n}");
  auto ordered = order_lists(
      model.lists, [](const std::vector<int>& l) { return l.back(); },
      [n](const std::vector<int>& l) { return std::find(l.begin(), l.end(), n) != l.end(); },
      /*descending=*/true);
  StandardFlag f;
  f.family = Family::A;
  f.size = n;
  for (size_t li = 0; li < ordered.size(); ++li) {
    const auto& l = ordered[li];
    bool final_list = li + 1 == ordered.size();
    for (size_t e = 0; e < l.size(); ++e) {
      bool last = e + 1 == l.size();
      f.vectors.push_back(!final_list && last ? FlagVector::hat_a(l[e]) : FlagVector::basis(l[e]));
    }
  }
  require_valid(f, "gamma(A)");
  return f;
}

StandardFlag gamma(const Spil& model, Family family, int ell) {
  StandardFlag f;
  f.family = family;
  f.size = ell;
  if (family == Family::D) {
    if (model.with_zero) throw DomainError("gamma(D): SPIL must not contain 0");
    auto ordered = order_lists(
        model.lists, [](const SignedList& l) { return l.entries.back(); },
        [ell](const SignedList& l) { return l.contains_abs(ell); }, /*descending=*/false);
    const SignedList& fin = ordered.back();
    bool plus_ell_not_last = false, minus_ell_present = false;
    for (size_t i = 0; i < fin.entries.size(); ++i) {
      if (fin.entries[i] == ell && i + 1 != fin.entries.size()) plus_ell_not_last = true;
      if (fin.entries[i] == -ell) minus_ell_present = true;
    }
    bool tilde_case = plus_ell_not_last && !minus_ell_present;
    for (size_t li = 0; li + 1 < ordered.size(); ++li) {
      const auto& l = ordered[li].entries;
      for (size_t e = 0; e + 1 < l.size(); ++e) f.vectors.push_back(FlagVector::basis(l[e]));
      f.vectors.push_back(tilde_case ? FlagVector::tilde_d(l.back()) : FlagVector::hat_d(l.back()));
    }
    for (size_t e = 0; e + 1 < fin.entries.size(); ++e)
      f.vectors.push_back(FlagVector::basis(fin.entries[e]));
    require_valid(f, "gamma(D)");
    return f;
  }
  if (family == Family::B) {
    if (!model.with_zero) throw DomainError("gamma(B): SPIL must contain 0");
    auto ordered = order_lists(
        model.lists,
        [](const SignedList& l) { return l.entries.back(); },
        [](const SignedList& l) { return l.has_zero(); }, /*descending=*/false);
    int t = static_cast<int>(ordered.size());
    int anchor = t >= 2 ? ordered[t - 2].entries.back() : 0;
    for (int li = 0; li + 1 < t; ++li) {
      const auto& l = ordered[li].entries;
      for (size_t e = 0; e + 1 < l.size(); ++e) f.vectors.push_back(FlagVector::basis(l[e]));
      bool is_anchor_list = li + 2 == t;
      f.vectors.push_back(is_anchor_list ? FlagVector::hat_b1(l.back())
                                         : FlagVector::hat_b2(l.back(), anchor));
    }
    const auto& zl = ordered.back().entries;
    for (size_t e = 0; e + 1 < zl.size(); ++e) f.vectors.push_back(FlagVector::basis(zl[e]));
    require_valid(f, "gamma(B)");
    return f;
  }
  throw DomainError("gamma: family must be D or B");
}

std::variant<Pil, Spil> lambda_inv(const StandardFlag& flag) {
  require_valid(flag, "lambda_inv");
  const auto& v = flag.vectors;
  if (flag.family == Family::A) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    for (const auto& fv : v) {
      cur.push_back(fv.index);
      if (fv.kind == VecKind::HatA) {
        lists.push_back(cur);
        cur.clear();
      }
    }
    lists.push_back(cur); // the list containing n; never empty
    return Pil(lists);
  }

  // Orthogonal cases: cut after every hat/tilde, then complete the final list.
  std::vector<SignedList> lists;
  std::vector<int> cur;
  for (const auto& fv : v) {
    switch (fv.kind) {
      case VecKind::Basis: cur.push_back(fv.index); break;
      case VecKind::HatD:
      case VecKind::TildeD:
      case VecKind::HatB1:
        cur.push_back(fv.index);
        lists.push_back(SignedList(cur));
        cur.clear();
        break;
      case VecKind::HatB2:
        cur.push_back(fv.index);
        lists.push_back(SignedList(cur));
        cur.clear();
        break;
      case VecKind::HatA: throw InternalInvariantError("lambda_inv: HatA in orthogonal flag");
    }
  }
  if (flag.family == Family::D) {
    // Exactly one index of {1..l} is unaccounted for; it closes the final
    // list positively under either the hat or the tilde convention.
    std::vector<bool> used(flag.size + 1, false);
    for (const auto& fv : v) used[fv.slot_index()] = true;
    int missing = 0;
    for (int i = 1; i <= flag.size; ++i)
      if (!used[i]) missing = i;
    cur.push_back(missing);
    lists.push_back(SignedList(cur));
    return Spil(lists, false);
  }
  // Family B: the final list is closed by 0.
  cur.push_back(0);
  lists.push_back(SignedList(cur));
  return Spil(lists, true);
}

std::vector<StandardFlag> enumerate_standard(Family family, int size) {
  std::vector<StandardFlag> out;
  if (family == Family::A) {
    std::vector<int> g(size);
    for (int i = 0; i < size; ++i) g[i] = i + 1;
    for (const Pil& p : enumerate_pil(g)) out.push_back(gamma(p, size));
  } else {
    for (const Spil& s : enumerate_spil(size, family == Family::B))
      out.push_back(gamma(s, family, size));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<SymbolicStep> monoid_symbolic_a(const StandardFlag& flag, int r) {
  const int n = flag.size;
  if (r < 1 || r > n - 1) throw DomainError("monoid_symbolic: root index out of range");
  KOrbitId k = korbit_symbolic(flag);
  StandardFlag out = flag;
  auto& v = out.vectors;
  if (k.tag == KOrbitId::Tag::ClosedA) {
    int p = k.i; // e_n position, 1-based
    if (r == p - 1) {
      v[p - 2] = FlagVector::hat_a(v[p - 2].index);
      return SymbolicStep{out, true};
    }
    if (r == p) {
      v[p - 1] = FlagVector::hat_a(v[p].index);
      v[p] = FlagVector::basis(n);
      return SymbolicStep{out, true};
    }
    return std::nullopt;
  }
  int i = k.i, j = k.j;
  if (r == i - 1) {
    int li = v[i - 1].index;      // hat index at position i
    int li1 = v[i - 2].index;     // basis index at position i-1
    if (li1 < li) {
      std::swap(v[i - 2], v[i - 1]);
      return SymbolicStep{out, false};
    }
    v[i - 2] = FlagVector::hat_a(li1);
    return SymbolicStep{out, true};
  }
  if (r == j && j <= n - 1) {
    int kmin = n;
    for (int p = i; p <= j - 1; ++p)
      if (v[p - 1].kind == VecKind::HatA) kmin = std::min(kmin, v[p - 1].index);
    int lj1 = v[j].index; // basis index at position j+1
    if (lj1 > kmin) {
      std::swap(v[j - 1], v[j]);
      return SymbolicStep{out, false};
    }
    v[j - 1] = FlagVector::hat_a(lj1);
    v[j] = FlagVector::basis(n);
    return SymbolicStep{out, true};
  }
  return std::nullopt;
}

std::optional<SymbolicStep> monoid_symbolic_d(const StandardFlag& flag, int r) {
  const int ell = flag.size;
  if (r < 1 || r > ell) throw DomainError("monoid_symbolic: root index out of range");
  KOrbitId k = korbit_symbolic(flag);
  StandardFlag out = flag;
  auto& v = out.vectors;
  if (k.tag == KOrbitId::Tag::ClosedDPlus) {
    if (r != ell - 1 && r != ell) return std::nullopt;
    int jl = v.back().index;
    if (jl > 0) {
      // The reachable new direction lies in the ruling of the maximal
      // isotropic completion of the flag, which is e_l exactly when the
      // number of negative indices is even; the fork root reaches the
      // other ruling.
      int negatives = 0;
      for (const auto& fv : v)
        if (fv.index < 0) ++negatives;
      bool plus_for_chain_root = negatives % 2 == 0;
      bool chain_root = r == ell - 1;
      v.back() = FlagVector::basis(chain_root == plus_for_chain_root ? ell : -ell);
      return SymbolicStep{out, false};
    }
    v.back() = FlagVector::hat_d(-jl);
    return SymbolicStep{out, true};
  }
  int i = k.i;
  if (r != i - 1) return std::nullopt;
  const FlagVector vi = v[i - 1];
  int j1 = v[i - 2].index; // basis index at position i-1
  if (vi.is_basis()) {
    // v_i = e_{+-l}
    if (j1 > 0) {
      std::swap(v[i - 2], v[i - 1]);
      return SymbolicStep{out, false};
    }
    v[i - 2] = vi.index > 0 ? FlagVector::tilde_d(-j1) : FlagVector::hat_d(-j1);
    return SymbolicStep{out, true};
  }
  // v_i is a hat or tilde vector.
  if (j1 > 0 || -j1 > vi.index) {
    std::swap(v[i - 2], v[i - 1]);
    return SymbolicStep{out, false};
  }
  v[i - 2] = vi.kind == VecKind::TildeD ? FlagVector::tilde_d(-j1) : FlagVector::hat_d(-j1);
  return SymbolicStep{out, true};
}

std::optional<SymbolicStep> monoid_symbolic_b(const StandardFlag& flag, int r) {
  const int ell = flag.size;
  if (r < 1 || r > ell) throw DomainError("monoid_symbolic: root index out of range");
  KOrbitId k = korbit_symbolic(flag);
  StandardFlag out = flag;
  auto& v = out.vectors;
  if (k.tag == KOrbitId::Tag::ClosedBPlus || k.tag == KOrbitId::Tag::ClosedBMinus) {
    if (r != ell) return std::nullopt;
    v.back() = FlagVector::hat_b1(std::abs(v.back().index));
    return SymbolicStep{out, true};
  }
  int i = k.i; // hat block starts at i+1
  if (r != i || i < 1) return std::nullopt;
  const FlagVector hat = v[i];
  int ji = v[i - 1].index;
  int next_index = hat.index; // first kind: the hat index; second kind: its j
  if (ji > 0 || -ji > next_index) {
    std::swap(v[i - 1], v[i]);
    return SymbolicStep{out, false};
  }
  int anchor = hat.kind == VecKind::HatB1 ? hat.index : hat.aux;
  v[i - 1] = FlagVector::hat_b2(-ji, anchor);
  return SymbolicStep{out, true};
}

} // namespace

std::optional<SymbolicStep> monoid_symbolic(const StandardFlag& flag, int root_index) {
  std::optional<SymbolicStep> step;
  switch (flag.family) {
    case Family::A: step = monoid_symbolic_a(flag, root_index); break;
    case Family::D: step = monoid_symbolic_d(flag, root_index); break;
    case Family::B: step = monoid_symbolic_b(flag, root_index); break;
  }
  if (step && !is_standard(step->result))
    throw InternalInvariantError("monoid_symbolic produced a non-standard flag " +
                                 step->result.str() + " from " + flag.str());
  return step;
}

std::string flag_to_json(const StandardFlag& flag) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(flag.family));
  if (flag.family == Family::A)
    j["n"] = flag.size;
  else
    j["l"] = flag.size;
  j["vectors"] = nlohmann::json::array();
  for (const auto& fv : flag.vectors) {
    nlohmann::json e;
    switch (fv.kind) {
      case VecKind::Basis: e["kind"] = "basis"; break;
      case VecKind::HatA:
      case VecKind::HatD: e["kind"] = "hat"; break;
      case VecKind::TildeD: e["kind"] = "tilde"; break;
      case VecKind::HatB1: e["kind"] = "hat1"; break;
      case VecKind::HatB2: e["kind"] = "hat2"; break;
    }
    e["index"] = fv.index;
    if (fv.kind == VecKind::HatB2) e["aux"] = fv.aux;
    j["vectors"].push_back(e);
  }
  return j.dump();
}

StandardFlag flag_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  StandardFlag f;
  std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw DomainError("flag_from_json: bad family");
  f.family = family_from_char(fam[0]);
  f.size = f.family == Family::A ? j.at("n").get<int>() : j.at("l").get<int>();
  for (const auto& e : j.at("vectors")) {
    std::string kind = e.at("kind").get<std::string>();
    int index = e.at("index").get<int>();
    if (kind == "basis")
      f.vectors.push_back(FlagVector::basis(index));
    else if (kind == "hat")
      f.vectors.push_back(f.family == Family::A ? FlagVector::hat_a(index)
                                                : FlagVector::hat_d(index));
    else if (kind == "tilde")
      f.vectors.push_back(FlagVector::tilde_d(index));
    else if (kind == "hat1")
      f.vectors.push_back(FlagVector::hat_b1(index));
    else if (kind == "hat2")
      f.vectors.push_back(FlagVector::hat_b2(index, e.at("aux").get<int>()));
    else
      throw DomainError("flag_from_json: unknown kind " + kind);
  }
  return f;
}

} // namespace atlas
