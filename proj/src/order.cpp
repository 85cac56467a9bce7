#include "cox/order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

std::string Verdict3::str() const {
  switch (kind) {
    case VerdictKind::Yes: return "yes";
    case VerdictKind::No: return "no " + (witness ? root_str(*witness) : "");
    default: return "unknown " + std::to_string(bound);
  }
}

namespace {

Verdict3 verdict_yes() { return {VerdictKind::Yes, std::nullopt, 0}; }
Verdict3 verdict_no(const Root& w) { return {VerdictKind::No, w, 0}; }
Verdict3 verdict_unknown(long b) { return {VerdictKind::Unknown, std::nullopt, b}; }

// period-transport data of an EP word: Inv(w) is the prefix inversions
// together with the T-orbit of the transported period batch
struct Transport {
  GMatrix U, Uinv, V, T;
  std::vector<Root> prefix_inv;
  std::vector<Root> batch0;  // U(inversion roots of the period)
};

Transport make_transport(const CoxSystem& sys, const EPWord& w) {
  Transport t;
  t.U = word_matrix(sys, w.prefix);
  t.Uinv = word_matrix_reversed(sys, w.prefix);
  t.V = word_matrix(sys, w.period);
  t.T = matrix_mul(sys, t.U, matrix_mul(sys, t.V, t.Uinv));
  t.prefix_inv = inversion_roots(sys, w.prefix);
  for (const Root& r : inversion_roots(sys, w.period))
    t.batch0.push_back(matrix_apply(sys, t.U, r));
  return t;
}

std::vector<Root> apply_matrix_all(const CoxSystem& sys, const GMatrix& m,
                                   const std::vector<Root>& roots) {
  std::vector<Root> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(matrix_apply(sys, m, r));
  return out;
}

// least (p, q) with Ta^p == Tb^q, p outer
bool commensurate(const CoxSystem& sys, const GMatrix& ta, const GMatrix& tb,
                  int cap, int& p, int& q) {
  std::vector<GMatrix> tb_pows;
  tb_pows.push_back(tb);
  for (int i = 1; i < cap; ++i)
    tb_pows.push_back(matrix_mul(sys, tb_pows.back(), tb));
  GMatrix ta_pow = ta;
  for (p = 1; p <= cap; ++p) {
    for (q = 1; q <= cap; ++q)
      if (matrix_eq(ta_pow, tb_pows[q - 1])) return true;
    if (p < cap) ta_pow = matrix_mul(sys, ta_pow, ta);
  }
  return false;
}

}  // namespace

Verdict3 braid_limit_leq(const EPEngine& eng, const EPWord& a, const EPWord& b,
                         const OrderOptions& opt) {
  const CoxSystem& sys = eng.system();
  if (a == b) return verdict_yes();

  Transport ta = make_transport(sys, a);
  Transport tb = make_transport(sys, b);
  bool saw_unknown = false;

  // certificate: align the period maps, push every generator root of
  // Inv(a) into Inv(b), and close Inv(b) under the common transport
  int p = 0, q = 0;
  if (commensurate(sys, ta.T, tb.T, opt.commensuration_cap, p, q)) {
    std::vector<Root> need = ta.prefix_inv;
    std::vector<Root> batch = ta.batch0;
    for (int r = 0; r < p; ++r) {
      need.insert(need.end(), batch.begin(), batch.end());
      if (r + 1 < p) batch = apply_matrix_all(sys, ta.T, batch);
    }
    bool ok = true;
    std::optional<Root> no_witness;
    for (const Root& g : need) {
      WallClass c = eng.root_membership(b, g, opt.cls);
      if (c.verdict == WallVerdict::Crossed) continue;
      ok = false;
      if (c.verdict == WallVerdict::Unknown)
        saw_unknown = true;
      else
        no_witness = g;  // certified member of Inv(a) missing from Inv(b)
      break;
    }
    if (no_witness) return verdict_no(*no_witness);
    if (ok) {
      GMatrix tcom = tb.T;
      for (int i = 1; i < q; ++i) tcom = matrix_mul(sys, tcom, tb.T);
      for (const Root& g : apply_matrix_all(sys, tcom, tb.prefix_inv)) {
        WallClass c = eng.root_membership(b, g, opt.cls);
        if (c.verdict != WallVerdict::Crossed) {
          ok = false;
          if (c.verdict == WallVerdict::Unknown) saw_unknown = true;
          break;
        }
      }
      if (ok) return verdict_yes();
    }
  }

  // witness scan, shallow roots first
  for (const Root& r : eng.roots_to_depth(opt.depth_bound)) {
    WallClass ca = eng.root_membership(a, r, opt.cls);
    if (ca.verdict == WallVerdict::Unknown) saw_unknown = true;
    if (ca.verdict != WallVerdict::Crossed) continue;
    WallClass cb = eng.root_membership(b, r, opt.cls);
    if (cb.verdict == WallVerdict::Unknown) saw_unknown = true;
    if (cb.verdict == WallVerdict::Boundary || cb.verdict == WallVerdict::Divergent)
      return verdict_no(r);
  }
  (void)saw_unknown;
  return verdict_unknown(opt.depth_bound);
}

Verdict3 same_block(const EPEngine& eng, const EPWord& a, const EPWord& b,
                    const OrderOptions& opt) {
  const CoxSystem& sys = eng.system();
  if (a == b) return verdict_yes();

  Transport ta = make_transport(sys, a);
  Transport tb = make_transport(sys, b);

  int p = 0, q = 0;
  bool aligned = commensurate(sys, ta.T, tb.T, opt.commensuration_cap, p, q);
  if (aligned) {
    // T(tail of a) inside Inv(b) and vice versa bounds both differences
    // by the finitely many prefix and first-batch roots
    GMatrix tcom = ta.T;
    for (int i = 1; i < p; ++i) tcom = matrix_mul(sys, tcom, ta.T);
    bool ok = true;
    auto all_crossed = [&](const std::vector<Root>& roots, const EPWord& in) {
      for (const Root& g : roots)
        if (eng.root_membership(in, g, opt.cls).verdict != WallVerdict::Crossed)
          return false;
      return true;
    };
    {
      std::vector<Root> batch = ta.batch0;
      for (int r = 0; r < p && ok; ++r) {
        if (!all_crossed(apply_matrix_all(sys, tcom, batch), b)) ok = false;
        if (r + 1 < p) batch = apply_matrix_all(sys, ta.T, batch);
      }
      if (ok && !all_crossed(apply_matrix_all(sys, tcom, tb.prefix_inv), b))
        ok = false;
    }
    if (ok) {
      std::vector<Root> batch = tb.batch0;
      for (int r = 0; r < q && ok; ++r) {
        if (!all_crossed(apply_matrix_all(sys, tcom, batch), a)) ok = false;
        if (r + 1 < q) batch = apply_matrix_all(sys, tb.T, batch);
      }
      if (ok && !all_crossed(apply_matrix_all(sys, tcom, ta.prefix_inv), a))
        ok = false;
    }
    if (ok) return verdict_yes();
  }

  // a certified side disagreement on any wall forces an infinite difference
  std::vector<Root> probes = eng.roots_to_depth(opt.depth_bound);
  {
    RootSet seen(probes.begin(), probes.end());
    auto add = [&](const std::vector<Root>& rs) {
      for (const Root& r : rs)
        if (seen.insert(r).second) probes.push_back(r);
    };
    add(ta.prefix_inv);
    add(tb.prefix_inv);
    add(ta.batch0);
    add(tb.batch0);
  }
  for (const Root& r : probes) {
    SideInfo sa = eng.wall_side(a, r, opt.cls);
    if (sa.side == WallSide::Unknown) continue;
    SideInfo sb = eng.wall_side(b, r, opt.cls);
    if (sb.side == WallSide::Unknown) continue;
    if (sa.side != sb.side) return verdict_no(r);
  }
  return verdict_unknown(opt.depth_bound);
}

// ------------------------------------------------------------- W(xi) machinery

CoxeterMatrix ReflectionSubgroup::coxeter_matrix() const {
  int k = static_cast<int>(canonical_gens.size());
  if (k == 0) throw Error("trivial subgroup has no Coxeter matrix");
  std::vector<std::vector<int>> entries(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) entries[i][j] = pair_order[i][j];
  return CoxeterMatrix(k, std::move(entries));
}

std::string ReflectionSubgroup::type_str() const {
  int k = static_cast<int>(canonical_gens.size());
  if (k == 0) return "trivial";
  if (k == 1) return "A1";
  if (k == 2) {
    int m = pair_order[0][1];
    switch (m) {
      case 2: return "A1 x A1";
      case 3: return "A2";
      case 4: return "B2";
      case 6: return "G2";
      case infinite_bond: return "D-infinity";
      default: return "I2(" + std::to_string(m) + ")";
    }
  }
  std::ostringstream os;
  os << "rank-" << k << " [";
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (i || j > 1) os << " ";
      if (pair_order[i][j] == infinite_bond)
        os << "inf";
      else
        os << pair_order[i][j];
    }
  os << "]";
  return os.str();
}

ReflectionSubgroup canonical_generators(const CoxSystem& sys,
                                        const std::vector<Root>& refl,
                                        std::size_t cap) {
  ReflectionSubgroup out;
  RootSet seen;
  for (Root r : refl) {
    if (is_negative(r))
      for (auto& c : r.coord) c = -c;
    if (!is_positive(r)) throw Error("canonical_generators: not a root");
    if (seen.insert(r).second) out.generators_in.push_back(r);
  }
  out.closure = out.generators_in;
  out.closure_complete = true;
  for (size_t head = 0; head < out.closure.size(); ++head) {
    if (out.closure.size() > cap) {
      out.closure_complete = false;
      break;
    }
    Root b = out.closure[head];
    for (size_t k = 0; k < out.closure.size(); ++k) {
      for (const Root* pr : {&b, &out.closure[k]}) {
        const Root& mirror = *pr;
        const Root& arg = (pr == &b) ? out.closure[k] : b;
        Root img = reflect_by_root(sys, mirror, arg);
        if (is_negative(img))
          for (auto& c : img.coord) c = -c;
        if (seen.insert(img).second) out.closure.push_back(img);
      }
      if (out.closure.size() > cap) break;
    }
  }
  std::sort(out.closure.begin(), out.closure.end(), root_str_less);

  for (size_t i = 0; i < out.closure.size() && !out.infinite; ++i)
    for (size_t j = i + 1; j < out.closure.size() && !out.infinite; ++j) {
      FieldElement d = bilinear(sys, out.closure[i], out.closure[j]);
      if ((d - sys.field().one()).sign() >= 0 ||
          (d + sys.field().one()).sign() <= 0)
        out.infinite = true;
    }

  // a reflection is canonical when it inverts no other positive root of
  // the closure
  for (const Root& t : out.closure) {
    bool canonical = true;
    for (const Root& g : out.closure) {
      if (g == t) continue;
      if (!is_positive(reflect_by_root(sys, t, g))) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.canonical_gens.push_back(t);
  }

  int k = static_cast<int>(out.canonical_gens.size());
  out.pair_order.assign(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      PairOrder po =
          pair_generates_finite(sys, out.canonical_gens[i], out.canonical_gens[j]);
      int m = po.finite ? static_cast<int>(po.order) : infinite_bond;
      out.pair_order[i][j] = out.pair_order[j][i] = m;
    }
  return out;
}

WxiResult wxi_group(const EPEngine& eng, const EPWord& w, const OrderOptions& opt) {
  WxiResult out;
  for (const Root& r : eng.roots_to_depth(opt.depth_bound)) {
    SideInfo s = eng.wall_side(w, r, opt.cls);
    if (s.side == WallSide::OnBoundary) out.xi_walls.push_back(r);
    if (s.side == WallSide::Unknown) out.partial = true;
  }
  out.subgroup = canonical_generators(eng.system(), out.xi_walls);
  return out;
}

std::vector<int> project_inversions(const CoxSystem& sys, const Word& w,
                                    const ReflectionSubgroup& sub) {
  if (!sub.closure_complete)
    throw Error("project_inversions: reflection closure incomplete");
  std::vector<Root> inv;
  for (const Root& g : sub.closure)
    if (word_inverts_root(sys, w, g)) inv.push_back(g);

  std::vector<int> out;
  while (!inv.empty()) {
    int pick = -1;
    for (size_t c = 0; c < sub.canonical_gens.size() && pick < 0; ++c)
      for (const Root& g : inv)
        if (g == sub.canonical_gens[c]) {
          pick = static_cast<int>(c);
          break;
        }
    if (pick < 0)
      throw Error("project_inversions: no canonical descent; bad closure");
    const Root& mirror = sub.canonical_gens[pick];
    std::vector<Root> next;
    for (const Root& g : inv) {
      if (g == mirror) continue;
      Root img = reflect_by_root(sys, mirror, g);
      if (!is_positive(img))
        throw Error("project_inversions: inversion set not biconvex");
      next.push_back(img);
    }
    out.push_back(pick);
    inv = std::move(next);
  }
  return out;
}

// --------------------------------------------------------------- fiber poset

namespace {

std::string matrix_key(const GMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m)
    for (const auto& c : row) os << c.str() << ";";
  return os.str();
}

struct SubElem {
  Word gword;  // in canonical generators
  GMatrix mat, inv;
};

std::vector<SubElem> enumerate_subgroup(const CoxSystem& sys,
                                        const ReflectionSubgroup& sub,
                                        std::size_t cap) {
  std::vector<GMatrix> gen_mats;
  for (const Root& r : sub.canonical_gens)
    gen_mats.push_back(reflection_matrix(sys, r));
  std::vector<SubElem> elems;
  std::map<std::string, int> seen;
  elems.push_back({{}, identity_matrix(sys), identity_matrix(sys)});
  seen[matrix_key(elems[0].mat)] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    SubElem cur = elems[head];
    for (size_t g = 0; g < gen_mats.size(); ++g) {
      GMatrix m = matrix_mul(sys, cur.mat, gen_mats[g]);
      std::string key = matrix_key(m);
      if (seen.count(key)) continue;
      if (elems.size() >= cap)
        throw Error("fiber subgroup enumeration cap exceeded");
      SubElem nxt;
      nxt.gword = cur.gword;
      nxt.gword.push_back(static_cast<int>(g));
      nxt.mat = std::move(m);
      nxt.inv = matrix_mul(sys, gen_mats[g], cur.inv);
      seen[key] = static_cast<int>(elems.size());
      elems.push_back(std::move(nxt));
    }
  }
  return elems;
}

// inversion roots of a subgroup element, in ambient coordinates
std::vector<Root> subgroup_inversions(const CoxSystem& sys,
                                      const ReflectionSubgroup& sub,
                                      const Word& gword) {
  std::vector<Root> out;
  GMatrix m = identity_matrix(sys);
  for (int g : gword) {
    out.push_back(matrix_apply(sys, m, sub.canonical_gens[g]));
    m = matrix_mul(sys, m, reflection_matrix(sys, sub.canonical_gens[g]));
  }
  return out;
}

std::vector<std::string> root_key_set(const std::vector<Root>& rs) {
  std::vector<std::string> keys;
  for (const Root& r : rs) keys.push_back(root_coord_str(r));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

BlockPoset block_fiber_poset(const EPEngine& eng, const EPWord& w,
                             const OrderOptions& opt) {
  const CoxSystem& sys = eng.system();
  WxiResult wxi = wxi_group(eng, w, opt);
  if (wxi.partial)
    throw Error("fiber poset: undetermined wall verdicts at depth " +
                std::to_string(opt.depth_bound));
  if (wxi.subgroup.infinite || !wxi.subgroup.closure_complete)
    throw Error("fiber poset: the fixing subgroup is infinite");

  std::vector<SubElem> elems = enumerate_subgroup(sys, wxi.subgroup, 4096);

  // truncate w past its last crossing of a subgroup wall, on a period edge
  long last_cross = 0;
  for (const Root& g : wxi.subgroup.closure) {
    SideInfo s = eng.wall_side(w, g, opt.cls);
    if (s.crossed) last_cross = std::max(last_cross, s.crossed_step);
  }
  long plen = static_cast<long>(w.prefix.size());
  long vlen = static_cast<long>(w.period.size());
  long pos0 = plen;
  while (pos0 < last_cross) pos0 += vlen;
  Word trunc;
  for (long k = 0; k < pos0; ++k) trunc.push_back(w.letter(k));

  Word zw = project_inversions(sys, trunc, wxi.subgroup);
  GMatrix zw_fwd = identity_matrix(sys);
  GMatrix zw_inv = identity_matrix(sys);
  for (int c : zw)
    zw_fwd = matrix_mul(sys, zw_fwd,
                        reflection_matrix(sys, wxi.subgroup.canonical_gens[c]));
  for (auto it = zw.rbegin(); it != zw.rend(); ++it)
    zw_inv = matrix_mul(
        sys, zw_inv, reflection_matrix(sys, wxi.subgroup.canonical_gens[*it]));
  GMatrix x0 = word_matrix(sys, trunc);
  GMatrix x0_inv = word_matrix_reversed(sys, trunc);
  GMatrix vmat = word_matrix(sys, w.period);
  GMatrix vmat_inv = word_matrix_reversed(sys, w.period);

  BlockPoset poset;
  for (const SubElem& z : elems) {
    if (z.gword == zw) {
      poset.words.push_back(w);
      poset.sub_elements.push_back(z.gword);
      continue;
    }
    auto want_keys =
        root_key_set(subgroup_inversions(sys, wxi.subgroup, z.gword));
    // candidate start chamber: z zw^{-1} x0, possibly pushed out by more
    // periods until the concatenation with the period tail is reduced
    GMatrix base_inv = matrix_mul(sys, x0_inv, matrix_mul(sys, zw_fwd, z.inv));
    bool found = false;
    for (int extra = 0; extra <= 2 && !found; ++extra) {
      Word prefix = shortlex_word_from_inverse(sys, base_inv);
      EPWord cand = make_ep_word(prefix, w.period);
      if (!eng.ep_is_reduced(cand)) {
        base_inv = matrix_mul(sys, vmat_inv, base_inv);
        continue;
      }
      // the candidate must follow the same walls and cross exactly the
      // prescribed subgroup inversions
      bool good = true;
      std::vector<Root> crossed;
      for (const Root& g : wxi.subgroup.closure) {
        SideInfo s = eng.wall_side(cand, g, opt.cls);
        if (s.side != WallSide::OnBoundary) {
          good = false;
          break;
        }
        if (s.crossed) crossed.push_back(g);
      }
      if (good && root_key_set(crossed) == want_keys &&
          same_block(eng, cand, w, opt).yes()) {
        poset.words.push_back(cand);
        poset.sub_elements.push_back(z.gword);
        found = true;
      }
      if (!found) base_inv = matrix_mul(sys, vmat_inv, base_inv);
    }
    if (!found)
      throw Error("fiber poset: no representative found for a subgroup element");
  }

  // deterministic node order: subgroup length, then label
  int n = static_cast<int>(poset.words.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (poset.sub_elements[x].size() != poset.sub_elements[y].size())
      return poset.sub_elements[x].size() < poset.sub_elements[y].size();
    return poset.words[x].str() < poset.words[y].str();
  });
  BlockPoset sorted;
  for (int i : order) {
    sorted.words.push_back(poset.words[i]);
    sorted.sub_elements.push_back(poset.sub_elements[i]);
    sorted.labels.push_back(poset.words[i].str());
  }
  sorted.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        sorted.leq[i][j] = true;
        continue;
      }
      Verdict3 v = braid_limit_leq(eng, sorted.words[i], sorted.words[j], opt);
      if (v.kind == VerdictKind::Unknown)
        throw Error("fiber poset: order comparison undetermined");
      sorted.leq[i][j] = v.yes();
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !sorted.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && sorted.leq[i][k] && sorted.leq[k][j]) cover = false;
      if (cover) sorted.covers.emplace_back(i, j);
    }
  return sorted;
}

std::string BlockPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph block {\n  rankdir=BT;\n";
  for (size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [lo, hi] : covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string BlockPoset::cover_list() const {
  std::ostringstream os;
  os << labels.size() << " classes\n";
  for (size_t i = 0; i < labels.size(); ++i) os << "  " << labels[i] << "\n";
  os << covers.size() << " covers\n";
  for (auto [lo, hi] : covers)
    os << "  " << labels[lo] << "  <  " << labels[hi] << "\n";
  return os.str();
}

}  // namespace cox
