#include "cox/epword.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

std::string EPWord::str() const {
  std::ostringstream os;
  if (!prefix.empty()) os << word_str(prefix) << " ";
  os << "(" << word_str(period) << ")^inf";
  return os.str();
}

EPWord make_ep_word(Word u, Word v) {
  if (v.empty()) throw Error("EP word needs a nonempty period");
  // primitive period
  for (size_t d = 1; d <= v.size() / 2; ++d) {
    if (v.size() % d != 0) continue;
    bool power = true;
    for (size_t i = d; i < v.size() && power; ++i)
      if (v[i] != v[i % d]) power = false;
    if (power) {
      v.resize(d);
      break;
    }
  }
  // minimal prefix: pull matching tail letters into a rotated period
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    v.insert(v.begin(), v.back());
    v.pop_back();
  }
  return EPWord{std::move(u), std::move(v)};
}

EPWord parse_ep_word(const std::string& prefix, const std::string& period, int rank) {
  return make_ep_word(parse_word(prefix, rank), parse_word(period, rank));
}

std::string wall_verdict_str(WallVerdict v) {
  switch (v) {
    case WallVerdict::Crossed: return "crossed";
    case WallVerdict::Boundary: return "boundary";
    case WallVerdict::Divergent: return "divergent";
    default: return "unknown";
  }
}

std::string WallClass::str() const {
  std::ostringstream os;
  os << wall_verdict_str(verdict);
  switch (verdict) {
    case WallVerdict::Crossed: os << " at step " << crossed_step; break;
    case WallVerdict::Boundary: os << " orbit " << orbit_length; break;
    case WallVerdict::Divergent:
      if (evidence_from)
        os << " via " << root_str(*evidence_from) << " -> "
           << root_str(*evidence_to);
      break;
    case WallVerdict::Unknown: os << " after " << bound << " steps"; break;
  }
  return os.str();
}

EPEngine::EPEngine(const CoxSystem& sys, std::size_t small_cap)
    : sys_(sys),
      srs_(build_small_roots(sys, small_cap)),
      dfa_(ReducedWordDFA::build(sys, srs_)) {
  group_finite_ = is_spherical(sys, sys.matrix().all_indices());
}

void EPEngine::require_infinite(const char* op) const {
  if (group_finite_)
    throw Error(std::string(op) + ": finite group has no infinite reduced words");
}

bool EPEngine::ep_is_reduced(const EPWord& w) const {
  require_infinite("ep_is_reduced");
  int st = dfa_.start();
  for (int g : w.prefix) {
    st = dfa_.step(st, g);
    if (st < 0) return false;
  }
  std::vector<char> seen(dfa_.num_states(), 0);
  for (;;) {
    if (seen[st]) return true;
    seen[st] = 1;
    for (int g : w.period) {
      st = dfa_.step(st, g);
      if (st < 0) return false;
    }
  }
}

namespace {

bool is_simple_root_of(const Root& g, int i, const NumberField& F) {
  if (g.coord[i] != F.one()) return false;
  for (size_t j = 0; j < g.coord.size(); ++j)
    if (static_cast<int>(j) != i && !g.coord[j].is_zero()) return false;
  return true;
}

FieldElement coord_sum(const CoxSystem& sys, const Root& r) {
  FieldElement s = sys.field().zero();
  for (const auto& c : r.coord) s += c;
  return s;
}

}  // namespace

WallClass EPEngine::root_membership(const EPWord& w, const Root& beta,
                                    const ClassifyOptions& opt) const {
  require_infinite("root_membership");
  if (!is_positive(beta)) throw Error("root_membership: root must be positive");
  const NumberField& F = sys_.field();
  long period_len = static_cast<long>(w.period.size());
  long cap = opt.step_cap > 0
                 ? opt.step_cap
                 : static_cast<long>(w.prefix.size()) +
                       64 * period_len *
                           std::max<long>(1, static_cast<long>(srs_.roots.size()));

  Root g = beta;
  RootMap<long> boundary_seen;
  Root prev_boundary;
  FieldElement prev_sum = F.zero();
  bool have_prev = false;
  int growth = 0;
  long boundary_count = 0;
  // divergence confirmation: set when the dominance certificate holds;
  // crossings can then only occur within the next |v|+2 periods
  long confirm_until = -1;
  std::optional<Root> div_from, div_to;

  auto at_boundary = [&](long /*step*/) -> std::optional<WallClass> {
    auto it = boundary_seen.find(g);
    if (it != boundary_seen.end()) {
      WallClass out{WallVerdict::Boundary};
      out.orbit_length = boundary_count - it->second;
      return out;
    }
    boundary_seen.emplace(g, boundary_count);
    if (have_prev) {
      FieldElement sum = coord_sum(sys_, g);
      if ((sum - prev_sum).sign() > 0)
        ++growth;
      else
        growth = 0;
      prev_sum = sum;
      if (confirm_until < 0 && growth >= opt.growth_window) {
        // certificate: the later boundary root dominates the earlier one
        FieldElement b = bilinear(sys_, g, prev_boundary);
        if ((b - F.one()).sign() >= 0 &&
            depth(sys_, g) > depth(sys_, prev_boundary)) {
          div_from = prev_boundary;
          div_to = g;
          confirm_until = boundary_count + period_len + 2;
        }
      }
    } else {
      prev_sum = coord_sum(sys_, g);
      have_prev = true;
    }
    prev_boundary = g;
    if (confirm_until >= 0 && boundary_count >= confirm_until) {
      WallClass out{WallVerdict::Divergent};
      out.evidence_from = div_from;
      out.evidence_to = div_to;
      return out;
    }
    ++boundary_count;
    return std::nullopt;
  };

  long prefix_len = static_cast<long>(w.prefix.size());
  for (long k = 0; k < cap; ++k) {
    if (k >= prefix_len && (k - prefix_len) % period_len == 0) {
      if (auto v = at_boundary(k)) return *v;
    }
    int i = w.letter(k);
    if (is_simple_root_of(g, i, F)) {
      WallClass out{WallVerdict::Crossed};
      out.crossed_step = k + 1;
      return out;
    }
    reflect_in_place(sys_, g, i);
  }
  WallClass out{WallVerdict::Unknown};
  out.bound = cap;
  return out;
}

SideInfo EPEngine::wall_side(const EPWord& w, const Root& beta,
                             const ClassifyOptions& opt) const {
  SideInfo info;
  info.primary = root_membership(w, beta, opt);
  info.crossed = info.primary.verdict == WallVerdict::Crossed;
  info.crossed_step = info.primary.crossed_step;
  switch (info.primary.verdict) {
    case WallVerdict::Boundary:
      info.side = WallSide::OnBoundary;
      return info;
    case WallVerdict::Divergent:
      info.side = WallSide::Positive;
      return info;
    case WallVerdict::Unknown:
      info.side = WallSide::Unknown;
      return info;
    case WallVerdict::Crossed:
      break;
  }
  // after the crossing the wall is seen from the other side as the simple
  // root of the crossing letter; a reduced word never crosses it again
  long k = info.primary.crossed_step;  // 1-based; letters k.. remain
  EPWord suffix;
  long prefix_len = static_cast<long>(w.prefix.size());
  if (k < prefix_len) {
    suffix.prefix = Word(w.prefix.begin() + k, w.prefix.end());
    suffix.period = w.period;
  } else {
    long t = (k - prefix_len) % static_cast<long>(w.period.size());
    suffix.prefix = {};
    suffix.period = Word(w.period.begin() + t, w.period.end());
    suffix.period.insert(suffix.period.end(), w.period.begin(),
                         w.period.begin() + t);
  }
  int crossing_letter = w.letter(k - 1);
  info.tail = root_membership(suffix, simple_root(sys_, crossing_letter), opt);
  switch (info.tail.verdict) {
    case WallVerdict::Boundary: info.side = WallSide::OnBoundary; break;
    case WallVerdict::Divergent: info.side = WallSide::Negative; break;
    case WallVerdict::Crossed:
      throw Error("wall_side: wall crossed twice; word not reduced");
    default: info.side = WallSide::Unknown; break;
  }
  return info;
}

BoundarySet EPEngine::boundary_reflections(const EPWord& w, int depth_bound,
                                           const ClassifyOptions& opt) const {
  BoundarySet out;
  out.infinite = false;
  out.complete = true;
  for (const Root& r : roots_to_depth(depth_bound)) {
    WallClass c = root_membership(w, r, opt);
    if (c.verdict == WallVerdict::Boundary) out.roots.push_back(r);
    if (c.verdict == WallVerdict::Unknown) {
      out.complete = false;
      out.unknown_roots.push_back(r);
    }
  }
  for (size_t i = 0; i < out.roots.size() && !out.infinite; ++i)
    for (size_t j = i + 1; j < out.roots.size() && !out.infinite; ++j)
      if (!pair_generates_finite(sys_, out.roots[i], out.roots[j]).finite)
        out.infinite = true;
  return out;
}

const std::vector<Root>& EPEngine::roots_to_depth(int d) const {
  for (auto& entry : root_cache_)
    if (entry.first == d) return entry.second;
  root_cache_.emplace_back(d, roots_up_to_depth(sys_, d));
  return root_cache_.back().second;
}

std::vector<EPWord> EPEngine::enumerate_ep_words(int max_prefix,
                                                 int max_period) const {
  require_infinite("enumerate_ep_words");
  int n = sys_.rank();
  std::vector<Word> prefixes{{}};
  for (int len = 1; len <= max_prefix; ++len) {
    size_t start = prefixes.size();
    for (size_t i = 0; i < start; ++i) {
      if (static_cast<int>(prefixes[i].size()) != len - 1) continue;
      for (int g = 0; g < n; ++g) {
        Word w = prefixes[i];
        w.push_back(g);
        prefixes.push_back(std::move(w));
      }
    }
  }
  std::vector<Word> periods;
  for (int len = 1; len <= max_period; ++len) {
    std::vector<int> idx(len, 0);
    for (;;) {
      periods.emplace_back(idx.begin(), idx.end());
      int k = len - 1;
      while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  std::map<std::string, EPWord> out;
  for (const Word& u : prefixes)
    for (const Word& v : periods) {
      EPWord w = make_ep_word(u, v);
      std::string key = w.str();
      if (out.count(key)) continue;
      if (!dfa_.is_reduced(w.prefix)) continue;
      if (ep_is_reduced(w)) out.emplace(std::move(key), std::move(w));
    }
  std::vector<EPWord> result;
  for (auto& [k, w] : out) result.push_back(std::move(w));
  return result;
}

}  // namespace cox
