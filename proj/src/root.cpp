#include "cox/root.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cox {

Root simple_root(const CoxSystem& sys, int i) {
  Root r{std::vector<FieldElement>(sys.rank(), sys.field().zero())};
  r.coord[i] = sys.field().one();
  return r;
}

Root zero_vector(const CoxSystem& sys) {
  return Root{std::vector<FieldElement>(sys.rank(), sys.field().zero())};
}

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (const auto& c : r.coord) {
    int s = c.sign();
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const Root& r) {
  bool nonzero = false;
  for (const auto& c : r.coord) {
    int s = c.sign();
    if (s > 0) return false;
    if (s < 0) nonzero = true;
  }
  return nonzero;
}

FieldElement bilinear_with_simple(const CoxSystem& sys, int i, const Root& x) {
  FieldElement acc = x.coord[i];  // B(a_i, a_i) = 1
  for (int j : sys.star(i)) {
    if (x.coord[j].is_zero()) continue;
    acc += sys.bilinear(i, j) * x.coord[j];
  }
  return acc;
}

FieldElement bilinear(const CoxSystem& sys, const Root& x, const Root& y) {
  FieldElement acc = sys.field().zero();
  for (int i = 0; i < sys.rank(); ++i) {
    if (x.coord[i].is_zero()) continue;
    acc += x.coord[i] * bilinear_with_simple(sys, i, y);
  }
  return acc;
}

void reflect_in_place(const CoxSystem& sys, Root& x, int i) {
  FieldElement dot = bilinear_with_simple(sys, i, x);
  dot += dot;
  x.coord[i] -= dot;
}

Root reflect(const CoxSystem& sys, const Root& x, int i) {
  Root r = x;
  reflect_in_place(sys, r, i);
  return r;
}

Root reflect_by_root(const CoxSystem& sys, const Root& r, const Root& x) {
  FieldElement dot = bilinear(sys, r, x);
  dot += dot;
  Root out = x;
  for (int i = 0; i < sys.rank(); ++i) {
    if (r.coord[i].is_zero()) continue;
    out.coord[i] -= dot * r.coord[i];
  }
  return out;
}

namespace {

bool is_simple(const CoxSystem& sys, const Root& x) {
  int found = -1;
  for (int i = 0; i < sys.rank(); ++i) {
    if (x.coord[i].is_zero()) continue;
    if (found != -1) return false;
    if (x.coord[i] != sys.field().one()) return false;
    found = i;
  }
  return found != -1;
}

}  // namespace

int depth(const CoxSystem& sys, Root x) {
  if (!is_positive(x)) throw Error("depth of a non-positive root");
  int d = 1;
  while (!is_simple(sys, x)) {
    bool moved = false;
    for (int i = 0; i < sys.rank(); ++i) {
      if (bilinear_with_simple(sys, i, x).sign() > 0) {
        reflect_in_place(sys, x, i);
        ++d;
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("depth: no descent found; not a root?");
    if (d > 100000) throw Error("depth: runaway descent");
  }
  return d;
}

std::vector<Root> roots_up_to_depth(const CoxSystem& sys, int d, std::size_t cap) {
  std::vector<Root> out;
  RootSet seen;
  std::vector<Root> layer;
  for (int i = 0; i < sys.rank(); ++i) {
    Root a = simple_root(sys, i);
    seen.insert(a);
    layer.push_back(a);
    out.push_back(std::move(a));
  }
  for (int dep = 2; dep <= d; ++dep) {
    std::vector<Root> next;
    for (const Root& r : layer) {
      for (int i = 0; i < sys.rank(); ++i) {
        // depth rises by one exactly when B(alpha_i, r) < 0
        if (bilinear_with_simple(sys, i, r).sign() >= 0) continue;
        Root img = reflect(sys, r, i);
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    std::sort(next.begin(), next.end(), root_str_less);
    for (const Root& r : next) out.push_back(r);
    if (out.size() > cap) throw Error("roots_up_to_depth: cap exceeded");
    layer = std::move(next);
  }
  return out;
}

std::string root_str(const Root& r) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < r.coord.size(); ++i) {
    if (r.coord[i].is_zero()) continue;
    std::string c = r.coord[i].str();
    if (!first && c[0] != '-') os << "+";
    if (c == "1") {
    } else if (c == "-1") {
      os << "-";
    } else {
      bool simple_coeff = c.find_first_of("x+") == std::string::npos ||
                          (c[0] == '-' && c.find_first_of("x+", 1) == std::string::npos);
      if (simple_coeff)
        os << c << "*";
      else
        os << "(" << c << ")*";
    }
    os << "a" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string root_coord_str(const Root& r) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r.coord.size(); ++i) {
    if (i) os << ", ";
    os << r.coord[i].str();
  }
  os << "]";
  return os.str();
}

bool root_str_less(const Root& a, const Root& b) {
  return root_coord_str(a) < root_coord_str(b);
}

}  // namespace cox
