#include "cox/matrix.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace cox {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<std::vector<int>> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ <= 0) throw Error("rank must be positive");
  if (static_cast<int>(entries_.size()) != rank_)
    throw Error("entry rows do not match rank");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(entries_[i].size()) != rank_)
      throw Error("entry columns do not match rank");
    if (entries_[i][i] != 1) throw Error("diagonal entries must be 1");
    for (int j = 0; j < rank_; ++j) {
      int m = entries_[i][j];
      if (m < 0) throw Error("negative bond label");
      if (i != j && m == 1) throw Error("off-diagonal bond label 1");
      if (entries_[i][j] != entries_[j][i]) throw Error("matrix is not symmetric");
    }
  }
  level_ = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (bond_is_finite(entries_[i][j]))
        level_ = std::lcm(level_, static_cast<long>(entries_[i][j]));
}

CoxeterMatrix CoxeterMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error("empty matrix file");

  auto parse_token = [](const std::string& tok) -> int {
    if (tok == "inf") return infinite_bond;
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error("malformed token '" + tok + "'");
    long v = std::stol(tok);
    if (v == 0) return infinite_bond;
    return static_cast<int>(v);
  };

  std::istringstream hs(lines[0]);
  std::string rtok;
  if (!(hs >> rtok)) throw Error("missing rank");
  int n;
  try {
    n = std::stoi(rtok);
  } catch (...) {
    throw Error("malformed rank '" + rtok + "'");
  }
  if (n <= 0) throw Error("rank must be positive");
  if (static_cast<int>(lines.size()) != n + 1)
    throw Error("expected " + std::to_string(n) + " matrix rows");

  std::vector<std::vector<int>> entries(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    std::istringstream ls(lines[i + 1]);
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(ls >> tok)) throw Error("row " + std::to_string(i + 1) + " too short");
      entries[i][j] = parse_token(tok);
    }
    if (ls >> tok) throw Error("row " + std::to_string(i + 1) + " too long");
  }
  return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<int> CoxeterMatrix::all_indices() const {
  std::vector<int> v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = i;
  return v;
}

std::vector<std::vector<int>> CoxeterMatrix::components(
    const std::vector<int>& subset) const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(rank_, false);
  for (int start : subset) {
    if (seen[start]) continue;
    std::vector<int> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : subset) {
        if (seen[v] || v == u) continue;
        if (entries_[u][v] != 2) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool CoxeterMatrix::connected(const std::vector<int>& subset) const {
  return components(subset).size() <= 1;
}

std::string CoxeterMatrix::str() const {
  std::ostringstream os;
  os << rank_ << "\n";
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (j) os << " ";
      if (entries_[i][j] == infinite_bond)
        os << "inf";
      else
        os << entries_[i][j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cox
