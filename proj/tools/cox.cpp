#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "cox/affine.hpp"
#include "cox/oracle.hpp"
#include "cox/order.hpp"

namespace {

using namespace cox;

// Ordered parallel map: results are assembled by index, so output does not
// depend on the thread count.
template <typename F>
void parallel_for(int n, int threads, F&& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, n);
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

struct Args {
  std::string matrix_file;
  std::string word, subset;
  std::string prefix, period;
  std::string left_prefix, left_period, right_prefix, right_period;
  std::string dot_path;
  int depth = 6;
  long steps = 0;
  int threads = 1;
  int max_prefix = 2, max_period = 4;
};

void write_dot(const std::string& path, const std::string& dot) {
  if (path == "-") {
    std::cout << dot;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dot;
}

int run(const std::string& cmd, const Args& a) {
  CoxSystem sys(CoxeterMatrix::parse_file(a.matrix_file));
  bool indeterminate = false;

  if (cmd == "classify") {
    std::vector<int> subset = a.subset.empty()
                                  ? sys.matrix().all_indices()
                                  : parse_word(a.subset, sys.rank());
    std::cout << "classification: " << subgroup_classify(sys, subset).str() << "\n";
    return 0;
  }
  if (cmd == "hyperbolic") {
    std::cout << moussong_hyperbolic(sys).str() << "\n";
    return 0;
  }
  if (cmd == "ends") {
    std::cout << ends_count(sys).str() << "\n";
    return 0;
  }
  if (cmd == "reduced") {
    EPEngine eng(sys);
    Word w = parse_word(a.word, sys.rank());
    std::cout << "reduced: " << (eng.dfa().is_reduced(w) ? "yes" : "no") << "\n";
    return 0;
  }
  if (cmd == "inv") {
    Word w = parse_word(a.word, sys.rank());
    std::cout << "inversions of " << word_str(w) << ":\n";
    for (const Root& r : inversion_roots(sys, w))
      std::cout << "  " << root_str(r) << "\n";
    return 0;
  }

  ClassifyOptions copt;
  copt.step_cap = a.steps;
  OrderOptions oopt;
  oopt.depth_bound = a.depth;
  oopt.cls = copt;

  if (cmd == "compare" || cmd == "block") {
    EPEngine eng(sys);
    EPWord left = parse_ep_word(a.left_prefix, a.left_period, sys.rank());
    EPWord right = parse_ep_word(a.right_prefix, a.right_period, sys.rank());
    if (!eng.ep_is_reduced(left)) throw Error("left word is not reduced");
    if (!eng.ep_is_reduced(right)) throw Error("right word is not reduced");
    if (cmd == "compare") {
      Verdict3 lr = braid_limit_leq(eng, left, right, oopt);
      Verdict3 rl = braid_limit_leq(eng, right, left, oopt);
      std::cout << "left <= right: " << lr.str() << "\n";
      std::cout << "right <= left: " << rl.str() << "\n";
      indeterminate = lr.kind == VerdictKind::Unknown || rl.kind == VerdictKind::Unknown;
    } else {
      Verdict3 v = same_block(eng, left, right, oopt);
      std::cout << "same block: " << v.str() << "\n";
      indeterminate = v.kind == VerdictKind::Unknown;
    }
    return indeterminate ? 2 : 0;
  }

  if (cmd == "walls") {
    EPEngine eng(sys);
    EPWord w = parse_ep_word(a.prefix, a.period, sys.rank());
    if (!eng.ep_is_reduced(w)) throw Error("word is not reduced");
    const std::vector<Root>& roots = eng.roots_to_depth(a.depth);
    std::vector<std::string> lines(roots.size());
    std::vector<char> unknown(roots.size(), 0);
    parallel_for(static_cast<int>(roots.size()), a.threads, [&](int i) {
      WallClass c = eng.root_membership(w, roots[i], copt);
      lines[i] = "  " + root_str(roots[i]) + ": " + c.str();
      unknown[i] = c.verdict == WallVerdict::Unknown;
    });
    std::cout << "walls for " << w.str() << ", roots of depth <= " << a.depth
              << ":\n";
    for (const auto& l : lines) std::cout << l << "\n";
    BoundarySet bs = eng.boundary_reflections(w, a.depth, copt);
    std::cout << "boundary walls:";
    for (const Root& r : bs.roots) std::cout << " " << root_str(r);
    if (bs.roots.empty()) std::cout << " none";
    std::cout << "\nfamily: "
              << (bs.infinite ? "infinite (disjoint pair)" : "finite so far")
              << (bs.complete ? "" : ", incomplete") << "\n";
    for (char u : unknown) indeterminate |= (u != 0);
    return indeterminate ? 2 : 0;
  }

  if (cmd == "fiber-poset") {
    EPEngine eng(sys);
    EPWord w = parse_ep_word(a.prefix, a.period, sys.rank());
    if (!eng.ep_is_reduced(w)) throw Error("word is not reduced");
    BlockPoset poset = block_fiber_poset(eng, w, oopt);
    std::cout << "block of " << w.str() << ":\n" << poset.cover_list();
    if (!a.dot_path.empty()) write_dot(a.dot_path, poset.to_dot());
    return 0;
  }

  if (cmd == "affine-census") {
    EPEngine eng(sys);
    std::vector<EPWord> words = eng.enumerate_ep_words(a.max_prefix, a.max_period);
    CensusReport rep = affine_block_census(eng, words, a.depth, oopt);
    std::cout << "census over " << words.size() << " words (prefix <= "
              << a.max_prefix << ", period <= " << a.max_period << "):\n"
              << rep.table();
    return rep.unassigned.empty() ? 0 : 2;
  }

  if (cmd == "automaton-dump") {
    EPEngine eng(sys);
    std::string dot = eng.dfa().to_dot(eng.small_roots());
    write_dot(a.dot_path.empty() ? "-" : a.dot_path, dot);
    std::cout << "states: " << eng.dfa().num_states()
              << ", small roots: " << eng.small_roots().roots.size() << "\n";
    return 0;
  }

  throw Error("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with infinite reduced words of Coxeter systems"};
  app.require_subcommand(1);
  Args a;

  std::vector<CLI::App*> subs;
  for (const char* name :
       {"classify", "hyperbolic", "ends", "reduced", "inv", "compare", "block",
        "fiber-poset", "walls", "affine-census", "automaton-dump"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("-f,--file", a.matrix_file, "Coxeter matrix file")->required();
    s->add_option("--depth", a.depth, "probe depth for wall scans");
    s->add_option("--steps", a.steps, "letter cap per classification");
    s->add_option("--threads", a.threads, "worker threads");
    s->add_option("--dot", a.dot_path, "write DOT output here ('-' = stdout)");
    s->add_option("--word", a.word, "finite word, 1-based generators");
    s->add_option("--subset", a.subset, "generator subset, 1-based");
    s->add_option("--prefix", a.prefix, "EP word prefix");
    s->add_option("--period", a.period, "EP word period");
    s->add_option("--left-prefix", a.left_prefix, "left EP word prefix");
    s->add_option("--left-period", a.left_period, "left EP word period");
    s->add_option("--right-prefix", a.right_prefix, "right EP word prefix");
    s->add_option("--right-period", a.right_period, "right EP word period");
    s->add_option("--max-prefix", a.max_prefix, "census prefix bound");
    s->add_option("--max-period", a.max_period, "census period bound");
    subs.push_back(s);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (CLI::App* s : subs)
      if (s->parsed()) return run(s->get_name(), a);
  } catch (const cox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
