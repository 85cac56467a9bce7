#include <doctest.h>

#include "catalog.hpp"
#include "cox/classify.hpp"
#include "cox/oracle.hpp"
#include "cox/word.hpp"

using namespace cox;
using namespace coxtest;

TEST_CASE("matrix parsing") {
  CoxeterMatrix m = CoxeterMatrix::parse("2\n1 0\n0 1\n");
  CHECK(m.rank() == 2);
  CHECK(m.bond(0, 1) == infinite_bond);
  CHECK(m.ring_level() == 1);

  CoxeterMatrix pent = CoxeterMatrix::parse(
      "# right-angled pentagon\n5\n"
      "1 2 inf inf 2\n"
      "2 1 2 inf inf\n"
      "inf 2 1 2 inf\n"
      "inf inf 2 1 2\n"
      "2 inf inf 2 1\n");
  CHECK(pent.rank() == 5);
  CHECK(pent.ring_level() == 2);
  CHECK(pent.str() == pentagon().str());

  CoxeterMatrix tri = CoxeterMatrix::parse("3\n1 3 3\n3 1 3\n3 3 1\n");
  CHECK(tri.ring_level() == 3);

  CHECK_THROWS_AS(CoxeterMatrix::parse("2\n1 3\n4 1\n"), Error);  // asymmetric
  CHECK_THROWS_AS(CoxeterMatrix::parse("2\n2 3\n3 1\n"), Error);  // diagonal
  CHECK_THROWS_AS(CoxeterMatrix::parse("2\n1 x\nx 1\n"), Error);  // token
  CHECK_THROWS_AS(CoxeterMatrix::parse("0\n"), Error);            // rank
  CHECK_THROWS_AS(CoxeterMatrix::parse("2\n1 3 3\n3 1 3\n"), Error);
}

TEST_CASE("bilinear form values") {
  const CoxSystem& s = sys_of(a2t());
  CHECK(s.bilinear(0, 0) == s.field().one());
  CHECK(s.bilinear(0, 1) == s.field().rational(Rational(-1, 2)));  // m = 3
  const CoxSystem& pent = sys_of(pentagon());
  CHECK(pent.bilinear(0, 1).is_zero());                            // m = 2
  CHECK(pent.bilinear(0, 2) == pent.field().rational(-1));         // m = inf
  // m = 5: -cos(pi/5) = -(golden)/2; check 4 B^2 - 2 B = 1
  const CoxSystem& h = sys_of(h2());
  FieldElement b = h.bilinear(0, 1);
  CHECK(b.sign() == -1);
  FieldElement four = h.field().rational(4), two = h.field().rational(2);
  CHECK(four * b * b + two * b == h.field().one());
}

TEST_CASE("reflections") {
  const CoxSystem& d = sys_of(idih());
  Root as = simple_root(d, 0), at = simple_root(d, 1);
  // s_i negates its own root
  Root neg = reflect(d, as, 0);
  CHECK(neg.coord[0] == -d.field().one());
  CHECK(neg.coord[1].is_zero());
  // infinite dihedral: s(alpha_t) = alpha_t + 2 alpha_s
  Root img = reflect(d, at, 0);
  CHECK(img.coord[0] == d.field().rational(2));
  CHECK(img.coord[1] == d.field().one());
  // commuting generators fix each other's roots
  const CoxSystem& p = sys_of(pentagon());
  CHECK(reflect(p, simple_root(p, 0), 1) == simple_root(p, 0));
  // involution
  for (int i = 0; i < 2; ++i) CHECK(reflect(d, reflect(d, img, i), i) == img);
}

TEST_CASE("is_reduced") {
  const CoxSystem& p = sys_of(pentagon());
  CHECK(is_reduced(p, {}));
  CHECK_FALSE(is_reduced(p, {0, 0}));
  CHECK(is_reduced(p, parse_word("1 3 5 2 4 1 3 5 2 4", 5)));
  CHECK_FALSE(is_reduced(p, parse_word("1 2 1", 5)));  // m=2, 121 -> 211
  const CoxSystem& a = sys_of(a2());
  CHECK(is_reduced(a, {0, 1, 0}));
  CHECK_FALSE(is_reduced(a, {0, 1, 0, 1}));  // braid: 1212 not reduced at m=3
}

TEST_CASE("inversion sets") {
  const CoxSystem& a = sys_of(a2());
  auto inv1 = inversion_roots(a, {0});
  REQUIRE(inv1.size() == 1);
  CHECK(inv1[0] == simple_root(a, 0));

  const CoxSystem& d = sys_of(idih());
  auto inv = inversion_roots(d, {0, 1});
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == simple_root(d, 0));
  CHECK(inv[1].coord[0] == d.field().rational(2));  // s(alpha_t) = 2a_s + a_t
  CHECK(inv[1].coord[1] == d.field().one());

  const CoxSystem& p = sys_of(pentagon());
  auto pinv = inversion_roots(p, {0, 1});  // commuting: {a1, a2}
  CHECK(pinv[0] == simple_root(p, 0));
  CHECK(pinv[1] == simple_root(p, 1));

  CHECK_THROWS_AS(inversion_roots(p, Word{0, 0}), Error);
}

TEST_CASE("inversion sets determine elements") {
  // two reduced words carry the same element iff their inversion sets match
  for (const auto& [name, m] : {std::pair<std::string, CoxeterMatrix>{"A2~", a2t()},
                                {"B2", b2()},
                                {"pent", pentagon()}}) {
    const CoxSystem& s = sys_of(m);
    auto slice = oracle::bfs_elements(s, 4);
    for (size_t x = 0; x < slice.elements.size(); ++x)
      for (size_t y = x + 1; y < slice.elements.size(); ++y)
        CHECK(oracle::inversion_key(s, slice.elements[x]) !=
              oracle::inversion_key(s, slice.elements[y]));
  }
}

TEST_CASE("subgroup classification basics") {
  const CoxSystem& t = sys_of(a2t());
  CHECK(subgroup_classify(t, {}).cls == SubgroupClass::Spherical);
  CHECK(subgroup_classify(t, {0, 1, 2}).cls == SubgroupClass::Affine);
  CHECK(subgroup_classify(t, {0, 1}).cls == SubgroupClass::Spherical);

  const CoxSystem& p = sys_of(pentagon());
  auto st = subgroup_classify(p, {0, 2});  // m = infinity: affine A1~
  CHECK(st.cls == SubgroupClass::Affine);
  CHECK(st.signature.pos == 1);
  CHECK(st.signature.zero == 1);
  CHECK(subgroup_classify(p, {0, 1, 2, 3, 4}).cls == SubgroupClass::Indefinite);
}

namespace {

// independent classifier for irreducible diagrams of rank <= 4 with the
// classical finite and affine type lists
enum class Known { Finite, Affine, Other };

Known known_type(const CoxeterMatrix& m, const std::vector<int>& comp) {
  int k = static_cast<int>(comp.size());
  std::vector<int> labels;  // off-diagonal bonds > 2 or infinite, sorted
  int edges = 0;
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int b = m.bond(comp[i], comp[j]);
      if (b != 2) {
        ++edges;
        ++deg[i];
        ++deg[j];
        labels.push_back(b == infinite_bond ? 1000 : b);
      }
    }
  std::sort(labels.begin(), labels.end());
  std::sort(deg.begin(), deg.end());
  if (k == 1) return Known::Finite;
  if (k == 2) {
    if (labels == std::vector<int>{1000}) return Known::Affine;  // D-infinity
    return Known::Finite;  // any finite dihedral
  }
  bool path = edges == k - 1 && deg.back() <= 2;
  bool cycle = edges == k && deg.front() == 2 && deg.back() == 2;
  bool star = edges == k - 1 && deg.back() == 3;
  if (k == 3) {
    if (cycle && labels == std::vector<int>{3, 3, 3}) return Known::Affine;  // A2~
    if (path && labels == std::vector<int>{3, 3}) return Known::Finite;      // A3
    if (path && labels == std::vector<int>{3, 4}) return Known::Finite;      // B3
    if (path && labels == std::vector<int>{3, 5}) return Known::Finite;      // H3
    if (path && labels == std::vector<int>{4, 4}) return Known::Affine;      // C2~
    if (path && labels == std::vector<int>{3, 6}) return Known::Affine;      // G2~
    return Known::Other;
  }
  if (k == 4) {
    if (path && labels == std::vector<int>{3, 3, 3}) return Known::Finite;  // A4
    if (path && labels == std::vector<int>{3, 3, 4}) {
      // B4 (4 at an end) vs F4~-like? F4 itself is 3,4,3 in the middle:
      // distinguish by whether the 4-edge is terminal
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (m.bond(comp[i], comp[j]) == 4) {
            int di = 0, dj = 0;
            for (int l = 0; l < 4; ++l) {
              if (l != i && m.bond(comp[i], comp[l]) != 2) ++di;
              if (l != j && m.bond(comp[j], comp[l]) != 2) ++dj;
            }
            return (di == 1 || dj == 1) ? Known::Finite /*B4*/
                                        : Known::Finite /*F4*/;
          }
    }
    if (path && labels == std::vector<int>{3, 3, 5}) {
      // H4 has the 5 at an end; 3,5,3 in the middle is the compact
      // hyperbolic group (not finite)
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (m.bond(comp[i], comp[j]) == 5) {
            int di = 0, dj = 0;
            for (int l = 0; l < 4; ++l) {
              if (l != i && m.bond(comp[i], comp[l]) != 2) ++di;
              if (l != j && m.bond(comp[j], comp[l]) != 2) ++dj;
            }
            return (di == 1 || dj == 1) ? Known::Finite /*H4*/ : Known::Other;
          }
    }
    if (star && labels == std::vector<int>{3, 3, 3}) return Known::Finite;  // D4
    if (star && labels == std::vector<int>{3, 3, 4}) {
      // B3~ has its 4-edge at a leaf of the star
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (m.bond(comp[i], comp[j]) == 4) {
            int di = 0, dj = 0;
            for (int l = 0; l < 4; ++l) {
              if (l != i && m.bond(comp[i], comp[l]) != 2) ++di;
              if (l != j && m.bond(comp[j], comp[l]) != 2) ++dj;
            }
            return (di == 3 || dj == 3) ? Known::Affine /*B3~*/ : Known::Other;
          }
    }
    if (path && labels == std::vector<int>{3, 4, 4}) {
      // C3~ is 4-3-4 (both 4s terminal)
      bool both_terminal = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (m.bond(comp[i], comp[j]) == 4) {
            int di = 0, dj = 0;
            for (int l = 0; l < 4; ++l) {
              if (l != i && m.bond(comp[i], comp[l]) != 2) ++di;
              if (l != j && m.bond(comp[j], comp[l]) != 2) ++dj;
            }
            if (di != 1 && dj != 1) both_terminal = false;
          }
      return both_terminal ? Known::Affine : Known::Other;
    }
    if (cycle && labels == std::vector<int>{3, 3, 3, 3}) return Known::Affine;  // A3~
    return Known::Other;
  }
  return Known::Other;
}

}  // namespace

TEST_CASE("classification agrees with the classical tables") {
  // exhaustive rank <= 3 over bonds {2,3,4,5,6,inf}; rank 4 over {2,3,4,inf}
  std::vector<int> bonds3 = {2, 3, 4, 5, 6, 0};
  for (int b1 : bonds3)
    for (int b2v : bonds3)
      for (int b3v : bonds3) {
        CoxeterMatrix m = mat(3, {b1, b2v, b3v});
        const CoxSystem s(m);
        for (const auto& comp : m.components(m.all_indices())) {
          Known want = known_type(m, comp);
          SubgroupClass got = subgroup_classify(s, comp).cls;
          if (want == Known::Finite) CHECK(got == SubgroupClass::Spherical);
          if (want == Known::Affine) CHECK(got == SubgroupClass::Affine);
          if (want == Known::Other) CHECK(got == SubgroupClass::Indefinite);
        }
      }
  std::vector<int> bonds4 = {2, 3, 4, 0};
  for (int b1 : bonds4)
    for (int b2v : bonds4)
      for (int b3v : bonds4)
        for (int b4 : bonds4)
          for (int b5 : bonds4)
            for (int b6 : bonds4) {
              CoxeterMatrix m = mat(4, {b1, b2v, b3v, b4, b5, b6});
              const CoxSystem s(m);
              for (const auto& comp : m.components(m.all_indices())) {
                if (comp.size() < 4) continue;  // smaller ranks covered above
                Known want = known_type(m, comp);
                SubgroupClass got = subgroup_classify(s, comp).cls;
                if (want == Known::Finite) CHECK(got == SubgroupClass::Spherical);
                if (want == Known::Affine) CHECK(got == SubgroupClass::Affine);
                if (want == Known::Other) CHECK(got == SubgroupClass::Indefinite);
              }
            }
  // rank-4 spot checks with 5s and 6s
  CHECK(subgroup_classify(sys_of(mat(4, {5, 2, 2, 3, 2, 3})), {0, 1, 2, 3}).cls ==
        SubgroupClass::Spherical);  // H4
  CHECK(subgroup_classify(sys_of(mat(4, {6, 2, 2, 3, 2, 3})), {0, 1, 2, 3}).cls ==
        SubgroupClass::Indefinite);  // 6-3-3 path
  CHECK(subgroup_classify(sys_of(mat(3, {6, 2, 3})), {0, 1, 2}).cls ==
        SubgroupClass::Affine);  // G2~
}

TEST_CASE("pair_generates_finite") {
  const CoxSystem& p = sys_of(pentagon());
  auto po = pair_generates_finite(p, simple_root(p, 0), simple_root(p, 1));
  CHECK(po.finite);
  CHECK(po.order == 2);  // orthogonal pair

  const CoxSystem& a = sys_of(a2());
  po = pair_generates_finite(a, simple_root(a, 0), simple_root(a, 1));
  CHECK(po.finite);
  CHECK(po.order == 3);

  const CoxSystem& d = sys_of(idih());
  CHECK_FALSE(
      pair_generates_finite(d, simple_root(d, 0), simple_root(d, 1)).finite);

  const CoxSystem& h = sys_of(h2());
  po = pair_generates_finite(h, simple_root(h, 0), simple_root(h, 1));
  CHECK(po.finite);
  CHECK(po.order == 5);
}

TEST_CASE("depth and root enumeration") {
  const CoxSystem& d = sys_of(idih());
  CHECK(depth(d, simple_root(d, 0)) == 1);
  Root r = simple_root(d, 1);
  reflect_in_place(d, r, 0);  // depth 2
  CHECK(depth(d, r) == 2);
  reflect_in_place(d, r, 1);  // depth 3
  CHECK(depth(d, r) == 3);

  auto roots = roots_up_to_depth(d, 5);
  CHECK(roots.size() == 10);  // two per depth in the infinite dihedral group
  const CoxSystem& a = sys_of(a2());
  CHECK(roots_up_to_depth(a, 4).size() == 3);  // all of A2

  for (const Root& x : roots_up_to_depth(sys_of(pentagon()), 4)) {
    CHECK(is_positive(x));
    FieldElement n = bilinear(sys_of(pentagon()), x, x);
    CHECK(n == sys_of(pentagon()).field().one());  // unit roots
  }
}

TEST_CASE("normal forms") {
  const CoxSystem& p = sys_of(pentagon());
  CHECK(normal_form_of_element(p, parse_word("2 1", 5)) == parse_word("1 2", 5));
  const CoxSystem& a = sys_of(a2());
  CHECK(normal_form_of_element(a, {1, 0, 1}) == Word{0, 1, 0});
  CHECK(normal_form_of_element(a, {0, 0}) == Word{});
  CHECK(normal_form_of_element(a, {1, 1, 0, 1, 1}) == Word{0});
}
