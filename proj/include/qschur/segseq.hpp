#pragma once
#include <set>
#include <vector>

#include "qschur/subsets.hpp"

namespace qschur {

/* successor residue on the cyclic quiver with e vertices {1..e} */
inline int cyc_next(int i, int e) { return i % e + 1; }

/* Residue sequence u in {1..e}^n segmented by J, kept in canonical form:
 * ascending within every segment.  Carries the derived dimension data. */
struct SegSeq {
  std::vector<int> u;  // canonical representative
  Subset J;
  int e = 0;

  SegSeq() = default;
  SegSeq(std::vector<int> useq, Subset Jset, int eord) : J(Jset), e(eord) {
    u = std::move(useq);
    for (auto [b, en] : position_blocks(J, n()))
      std::sort(u.begin() + (b - 1), u.begin() + en);
  }

  int n() const { return static_cast<int>(u.size()); }
  int r() const { return static_cast<int>(segments().size()); }
  std::vector<std::pair<int, int>> segments() const {
    return position_blocks(J, n());
  }

  bool operator==(const SegSeq& o) const {
    return u == o.u && J == o.J && e == o.e;
  }
  bool operator<(const SegSeq& o) const {
    if (u != o.u) return u < o.u;
    if (J != o.J) return J < o.J;
    return e < o.e;
  }

  /* d_i^j: occurrences of residue i in segment j (1-based i, j) */
  int dim_entry(int i, int j) const {
    auto [b, en] = segments()[j - 1];
    int c = 0;
    for (int k = b; k <= en; ++k)
      if (u[k - 1] == i) ++c;
    return c;
  }
  std::vector<std::vector<int>> dim_matrix() const {
    std::vector<std::vector<int>> m(e, std::vector<int>(r(), 0));
    for (int i = 1; i <= e; ++i)
      for (int j = 1; j <= r(); ++j) m[i - 1][j - 1] = dim_entry(i, j);
    return m;
  }
  std::vector<int> dim_vector() const {
    std::vector<int> d(e, 0);
    for (int x : u) ++d[x - 1];
    return d;
  }
  std::vector<int> type_vector() const {
    std::vector<int> t;
    for (auto [b, en] : segments()) t.push_back(en - b + 1);
    return t;
  }
  /* partial column sums c(k)_i = d_i^1 + ... + d_i^k */
  int csum(int k, int i) const {
    int c = 0;
    for (int j = 1; j <= k; ++j) c += dim_entry(i, j);
    return c;
  }

  /* position of the a-th occurrence of residue i, 1 <= a <= d_i */
  int index_pos(int i, int a) const {
    int seen = 0;
    for (int k = 1; k <= n(); ++k)
      if (u[k - 1] == i && ++seen == a) return k;
    fail("index_pos: occurrence out of range");
  }

  /* I_{u_J}: the parabolic with W_{I} = W_J ∩ Stab(u) */
  Subset parabolic_index() const {
    Subset I;
    for (int k = 1; k < n(); ++k)
      if (J.has(k) && u[k - 1] == u[k]) I.add(k);
    return I;
  }

  /* the coarsening of this segmentation by K (J ⊆ K required) */
  SegSeq coarsen(Subset K) const {
    if (!J.subset_of(K)) fail("coarsen: J must refine K");
    return SegSeq(u, K, e);
  }

  /* u with the order of the entries inside each segment reversed globally:
   * segment contents reversed and segment order reversed */
  SegSeq reversed() const {
    std::vector<int> v(u.rbegin(), u.rend());
    Subset Jr;
    for (int k = 1; k < n(); ++k)
      if (J.has(n() - k)) Jr.add(k);
    return SegSeq(std::move(v), Jr, e);
  }
};

/* sigma with sigma·u_J = u_K: positions move by stable sort within each
 * K-block (minimal-length coset representative) */
inline Perm merge_perm(const SegSeq& uJ, Subset K) {
  if (!uJ.J.subset_of(K)) fail("merge_perm: J must refine K");
  int n = uJ.n();
  std::vector<int> dest(n);
  for (auto [b, en] : position_blocks(K, n)) {
    std::vector<int> idx;
    for (int k = b; k <= en; ++k) idx.push_back(k);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return uJ.u[x - 1] < uJ.u[y - 1]; });
    for (size_t t = 0; t < idx.size(); ++t)
      dest[idx[t] - 1] = b + static_cast<int>(t);
  }
  return Perm(std::move(dest));
}

/* all canonical u_J with u in the orbit of the residue word i */
inline std::vector<SegSeq> orbit_segseqs(const std::vector<int>& i, Subset J,
                                         int e) {
  std::vector<int> s = i;
  std::sort(s.begin(), s.end());
  std::set<SegSeq> seen;
  do seen.insert(SegSeq(s, J, e));
  while (std::next_permutation(s.begin(), s.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace qschur
