#pragma once

#include "curvezeta/multiindex.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace curvezeta {

// The combinatorial core: branch count d, conductor c, delta, the finite
// membership set S n [0, c+1] and the l-table on [0, c+2]. Everything the
// zeta assembly consumes is answered from this box via the extension rules
// of contains()/step_dim()/l():
//   - membership coordinates >= c_i are capped to c_i (S contains c + N^d),
//   - step_dim(n, i) is 0 for n_i < 0, 1 for n_i >= c_i, and otherwise a
//     finite box search (min-closure caps any witness into the box),
//   - l beyond the table adds one per unit step taken at or above the
//     conductor, and negative coordinates are clamped to 0.
class SemigroupData {
public:
    SemigroupData(int d, MultiIndex conductor, int delta,
                  std::set<MultiIndex> box, std::map<MultiIndex, int> l_table);

    // Numerical semigroup <g_1,...,g_k> with gcd 1 (d = 1).
    static SemigroupData from_numerical_generators(const std::vector<int>& gens);

    // Validated construction from the conductor and the membership list
    // inside [0, c+1]; the l-table is derived from step dimensions.
    static SemigroupData from_box(const MultiIndex& conductor,
                                  const std::vector<MultiIndex>& elements);

    // Throws InputError naming the first violated invariant.
    void validate() const;

    int branch_count() const { return d_; }
    const MultiIndex& conductor() const { return c_; }
    int delta() const { return delta_; }
    const std::set<MultiIndex>& box() const { return box_; }
    const std::map<MultiIndex, int>& l_table() const { return l_table_; }

    bool is_gorenstein() const { return c_.norm() == 2LL * delta_; }

    bool contains(const MultiIndex& n) const;
    // dim J_n / J_{n+e_i} in {0,1}; i is 0-based.
    int step_dim(const MultiIndex& n, int i) const;
    // l(n) = dim O / J_n, extended to Z^d.
    int l(const MultiIndex& n) const;

    // {n in S : n < c componentwise}, sorted lexicographically.
    std::vector<MultiIndex> under_conductor_elements() const;

    bool operator==(const SemigroupData&) const = default;

private:
    int d_;
    MultiIndex c_;
    int delta_;
    std::set<MultiIndex> box_;
    std::map<MultiIndex, int> l_table_;
};

// B_J for one proper nonempty J: the residual indices m (entries m_j < c_j
// off J) with f_J(m) = (c on J, m off J) in S; f_values stores f_J(m).
struct BSet {
    std::vector<int> J; // 0-based, sorted
    std::vector<MultiIndex> f_values;
};

// All proper nonempty J, ordered by (#J, lexicographic J). Empty for d = 1.
std::vector<BSet> b_sets(const SemigroupData& s);

// Stratum label of one semigroup element: J = {j : n_j >= c_j} and the
// defining corner f (n itself for J empty, c for J = I_0, f_J(m) otherwise).
struct HLabel {
    std::vector<int> J;
    MultiIndex f;
    bool operator==(const HLabel&) const = default;
};

// Labels every element of [0, bound] n S; requires bound >= c.
std::map<MultiIndex, HLabel> h_decomposition(const SemigroupData& s,
                                             const MultiIndex& bound);

// Recomputes the l-table on [0, c+2] from step dimensions along staircases;
// used to cross-check l-tables produced by linear algebra.
std::map<MultiIndex, int> l_table_combinatorial(const SemigroupData& s);

} // namespace curvezeta
