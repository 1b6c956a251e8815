#pragma once

// Brute-force reference implementations used only by tests. None of these
// touch the library: they use machine integers and exhaustive search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace grk::oracle {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det_laplace(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    SmallMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors.
inline std::int64_t minor_gcd(const SmallMatrix& a, std::size_t k) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::int64_t g = 0;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      SmallMatrix sub;
      for (auto r : rs) {
        std::vector<std::int64_t> row;
        for (auto c : cs) row.push_back(a[r][c]);
        sub.push_back(std::move(row));
      }
      g = std::gcd(g, det_laplace(sub));
    });
  });
  return g;
}

/// Invariant factors d_i = g_i / g_{i-1} from minor gcds, padded with zeros
/// to min(rows, cols).
inline std::vector<std::int64_t> minor_gcd_invariants(const SmallMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const std::int64_t g = minor_gcd(a, k);
    if (g == 0) {
      out.resize(std::min(rows, cols), 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Finite abelian group Z/m_1 x ... x Z/m_k with elements encoded in mixed radix.
struct ProductGroup {
  std::vector<std::int64_t> moduli;

  std::size_t order() const {
    std::size_t o = 1;
    for (auto m : moduli) o *= static_cast<std::size_t>(m);
    return o;
  }
  std::vector<std::int64_t> decode(std::size_t code) const {
    std::vector<std::int64_t> v(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      v[i] = static_cast<std::int64_t>(code % static_cast<std::size_t>(moduli[i]));
      code /= static_cast<std::size_t>(moduli[i]);
    }
    return v;
  }
  std::size_t encode(const std::vector<std::int64_t>& v) const {
    std::size_t code = 0;
    for (std::size_t i = moduli.size(); i-- > 0;) {
      std::int64_t x = ((v[i] % moduli[i]) + moduli[i]) % moduli[i];
      code = code * static_cast<std::size_t>(moduli[i]) + static_cast<std::size_t>(x);
    }
    return code;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode(x);
  }
};

/// Every subset of the group closed under addition and containing 0, found
/// by scanning all 2^|G| subsets. Each subgroup is a sorted list of codes.
inline std::vector<std::vector<std::size_t>> brute_force_subgroups(const ProductGroup& g) {
  const std::size_t order = g.order();
  std::vector<std::vector<std::size_t>> sum(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) sum[a][b] = g.add(a, b);

  std::vector<std::vector<std::size_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << order;
  for (std::uint64_t mask = 1; mask < subsets; mask += 2) {  // bit 0 is the identity
    bool closed = true;
    for (std::size_t a = 0; a < order && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = a; b < order; ++b)
        if ((mask >> b & 1) && !(mask >> sum[a][b] & 1)) {
          closed = false;
          break;
        }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < order; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.push_back(std::move(members));
  }
  return out;
}

/// All isomorphism types of abelian groups of the given order, as invariant
/// factor chains d_1 | d_2 | ... with every d_i >= 2.
inline std::vector<std::vector<std::int64_t>> abelian_types(std::int64_t order) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> chain;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t last) {
    if (rest == 1) {
      out.push_back(chain);
      return;
    }
    for (std::int64_t d = std::max<std::int64_t>(last, 2); d <= rest; ++d) {
      if (rest % d != 0 || (last != 0 && d % last != 0)) continue;
      chain.push_back(d);
      rec(rest / d, d);
      chain.pop_back();
    }
  };
  rec(order, 0);
  return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t l) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= l; ++d)
    if (l % d == 0) out.push_back(d);
  return out;
}

/// Searches coefficient vectors in [-range, range]^rows for a combination of
/// the basis rows equal to v.
inline bool exhaustive_lattice_search(const SmallMatrix& basis, const std::vector<std::int64_t>& v,
                                      std::int64_t range) {
  const std::size_t k = basis.size();
  std::vector<std::int64_t> coef(k, -range);
  for (;;) {
    bool hit = true;
    for (std::size_t c = 0; c < v.size() && hit; ++c) {
      std::int64_t s = 0;
      for (std::size_t r = 0; r < k; ++r) s += coef[r] * basis[r][c];
      hit = s == v[c];
    }
    if (hit) return true;
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++coef[i] <= range) break;
      coef[i] = -range;
    }
    if (i == k) return false;
  }
}

/// Counts arrow words up to max_len that are paths and contain no relation
/// as a factor, grouped by (source, target). Arrows are (from, to) pairs and
/// relations are sequences of arrow indices.
inline SmallMatrix brute_force_path_counts(std::size_t vertices,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                                           const std::vector<std::vector<std::size_t>>& relations,
                                           std::size_t max_len) {
  SmallMatrix counts(vertices, std::vector<std::int64_t>(vertices, 0));
  for (std::size_t v = 0; v < vertices; ++v) counts[v][v] += 1;
  std::function<void(std::vector<std::size_t>&)> extend = [&](std::vector<std::size_t>& word) {
    if (word.size() == max_len) return;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (!word.empty() && arrows[word.back()].second != arrows[a].first) continue;
      word.push_back(a);
      bool killed = false;
      for (const auto& r : relations) {
        if (r.size() > word.size()) continue;
        for (std::size_t start = 0; start + r.size() <= word.size() && !killed; ++start)
          killed = std::equal(r.begin(), r.end(), word.begin() + static_cast<std::ptrdiff_t>(start));
      }
      if (!killed) {
        counts[arrows[word.front()].first][arrows[a].second] += 1;
        extend(word);
      }
      word.pop_back();
    }
  };
  std::vector<std::size_t> word;
  extend(word);
  return counts;
}

inline SmallMatrix random_small_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                       std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  SmallMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m)
    for (auto& x : r) x = dist(rng);
  return m;
}

}  // namespace grk::oracle
