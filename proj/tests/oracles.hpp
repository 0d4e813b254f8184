// Brute-force reference computations used by the tests.  Nothing here calls
// into liboxn beyond the value types.

#ifndef OXN_TESTS_ORACLES_HPP_
#define OXN_TESTS_ORACLES_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "oxn/chain.hpp"

namespace oracle {

  using Map = std::vector<int>;

  // every map X_n -> X_n, monotone ones kept, identity dropped
  inline std::vector<Map> monotone_singular(int n) {
    std::vector<Map> out;
    Map              f(static_cast<std::size_t>(n), 1);
    while (true) {
      bool monotone = true, identity = true;
      for (int x = 0; x < n; ++x) {
        if (x > 0 && f[x - 1] > f[x]) {
          monotone = false;
        }
        if (f[x] != x + 1) {
          identity = false;
        }
      }
      if (monotone && !identity) {
        out.push_back(f);
      }
      int i = n - 1;
      while (i >= 0 && f[i] == n) {
        f[i--] = 1;
      }
      if (i < 0) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  // x -> g(f(x))
  inline Map then(Map const& f, Map const& g) {
    Map h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = g[static_cast<std::size_t>(f[x] - 1)];
    }
    return h;
  }

  // F_{2n} - 1: idempotents of the monoid of order-preserving maps, less
  // the identity
  inline std::uint64_t idempotent_count(int n) {
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < 2 * n; ++i) {
      std::uint64_t c = a + b;
      a               = b;
      b               = c;
    }
    return a - 1;
  }

  inline std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
      r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
  }

  // left ideal S^1 a and right ideal a S^1 as sets of maps
  inline std::set<Map> left_ideal(std::vector<Map> const& s, Map const& a) {
    std::set<Map> out{a};
    for (auto const& x : s) {
      out.insert(then(x, a));
    }
    return out;
  }

  inline std::set<Map> right_ideal(std::vector<Map> const& s, Map const& a) {
    std::set<Map> out{a};
    for (auto const& x : s) {
      out.insert(then(a, x));
    }
    return out;
  }

  // classes of x ~ y when the blocks of x and y in eta.from() have the same
  // image under eta
  inline oxn::OrderedPartition fibre_partition(oxn::BlockMap const& eta) {
    std::vector<int> labels;
    for (int x = 1; x <= eta.from().chain_size(); ++x) {
      labels.push_back(static_cast<int>(eta(eta.from().block_of(x))));
    }
    return oxn::OrderedPartition::from_labels(labels);
  }

  // each block of eta.to() joins the first image block at or after it, or
  // the last image block when there is none
  inline oxn::OrderedPartition absorbed_partition(oxn::BlockMap const& eta) {
    std::set<std::size_t> const image(eta.targets().begin(), eta.targets().end());
    std::vector<int>            labels;
    for (int x = 1; x <= eta.to().chain_size(); ++x) {
      auto it = image.lower_bound(eta.to().block_of(x));
      labels.push_back(static_cast<int>(it == image.end() ? *image.rbegin() : *it));
    }
    return oxn::OrderedPartition::from_labels(labels);
  }

}  // namespace oracle

#endif  // OXN_TESTS_ORACLES_HPP_
