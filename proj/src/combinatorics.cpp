#include "oxn/combinatorics.hpp"

namespace oxn {

  std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
      return 0;
    }
    if (k > n - k) {
      k = n - k;
    }
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
      result = result * static_cast<std::uint64_t>(n - k + i) / i;
    }
    return result;
  }

  std::vector<std::vector<int>> monotone_sequences(int length, int lo, int hi) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
      out.emplace_back();
      return out;
    }
    if (lo > hi) {
      return out;
    }
    std::vector<int> current(length, lo);
    while (true) {
      out.push_back(current);
      // odometer step: bump the rightmost entry that can still grow and reset
      // everything after it to the new value
      int pos = length - 1;
      while (pos >= 0 && current[pos] == hi) {
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++current[pos];
      for (int i = pos + 1; i < length; ++i) {
        current[i] = current[pos];
      }
    }
    return out;
  }

  namespace {
    void compositions_rec(int remaining,
                          std::vector<int>&              prefix,
                          std::vector<std::vector<int>>& out) {
      if (remaining == 0) {
        out.push_back(prefix);
        return;
      }
      for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        compositions_rec(remaining - part, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              prefix;
    if (n > 0) {
      compositions_rec(n, prefix, out);
    }
    return out;
  }

}  // namespace oxn
