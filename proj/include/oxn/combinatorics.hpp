// Small enumeration helpers: weakly increasing sequences, compositions and
// binomial coefficients.

#ifndef OXN_COMBINATORICS_HPP_
#define OXN_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

namespace oxn {

  //! Returns \f$\binom{n}{k}\f$, or 0 when k is out of range.
  std::uint64_t binomial(int n, int k);

  //! All weakly increasing sequences of the given length with entries in
  //! [lo, hi], in lexicographic order.  A length of 0 gives one empty
  //! sequence; lo > hi with positive length gives none.
  std::vector<std::vector<int>> monotone_sequences(int length, int lo, int hi);

  //! All compositions of n (ordered sequences of positive parts summing to
  //! n), in lexicographic order.
  std::vector<std::vector<int>> compositions(int n);

}  // namespace oxn

#endif  // OXN_COMBINATORICS_HPP_
