// Finite semigroups given by a full multiplication table: construction with
// closure and associativity checks, regularity, an ideal-based oracle for
// Green's relations, homomorphism checks and isomorphism search.

#ifndef OXN_SEMIGROUP_HPP_
#define OXN_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oxn/chain.hpp"
#include "oxn/errors.hpp"

namespace oxn {

  class FiniteSemigroup {
   public:
    using index_type = std::uint32_t;

    //! Up to this order associativity is checked on every triple; above it,
    //! on sampled_triples random triples.
    static constexpr std::size_t exhaustive_associativity_limit = 200;
    static constexpr std::size_t sampled_triples                = 100'000;

    //! Builds from a row-major m x m table.  Throws ConstructionError when
    //! the table is not square, an entry is out of range, or associativity
    //! fails (the message names the witness triple).
    FiniteSemigroup(std::vector<std::string> labels,
                    std::vector<index_type>  table,
                    std::uint64_t            seed = 0);

    //! Builds the semigroup on the given pairwise distinct elements with the
    //! product mul(a, b).  Element type T needs operator<; label(T) gives
    //! the display label of an element.
    template <typename T, typename Mul, typename Label>
    static FiniteSemigroup build(std::vector<T> const& elements,
                                 Mul&&                 mul,
                                 Label&&               label,
                                 std::uint64_t         seed = 0);

    [[nodiscard]] std::size_t size() const noexcept {
      return labels_.size();
    }
    [[nodiscard]] index_type product(index_type a, index_type b) const {
      return table_[static_cast<std::size_t>(a) * size() + b];
    }
    [[nodiscard]] std::string const& label(index_type a) const {
      return labels_[a];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    [[nodiscard]] std::vector<index_type> const& table() const noexcept {
      return table_;
    }
    [[nodiscard]] bool is_idempotent(index_type a) const {
      return product(a, a) == a;
    }
    //! Index of the element with the given label, if any.
    [[nodiscard]] std::optional<index_type> find(std::string const& label) const;

   private:
    void check_associativity(std::uint64_t seed) const;

    std::vector<std::string> labels_;
    std::vector<index_type>  table_;
  };

  //! An assignment source index -> target index between two semigroups.
  struct ElementMap {
    std::vector<FiniteSemigroup::index_type> assignment;

    bool operator==(ElementMap const&) const = default;
  };

  //! True iff for every a there is x with a x a = a.
  bool is_regular(FiniteSemigroup const& s);

  //! Principal one-sided and two-sided ideals of every element, computed
  //! once and compared for Green's relations.
  class GreenOracle {
   public:
    explicit GreenOracle(FiniteSemigroup const& s);

    [[nodiscard]] bool related(FiniteSemigroup::index_type a,
                               FiniteSemigroup::index_type b,
                               GreenRelation               relation) const;

    //! Sizes of the L-, R- and J-classes of a.
    [[nodiscard]] std::size_t class_size(FiniteSemigroup::index_type a,
                                         GreenRelation relation) const;

   private:
    using Ideal = std::vector<bool>;

    std::vector<Ideal> left_;   // S^1 a
    std::vector<Ideal> right_;  // a S^1
    std::vector<Ideal> two_;    // S^1 a S^1
  };

  //! Single-pair oracle: L by S^1 a = S^1 b, R by a S^1 = b S^1, H = L and R,
  //! J by S^1 a S^1 = S^1 b S^1.
  bool green_oracle(FiniteSemigroup const&      s,
                    FiniteSemigroup::index_type a,
                    FiniteSemigroup::index_type b,
                    GreenRelation               relation);

  //! phi(ab) = phi(a) phi(b) for all a, b.  Throws ContractError if the
  //! assignment does not match the source size or points outside target.
  bool is_homomorphism(FiniteSemigroup const& source,
                       FiniteSemigroup const& target,
                       ElementMap const&      phi);

  bool is_bijective(FiniteSemigroup const& source,
                    FiniteSemigroup const& target,
                    ElementMap const&      phi);

  //! Backtracking search for an isomorphism source -> target, pruned by
  //! per-element invariants and forced products.  Every returned map has
  //! been checked to be a bijective homomorphism.
  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& source,
                                             FiniteSemigroup const& target);

  //! {"order": m, "elements": [...], "table": [[...], ...]}
  std::string cayley_json(FiniteSemigroup const& s, int indent = -1);
  //! Inverse of cayley_json; the table is re-validated.
  FiniteSemigroup from_cayley_json(std::string const& text);

  ////////////////////////////////////////////////////////////////////////
  // Implementation of templates
  ////////////////////////////////////////////////////////////////////////

  template <typename T, typename Mul, typename Label>
  FiniteSemigroup FiniteSemigroup::build(std::vector<T> const& elements,
                                         Mul&&                 mul,
                                         Label&&               label,
                                         std::uint64_t         seed) {
    std::map<T, index_type>  index;
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!index.emplace(elements[i], static_cast<index_type>(i)).second) {
        throw ConstructionError("duplicate element " + label(elements[i]));
      }
      labels.push_back(label(elements[i]));
    }
    std::size_t const       m = elements.size();
    std::vector<index_type> table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        T    ab = mul(elements[a], elements[b]);
        auto it = index.find(ab);
        if (it == index.end()) {
          throw ConstructionError("not closed: " + labels[a] + " * " + labels[b]
                                  + " = " + label(ab)
                                  + " is not among the elements");
        }
        table[a * m + b] = it->second;
      }
    }
    return FiniteSemigroup(std::move(labels), std::move(table), seed);
  }

}  // namespace oxn

#endif  // OXN_SEMIGROUP_HPP_
