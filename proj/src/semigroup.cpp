#include "oxn/semigroup.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

namespace oxn {

  using index_type = FiniteSemigroup::index_type;

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string> labels,
                                   std::vector<index_type>  table,
                                   std::uint64_t            seed)
      : labels_(std::move(labels)), table_(std::move(table)) {
    std::size_t const m = labels_.size();
    if (table_.size() != m * m) {
      throw ConstructionError("multiplication table has "
                              + std::to_string(table_.size())
                              + " entries, expected "
                              + std::to_string(m * m));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] >= m) {
        throw ConstructionError("not closed: " + labels_[i / m] + " * "
                                + labels_[i % m] + " has index "
                                + std::to_string(table_[i]));
      }
    }
    check_associativity(seed);
  }

  void FiniteSemigroup::check_associativity(std::uint64_t seed) const {
    std::size_t const m     = size();
    auto              check = [this](index_type a, index_type b, index_type c) {
      if (product(product(a, b), c) != product(a, product(b, c))) {
        throw ConstructionError("associativity fails for (" + labels_[a] + ", "
                                + labels_[b] + ", " + labels_[c] + ")");
      }
    };
    if (m <= exhaustive_associativity_limit) {
      for (index_type a = 0; a < m; ++a) {
        for (index_type b = 0; b < m; ++b) {
          for (index_type c = 0; c < m; ++c) {
            check(a, b, c);
          }
        }
      }
      return;
    }
    std::mt19937_64                           rng(seed);
    std::uniform_int_distribution<index_type> pick(0, static_cast<index_type>(m - 1));
    for (std::size_t i = 0; i < sampled_triples; ++i) {
      check(pick(rng), pick(rng), pick(rng));
    }
  }

  std::optional<index_type> FiniteSemigroup::find(std::string const& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<index_type>(it - labels_.begin());
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (index_type a = 0; a < s.size(); ++a) {
      bool found = false;
      for (index_type x = 0; x < s.size() && !found; ++x) {
        found = s.product(s.product(a, x), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations by principal ideals
  ////////////////////////////////////////////////////////////////////////

  GreenOracle::GreenOracle(FiniteSemigroup const& s) {
    std::size_t const m = s.size();
    left_.assign(m, Ideal(m, false));
    right_.assign(m, Ideal(m, false));
    two_.assign(m, Ideal(m, false));
    for (index_type a = 0; a < m; ++a) {
      left_[a][a] = right_[a][a] = two_[a][a] = true;
      for (index_type x = 0; x < m; ++x) {
        left_[a][s.product(x, a)]  = true;
        right_[a][s.product(a, x)] = true;
      }
      // S^1 a S^1 = union of the right ideals of the members of S^1 a
      for (index_type b = 0; b < m; ++b) {
        if (left_[a][b]) {
          two_[a][b] = true;
          for (index_type y = 0; y < m; ++y) {
            two_[a][s.product(b, y)] = true;
          }
        }
      }
    }
  }

  bool GreenOracle::related(index_type a, index_type b, GreenRelation relation) const {
    switch (relation) {
      case GreenRelation::L:
        return left_[a] == left_[b];
      case GreenRelation::R:
        return right_[a] == right_[b];
      case GreenRelation::H:
        return left_[a] == left_[b] && right_[a] == right_[b];
      case GreenRelation::J:
        return two_[a] == two_[b];
    }
    return false;
  }

  std::size_t GreenOracle::class_size(index_type a, GreenRelation relation) const {
    std::size_t count = 0;
    for (index_type b = 0; b < left_.size(); ++b) {
      count += related(a, b, relation) ? 1 : 0;
    }
    return count;
  }

  bool green_oracle(FiniteSemigroup const& s,
                    index_type             a,
                    index_type             b,
                    GreenRelation          relation) {
    if (a == b) {
      return true;
    }
    return GreenOracle(s).related(a, b, relation);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_assignment(FiniteSemigroup const& source,
                          FiniteSemigroup const& target,
                          ElementMap const&      phi) {
      if (phi.assignment.size() != source.size()) {
        throw ContractError("element map is not total on the source");
      }
      for (index_type y : phi.assignment) {
        if (y >= target.size()) {
          throw ContractError("element map points outside the target");
        }
      }
    }
  }  // namespace

  bool is_homomorphism(FiniteSemigroup const& source,
                       FiniteSemigroup const& target,
                       ElementMap const&      phi) {
    check_assignment(source, target, phi);
    auto const& f = phi.assignment;
    for (index_type a = 0; a < source.size(); ++a) {
      for (index_type b = 0; b < source.size(); ++b) {
        if (f[source.product(a, b)] != target.product(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bijective(FiniteSemigroup const& source,
                    FiniteSemigroup const& target,
                    ElementMap const&      phi) {
    check_assignment(source, target, phi);
    if (source.size() != target.size()) {
      return false;
    }
    std::vector<bool> hit(target.size(), false);
    for (index_type y : phi.assignment) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr index_type unassigned = static_cast<index_type>(-1);

    // Isomorphism-invariant data of a single element.
    using Fingerprint = std::array<std::size_t, 11>;

    std::vector<Fingerprint> fingerprints(FiniteSemigroup const& s) {
      std::size_t const        m = s.size();
      GreenOracle              oracle(s);
      std::vector<Fingerprint> out(m);
      for (index_type a = 0; a < m; ++a) {
        std::vector<bool> row(m, false), col(m, false);
        std::size_t       fixed_right = 0, fixed_left = 0;
        for (index_type x = 0; x < m; ++x) {
          row[s.product(a, x)] = true;
          col[s.product(x, a)] = true;
          fixed_right += s.product(x, a) == x ? 1 : 0;
          fixed_left += s.product(a, x) == x ? 1 : 0;
        }
        // index and period of the monogenic subsemigroup <a>
        std::vector<std::size_t> first_seen(m, 0);
        index_type               power = a;
        std::size_t              k     = 1;
        while (first_seen[power] == 0) {
          first_seen[power] = k++;
          power             = s.product(power, a);
        }
        std::size_t const index  = first_seen[power];
        std::size_t const period = k - first_seen[power];
        out[a]                   = {s.is_idempotent(a) ? 1u : 0u,
                  oracle.class_size(a, GreenRelation::L),
                  oracle.class_size(a, GreenRelation::R),
                  oracle.class_size(a, GreenRelation::J),
                  static_cast<std::size_t>(std::count(row.begin(), row.end(), true)),
                  static_cast<std::size_t>(std::count(col.begin(), col.end(), true)),
                  fixed_left,
                  fixed_right,
                  index,
                  period,
                  0};
      }
      return out;
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(FiniteSemigroup const& s, FiniteSemigroup const& t)
          : s_(s),
            t_(t),
            fs_(fingerprints(s)),
            ft_(fingerprints(t)),
            forward_(s.size(), unassigned),
            backward_(t.size(), unassigned) {}

      std::optional<ElementMap> run() {
        auto sorted_s = fs_, sorted_t = ft_;
        std::sort(sorted_s.begin(), sorted_s.end());
        std::sort(sorted_t.begin(), sorted_t.end());
        if (sorted_s != sorted_t) {
          return std::nullopt;
        }
        candidates_.resize(s_.size());
        for (index_type a = 0; a < s_.size(); ++a) {
          for (index_type b = 0; b < t_.size(); ++b) {
            if (fs_[a] == ft_[b]) {
              candidates_[a].push_back(b);
            }
          }
        }
        order_.resize(s_.size());
        for (index_type a = 0; a < s_.size(); ++a) {
          order_[a] = a;
        }
        std::stable_sort(order_.begin(), order_.end(), [this](index_type x, index_type y) {
          return candidates_[x].size() < candidates_[y].size();
        });
        if (!search(0)) {
          return std::nullopt;
        }
        return ElementMap{forward_};
      }

     private:
      // Assigns a -> b and every product forced by it; returns false (and
      // leaves the trail for the caller to undo) on conflict.
      bool assign(index_type a, index_type b) {
        std::vector<std::pair<index_type, index_type>> pending{{a, b}};
        while (!pending.empty()) {
          auto [x, y] = pending.back();
          pending.pop_back();
          if (forward_[x] == y) {
            continue;
          }
          if (forward_[x] != unassigned || backward_[y] != unassigned
              || fs_[x] != ft_[y]) {
            return false;
          }
          forward_[x]  = y;
          backward_[y] = x;
          trail_.push_back(x);
          for (index_type z : trail_) {
            index_type const w = forward_[z];
            pending.emplace_back(s_.product(x, z), t_.product(y, w));
            pending.emplace_back(s_.product(z, x), t_.product(w, y));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          index_type x = trail_.back();
          trail_.pop_back();
          backward_[forward_[x]] = unassigned;
          forward_[x]            = unassigned;
        }
      }

      bool search(std::size_t depth) {
        while (depth < order_.size() && forward_[order_[depth]] != unassigned) {
          ++depth;
        }
        if (depth == order_.size()) {
          return true;
        }
        index_type const a = order_[depth];
        for (index_type b : candidates_[a]) {
          if (backward_[b] != unassigned) {
            continue;
          }
          std::size_t const mark = trail_.size();
          if (assign(a, b) && search(depth + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemigroup const&               s_;
      FiniteSemigroup const&               t_;
      std::vector<Fingerprint>             fs_;
      std::vector<Fingerprint>             ft_;
      std::vector<index_type>              forward_;
      std::vector<index_type>              backward_;
      std::vector<index_type>              trail_;
      std::vector<index_type>              order_;
      std::vector<std::vector<index_type>> candidates_;
    };
  }  // namespace

  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& source,
                                             FiniteSemigroup const& target) {
    if (source.size() != target.size()) {
      return std::nullopt;
    }
    auto result = IsomorphismSearch(source, target).run();
    if (result
        && !(is_homomorphism(source, target, *result)
             && is_bijective(source, target, *result))) {
      throw std::logic_error("isomorphism search returned a map that is not a "
                             "bijective homomorphism");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  std::string cayley_json(FiniteSemigroup const& s, int indent) {
    nlohmann::json table = nlohmann::json::array();
    for (index_type a = 0; a < s.size(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (index_type b = 0; b < s.size(); ++b) {
        row.push_back(s.product(a, b));
      }
      table.push_back(std::move(row));
    }
    nlohmann::json doc = {
        {"order", s.size()}, {"elements", s.labels()}, {"table", std::move(table)}};
    return doc.dump(indent);
  }

  FiniteSemigroup from_cayley_json(std::string const& text) {
    std::vector<std::string> labels;
    std::vector<index_type>  table;
    try {
      auto const doc = nlohmann::json::parse(text);
      labels         = doc.at("elements").get<std::vector<std::string>>();
      if (doc.at("order").get<std::size_t>() != labels.size()) {
        throw ConstructionError("order does not match the number of elements");
      }
      for (auto const& row : doc.at("table")) {
        if (row.size() != labels.size()) {
          throw ConstructionError("table row has the wrong length");
        }
        for (auto const& entry : row) {
          table.push_back(entry.get<index_type>());
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed Cayley table: ") + e.what());
    }
    return FiniteSemigroup(std::move(labels), std::move(table));
  }

}  // namespace oxn
