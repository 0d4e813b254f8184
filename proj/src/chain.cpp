#include "oxn/chain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "oxn/combinatorics.hpp"
#include "oxn/errors.hpp"

namespace oxn {

  namespace {
    std::string join(std::vector<int> const& values,
                     char                    open,
                     char                    close) {
      std::string out(1, open);
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(values[i]);
      }
      out += close;
      return out;
    }

    void check_same_degree(OPMap const& f, OPMap const& g) {
      if (f.degree() != g.degree()) {
        throw DimensionError("maps act on chains of different lengths: "
                             + std::to_string(f.degree()) + " and "
                             + std::to_string(g.degree()));
      }
    }
  }  // namespace

  ChainSize::ChainSize(int n) : value_(n) {
    if (n < min || n > max) {
      throw DomainError("chain size must lie in [" + std::to_string(min) + ", "
                        + std::to_string(max) + "], got " + std::to_string(n));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // OPMap
  ////////////////////////////////////////////////////////////////////////

  OPMap::OPMap(std::vector<Point> images) : images_(std::move(images)) {
    int const n = ChainSize(static_cast<int>(images_.size())).value();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] < 1 || images_[i] > n) {
        throw DomainError("image value out of range in " + to_string(*this));
      }
      if (i > 0 && images_[i - 1] > images_[i]) {
        throw DomainError("map is not order-preserving: " + to_string(*this));
      }
    }
  }

  OPMap OPMap::identity(ChainSize n) {
    std::vector<Point> images(static_cast<std::size_t>(n.value()));
    for (int x = 1; x <= n.value(); ++x) {
      images[x - 1] = x;
    }
    return OPMap(std::move(images));
  }

  OPMap OPMap::constant(ChainSize n, Point value) {
    return OPMap(std::vector<Point>(static_cast<std::size_t>(n.value()), value));
  }

  bool OPMap::is_singular() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<Point>(i + 1)) {
        return true;
      }
    }
    return false;
  }

  bool OPMap::is_idempotent() const noexcept {
    return std::all_of(images_.begin(), images_.end(), [this](Point y) {
      return (*this)(y) == y;
    });
  }

  std::size_t OPMap::rank() const noexcept {
    // monotone, so distinct values are the run starts
    std::size_t r = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i == 0 || images_[i] != images_[i - 1]) {
        ++r;
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(int n, std::vector<Point> elements)
      : n_(ChainSize(n).value()), elements_(std::move(elements)) {
    if (elements_.empty()) {
      throw DomainError("subsets must be nonempty");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] < 1 || elements_[i] > n_) {
        throw DomainError("subset element out of range in " + to_string(*this));
      }
      if (i > 0 && elements_[i - 1] >= elements_[i]) {
        throw DomainError("subset elements must be strictly increasing: "
                          + to_string(*this));
      }
    }
  }

  Subset Subset::full(ChainSize n) {
    return Subset(n.value(), OPMap::identity(n).images());
  }

  Subset Subset::singleton(ChainSize n, Point x) {
    return Subset(n.value(), {x});
  }

  bool Subset::contains(Point x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

  std::size_t Subset::position(Point x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x) {
      throw DomainError(std::to_string(x) + " is not an element of "
                        + to_string(*this));
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool Subset::is_subset_of(Subset const& other) const noexcept {
    return n_ == other.n_
           && std::includes(other.elements_.begin(),
                            other.elements_.end(),
                            elements_.begin(),
                            elements_.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderedPartition
  ////////////////////////////////////////////////////////////////////////

  OrderedPartition::OrderedPartition(int n, std::vector<int> block_sizes)
      : n_(ChainSize(n).value()), sizes_(std::move(block_sizes)) {
    int total = 0;
    for (int k : sizes_) {
      if (k <= 0) {
        throw DomainError("block sizes must be positive in "
                          + to_string(*this));
      }
      total += k;
    }
    if (total != n_) {
      throw DomainError("block sizes of " + to_string(*this) + " sum to "
                        + std::to_string(total) + ", expected "
                        + std::to_string(n_));
    }
    starts_.reserve(sizes_.size());
    block_index_.reserve(static_cast<std::size_t>(n_));
    Point start = 1;
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
      starts_.push_back(start);
      for (int i = 0; i < sizes_[b]; ++i) {
        block_index_.push_back(b);
      }
      start += sizes_[b];
    }
  }

  OrderedPartition OrderedPartition::discrete(ChainSize n) {
    return OrderedPartition(n.value(),
                            std::vector<int>(static_cast<std::size_t>(n.value()), 1));
  }

  OrderedPartition OrderedPartition::from_labels(std::vector<int> const& labels) {
    std::vector<int> sizes;
    std::vector<int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i == 0 || labels[i] != labels[i - 1]) {
        if (std::find(seen.begin(), seen.end(), labels[i]) != seen.end()) {
          throw DomainError("labelling has a class that is not an interval");
        }
        seen.push_back(labels[i]);
        sizes.push_back(1);
      } else {
        ++sizes.back();
      }
    }
    return OrderedPartition(static_cast<int>(labels.size()), std::move(sizes));
  }

  std::vector<Point> OrderedPartition::block(std::size_t i) const {
    std::vector<Point> out;
    for (Point x = first(i); x <= last(i); ++x) {
      out.push_back(x);
    }
    return out;
  }

  bool OrderedPartition::refines(OrderedPartition const& coarser) const {
    if (n_ != coarser.n_) {
      return false;
    }
    for (std::size_t b = 0; b < block_count(); ++b) {
      if (coarser.block_of(first(b)) != coarser.block_of(last(b))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockMap
  ////////////////////////////////////////////////////////////////////////

  BlockMap::BlockMap(OrderedPartition         from,
                     OrderedPartition         to,
                     std::vector<std::size_t> targets)
      : from_(std::move(from)), to_(std::move(to)), targets_(std::move(targets)) {
    if (from_.chain_size() != to_.chain_size()) {
      throw DomainError("block map between partitions of different chains");
    }
    if (targets_.size() != from_.block_count()) {
      throw DomainError("a block map needs one target per source block");
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (targets_[i] >= to_.block_count()) {
        throw DomainError("block map target out of range");
      }
      if (i > 0 && targets_[i - 1] > targets_[i]) {
        throw DomainError("block map is not order-preserving");
      }
    }
  }

  BlockMap BlockMap::identity(OrderedPartition const& pi) {
    std::vector<std::size_t> targets(pi.block_count());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      targets[i] = i;
    }
    return BlockMap(pi, pi, std::move(targets));
  }

  BlockMap BlockMap::containment(OrderedPartition const& finer,
                                 OrderedPartition const& coarser) {
    if (!finer.refines(coarser)) {
      throw DomainError(to_string(finer) + " does not refine "
                        + to_string(coarser));
    }
    std::vector<std::size_t> targets(finer.block_count());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      targets[i] = coarser.block_of(finer.first(i));
    }
    return BlockMap(finer, coarser, std::move(targets));
  }

  bool BlockMap::is_bijective() const noexcept {
    if (from_.block_count() != to_.block_count()) {
      return false;
    }
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (targets_[i] != i) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // SubMap
  ////////////////////////////////////////////////////////////////////////

  SubMap::SubMap(Subset domain, Subset codomain, std::vector<Point> values)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        values_(std::move(values)) {
    if (domain_.chain_size() != codomain_.chain_size()) {
      throw DomainError("domain and codomain live on different chains");
    }
    if (values_.size() != domain_.size()) {
      throw DomainError("a SubMap needs one value per domain element");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!codomain_.contains(values_[i])) {
        throw DomainError("value " + std::to_string(values_[i])
                          + " is not in the codomain " + to_string(codomain_));
      }
      if (i > 0 && values_[i - 1] > values_[i]) {
        throw DomainError("SubMap values are not order-preserving");
      }
    }
  }

  SubMap SubMap::identity(Subset const& a) {
    return SubMap(a, a, a.elements());
  }

  SubMap SubMap::inclusion(Subset const& sub, Subset const& super) {
    if (!sub.is_subset_of(super)) {
      throw DomainError(to_string(sub) + " is not contained in "
                        + to_string(super));
    }
    return SubMap(sub, super, sub.elements());
  }

  Point SubMap::operator()(Point x) const {
    return values_[domain_.position(x)];
  }

  Subset SubMap::image() const {
    std::vector<Point> img(values_);
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Subset(domain_.chain_size(), std::move(img));
  }

  bool SubMap::is_injective() const noexcept {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
  }

  bool SubMap::is_bijective() const noexcept {
    return is_injective() && values_.size() == codomain_.size();
  }

  bool SubMap::is_identity() const noexcept {
    return domain_ == codomain_ && values_ == domain_.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  OPMap compose(OPMap const& f, OPMap const& g) {
    check_same_degree(f, g);
    std::vector<Point> images(f.images().size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = g(f.images()[i]);
    }
    return OPMap(std::move(images));
  }

  SubMap compose(SubMap const& f, SubMap const& g) {
    if (f.codomain() != g.domain()) {
      throw CompositionError("cannot compose " + to_string(f) + " with "
                             + to_string(g));
    }
    std::vector<Point> values(f.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = g(f.values()[i]);
    }
    return SubMap(f.domain(), g.codomain(), std::move(values));
  }

  BlockMap compose(BlockMap const& f, BlockMap const& g) {
    if (f.to() != g.from()) {
      throw CompositionError("cannot compose block maps " + to_string(f)
                             + " and " + to_string(g));
    }
    std::vector<std::size_t> targets(f.targets().size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      targets[i] = g(f(i));
    }
    return BlockMap(f.from(), g.to(), std::move(targets));
  }

  Subset image(OPMap const& f) {
    std::vector<Point> img(f.images());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Subset(f.degree(), std::move(img));
  }

  OrderedPartition kernel(OPMap const& f) {
    // fibres of a monotone map are runs of equal values
    return OrderedPartition::from_labels(f.images());
  }

  bool green(OPMap const& f, OPMap const& g, GreenRelation relation) {
    check_same_degree(f, g);
    switch (relation) {
      case GreenRelation::R:
        return kernel(f) == kernel(g);
      case GreenRelation::L:
        return image(f) == image(g);
      case GreenRelation::H:
        return f == g;
      case GreenRelation::J:
        return f.rank() == g.rank();
    }
    return false;
  }

  std::vector<OPMap> enumerate_oxn(ChainSize n) {
    std::vector<OPMap> out;
    out.reserve(binomial(2 * n.value() - 1, n.value() - 1) - 1);
    for (auto& seq : monotone_sequences(n.value(), 1, n.value())) {
      OPMap f(std::move(seq));
      if (f.is_singular()) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  OPMap idempotent_for_image(Subset const& a) {
    if (!a.is_proper()) {
      throw DomainError("the image of a singular idempotent must be a proper "
                        "subset, got "
                        + to_string(a));
    }
    int const          n = a.chain_size();
    std::vector<Point> images(static_cast<std::size_t>(n));
    std::size_t        i = 0;
    for (Point x = 1; x <= n; ++x) {
      while (i + 1 < a.size() && a[i] < x) {
        ++i;
      }
      images[x - 1] = a[i];
    }
    return OPMap(std::move(images));
  }

  OPMap idempotent_for_kernel(OrderedPartition const& pi) {
    if (!pi.is_non_identity()) {
      throw DomainError("the kernel of a singular idempotent cannot be the "
                        "discrete partition");
    }
    std::vector<Point> images(static_cast<std::size_t>(pi.chain_size()));
    for (Point x = 1; x <= pi.chain_size(); ++x) {
      images[x - 1] = pi.first(pi.block_of(x));
    }
    return OPMap(std::move(images));
  }

  SubMap retraction_for_inclusion(Subset const& sub, Subset const& a) {
    if (!sub.is_subset_of(a)) {
      throw DomainError(to_string(sub) + " is not contained in " + to_string(a));
    }
    std::vector<Point> values;
    values.reserve(a.size());
    for (Point x : a.elements()) {
      auto it = std::upper_bound(sub.elements().begin(), sub.elements().end(), x);
      values.push_back(it == sub.elements().begin() ? sub.min() : *(it - 1));
    }
    return SubMap(a, sub, std::move(values));
  }

  OPMap separator_idempotent(Point x_i, ChainSize n) {
    if (x_i < 1 || x_i >= n.value()) {
      throw DomainError("separator point must satisfy 1 <= x < n, got "
                        + std::to_string(x_i));
    }
    std::vector<Point> images(static_cast<std::size_t>(n.value()));
    for (Point x = 1; x <= n.value(); ++x) {
      images[x - 1] = x <= x_i ? x_i : x_i + 1;
    }
    return OPMap(std::move(images));
  }

  SubMap restrict(OPMap const& f, Subset const& a) {
    std::vector<Point> values;
    values.reserve(a.size());
    for (Point x : a.elements()) {
      values.push_back(f(x));
    }
    std::vector<Point> img(values);
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return SubMap(a, Subset(a.chain_size(), std::move(img)), std::move(values));
  }

  SubMap restrict(OPMap const& f, Subset const& a, Subset const& codomain) {
    if (f.degree() != a.chain_size()) {
      throw DimensionError("restriction to a subset of a different chain");
    }
    std::vector<Point> values;
    values.reserve(a.size());
    for (Point x : a.elements()) {
      values.push_back(f(x));
    }
    return SubMap(a, codomain, std::move(values));
  }

  ////////////////////////////////////////////////////////////////////////
  // Literals
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(OPMap const& f) {
    return join(f.images(), '[', ']');
  }

  std::string to_string(OrderedPartition const& pi) {
    return join(pi.block_sizes(), '(', ')');
  }

  std::string to_string(Subset const& a) {
    return join(a.elements(), '{', '}');
  }

  std::string to_string(SubMap const& f) {
    return to_string(f.domain()) + " -> " + to_string(f.codomain()) + ": "
           + join(f.values(), '[', ']');
  }

  std::string to_string(BlockMap const& eta) {
    std::vector<int> one_based;
    for (std::size_t t : eta.targets()) {
      one_based.push_back(static_cast<int>(t) + 1);
    }
    return join(one_based, '[', ']');
  }

  std::string to_string(GreenRelation relation) {
    switch (relation) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::H:
        return "H";
      case GreenRelation::J:
        return "J";
    }
    return "?";
  }

  std::vector<int> parse_int_list(std::string_view text, char open, char close) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact += c;
      }
    }
    if (compact.size() < 2 || compact.front() != open || compact.back() != close) {
      throw ParseError("expected a list of the form " + std::string(1, open)
                       + "a,b,..." + std::string(1, close) + ", got '"
                       + std::string(text) + "'");
    }
    std::vector<int> out;
    std::string_view body(compact.data() + 1, compact.size() - 2);
    if (body.empty()) {
      return out;
    }
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      auto token = body.substr(pos, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - pos);
      int  value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError("bad integer '" + std::string(token) + "' in '"
                         + std::string(text) + "'");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
    return out;
  }

  OPMap parse_opmap(std::string_view text) {
    return OPMap(parse_int_list(text, '[', ']'));
  }

  OrderedPartition parse_partition(std::string_view text) {
    auto sizes = parse_int_list(text, '(', ')');
    int  n     = 0;
    for (int k : sizes) {
      n += k;
    }
    return OrderedPartition(n, std::move(sizes));
  }

  Subset parse_subset(int n, std::string_view text) {
    return Subset(n, parse_int_list(text, '{', '}'));
  }

  GreenRelation parse_green_relation(std::string_view text) {
    if (text == "R") {
      return GreenRelation::R;
    } else if (text == "L") {
      return GreenRelation::L;
    } else if (text == "H") {
      return GreenRelation::H;
    } else if (text == "J") {
      return GreenRelation::J;
    }
    throw ParseError("unknown Green's relation '" + std::string(text) + "'");
  }

}  // namespace oxn
