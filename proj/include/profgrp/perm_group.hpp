#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "profgrp/perm.hpp"

namespace profgrp {

/// Permutation group with a marked (ordered) generating tuple and a lazily
/// built deterministic base-and-strong-generating-set.  Base points are chosen
/// greedily (least moved point), orbits are explored breadth first and strong
/// generators are processed in insertion order, so orders, membership and
/// factorizations are reproducible.  After the BSGS is built the object is
/// read-only and safe to share.
class PermGroup {
 public:
  static constexpr size_t kDefaultElementLimit = 100000;

  PermGroup(std::vector<Perm> generators, uint32_t degree);
  explicit PermGroup(std::vector<Perm> generators);

  PermGroup(const PermGroup& o) : PermGroup(o.gens_, o.degree_) {}
  PermGroup& operator=(const PermGroup& o) {
    PermGroup tmp(o);
    *this = std::move(tmp);
    return *this;
  }
  PermGroup(PermGroup&&) = default;
  PermGroup& operator=(PermGroup&&) = default;

  const std::vector<Perm>& generators() const { return gens_; }
  uint32_t degree() const { return degree_; }

  uint64_t order() const;
  bool contains(const Perm& g) const;

  /// Expresses g as a product of marked generators (letters as in Word:
  /// +-(index+1)); throws if g is not in the group.
  std::vector<int32_t> factor(const Perm& g) const;

  /// All elements by breadth-first closure from the identity under right
  /// multiplication by the generators (identity first, deterministic order).
  const std::vector<Perm>& elements(size_t limit = kDefaultElementLimit) const;

  std::vector<Perm> center(size_t limit = kDefaultElementLimit) const;
  PermGroup normal_closure(const std::vector<Perm>& seeds) const;
  PermGroup derived_subgroup() const;
  bool is_perfect() const;

  struct MinGenEstimate {
    uint32_t k = 0;
    std::vector<Perm> witness;
  };
  /// Monte Carlo upper bound for the minimal number of generators: smallest k
  /// for which some random k-tuple generates (verified by order).
  MinGenEstimate estimate_min_generators(uint32_t trials, uint64_t seed,
                                         size_t limit = kDefaultElementLimit) const;

 private:
  struct Level {
    uint32_t beta = 0;
    std::vector<Perm> gens;                  // strong generators active at this level
    std::vector<std::vector<int32_t>> words; // factorizations of those in marked gens
    std::vector<uint32_t> orbit;             // discovery order
    std::vector<int32_t> where;              // point -> orbit index or -1
    std::vector<int32_t> edge_gen;           // orbit idx -> generator used to reach (-1 root)
    std::vector<uint32_t> edge_from;         // orbit idx -> predecessor point
  };

  void build() const;
  void rebuild_orbit(Level& lv) const;
  Perm transversal(const Level& lv, uint32_t point, std::vector<int32_t>* word) const;
  // Sift through levels starting at `from`; returns residue (identity if member).
  Perm sift(Perm g, size_t from, std::vector<int32_t>* word) const;

  struct Lazy {
    std::mutex mu;
    bool built = false;
    std::vector<Level> levels;
    uint64_t order = 1;
    std::vector<Perm> elements;
  };

  std::vector<Perm> gens_;
  uint32_t degree_ = 0;
  mutable std::unique_ptr<Lazy> lazy_;
};

using PermGroupPtr = std::shared_ptr<const PermGroup>;

}  // namespace profgrp
