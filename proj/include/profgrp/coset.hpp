#pragma once

#include <cstdint>
#include <vector>

#include "profgrp/perm.hpp"
#include "profgrp/presentation.hpp"

namespace profgrp {

enum class Strategy { hlt, felsch };

/// Result of Todd-Coxeter enumeration.  When closed, `table` is the complete
/// standardized coset table on {0..live_count-1}: row c, column 2g is c*g and
/// column 2g+1 is c*g^-1; coset 0 is the subgroup.  Standardization renumbers
/// cosets in row-major first-appearance order, so tables are reproducible.
struct CosetTable {
  enum class Status { closed, overflow };

  Status status = Status::overflow;
  size_t live_count = 0;
  size_t max_cosets_used = 0;  // cosets allocated during the run (incl. dead)
  uint32_t ngens = 0;
  std::vector<int32_t> table;  // live_count * 2*ngens when closed

  int32_t at(size_t coset, uint32_t col) const { return table[coset * 2 * ngens + col]; }
  bool closed() const { return status == Status::closed; }
};

/// Enumerate cosets of <subgroup> in the presented group.  Overflow reports
/// an inconclusive run (never "infinite").  max_cosets >= 1.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                     size_t max_cosets = 1000000, Strategy strategy = Strategy::hlt);

/// Permutation images of the generators on {0..live-1} (right coset action).
/// Requires a closed table; the images satisfy every relator.
std::vector<Perm> to_permutations(const CosetTable& t);

}  // namespace profgrp
