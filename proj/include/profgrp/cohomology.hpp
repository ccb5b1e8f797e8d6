#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "profgrp/gmodule.hpp"

namespace profgrp {

struct CohomReport {
  int64_t h0 = 0, h1 = 0, h2 = 0;
  uint32_t d = 0;          // size of the generating tuple used
  size_t hom_ibar = 0;     // dim Hom_G(augmentation ideal, M)
  size_t hom_rbar = 0;     // dim Hom_G(relation module, M)
  std::string method = "relation-module";
};

/// Cohomology workspace for one (group, field) pair, on the group's marked
/// generating tuple.
///
/// The engine computes H^1 and H^2 from the two exact sequences
///
///     0 -> I -> kG -> k -> 0          (augmentation)
///     0 -> R -> (kG)^d -> I -> 0      (e_i -> g_i - 1)
///
/// giving  h1 = dim Hom_G(I,M) - dim M + dim M^G  and
///         h2 = dim Hom_G(R,M) + dim Hom_G(I,M) - d dim M.
/// The second formula is the five-term exact sequence of a free presentation
/// with vanishing H^2 of the free group; the mod-p sequence defining R is
/// exact because the integral augmentation ideal is free as an abelian group,
/// so reducing the integral relation sequence mod p creates no torsion terms.
///
/// Hom dimensions are computed from free covers: a hom from a submodule
/// V <= (kG)^t generated by r_1..r_s is determined by the images u_j of the
/// r_j, subject to one M-valued linear condition per basis vector of the
/// syzygy module ker((kG)^s -> V).  This keeps every elimination at O(|G|)
/// rows/columns instead of dim(V)*dim(M) unknowns.
class GroupAlgebra {
 public:
  GroupAlgebra(PermGroupPtr g, const Field& F,
               size_t limit = PermGroup::kDefaultElementLimit);
  ~GroupAlgebra();

  PermGroupPtr group() const;
  const Field& field() const;
  size_t order() const;
  uint32_t d() const;

  /// h0/h1/h2 of a module over the same group and field (action matrices
  /// aligned with the marked generating tuple).
  CohomReport h012(const GModule& m) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Kernel of the coefficient-sum functional on the regular module, with the
/// right-multiplication action (dimension |G| - 1).
GModule augmentation_ideal(PermGroupPtr g, const Field& F,
                           size_t limit = PermGroup::kDefaultElementLimit);

/// Kernel of (kG)^d -> kG, e_i -> g_i - 1, as an explicit module of
/// dimension |G|(d-1)+1 with the diagonal right-multiplication action.
GModule relation_module(PermGroupPtr g, const Field& F,
                        size_t limit = PermGroup::kDefaultElementLimit);
/// Same, over the subgroup generated by `tuple`; errors if the tuple does not
/// generate g.
GModule relation_module(PermGroupPtr g, const std::vector<Perm>& tuple, const Field& F,
                        size_t limit = PermGroup::kDefaultElementLimit);

int64_t h1(PermGroupPtr g, const GModule& m);
int64_t h2(PermGroupPtr g, const GModule& m);

/// Independent oracles by direct linear algebra on normalized cochains.
int64_t h1_bar_oracle(const GModule& m, size_t max_order = 360);
int64_t h2_bar_oracle(const GModule& m, size_t max_order = 30);

int64_t ceil_div(int64_t a, int64_t b);
int64_t nu2_value(const CohomReport& r, uint32_t dim);
int64_t nu2(PermGroupPtr g, const GModule& m);

/// Combined dimensions of H^i(G1 x G2, M1 (x) M2) from per-factor reports.
CohomReport kunneth_combine(const CohomReport& a, const CohomReport& b);

/// dim H^2(L x| H, U) = dim Hom_H(L,U) + dim Hom_H(wedge2 L, U) for an
/// elementary abelian p-group L, p not dividing |H|, U an H-module over F_p
/// inflated to the semidirect product.
int64_t h2_semidirect_closed_form(const GModule& L, const GModule& U);

/// Rank of the Sylow p-part of the Schur multiplier: h2 - h1 on the trivial
/// F_p-module.
int64_t schur_p_rank(PermGroupPtr g, uint32_t p);
/// Minimal generator count of the Schur multiplier: max_p (h2 - h1) over
/// primes dividing |G|.
int64_t schur_min_generators(PermGroupPtr g);

std::vector<uint32_t> prime_divisors(uint64_t n);

}  // namespace profgrp
