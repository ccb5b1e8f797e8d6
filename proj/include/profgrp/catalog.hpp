#pragma once

#include <optional>
#include <string>

#include "profgrp/cohomology.hpp"
#include "profgrp/coset.hpp"
#include "profgrp/gmodule.hpp"
#include "profgrp/presentation.hpp"

namespace profgrp {

/// A catalog group together with its provenance: the presentation it was
/// enumerated from (when applicable), the defining matrices of matrix-built
/// groups (the `natural` module), and the certificates checked at build time.
struct BuiltGroup {
  std::string spec;
  PermGroupPtr group;
  std::optional<Presentation> presentation;
  std::vector<Mat> natural_action;
  const Field* natural_field = nullptr;
  std::string notes;
};

/// Build a group from a spec string.  Kinds:
///   alt:n  sym:n  cyclic:n  elemab:p^d  sl2:q  psl2:q  gl2detpm1:q
///   2alt:n  carmichael:n  rel43  agl1half:p  frob:21  q8  d4
///   dp:(spec,spec)  sdp:(H-spec,module-spec,e)
/// Presentation-built kinds run coset enumeration and re-verify the relators
/// on the permutation images; every builder certifies the expected order.
BuiltGroup build_group(const std::string& spec, size_t max_cosets = 1000000);

/// Module mini-language over a built group:
///   trivial | perm | regular | heart | natural | irr:<i>
///   | dual:<spec> | tensor:<spec>,<spec> | wedge2:<spec>
GModule parse_module_spec(const std::string& spec, const BuiltGroup& g, const Field& F,
                          uint64_t seed = 0, uint64_t irr_bound = 2000);

/// Central quotient by an involution z: the action on the blocks {x, xz}.
/// Returns the quotient group and the generator images (blocks are numbered
/// by their least point, in increasing order).
std::pair<PermGroupPtr, std::vector<Perm>> central_quotient(const PermGroup& g, const Perm& z);

struct Section7Report {
  uint32_t e = 0;
  uint32_t dim_v = 0, dim_u = 0;
  uint32_t s_prime = 0;           // dim of V over its endomorphism field
  int64_t hom_wedge_u = 0;        // dim Hom_H(wedge2(V^e), U) = h2 - h1 of the product
  int64_t nu2_exact = 0;          // ceil(hom_wedge_u / dim U), h0 = 0
  int64_t nu2_lower_bound = 0;    // ceil(e(e+1) / (2 dim U))
  int64_t d_formula = 0;          // max(d(H), 2 + (e-1)/s')
  int64_t d_schur_h = 0;          // d(M(H)) = d(M(G))
  bool not_proficient = false;    // nu2_exact > 1 + d(M(G))
};

/// Quantities for the wreath-style semidirect products V^e x| H: the exact
/// nu2 of U from hom spaces over H, the generic lower bound, the generator
/// formula and the Schur data (all primes' ranks agree with H's).
/// Preconditions: char does not divide |H|, V irreducible of dim > 1 and not
/// self-dual, U an irreducible quotient of wedge2(V).
Section7Report section7_report(const BuiltGroup& h, const GModule& v, uint32_t e,
                               const GModule& u, uint64_t seed = 0);

}  // namespace profgrp
