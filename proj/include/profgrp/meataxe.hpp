#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "profgrp/gmodule.hpp"

namespace profgrp {

/// Dense polynomial over a Field, little-endian coefficients, no trailing
/// zeros (the zero polynomial is the empty vector).
using Poly = std::vector<gfel>;

Poly charpoly(const Mat& a);  // det(xI - A), monic
/// Distinct monic irreducible factors, sorted by (degree, coefficients).
std::vector<Poly> poly_factors_distinct(const Poly& f, const Field& F, uint64_t seed = 0);
Mat poly_eval_mat(const Poly& f, const Mat& a);

struct IrredResult {
  bool irreducible = false;
  Mat submodule;        // proper invariant row space when reducible
  std::string witness;  // seed/element/factor summary for reports
};

/// Norton's criterion with seeded random algebra elements (words of length
/// <= 12 in the action matrices).  Reducible verdicts come with a proper
/// submodule; irreducible verdicts carry the certifying element/factor.
IrredResult is_irreducible(const GModule& m, uint64_t seed = 0);

/// Composition factors with multiplicity (dimension-additive).
std::vector<GModule> chop(const GModule& m, uint64_t seed = 0);

/// Isomorphism test; requires at least one irreducible input (Schur's lemma
/// on hom_space after a characteristic-polynomial screen).
bool isomorphic(const GModule& m, const GModule& n, uint64_t seed = 0);

/// dim_F End_G(M); for irreducible M this is the degree of the endomorphism
/// field over F.
size_t endo_degree(const GModule& m);

/// All irreducible F G-modules up to isomorphism, from chopping the regular
/// module; deterministic order (dim, endo degree, fingerprint).
std::vector<GModule> irreducibles(PermGroupPtr g, const Field& F, uint64_t seed = 0,
                                  uint64_t order_bound = 2000);

/// Nontrivial irreducible composition factor of a transitive permutation
/// module: the sum-zero subspace, modulo the all-ones line when the
/// characteristic divides the degree.  Errors if the result is not
/// irreducible (non-2-transitive action) or not nontrivial.
GModule heart(const GModule& perm_module, uint64_t seed = 0);

}  // namespace profgrp
