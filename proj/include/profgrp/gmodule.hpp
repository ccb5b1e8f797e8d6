#pragma once

#include <string>
#include <vector>

#include "profgrp/mat.hpp"
#include "profgrp/perm_group.hpp"
#include "profgrp/presentation.hpp"

namespace profgrp {

/// A finite-dimensional module for a permutation group over a finite field:
/// one invertible action matrix per marked generator, row vectors acting on
/// the right (v -> v * action[g]).  Immutable once built.
struct GModule {
  PermGroupPtr group;
  const Field* field = nullptr;
  uint32_t dim = 0;
  std::vector<Mat> action;
  std::string label;

  bool same_context(const GModule& o) const {
    return group.get() == o.group.get() && field == o.field;
  }
};

GModule trivial_module(PermGroupPtr g, const Field& f);
/// Permutation matrices on the natural points.
GModule permutation_module(PermGroupPtr g, const Field& f);
/// Permutation matrices of the right-regular action on elements(g).
GModule regular_module(PermGroupPtr g, const Field& f,
                       size_t limit = PermGroup::kDefaultElementLimit);

GModule dual(const GModule& m);
GModule tensor(const GModule& m, const GModule& n);
GModule wedge2(const GModule& m);

/// Basis of the fixed space {v : v * action[g] = v for all g}  (this is H^0).
Mat fixed_points(const GModule& m);

/// Basis of Hom_G(M, N) = {X : action_M[g] X = X action_N[g]}, one dim x dim
/// matrix per basis element.
std::vector<Mat> hom_space(const GModule& m, const GModule& n);
size_t hom_dim(const GModule& m, const GModule& n);

/// Action matrix of the word w (letters over the marked generators).
Mat action_of_word(const GModule& m, const Word& w);
/// Action of an arbitrary group element (factored through the generators).
Mat action_of_element(const GModule& m, const Perm& g);

/// True iff every relator of p acts as the identity matrix.
bool satisfies_presentation(const GModule& m, const Presentation& p);

/// Module on the row space of `basis` (must be invariant; rref'd internally).
GModule submodule_action(const GModule& m, const Mat& basis, const std::string& label = "");
/// Module on M / span(basis).
GModule quotient_action(const GModule& m, const Mat& basis, const std::string& label = "");

/// Smallest invariant subspace containing the seed rows, as an RREF basis.
Mat spin(const GModule& m, const Mat& seeds);

/// Reinterpret a prime-field module over an extension of the same
/// characteristic (prime-subfield values embed unchanged).
GModule extend_scalars(const GModule& m, const Field& f);

/// Module over `h` obtained by composing with a homomorphism h -> m.group
/// given on the marked generators of h.
GModule pullback(const GModule& m, PermGroupPtr h, const std::vector<Perm>& images);

}  // namespace profgrp
