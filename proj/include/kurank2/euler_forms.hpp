#pragma once

#include <string>
#include <vector>

#include "kurank2/lattice.hpp"

namespace kurank2 {

// Q(u,v) = u^T M v; row i of M holds Q(e_i, .).
struct EulerForm {
  Mat2 m;

  Wide operator()(LatticeVector u, LatticeVector v) const;
  Wide self(LatticeVector v) const { return (*this)(v, v); }
  bool degenerate() const { return m.det() == 0; }
  // Q(x,x) <= 0 on Z^2, read off the symmetrization
  bool negative_semidefinite() const;
  friend bool operator==(const EulerForm&, const EulerForm&) = default;
};

// Serre action on the lattice, as a matrix on column vectors.
struct SerreIsometry {
  Mat2 d;
  friend bool operator==(const SerreIsometry&, const SerreIsometry&) = default;
};

enum class Family { IPlus, IMinus, JPlus, JMinus, KPlus, KMinus };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct CanonicalForm {
  Family family;
  Int n;
  // columns are the canonical basis vectors written in input coordinates,
  // so canonical matrix = P^T M P
  Mat2 basis_change;
};

EulerForm family_form(Family f, Int n);
SerreIsometry family_serre(Family f);
EulerForm change_basis(const EulerForm& q, const Mat2& p);
SerreIsometry change_basis(const SerreIsometry& s, const Mat2& p);

// Q(x,y) = Q(y,Dx) for all x,y, i.e. M = D^T M^T.
bool compatible(const EulerForm& q, const SerreIsometry& s);

CanonicalForm classify_form(const EulerForm& q, const SerreIsometry& s);

int serre_order(const SerreIsometry& s);

// Primitive v (norm > 1, canonical basis) with Q(v+,v-) >= 0; sorted.
std::vector<LatticeVector> exceptional_vectors(const CanonicalForm& form);

Int n_chi(const CanonicalForm& form);

}  // namespace kurank2
