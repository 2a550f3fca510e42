#pragma once

#include <string>

#include "asdc/rational.hpp"

namespace asdc {

// Real Dirichlet characters: the principal character and the quadratic
// symbols appearing at the curated levels.  A character is the lift to its
// modulus of the primitive character mod its conductor.
enum class CharKind { Principal, Jacobi3, Jacobi5, Jacobi7, Jacobi13, KroneckerM4 };

struct DirichletChar {
  long modulus = 1;
  CharKind kind = CharKind::Principal;

  static DirichletChar principal(long modulus);
  // lift of (./m) for m in {3,5,7,13}; conductor m must divide the modulus
  static DirichletChar jacobi(long m, long modulus);
  // lift of (-4/.); conductor 4 must divide the modulus
  static DirichletChar kronecker_m4(long modulus);

  long conductor() const;
  bool is_principal() const { return kind == CharKind::Principal; }
  bool is_primitive() const { return modulus == conductor(); }
  DirichletChar primitive_part() const;
  DirichletChar lifted_to(long new_modulus) const;

  int operator()(const Int& n) const;  // value in {-1, 0, 1}
  int operator()(long n) const { return (*this)(Int(n)); }
  int parity() const;                  // chi(-1)

  bool same_character(const DirichletChar& other) const;  // as functions mod lcm

  std::string label() const;  // "principal", "jacobi_top/5", "kronecker_-4"
  static DirichletChar from_label(const std::string& label, long modulus);

  bool operator==(const DirichletChar& o) const { return modulus == o.modulus && kind == o.kind; }
};

// Jacobi symbol (a/n) for odd positive n.
int jacobi_symbol(const Int& a, const Int& n);

}  // namespace asdc
