#include "asdc/characters.hpp"

namespace asdc {

DirichletChar DirichletChar::principal(long modulus) {
  if (modulus < 1) throw std::invalid_argument("character modulus must be positive");
  return {modulus, CharKind::Principal};
}

DirichletChar DirichletChar::jacobi(long m, long modulus) {
  CharKind k;
  switch (m) {
    case 3: k = CharKind::Jacobi3; break;
    case 5: k = CharKind::Jacobi5; break;
    case 7: k = CharKind::Jacobi7; break;
    case 13: k = CharKind::Jacobi13; break;
    default: throw std::invalid_argument("unsupported quadratic symbol modulus " + std::to_string(m));
  }
  if (modulus % m != 0) throw std::invalid_argument("conductor must divide modulus");
  return {modulus, k};
}

DirichletChar DirichletChar::kronecker_m4(long modulus) {
  if (modulus % 4 != 0) throw std::invalid_argument("conductor 4 must divide modulus");
  return {modulus, CharKind::KroneckerM4};
}

long DirichletChar::conductor() const {
  switch (kind) {
    case CharKind::Principal: return 1;
    case CharKind::Jacobi3: return 3;
    case CharKind::Jacobi5: return 5;
    case CharKind::Jacobi7: return 7;
    case CharKind::Jacobi13: return 13;
    case CharKind::KroneckerM4: return 4;
  }
  return 1;
}

DirichletChar DirichletChar::primitive_part() const { return {conductor(), kind}; }

DirichletChar DirichletChar::lifted_to(long new_modulus) const {
  if (new_modulus % conductor() != 0)
    throw std::invalid_argument("cannot lift: conductor does not divide new modulus");
  return {new_modulus, kind};
}

int jacobi_symbol(const Int& a, const Int& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int DirichletChar::operator()(const Int& n) const {
  if (modulus == 1) return 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), Int(modulus).get_mpz_t());
  if (g != 1) return 0;
  switch (kind) {
    case CharKind::Principal: return 1;
    case CharKind::Jacobi3: return jacobi_symbol(n, 3);
    case CharKind::Jacobi5: return jacobi_symbol(n, 5);
    case CharKind::Jacobi7: return jacobi_symbol(n, 7);
    case CharKind::Jacobi13: return jacobi_symbol(n, 13);
    case CharKind::KroneckerM4: {
      Int r = n % 4;
      if (r < 0) r += 4;
      return r == 1 ? 1 : -1;
    }
  }
  return 0;
}

int DirichletChar::parity() const {
  switch (kind) {
    case CharKind::Principal: return 1;
    case CharKind::Jacobi3: return -1;   // (-1/3) = -1
    case CharKind::Jacobi5: return 1;
    case CharKind::Jacobi7: return -1;
    case CharKind::Jacobi13: return 1;
    case CharKind::KroneckerM4: return -1;
  }
  return 1;
}

bool DirichletChar::same_character(const DirichletChar& other) const {
  if (modulus != other.modulus) return false;
  for (long n = 0; n < modulus; ++n)
    if ((*this)(n) != other(n)) return false;
  return true;
}

std::string DirichletChar::label() const {
  switch (kind) {
    case CharKind::Principal: return "principal";
    case CharKind::Jacobi3: return "jacobi_top/3";
    case CharKind::Jacobi5: return "jacobi_top/5";
    case CharKind::Jacobi7: return "jacobi_top/7";
    case CharKind::Jacobi13: return "jacobi_top/13";
    case CharKind::KroneckerM4: return "kronecker_-4";
  }
  return "principal";
}

DirichletChar DirichletChar::from_label(const std::string& label, long modulus) {
  if (label == "principal") return principal(modulus);
  if (label == "jacobi_top/3") return jacobi(3, modulus);
  if (label == "jacobi_top/5") return jacobi(5, modulus);
  if (label == "jacobi_top/7") return jacobi(7, modulus);
  if (label == "jacobi_top/13") return jacobi(13, modulus);
  if (label == "kronecker_-4") return kronecker_m4(modulus);
  throw std::invalid_argument("unknown character label: " + label);
}

}  // namespace asdc
