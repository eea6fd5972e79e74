#include "albertkit/composition.hpp"

namespace albertkit {

bool real_ramified(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("real_ramified: a and b must be nonzero");
  return a < 0 && b < 0;
}

Integer count_octonion_embeddings(std::span<const bool> ramified_real_places) {
  Integer count = 1;
  for (bool ramified : ramified_real_places) {
    if (ramified) count *= 2;
  }
  return count;
}

std::vector<Quaternion<Fp>> enumerate_quaternions(const QuaternionAlgebra<Fp>& algebra) {
  const std::uint32_t p = algebra.one().modulus();
  std::vector<Quaternion<Fp>> out;
  out.reserve(static_cast<std::size_t>(p) * p * p * p);
  for (std::uint32_t i0 = 0; i0 < p; ++i0)
    for (std::uint32_t i1 = 0; i1 < p; ++i1)
      for (std::uint32_t i2 = 0; i2 < p; ++i2)
        for (std::uint32_t i3 = 0; i3 < p; ++i3)
          out.emplace_back(algebra, std::array<Fp, 4>{Fp(i0, p), Fp(i1, p), Fp(i2, p), Fp(i3, p)});
  return out;
}

bool is_split_octonion(const Fp& lambda, const QuaternionAlgebra<Fp>& algebra) {
  if (lambda.value() == 0) throw DomainError("is_split_octonion: lambda must be nonzero");
  for (const auto& q : enumerate_quaternions(algebra)) {
    if (q.norm() == lambda) return true;
  }
  return false;
}

bool is_split_octonion(const Rational& lambda, const QuaternionAlgebra<Rational>& algebra,
                       Place place) {
  if (lambda == 0) throw DomainError("is_split_octonion: lambda must be nonzero");
  switch (place) {
    case Place::global_rational:
      throw UnsupportedError("is_split_octonion: the global rational question is not decided");
    case Place::finite_field:
      throw DomainError("is_split_octonion: finite-field place needs F_p coordinates");
    case Place::real:
      break;
  }
  if (algebra.backend() == QuaternionBackend::matrix2) return true;
  // Hamilton's quaternions have positive definite norm; a split real algebra has a
  // surjective norm.
  if (real_ramified(algebra.a(), algebra.b())) return lambda > 0;
  return true;
}

}  // namespace albertkit
