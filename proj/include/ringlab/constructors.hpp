#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultOrderCap = 4096;

/// Process-wide ceiling on the order of materialized rings.
std::size_t order_cap() noexcept;
void set_order_cap(std::size_t cap) noexcept;

/// Names of constructed rings are the normalized ring-spec expressions that
/// build them, e.g. "Mat(2, Zn(3))".

Ring zmod(std::size_t n);
/// q in {2, 3, 4, 5, 7, 8, 9}. Extension fields use x^2+x+1 (q=4),
/// x^3+x+1 (q=8) and x^2+1 (q=9); element index is sum c_i p^i.
Ring galois_field(std::size_t q);
/// Element (a, b) has index a*|S| + b.
Ring product(const FiniteRing& r, const FiniteRing& s);

/// Subrings of M_k(R) cut out by an entry pattern. `slot[i*k + j]` is the
/// free variable at position (i, j), or -1 for a forced zero. Variables are
/// numbered by first appearance in row-major order, and variable 0 is the
/// most significant digit of the element index.
struct MatrixPattern {
  std::size_t k = 0;
  std::vector<int> slot;
  std::size_t variables() const;
};

MatrixPattern full_pattern(std::size_t k);
MatrixPattern upper_triangular_pattern(std::size_t k);
MatrixPattern constant_diagonal_pattern(std::size_t k);
/// Wang's S_{n,m}: Toeplitz blocks of sizes n and m sharing the corner
/// diagonal entry, free entries in rows 0..n-2 / columns n..n+m-2.
MatrixPattern snm_pattern(std::size_t n, std::size_t m);
/// Block diagonal pair of Toeplitz blocks (sizes n, m) sharing the diagonal.
MatrixPattern tnm_pattern(std::size_t n, std::size_t m);
/// Upper triangular, constant diagonal; above the diagonal entry (i, i+d)
/// is b_d for even i and c_d for odd i.
MatrixPattern un_pattern(std::size_t n);

Ring pattern_ring(const FiniteRing& r, const MatrixPattern& pattern, std::string name);

Ring matrix_ring(std::size_t k, const FiniteRing& r);
Ring upper_triangular(std::size_t k, const FiniteRing& r);
Ring constant_diag_triangular(std::size_t k, const FiniteRing& r);

/// R[x]/(x^n); tuple (a_1, ..., a_n) with a_1 the constant term and most
/// significant index digit.
Ring trunc_poly(const FiniteRing& r, std::size_t n);

enum class TriangularShape { Snm, Tnm, Un };
/// For Un only `n` is used.
Ring shaped_triangular(TriangularShape kind, std::size_t n, std::size_t m, const FiniteRing& r);

/// T(R, R): (r, m)(s, n) = (rs, rn + ms); index r*|R| + m.
Ring trivial_extension(const FiniteRing& r);

struct GroupRing {
  Ring ring;
  Ring base;
  GroupTable group;
  /// Coefficient sum of each element of RG, as an element of R.
  std::vector<Elem> augmentation;
};

/// Element sum a_g g has index sum a_g |R|^(|G|-1-g).
GroupRing group_ring(const Ring& r, const GroupTable& g);
/// Kernel of the augmentation map.
Ideal augmentation_ideal(const GroupRing& rg);

/// RH for the subgroup H (sorted member list of G) with its embedding in RG.
struct GroupSubring {
  GroupRing sub;
  std::vector<Elem> embedding;
};
GroupSubring group_subring(const GroupRing& rg, const std::vector<std::size_t>& members);

/// Verified ring endomorphism.
class EndoMap {
 public:
  /// Error(not_endomorphism) unless image preserves 0, 1, + and *.
  EndoMap(const FiniteRing& r, std::vector<Elem> image, std::string name);
  static EndoMap identity(const FiniteRing& r);
  /// a -> a^p for p the characteristic; requires p prime.
  static EndoMap frobenius(const FiniteRing& r);
  /// "id" or "frob".
  static EndoMap by_name(const FiniteRing& r, std::string_view name);

  Elem operator()(Elem a) const { return image_[a]; }
  const std::string& name() const noexcept { return name_; }
  const FiniteRing* ring() const noexcept { return ring_; }

 private:
  const FiniteRing* ring_;
  std::vector<Elem> image_;
  std::string name_;
};

/// R[x; alpha]/(x^n) with x r = alpha(r) x.
Ring skew_trunc(const FiniteRing& r, const EndoMap& alpha, std::size_t n);
/// ab = 0 iff a alpha(b) = 0 for all a, b.
bool is_alpha_compatible(const FiniteRing& r, const EndoMap& alpha);

}  // namespace ringlab
