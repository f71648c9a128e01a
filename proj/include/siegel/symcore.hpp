#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace siegel {

using SymMatrix = Eigen::MatrixXd;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// Checked int64 arithmetic; overflow raises DomainError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Symmetric matrix validated positive definite; keeps its Cholesky factor.
class PosDefMatrix {
 public:
  explicit PosDefMatrix(const SymMatrix& a);
  const SymMatrix& matrix() const { return a_; }
  const Eigen::LLT<SymMatrix>& llt() const { return llt_; }
  int size() const { return static_cast<int>(a_.rows()); }
  double det() const;
  double operator()(int i, int j) const { return a_(i, j); }

 private:
  SymMatrix a_;
  Eigen::LLT<SymMatrix> llt_;
};

/// Element of Lambda_m stored as the doubled matrix 2h (even diagonal).
class HalfIntegralForm {
 public:
  explicit HalfIntegralForm(const IntMatrix& doubled);
  /// From integer entries of h itself (off-diagonal must then be integral).
  static HalfIntegralForm from_integral(const IntMatrix& h);
  static HalfIntegralForm zero(int m);

  int size() const { return static_cast<int>(doubled_.rows()); }
  const IntMatrix& doubled() const { return doubled_; }
  SymMatrix to_real() const { return doubled_.cast<double>() / 2.0; }
  bool is_zero() const { return doubled_.isZero(); }
  int rank() const;
  /// det(2h), exact.
  std::int64_t det_doubled() const;
  /// h[a] = ta h a for integer a; result must be half-integral.
  HalfIntegralForm transform(const IntMatrix& a) const;
  HalfIntegralForm scaled(std::int64_t k) const;
  /// sigma(h x) = tr(h x).
  double trace_with(const SymMatrix& x) const;

  bool operator==(const HalfIntegralForm& o) const { return doubled_ == o.doubled_; }
  bool operator<(const HalfIntegralForm& o) const;

 private:
  IntMatrix doubled_;
};

/// h = t w tw, w primitive with first nonzero entry positive.
struct Rank1Form {
  std::int64_t t = 0;
  IntVector w;

  HalfIntegralForm reconstruct() const;
  /// |t| tw w = |trace(h)|.
  std::int64_t trace_norm() const;
};

/// u_r = (r r1) unimodular.
struct CosetRep {
  IntMatrix r;
  IntMatrix r1;
  IntMatrix u() const;
};

double determinant(const SymMatrix& a);
/// ta g a.
SymMatrix quadratic_transform(const SymMatrix& g, const IntMatrix& a);
SymMatrix quadratic_transform(const SymMatrix& g, const Eigen::MatrixXd& a);
/// g(y, u_r) = y[r1] - (y[r])^{-1}[t r y r1].
SymMatrix jacobi_complement(const PosDefMatrix& y, const CosetRep& rep);

std::int64_t content(const HalfIntegralForm& h);
std::int64_t gcd_of(const IntVector& v);
bool is_primitive(const IntVector& v);
/// Flip sign so the first nonzero entry is positive.
IntVector sign_normalize(const IntVector& v);

/// Rank-1 forms with |trace| <= T, ordered by |trace|, then t, then w lexicographically.
std::vector<Rank1Form> rank1_enumerate(int m, double T);
Rank1Form rank1_decompose(const HalfIntegralForm& h);

/// Primitive w mod +-1 with tw y w <= B (y defaults to the identity), ordered by
/// the value of tw y w then lexicographically.
std::vector<IntVector> primitive_vectors(int m, double B);
std::vector<IntVector> primitive_vectors(const PosDefMatrix& y, double B);

/// Visits every nonzero integer v with tv y v <= B (both v and -v).
void for_each_lattice_point(const PosDefMatrix& y, double B,
                            const std::function<void(const IntVector&, double)>& visit);

/// Completes a primitive column (m x 1) to a unimodular matrix (r r1); r = identity
/// block for lambda = m.
CosetRep complete_to_unimodular(const IntMatrix& r);

std::int64_t int_determinant(const IntMatrix& a);

/// "a,b;c,d" row-major.
SymMatrix parse_matrix(const std::string& text);
/// "2h:a,b;c,d" gives the doubled form; without prefix the entries are h itself.
HalfIntegralForm parse_half_integral(const std::string& text);
std::string format_matrix(const Eigen::MatrixXd& a);

}  // namespace siegel
