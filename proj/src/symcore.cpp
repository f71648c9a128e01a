#include "siegel/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "siegel/errors.hpp"

namespace siegel {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in multiplication");
  return r;
}

PosDefMatrix::PosDefMatrix(const SymMatrix& a) : a_(a) {
  if (a.rows() != a.cols() || a.rows() < 1) throw DomainError("PosDefMatrix: not square");
  const double scale = a.cwiseAbs().maxCoeff();
  if (!((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(scale, 1.0))) {
    throw DomainError("PosDefMatrix: not symmetric");
  }
  a_ = 0.5 * (a + a.transpose());
  llt_.compute(a_);
  if (llt_.info() != Eigen::Success) throw DomainError("PosDefMatrix: not positive definite");
  for (int i = 0; i < a_.rows(); ++i) {
    if (!(llt_.matrixL()(i, i) > 0.0)) throw DomainError("PosDefMatrix: not positive definite");
  }
}

double PosDefMatrix::det() const {
  const auto diag = llt_.matrixLLT().diagonal();
  double d = 1.0;
  for (int i = 0; i < diag.size(); ++i) d *= diag(i) * diag(i);
  return d;
}

HalfIntegralForm::HalfIntegralForm(const IntMatrix& doubled) : doubled_(doubled) {
  if (doubled.rows() != doubled.cols()) throw DomainError("HalfIntegralForm: not square");
  if (doubled != doubled.transpose()) throw DomainError("HalfIntegralForm: not symmetric");
  for (int i = 0; i < doubled.rows(); ++i) {
    if (doubled(i, i) % 2 != 0) throw DomainError("HalfIntegralForm: odd diagonal in doubled form");
  }
}

HalfIntegralForm HalfIntegralForm::from_integral(const IntMatrix& h) {
  IntMatrix d(h.rows(), h.cols());
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) d(i, j) = checked_mul(2, h(i, j));
  return HalfIntegralForm(d);
}

HalfIntegralForm HalfIntegralForm::zero(int m) { return HalfIntegralForm(IntMatrix::Zero(m, m)); }

std::int64_t int_determinant(const IntMatrix& a) {
  // Bareiss fraction-free elimination in 128-bit
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) swap_row = i;
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;
      }
    }
    prev = m[k][k];
  }
  const __int128 det = sign * m[n - 1][n - 1];
  if (det > INT64_MAX || det < INT64_MIN) throw DomainError("int_determinant: overflow");
  return static_cast<std::int64_t>(det);
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

int HalfIntegralForm::rank() const {
  // rank over Q by elimination on exact rationals via 128-bit cross multiplication
  const int n = size();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = doubled_(i, j);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const __int128 a = m[rank][col];
      const __int128 b = m[i][col];
      __int128 g = 0;
      for (int j = 0; j < n; ++j) {
        m[i][j] = m[i][j] * a - m[rank][j] * b;
        g = gcd128(g, m[i][j]);
      }
      if (g > 1)
        for (int j = 0; j < n; ++j) m[i][j] /= g;
    }
    ++rank;
  }
  return rank;
}

std::int64_t HalfIntegralForm::det_doubled() const { return int_determinant(doubled_); }

HalfIntegralForm HalfIntegralForm::transform(const IntMatrix& a) const {
  if (a.rows() != size()) throw DomainError("HalfIntegralForm::transform: dimension mismatch");
  const int k = static_cast<int>(a.cols());
  IntMatrix out(k, k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      std::int64_t acc = 0;
      for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
          acc = checked_add(acc, checked_mul(checked_mul(a(i, p), doubled_(i, j)), a(j, q)));
      out(p, q) = acc;
    }
  }
  return HalfIntegralForm(out);
}

HalfIntegralForm HalfIntegralForm::scaled(std::int64_t k) const {
  IntMatrix out = doubled_;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = checked_mul(k, out(i, j));
  return HalfIntegralForm(out);
}

double HalfIntegralForm::trace_with(const SymMatrix& x) const {
  if (x.rows() != size()) throw DomainError("trace_with: dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) acc += 0.5 * static_cast<double>(doubled_(i, j)) * x(j, i);
  return acc;
}

bool HalfIntegralForm::operator<(const HalfIntegralForm& o) const {
  if (size() != o.size()) return size() < o.size();
  return std::lexicographical_compare(doubled_.data(), doubled_.data() + doubled_.size(), o.doubled_.data(),
                                      o.doubled_.data() + o.doubled_.size());
}

HalfIntegralForm Rank1Form::reconstruct() const {
  const int m = static_cast<int>(w.size());
  IntMatrix d(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) d(i, j) = checked_mul(checked_mul(2 * t, w(i)), w(j));
  return HalfIntegralForm(d);
}

std::int64_t Rank1Form::trace_norm() const {
  std::int64_t ww = 0;
  for (int i = 0; i < w.size(); ++i) ww = checked_add(ww, checked_mul(w(i), w(i)));
  return checked_mul(t < 0 ? -t : t, ww);
}

IntMatrix CosetRep::u() const {
  IntMatrix out(r.rows(), r.cols() + r1.cols());
  out << r, r1;
  return out;
}

double determinant(const SymMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant: not square");
  if (a.rows() == 0) return 1.0;
  return a.partialPivLu().determinant();
}

SymMatrix quadratic_transform(const SymMatrix& g, const Eigen::MatrixXd& a) {
  if (a.rows() != g.rows()) throw DomainError("quadratic_transform: dimension mismatch");
  SymMatrix out = a.transpose() * g * a;
  return 0.5 * (out + out.transpose());
}

SymMatrix quadratic_transform(const SymMatrix& g, const IntMatrix& a) {
  return quadratic_transform(g, Eigen::MatrixXd(a.cast<double>()));
}

SymMatrix jacobi_complement(const PosDefMatrix& y, const CosetRep& rep) {
  const int lam = static_cast<int>(rep.r.cols());
  if (lam >= y.size()) throw DomainError("jacobi_complement: lambda must be < m");
  const Eigen::MatrixXd r = rep.r.cast<double>();
  const Eigen::MatrixXd r1 = rep.r1.cast<double>();
  const SymMatrix yr = quadratic_transform(y.matrix(), r);
  const Eigen::MatrixXd cross = r.transpose() * y.matrix() * r1;
  Eigen::LLT<SymMatrix> llt(yr);
  if (llt.info() != Eigen::Success) throw InternalError("jacobi_complement: y[r] singular");
  SymMatrix g = quadratic_transform(y.matrix(), r1) - cross.transpose() * llt.solve(cross);
  return 0.5 * (g + g.transpose());
}

std::int64_t content(const HalfIntegralForm& h) {
  if (h.is_zero()) throw DomainError("content: zero form");
  std::int64_t g = 0;
  const auto& d = h.doubled();
  for (int i = 0; i < h.size(); ++i) {
    g = std::gcd(g, d(i, i) / 2);
    for (int j = i + 1; j < h.size(); ++j) g = std::gcd(g, d(i, j));
  }
  return g < 0 ? -g : g;
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (int i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g;
}

bool is_primitive(const IntVector& v) { return gcd_of(v) == 1; }

IntVector sign_normalize(const IntVector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return v(i) > 0 ? v : IntVector(-v);
  }
  return v;
}

namespace {

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

void fincke_pohst(const Eigen::MatrixXd& R, double B, int i, IntVector& v, double partial,
                  const std::function<void(const IntVector&, double)>& visit) {
  const int m = static_cast<int>(R.rows());
  double c = 0.0;
  for (int j = i + 1; j < m; ++j) c -= R(i, j) * static_cast<double>(v(j));
  c /= R(i, i);
  const double room = (B - partial) / (R(i, i) * R(i, i));
  if (room < 0.0) return;
  const double rad = std::sqrt(room) + 1e-9;
  const auto lo = static_cast<std::int64_t>(std::ceil(c - rad));
  const auto hi = static_cast<std::int64_t>(std::floor(c + rad));
  for (std::int64_t k = lo; k <= hi; ++k) {
    v(i) = k;
    const double diff = R(i, i) * (static_cast<double>(k) - c);
    const double next = partial + diff * diff;
    if (next > B * (1.0 + 1e-12) + 1e-12) continue;
    if (i == 0) {
      if (!v.isZero()) visit(v, next);
    } else {
      fincke_pohst(R, B, i - 1, v, next, visit);
    }
  }
  v(i) = 0;
}

}  // namespace

void for_each_lattice_point(const PosDefMatrix& y, double B,
                            const std::function<void(const IntVector&, double)>& visit) {
  const Eigen::MatrixXd R = y.llt().matrixU();
  IntVector v = IntVector::Zero(y.size());
  fincke_pohst(R, B, y.size() - 1, v, 0.0, visit);
}

std::vector<IntVector> primitive_vectors(const PosDefMatrix& y, double B) {
  std::vector<std::pair<double, IntVector>> found;
  for_each_lattice_point(y, B, [&](const IntVector& v, double) {
    if (sign_normalize(v) != v || !is_primitive(v)) return;
    const Eigen::VectorXd vd = v.cast<double>();
    found.emplace_back(vd.dot(y.matrix() * vd), v);
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  std::vector<IntVector> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::vector<IntVector> primitive_vectors(int m, double B) {
  if (m < 1) throw DomainError("primitive_vectors: m must be >= 1");
  return primitive_vectors(PosDefMatrix(SymMatrix::Identity(m, m)), B);
}

std::vector<Rank1Form> rank1_enumerate(int m, double T) {
  if (!(T > 0.0)) throw DomainError("rank1_enumerate: T must be positive");
  std::vector<Rank1Form> out;
  for (const auto& w : primitive_vectors(m, T)) {
    const std::int64_t ww = w.squaredNorm();
    const auto tmax = static_cast<std::int64_t>(std::floor(T / static_cast<double>(ww) + 1e-9));
    for (std::int64_t t = 1; t <= tmax; ++t) {
      out.push_back({t, w});
      out.push_back({-t, w});
    }
  }
  std::sort(out.begin(), out.end(), [](const Rank1Form& a, const Rank1Form& b) {
    const auto ta = a.trace_norm();
    const auto tb = b.trace_norm();
    if (ta != tb) return ta < tb;
    if (a.t != b.t) return a.t < b.t;
    return lex_less(a.w, b.w);
  });
  return out;
}

Rank1Form rank1_decompose(const HalfIntegralForm& h) {
  if (h.rank() != 1) throw DomainError("rank1_decompose: form is not of rank 1");
  const auto& d = h.doubled();
  int i = 0;
  while (d(i, i) == 0) ++i;
  IntVector row = d.row(i).transpose();
  IntVector w = sign_normalize(IntVector(row / gcd_of(row)));
  Rank1Form out{d(i, i) / (2 * w(i) * w(i)), w};
  if (!(out.reconstruct() == h)) throw InternalError("rank1_decompose: reconstruction mismatch");
  return out;
}

CosetRep complete_to_unimodular(const IntMatrix& r) {
  const int m = static_cast<int>(r.rows());
  const int lam = static_cast<int>(r.cols());
  if (lam == m) {
    if (std::llabs(int_determinant(r)) != 1) throw DomainError("complete_to_unimodular: not unimodular");
    return {r, IntMatrix(m, 0)};
  }
  if (lam != 1) throw DomainError("complete_to_unimodular: only columns or square blocks supported");
  IntVector v = r.col(0);
  if (gcd_of(v) != 1) throw DomainError("complete_to_unimodular: column not primitive");
  // row operations V with V r = e1; W accumulates V^{-1}
  IntMatrix W = IntMatrix::Identity(m, m);
  for (int j = 1; j < m; ++j) {
    const std::int64_t x = v(0);
    const std::int64_t y = v(j);
    if (y == 0) continue;
    // extended gcd
    std::int64_t old_r = x, rr = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (rr != 0) {
      const std::int64_t q = old_r / rr;
      std::int64_t tmp = old_r - q * rr;
      old_r = rr;
      rr = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    std::int64_t g = old_r, p = old_s, q = old_t;
    if (g < 0) {
      g = -g;
      p = -p;
      q = -q;
    }
    // M = [[p, q], [-y/g, x/g]], inverse [[x/g, -q], [y/g, p]]
    const std::int64_t a = x / g, b = y / g;
    v(0) = g;
    v(j) = 0;
    for (int k = 0; k < m; ++k) {
      const std::int64_t wi = W(k, 0), wj = W(k, j);
      W(k, 0) = checked_add(checked_mul(wi, a), checked_mul(wj, b));
      W(k, j) = checked_add(checked_mul(wi, -q), checked_mul(wj, p));
    }
  }
  if (v(0) == -1) W.col(0) = -W.col(0);
  if (W.col(0) != r.col(0)) throw InternalError("complete_to_unimodular: completion mismatch");
  return {r, W.rightCols(m - 1)};
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

Eigen::MatrixXd parse_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<double> vals;
    std::stringstream es(row);
    std::string item;
    while (std::getline(es, item, ',')) {
      item = trim(item);
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &pos);
      } catch (const std::exception&) {
        throw DomainError("matrix parse: bad entry '" + item + "'");
      }
      if (pos != item.size()) throw DomainError("matrix parse: bad entry '" + item + "'");
      vals.push_back(v);
    }
    rows.push_back(vals);
  }
  const auto n = rows.size();
  if (n == 0) throw DomainError("matrix parse: empty");
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("matrix parse: not square");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

}  // namespace

SymMatrix parse_matrix(const std::string& text) {
  const Eigen::MatrixXd a = parse_rows(text);
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw DomainError("matrix parse: not symmetric");
  return a;
}

HalfIntegralForm parse_half_integral(const std::string& text) {
  const bool doubled = text.rfind("2h:", 0) == 0;
  const Eigen::MatrixXd a = parse_rows(doubled ? text.substr(3) : text);
  const Eigen::MatrixXd d = doubled ? a : Eigen::MatrixXd(2.0 * a);
  IntMatrix out(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i) {
    for (int j = 0; j < d.cols(); ++j) {
      const double r = std::round(d(i, j));
      if (std::abs(r - d(i, j)) > 1e-9) throw DomainError("half-integral parse: entry not half-integral");
      out(i, j) = static_cast<std::int64_t>(r);
    }
  }
  return HalfIntegralForm(out);
}

std::string format_matrix(const Eigen::MatrixXd& a) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < a.rows(); ++i) {
    if (i) os << ';';
    for (int j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
  }
  return os.str();
}

}  // namespace siegel
