#include "tqf/algebra4.hpp"

#include <stdexcept>

namespace tqf {

namespace {

std::array<Scalar, 16> zero16(const Ring& r) {
  const Scalar z = Scalar::zero(r);
  return {z, z, z, z, z, z, z, z, z, z, z, z, z, z, z, z};
}

}  // namespace

Mat4::Mat4(const Ring& r) : ring_(r), m_(zero16(r)) {}

Mat4 Mat4::identity(const Ring& r) {
  Mat4 m(r);
  for (int i = 0; i < 4; ++i) m.at(i, i) = Scalar::one(r);
  return m;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r(ring_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar s = Scalar::zero(ring_);
      for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

Scalar Mat4::det() const {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(4);
  for (int i = 0; i < 4; ++i) {
    std::vector<Scalar> row;
    row.reserve(4);
    for (int j = 0; j < 4; ++j) row.push_back(at(i, j));
    rows.push_back(std::move(row));
  }
  return det_matrix(std::move(rows));
}

Mat4 Mat4::inverse() const {
  const Scalar d = det();
  if (!d.is_unit()) throw std::domain_error("Mat4::inverse: determinant is not a unit");
  const Scalar dinv = d.invert();
  Mat4 r(ring_);
  // adjugate via signed 3x3 cofactors
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::array<Scalar, 9> sub = {Scalar::zero(ring_), Scalar::zero(ring_), Scalar::zero(ring_),
                                   Scalar::zero(ring_), Scalar::zero(ring_), Scalar::zero(ring_),
                                   Scalar::zero(ring_), Scalar::zero(ring_), Scalar::zero(ring_)};
      int r2 = 0;
      for (int a = 0; a < 4; ++a) {
        if (a == j) continue;  // delete row j, column i -> adj = cof^T
        int c2 = 0;
        for (int b = 0; b < 4; ++b) {
          if (b == i) continue;
          sub[static_cast<std::size_t>(3 * r2 + c2)] = at(a, b);
          ++c2;
        }
        ++r2;
      }
      Scalar cof = Mat3::from_rows(sub).det();
      if ((i + j) % 2) cof = -cof;
      r.at(i, j) = cof * dinv;
    }
  }
  return r;
}

Element4::Element4(const Ring& r)
    : ring_(r), c_{Scalar::zero(r), Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)} {}

Element4::Element4(Scalar c0, Scalar c1, Scalar c2, Scalar c3)
    : ring_(c0.ring()), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (std::size_t i = 1; i < 4; ++i) ensure_same_ring(c_[0], c_[i]);
}

Element4 Element4::basis(const Ring& r, int i) {
  Element4 e(r);
  e[i] = Scalar::one(r);
  return e;
}

Element4 Element4::operator+(const Element4& o) const {
  return Element4(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Element4 Element4::operator-(const Element4& o) const {
  return Element4(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Element4 Element4::operator*(const Scalar& s) const {
  return Element4(c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s);
}

bool Element4::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Algebra4::Algebra4(const Ring& r) : ring_(r), c_(64, Scalar::zero(r)) {}

Algebra4 Algebra4::even_exterior(const Ring& r) {
  Algebra4 a(r);
  a.set_unital();
  return a;
}

void Algebra4::set_unital() {
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      c(0, j, k) = (j == k) ? Scalar::one(ring_) : Scalar::zero(ring_);
      c(j, 0, k) = (j == k) ? Scalar::one(ring_) : Scalar::zero(ring_);
    }
}

Element4 Algebra4::multiply(const Element4& x, const Element4& y) const {
  if (x.ring() != ring_ || y.ring() != ring_)
    throw std::invalid_argument("multiply: ring mismatch");
  Element4 r(ring_);
  for (int i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar f = x[i] * y[j];
      for (int k = 0; k < 4; ++k) {
        if (c(i, j, k).is_zero()) continue;
        r[k] += f * c(i, j, k);
      }
    }
  }
  return r;
}

Element4 Algebra4::basis_product(int i, int j) const {
  return Element4(c(i, j, 0), c(i, j, 1), c(i, j, 2), c(i, j, 3));
}

bool Algebra4::is_unital() const {
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const bool diag = (j == k);
      if (c(0, j, k).is_one() != diag || !(diag || c(0, j, k).is_zero())) return false;
      if (c(j, 0, k).is_one() != diag || !(diag || c(j, 0, k).is_zero())) return false;
    }
  return true;
}

bool Algebra4::is_associative() const {
  // (e_i e_j) e_k = e_i (e_j e_k) on the 27 non-unit triples.
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int k = 1; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
          Scalar lhs = Scalar::zero(ring_), rhs = Scalar::zero(ring_);
          for (int m = 0; m < 4; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          if (lhs != rhs) return false;
        }
      }
  return true;
}

Algebra4 Algebra4::opposite() const {
  Algebra4 r(ring_);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r.c(i, j, k) = c(j, i, k);
  return r;
}

std::vector<std::vector<Scalar>> sandwich_matrix(const Algebra4& a) {
  if (!a.is_unital() || !a.is_associative())
    throw std::invalid_argument("sandwich_matrix: algebra must be associative and unital");
  const Ring& r = a.ring();
  std::vector<std::vector<Scalar>> s(16, std::vector<Scalar>(16, Scalar::zero(r)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) {
        const Element4 xl = a.multiply(a.basis_product(i, l), Element4::basis(r, j));
        for (int k = 0; k < 4; ++k)
          s[static_cast<std::size_t>(4 * k + l)][static_cast<std::size_t>(4 * i + j)] = xl[k];
      }
  return s;
}

bool is_azumaya(const Algebra4& a) { return det_matrix(sandwich_matrix(a)).is_unit(); }

Scalar det_matrix(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_matrix: empty matrix");
  const Ring ring = m[0][0].ring();
  bool negate = false;
  if (ring.is_field()) {
    Scalar det = Scalar::one(ring);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) return Scalar::zero(ring);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        negate = !negate;
      }
      det *= m[col][col];
      const Scalar inv = m[col][col].invert();
      for (std::size_t row = col + 1; row < n; ++row) {
        if (m[row][col].is_zero()) continue;
        const Scalar f = m[row][col] * inv;
        for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      }
    }
    return negate ? -det : det;
  }
  // Bareiss fraction-free elimination over an integral domain.
  Scalar prev = Scalar::one(ring);
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(ring);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      negate = !negate;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Scalar v = m[row][j] * m[col][col] - m[row][col] * m[col][j];
        m[row][j] = v.exact_div(prev);
      }
      m[row][col] = Scalar::zero(ring);
    }
    prev = m[col][col];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Scalar StdInvolution::trace_of(const Element4& x) const {
  Scalar s = Scalar::zero(x.ring());
  for (int i = 0; i < 4; ++i) s += t[static_cast<std::size_t>(i)] * x[i];
  return s;
}

Element4 StdInvolution::apply(const Element4& x) const {
  Element4 r = Element4(x.ring()) - x;
  r[0] += trace_of(x);
  return r;
}

std::optional<StdInvolution> standard_involution(const Algebra4& a) {
  if (!a.is_unital() || !a.is_associative()) return std::nullopt;
  const Ring& ring = a.ring();
  StdInvolution inv{{Scalar::from_int(ring, 2), Scalar::zero(ring), Scalar::zero(ring),
                     Scalar::zero(ring)}};
  // x*sigma(x) in R.w forces, on basis elements, t_i = (e_i^2)_i and the
  // vanishing of the other epsilon-components; on sums e_i + e_j it forces
  // (e_i e_j + e_j e_i)_k = t_j d_ik + t_i d_jk.
  for (int i = 1; i < 4; ++i) inv.t[static_cast<std::size_t>(i)] = a.c(i, i, i);
  for (int i = 1; i < 4; ++i)
    for (int k = 1; k < 4; ++k) {
      const Scalar want = (k == i) ? inv.t[static_cast<std::size_t>(i)] : Scalar::zero(ring);
      if (a.c(i, i, k) != want) return std::nullopt;
    }
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      if (i == j) continue;
      for (int k = 1; k < 4; ++k) {
        Scalar want = Scalar::zero(ring);
        if (k == i) want += inv.t[static_cast<std::size_t>(j)];
        if (k == j) want += inv.t[static_cast<std::size_t>(i)];
        if (a.c(i, j, k) + a.c(j, i, k) != want) return std::nullopt;
      }
    }
  // Verify sigma is an anti-automorphism: sigma(e_i e_j) = sigma(e_j) sigma(e_i).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Element4 lhs = inv.apply(a.basis_product(i, j));
      const Element4 rhs = a.multiply(inv.apply(Element4::basis(ring, j)),
                                      inv.apply(Element4::basis(ring, i)));
      if (!(lhs == rhs)) return std::nullopt;
    }
  return inv;
}

namespace {

StdInvolution involution_or_throw(const Algebra4& a) {
  auto inv = standard_involution(a);
  if (!inv) throw std::domain_error("algebra has no standard involution");
  return *inv;
}

}  // namespace

Scalar alg_norm(const Algebra4& a, const Element4& x) {
  const StdInvolution inv = involution_or_throw(a);
  const Element4 prod = a.multiply(x, inv.apply(x));
  for (int k = 1; k < 4; ++k)
    if (!prod[k].is_zero()) throw std::domain_error("x*sigma(x) is not scalar");
  return prod[0];
}

Scalar alg_trace(const Algebra4& a, const Element4& x) {
  return involution_or_throw(a).trace_of(x);
}

std::optional<Mat4> isomorphic_bruteforce(const Algebra4& a, const Algebra4& b) {
  const Ring& field = a.ring();
  if (field != b.ring()) throw std::invalid_argument("isomorphic_bruteforce: ring mismatch");
  if (!field.is_finite())
    throw std::invalid_argument("isomorphic_bruteforce: not a finite field");
  if (a == b) return Mat4::identity(field);
  const std::uint64_t n = field.cardinality();
  std::vector<Scalar> elems;
  for (std::uint64_t i = 0; i < n; ++i) elems.push_back(finite_element(field, i));

  std::optional<Mat4> witness;
  std::array<std::uint64_t, 3> p{};
  while (!witness) {
    for_each_gl3(field, [&](const Mat3& blk) {
      Mat4 h(field);
      h.at(0, 0) = Scalar::one(field);
      for (int j = 0; j < 3; ++j) h.at(0, j + 1) = elems[p[static_cast<std::size_t>(j)]];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i + 1, j + 1) = blk.at(i, j);
      // image of basis e_i under h is column i
      std::array<Element4, 4> img = {Element4::basis(field, 0), Element4(field), Element4(field),
                                     Element4(field)};
      for (int j = 1; j < 4; ++j)
        for (int i = 0; i < 4; ++i) img[static_cast<std::size_t>(j)][i] = h.at(i, j);
      for (int i = 1; i < 4 && !witness; ++i)
        for (int j = 1; j < 4; ++j) {
          // h(e_i e_j) vs h(e_i) h(e_j)
          Element4 lhs(field);
          for (int m = 0; m < 4; ++m) {
            if (a.c(i, j, m).is_zero()) continue;
            lhs = lhs + img[static_cast<std::size_t>(m)] * a.c(i, j, m);
          }
          const Element4 rhs =
              b.multiply(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
          if (!(lhs == rhs)) goto next_candidate;
        }
      witness = h;
      return false;
    next_candidate:
      return true;
    });
    if (witness) break;
    int pos = 2;
    while (pos >= 0 && p[static_cast<std::size_t>(pos)] == n - 1) {
      p[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++p[static_cast<std::size_t>(pos)];
  }
  return witness;
}

}  // namespace tqf
