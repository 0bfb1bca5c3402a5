#include "tqf/forms.hpp"

#include <stdexcept>

namespace tqf {

Vec3::Vec3(Scalar a, Scalar b, Scalar c)
    : ring_(a.ring()), v_{std::move(a), std::move(b), std::move(c)} {
  ensure_same_ring(v_[0], v_[1]);
  ensure_same_ring(v_[0], v_[2]);
}

Vec3 Vec3::zero(const Ring& r) {
  return Vec3(Scalar::zero(r), Scalar::zero(r), Scalar::zero(r));
}

Vec3 Vec3::unit(const Ring& r, int i) {
  Vec3 v = zero(r);
  v[i] = Scalar::one(r);
  return v;
}

Vec3 Vec3::operator+(const Vec3& o) const {
  return Vec3(v_[0] + o.v_[0], v_[1] + o.v_[1], v_[2] + o.v_[2]);
}

Vec3 Vec3::operator*(const Scalar& c) const {
  return Vec3(v_[0] * c, v_[1] * c, v_[2] * c);
}

Mat3::Mat3(const Ring& r)
    : ring_(r),
      m_{Scalar::zero(r), Scalar::zero(r), Scalar::zero(r),
         Scalar::zero(r), Scalar::zero(r), Scalar::zero(r),
         Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)} {}

Mat3 Mat3::identity(const Ring& r) {
  Mat3 m(r);
  for (int i = 0; i < 3; ++i) m.at(i, i) = Scalar::one(r);
  return m;
}

Mat3 Mat3::from_rows(const std::array<Scalar, 9>& entries) {
  Mat3 m(entries[0].ring());
  for (std::size_t i = 0; i < 9; ++i) {
    ensure_same_ring(entries[0], entries[i]);
    m.m_[i] = entries[i];
  }
  return m;
}

Mat3 Mat3::diagonal(Scalar a, Scalar b, Scalar c) {
  Mat3 m(a.ring());
  m.at(0, 0) = std::move(a);
  m.at(1, 1) = std::move(b);
  m.at(2, 2) = std::move(c);
  return m;
}

Mat3 Mat3::operator+(const Mat3& o) const {
  Mat3 r(ring_);
  for (std::size_t i = 0; i < 9; ++i) r.m_[i] = m_[i] + o.m_[i];
  return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
  Mat3 r(ring_);
  for (std::size_t i = 0; i < 9; ++i) r.m_[i] = m_[i] - o.m_[i];
  return r;
}

Mat3 Mat3::operator-() const {
  Mat3 r(ring_);
  for (std::size_t i = 0; i < 9; ++i) r.m_[i] = -m_[i];
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r(ring_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s = at(i, 0) * o.at(0, j);
      s += at(i, 1) * o.at(1, j);
      s += at(i, 2) * o.at(2, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

Mat3 Mat3::operator*(const Scalar& c) const {
  Mat3 r(ring_);
  for (std::size_t i = 0; i < 9; ++i) r.m_[i] = m_[i] * c;
  return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
  Vec3 r = Vec3::zero(ring_);
  for (int i = 0; i < 3; ++i) {
    Scalar s = at(i, 0) * v[0];
    s += at(i, 1) * v[1];
    s += at(i, 2) * v[2];
    r[i] = std::move(s);
  }
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r(ring_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  return r;
}

Scalar Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::adjugate() const {
  Mat3 r(ring_);
  // adj(A)_ij = cofactor_ji
  r.at(0, 0) = at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
  r.at(0, 1) = at(0, 2) * at(2, 1) - at(0, 1) * at(2, 2);
  r.at(0, 2) = at(0, 1) * at(1, 2) - at(0, 2) * at(1, 1);
  r.at(1, 0) = at(1, 2) * at(2, 0) - at(1, 0) * at(2, 2);
  r.at(1, 1) = at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
  r.at(1, 2) = at(0, 2) * at(1, 0) - at(0, 0) * at(1, 2);
  r.at(2, 0) = at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0);
  r.at(2, 1) = at(0, 1) * at(2, 0) - at(0, 0) * at(2, 1);
  r.at(2, 2) = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  return r;
}

Mat3 Mat3::inverse() const {
  const Scalar d = det();
  if (!d.is_unit()) throw std::domain_error("Mat3::inverse: determinant is not a unit");
  return adjugate() * d.invert();
}

Vec3 Mat3::column(int j) const { return Vec3(at(0, j), at(1, j), at(2, j)); }
Vec3 Mat3::row(int i) const { return Vec3(at(i, 0), at(i, 1), at(i, 2)); }

TernaryForm::TernaryForm(Scalar l1, Scalar l2, Scalar l3, Scalar l12, Scalar l13, Scalar l23)
    : ring_(l1.ring()),
      c_{std::move(l1), std::move(l2), std::move(l3),
         std::move(l12), std::move(l13), std::move(l23)} {
  for (std::size_t i = 1; i < 6; ++i) ensure_same_ring(c_[0], c_[i]);
}

TernaryForm TernaryForm::zero(const Ring& r) {
  const Scalar z = Scalar::zero(r);
  return TernaryForm(z, z, z, z, z, z);
}

TernaryForm TernaryForm::q1(const Ring& r) {
  const Scalar z = Scalar::zero(r), o = Scalar::one(r);
  return TernaryForm(z, z, o, o, z, z);
}

Scalar TernaryForm::evaluate(const Vec3& v) const {
  if (v.ring() != ring_) throw std::invalid_argument("evaluate: ring mismatch");
  Scalar s = c_[0] * v[0] * v[0];
  s += c_[1] * v[1] * v[1];
  s += c_[2] * v[2] * v[2];
  s += c_[3] * v[0] * v[1];
  s += c_[4] * v[0] * v[2];
  s += c_[5] * v[1] * v[2];
  return s;
}

bool TernaryForm::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::string TernaryForm::to_string() const {
  static const char* monos[6] = {"x1^2", "x2^2", "x3^2", "x1*x2", "x1*x3", "x2*x3"};
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string c = c_[static_cast<std::size_t>(i)].to_string();
    if (c == "1") s += monos[i];
    else if (c.find_first_of("+- ") != std::string::npos && c != "-1")
      s += "(" + c + ")*" + monos[i];
    else s += c + "*" + monos[i];
  }
  return s.empty() ? "0" : s;
}

Mat3 assoc_bilinear(const TernaryForm& q) {
  const Scalar two = Scalar::from_int(q.ring(), 2);
  Mat3 b(q.ring());
  b.at(0, 0) = two * q.l1();
  b.at(1, 1) = two * q.l2();
  b.at(2, 2) = two * q.l3();
  b.at(0, 1) = q.l12();
  b.at(1, 0) = q.l12();
  b.at(0, 2) = q.l13();
  b.at(2, 0) = q.l13();
  b.at(1, 2) = q.l23();
  b.at(2, 1) = q.l23();
  return b;
}

TernaryForm induced_quadratic(const Mat3& b) {
  return TernaryForm(b.at(0, 0), b.at(1, 1), b.at(2, 2),
                     b.at(0, 1) + b.at(1, 0),
                     b.at(0, 2) + b.at(2, 0),
                     b.at(1, 2) + b.at(2, 1));
}

Mat3 canonical_lift(const TernaryForm& q) {
  Mat3 b(q.ring());
  b.at(0, 0) = q.l1();
  b.at(1, 1) = q.l2();
  b.at(2, 2) = q.l3();
  b.at(1, 0) = q.l12();
  b.at(2, 1) = q.l23();
  b.at(0, 2) = q.l13();
  return b;
}

Scalar half_discriminant(const TernaryForm& q) {
  const Scalar four = Scalar::from_int(q.ring(), 4);
  return four * q.l1() * q.l2() * q.l3() + q.l12() * q.l13() * q.l23() -
         (q.l1() * q.l23() * q.l23() + q.l2() * q.l13() * q.l13() + q.l3() * q.l12() * q.l12());
}

bool is_semiregular(const TernaryForm& q) { return half_discriminant(q).is_unit(); }

TernaryForm act(const Mat3& g, const TernaryForm& q) {
  if (g.ring() != q.ring()) throw std::invalid_argument("act: ring mismatch");
  const Mat3 h = g.inverse();
  const Vec3 c0 = h.column(0), c1 = h.column(1), c2 = h.column(2);
  const Scalar m1 = q.evaluate(c0), m2 = q.evaluate(c1), m3 = q.evaluate(c2);
  const Scalar m12 = q.evaluate(c0 + c1) - m1 - m2;
  const Scalar m13 = q.evaluate(c0 + c2) - m1 - m3;
  const Scalar m23 = q.evaluate(c1 + c2) - m2 - m3;
  return TernaryForm(m1, m2, m3, m12, m13, m23);
}

TernaryForm scale(const Scalar& u, const TernaryForm& q) {
  if (u.ring() != q.ring()) throw std::invalid_argument("scale: ring mismatch");
  if (!u.is_unit()) throw std::domain_error("scale: multiplier is not a unit");
  return TernaryForm(u * q.l1(), u * q.l2(), u * q.l3(),
                     u * q.l12(), u * q.l13(), u * q.l23());
}

void for_each_gl3(const Ring& field, const std::function<bool(const Mat3&)>& fn) {
  if (!field.is_finite()) throw std::invalid_argument("for_each_gl3: not a finite field");
  const std::uint64_t n = field.cardinality();
  std::vector<Scalar> elems;
  elems.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) elems.push_back(finite_element(field, i));
  std::array<std::uint64_t, 9> idx{};
  Mat3 m(field);
  while (true) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = elems[idx[static_cast<std::size_t>(3 * i + j)]];
    if (m.det().is_unit() && !fn(m)) return;
    int pos = 8;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

std::optional<SimilarityWitness> similar_bruteforce(const TernaryForm& q, const TernaryForm& qp) {
  const Ring& field = q.ring();
  if (field != qp.ring()) throw std::invalid_argument("similar_bruteforce: ring mismatch");
  if (!field.is_finite()) throw std::invalid_argument("similar_bruteforce: not a finite field");
  if (q == qp) return SimilarityWitness{Mat3::identity(field), Scalar::one(field)};
  const std::uint64_t n = field.cardinality();
  std::optional<SimilarityWitness> found;
  for_each_gl3(field, [&](const Mat3& g) {
    const TernaryForm gq = act(g, q);
    for (std::uint64_t ui = 1; ui < n; ++ui) {
      const Scalar u = finite_element(field, ui);
      if (scale(u, gq) == qp) {
        found = SimilarityWitness{g, u};
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace tqf
