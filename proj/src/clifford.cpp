#include "tqf/clifford.hpp"

#include <stdexcept>
#include <vector>

namespace tqf {

StabW::StabW(Mat4 m) : m_(std::move(m)) {
  const Ring& r = m_.ring();
  if (!(m_.at(0, 0) == Scalar::one(r)) || !m_.at(1, 0).is_zero() || !m_.at(2, 0).is_zero() ||
      !m_.at(3, 0).is_zero())
    throw std::invalid_argument("StabW: map must fix w (first column (1,0,0,0))");
}

StabW StabW::identity(const Ring& r) { return StabW(Mat4::identity(r)); }

StabW StabW::block(const Mat3& b) {
  Mat4 m = Mat4::identity(b.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1) = b.at(i, j);
  return StabW(std::move(m));
}

StabW StabW::unipotent(const std::array<Scalar, 3>& t) {
  Mat4 m = Mat4::identity(t[0].ring());
  for (int j = 0; j < 3; ++j) m.at(0, j + 1) = t[static_cast<std::size_t>(j)];
  return StabW(std::move(m));
}

StabWFactors decompose(const StabW& h) {
  const Mat4& m = h.matrix();
  Mat3 b(h.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = m.at(i + 1, j + 1);
  std::array<Scalar, 3> p = {m.at(0, 1), m.at(0, 2), m.at(0, 3)};
  // h = h_l' h_s needs p' with p' B = p.
  const Mat3 binv = b.inverse();
  std::array<Scalar, 3> pp = {Scalar::zero(h.ring()), Scalar::zero(h.ring()),
                              Scalar::zero(h.ring())};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      pp[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(i)] * binv.at(i, j);
  return StabWFactors{std::move(b), std::move(p), std::move(pp)};
}

namespace {

// Unsigned minor: determinant of B with row i and column j deleted (0-based).
Scalar minor_of(const Mat3& b, int i, int j) {
  int r0 = -1, r1 = -1, c0 = -1, c1 = -1;
  for (int r = 0; r < 3; ++r) {
    if (r == i) continue;
    (r0 < 0 ? r0 : r1) = r;
  }
  for (int c = 0; c < 3; ++c) {
    if (c == j) continue;
    (c0 < 0 ? c0 : c1) = c;
  }
  return b.at(r0, c0) * b.at(r1, c1) - b.at(r0, c1) * b.at(r1, c0);
}

void set_product(Algebra4& a, int i, int j, const Scalar& w, const Scalar& e1, const Scalar& e2,
                 const Scalar& e3) {
  a.c(i, j, 0) = w;
  a.c(i, j, 1) = e1;
  a.c(i, j, 2) = e2;
  a.c(i, j, 3) = e3;
}

}  // namespace

Algebra4 upsilon(const Mat3& b) {
  const Ring& r = b.ring();
  const Scalar z = Scalar::zero(r);
  Algebra4 a(r);
  a.set_unital();
  // Minors carry no cofactor sign; the symbolic associativity identity
  // fails under the signed convention.
  const Scalar m11 = minor_of(b, 0, 0), m12 = minor_of(b, 0, 1), m13 = minor_of(b, 0, 2);
  const Scalar m21 = minor_of(b, 1, 0), m22 = minor_of(b, 1, 1), m23 = minor_of(b, 1, 2);
  const Scalar m31 = minor_of(b, 2, 0), m32 = minor_of(b, 2, 1), m33 = minor_of(b, 2, 2);
  const Scalar &b11 = b.at(0, 0), &b12 = b.at(0, 1), &b13 = b.at(0, 2);
  const Scalar &b21 = b.at(1, 0), &b22 = b.at(1, 1), &b23 = b.at(1, 2);
  const Scalar &b31 = b.at(2, 0), &b32 = b.at(2, 1), &b33 = b.at(2, 2);

  set_product(a, 1, 1, -m33, b21 - b12, z, z);
  set_product(a, 2, 2, -m11, z, b32 - b23, z);
  set_product(a, 3, 3, -m22, z, z, b13 - b31);
  set_product(a, 1, 2, -m31, -b23, -b12, -b22);
  set_product(a, 2, 3, m12, -b33, -b31, -b23);
  set_product(a, 3, 1, m23, -b31, -b11, -b12);
  set_product(a, 1, 3, m32, b13, b11, b21);
  set_product(a, 2, 1, -m13, b32, b21, b22);
  // The w-coefficient here is +M21, not -M21: the minus sign fails the
  // associativity identity and disagrees with the Clifford product, whose
  // hand expansion gives (b12 b33 - b13 b32) w + b33 e1 + b13 e2 + b32 e3.
  set_product(a, 3, 2, m21, b33, b13, b32);
  return a;
}

namespace {

// Dense element of the rank-8 Clifford algebra on the subset basis
// {1, e1, e2, e3, e1e2, e1e3, e2e3, e1e2e3}, indexed by bitmask.
using Cliff8 = std::array<Scalar, 8>;

Cliff8 cliff_zero(const Ring& r) {
  const Scalar z = Scalar::zero(r);
  return {z, z, z, z, z, z, z, z};
}

int mask_of(const std::vector<int>& word) {
  int m = 0;
  for (int g : word) m |= 1 << g;
  return m;
}

// Normal-orders a word of generator indices (0..2) with eager rewriting
// e_i e_i -> q(e_i), e_j e_i -> b_q(e_i,e_j) - e_i e_j for i < j, and
// accumulates the result.
void reduce_word(const Ring& ring, const std::array<Scalar, 3>& diag, const Mat3& bq,
                 std::vector<int> word, Scalar coeff, Cliff8& acc) {
  for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
    const int a = word[pos], b = word[pos + 1];
    if (a < b) continue;
    if (a == b) {
      std::vector<int> rest = word;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos),
                 rest.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
      reduce_word(ring, diag, bq, std::move(rest), coeff * diag[static_cast<std::size_t>(a)], acc);
      return;
    }
    // a > b: e_a e_b = b_q(e_b, e_a) - e_b e_a
    std::vector<int> dropped = word;
    dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(pos),
                  dropped.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    reduce_word(ring, diag, bq, std::move(dropped), coeff * bq.at(b, a), acc);
    std::swap(word[pos], word[pos + 1]);
    reduce_word(ring, diag, bq, std::move(word), -coeff, acc);
    return;
  }
  acc[static_cast<std::size_t>(mask_of(word))] += coeff;
}

std::vector<int> word_of_mask(int mask) {
  std::vector<int> w;
  for (int g = 0; g < 3; ++g)
    if (mask & (1 << g)) w.push_back(g);
  return w;
}

Cliff8 cliff_mul(const Ring& ring, const std::array<Scalar, 3>& diag, const Mat3& bq,
                 const Cliff8& x, const Cliff8& y) {
  Cliff8 acc = cliff_zero(ring);
  for (int mx = 0; mx < 8; ++mx) {
    if (x[static_cast<std::size_t>(mx)].is_zero()) continue;
    for (int my = 0; my < 8; ++my) {
      if (y[static_cast<std::size_t>(my)].is_zero()) continue;
      std::vector<int> word = word_of_mask(mx);
      for (int g : word_of_mask(my)) word.push_back(g);
      reduce_word(ring, diag, bq, std::move(word),
                  x[static_cast<std::size_t>(mx)] * y[static_cast<std::size_t>(my)], acc);
    }
  }
  return acc;
}

}  // namespace

Algebra4 clifford_product_oracle(const Mat3& b) {
  const Ring& ring = b.ring();
  const TernaryForm q = induced_quadratic(b);
  const std::array<Scalar, 3> diag = {q.l1(), q.l2(), q.l3()};
  const Mat3 bq = assoc_bilinear(q);

  // psi_b^-1 of the epsilon basis, written in the even sub-basis
  // {1, e1e2, e1e3, e2e3} of the rank-8 algebra.
  const int kOne = 0, kE12 = 0b011, kE13 = 0b101, kE23 = 0b110;
  std::array<Cliff8, 4> pre = {cliff_zero(ring), cliff_zero(ring), cliff_zero(ring),
                               cliff_zero(ring)};
  pre[0][kOne] = Scalar::one(ring);
  pre[1][kE12] = Scalar::one(ring);            // eps1 = e1^e2 + b12 w
  pre[1][kOne] = -b.at(0, 1);
  pre[2][kE23] = Scalar::one(ring);            // eps2 = e2^e3 + b23 w
  pre[2][kOne] = -b.at(1, 2);
  pre[3][kE13] = -Scalar::one(ring);           // eps3 = e3^e1 = -(e1^e3)
  pre[3][kOne] = b.at(0, 2);

  Algebra4 a(ring);
  a.set_unital();
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      const Cliff8 prod = cliff_mul(ring, diag, bq, pre[static_cast<std::size_t>(i)],
                                    pre[static_cast<std::size_t>(j)]);
      for (int m = 0; m < 8; ++m) {
        const bool even = m == kOne || m == kE12 || m == kE13 || m == kE23;
        if (!even && !prod[static_cast<std::size_t>(m)].is_zero())
          throw std::logic_error("clifford_product_oracle: odd component in even product");
      }
      // psi_b: e1e2 -> eps1 + b12 w, e2e3 -> eps2 + b23 w, e1e3 -> -eps3 + b13 w
      Scalar w = prod[kOne];
      w += prod[kE12] * b.at(0, 1);
      w += prod[kE23] * b.at(1, 2);
      w += prod[kE13] * b.at(0, 2);
      set_product(a, i, j, w, prod[kE12], prod[kE23], -prod[kE13]);
    }
  }
  return a;
}

std::optional<Mat3> upsilon_inverse(const Algebra4& a) {
  Mat3 b(a.ring());
  b.at(0, 0) = -a.c(3, 1, 2);
  b.at(1, 1) = -a.c(1, 2, 3);
  b.at(2, 2) = -a.c(2, 3, 1);
  b.at(0, 1) = -a.c(1, 2, 2);
  b.at(1, 0) = a.c(2, 1, 2);
  b.at(1, 2) = -a.c(1, 2, 1);
  b.at(2, 1) = a.c(2, 1, 1);
  b.at(0, 2) = a.c(3, 2, 2);
  b.at(2, 0) = -a.c(2, 3, 2);
  if (!(upsilon(b) == a)) return std::nullopt;
  return b;
}

ThetaPoint theta_point(const TernaryForm& q) {
  const Scalar z = Scalar::zero(q.ring());
  return ThetaPoint{q, {z, z, z}};
}

Algebra4 theta(const ThetaPoint& p) {
  const TernaryForm& q = p.q;
  const Ring& r = q.ring();
  const Scalar &t1 = p.t[0], &t2 = p.t[1], &t3 = p.t[2];
  const Scalar &l1 = q.l1(), &l2 = q.l2(), &l3 = q.l3();
  const Scalar &l12 = q.l12(), &l13 = q.l13(), &l23 = q.l23();
  const Scalar two = Scalar::from_int(r, 2);
  const Scalar z = Scalar::zero(r);

  Algebra4 a(r);
  a.set_unital();
  set_product(a, 1, 1, t1 * l12 - l1 * l2 - t1 * t1, l12 - two * t1, z, z);
  set_product(a, 2, 2, t2 * l23 - l2 * l3 - t2 * t2, z, l23 - two * t2, z);
  set_product(a, 3, 3, t3 * l13 - l1 * l3 - t3 * t3, z, z, l13 - two * t3);
  set_product(a, 1, 2, l2 * l13 - l2 * t3 - t1 * t2, -t2, -t1, -l2);
  set_product(a, 2, 3, l3 * l12 - l3 * t1 - t2 * t3, -l3, -t3, -t2);
  set_product(a, 3, 1, l1 * l23 - l1 * t2 - t1 * t3, -t3, -l1, -t1);
  set_product(a, 2, 1, l2 * t3 - (l12 - t1) * (l23 - t2), l23 - t2, l12 - t1, l2);
  set_product(a, 3, 2, l3 * t1 - (l13 - t3) * (l23 - t2), l3, l13 - t3, l23 - t2);
  set_product(a, 1, 3, l1 * t2 - (l12 - t1) * (l13 - t3), l13 - t3, l1, l12 - t1);
  return a;
}

Mat3 theta_to_bilinear(const ThetaPoint& p) {
  const TernaryForm& q = p.q;
  Mat3 b(q.ring());
  b.at(0, 0) = q.l1();
  b.at(0, 1) = p.t[0];
  b.at(0, 2) = q.l13() - p.t[2];
  b.at(1, 0) = q.l12() - p.t[0];
  b.at(1, 1) = q.l2();
  b.at(1, 2) = p.t[1];
  b.at(2, 0) = p.t[2];
  b.at(2, 1) = q.l23() - p.t[1];
  b.at(2, 2) = q.l3();
  return b;
}

ThetaPoint bilinear_to_theta(const Mat3& b) {
  TernaryForm q(b.at(0, 0), b.at(1, 1), b.at(2, 2),
                b.at(0, 1) + b.at(1, 0),
                b.at(0, 2) + b.at(2, 0),
                b.at(1, 2) + b.at(2, 1));
  return ThetaPoint{std::move(q), {b.at(0, 1), b.at(1, 2), b.at(2, 0)}};
}

bool opposite_involution_check(const Mat3& b) {
  if (!(upsilon(b).opposite() == upsilon(-b.transpose()))) return false;
  // Translated to (q, t) coordinates the involution reads
  // (q, t) |-> (-q, (t1 - l12, t2 - l23, t3 - l13)).
  const ThetaPoint p = bilinear_to_theta(b);
  const TernaryForm nq(-p.q.l1(), -p.q.l2(), -p.q.l3(), -p.q.l12(), -p.q.l13(), -p.q.l23());
  const ThetaPoint involuted{nq,
                             {p.t[0] - p.q.l12(), p.t[1] - p.q.l23(), p.t[2] - p.q.l13()}};
  const ThetaPoint from_matrix = bilinear_to_theta(-b.transpose());
  if (!(from_matrix.q == involuted.q) || !(from_matrix.t == involuted.t)) return false;
  return theta(involuted) == upsilon(-b.transpose());
}

Algebra4 act_stabw(const StabW& h, const Algebra4& a) {
  if (h.ring() != a.ring()) throw std::invalid_argument("act_stabw: ring mismatch");
  const Ring& r = a.ring();
  const Mat4 inv = h.matrix().inverse();
  std::array<Element4, 4> pre = {Element4(r), Element4(r), Element4(r), Element4(r)};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) pre[static_cast<std::size_t>(j)][i] = inv.at(i, j);
  Algebra4 out(r);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Element4 prod =
          a.multiply(pre[static_cast<std::size_t>(i)], pre[static_cast<std::size_t>(j)]);
      for (int k = 0; k < 4; ++k) {
        Scalar s = Scalar::zero(r);
        for (int m = 0; m < 4; ++m) s += h.matrix().at(k, m) * prod[m];
        out.c(i, j, k) = std::move(s);
      }
    }
  return out;
}

}  // namespace tqf
