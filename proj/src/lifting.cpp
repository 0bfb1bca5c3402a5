#include "tqf/lifting.hpp"

#include <stdexcept>

namespace tqf {

bool is_valid_similarity(const Similarity& s, const TernaryForm& q, const TernaryForm& qp) {
  if (!s.multiplier.is_unit()) return false;
  if (!s.g.det().is_unit()) return false;
  return act(s.g, q) == scale(s.multiplier.invert(), qp);
}

Mat3 perm_e12(const Ring& r) {
  Mat3 m(r);
  m.at(0, 1) = Scalar::one(r);
  m.at(1, 0) = Scalar::one(r);
  m.at(2, 2) = Scalar::one(r);
  return m;
}

Mat3 perm_e23(const Ring& r) {
  Mat3 m(r);
  m.at(0, 0) = Scalar::one(r);
  m.at(1, 2) = Scalar::one(r);
  m.at(2, 1) = Scalar::one(r);
  return m;
}

Mat3 lambda2(const Mat3& g) {
  // det(g) E12 E23 (g^-1)^t E23 E12 = adjugate(E12 E23 g^t E23 E12),
  // which needs no division and agrees with the wedge action.
  const Ring& r = g.ring();
  const Mat3 e12 = perm_e12(r), e23 = perm_e23(r);
  return (e12 * e23 * g.transpose() * e23 * e12).adjugate();
}

namespace {

Scalar bilinear_apply(const Mat3& b, const Vec3& x, const Vec3& y) {
  Scalar s = Scalar::zero(b.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (b.at(i, j).is_zero()) continue;
      s += b.at(i, j) * x[i] * y[j];
    }
  return s;
}

}  // namespace

StabW induced_iso(const Similarity& s, const TernaryForm& q, const TernaryForm& qp) {
  if (!is_valid_similarity(s, q, qp))
    throw std::invalid_argument("induced_iso: (g, l) is not a similarity for (q, q')");
  const Ring& r = q.ring();
  const Scalar linv = s.multiplier.invert();
  const Mat3 block = lambda2(s.g) * linv;
  const Mat3 bq = canonical_lift(q), bqp = canonical_lift(qp);
  Mat4 m = Mat4::identity(r);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1) = block.at(i, j);
  const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (int a = 0; a < 3; ++a) {
    const Vec3 ga = s.g.column(pairs[a][0]);
    const Vec3 gb = s.g.column(pairs[a][1]);
    m.at(0, a + 1) = linv * bilinear_apply(bqp, ga, gb) -
                     bq.at(pairs[a][0], pairs[a][1]);
  }
  return StabW(std::move(m));
}

Mat3 phi_lambda2(const StabW& h) {
  Mat3 b(h.ring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = h.matrix().at(i + 1, j + 1);
  return b;
}

namespace {

void require_iso(const StabW& h, const TernaryForm& q, const TernaryForm& qp) {
  // domain_error: the CLI reports failed verification (exit 1), not usage
  if (!(act_stabw(h, theta(theta_point(q))) == theta(theta_point(qp))))
    throw std::domain_error("section: h is not an isomorphism theta(q,0) -> theta(q',0)");
}

Mat3 conjugated_inverse_transpose(const Mat3& b) {
  const Ring& r = b.ring();
  const Mat3 e12 = perm_e12(r), e23 = perm_e23(r);
  return e23 * e12 * b.transpose().inverse() * e12 * e23;
}

}  // namespace

Similarity section_s_plus(const StabW& h, const TernaryForm& q, const TernaryForm& qp, long k) {
  require_iso(h, q, qp);
  const Mat3 b = phi_lambda2(h);
  const Scalar d = b.det();
  if (!d.is_unit()) throw std::domain_error("section_s_plus: det(phi_lambda2) is not a unit");
  const Mat3 g = conjugated_inverse_transpose(b) * d.pow(k + 1);
  Similarity s{g, d.pow(2 * k + 1)};
  if (!is_valid_similarity(s, q, qp))
    throw std::logic_error("section_s_plus: constructed pair is not a similarity");
  if (!(induced_iso(s, q, qp) == h))
    throw std::logic_error("section_s_plus: section does not induce h");
  return s;
}

std::optional<Similarity> section_s_prime(const StabW& h, const TernaryForm& q,
                                          const TernaryForm& qp) {
  // Square-root gate first: NoSquareRoot is a value and must win over the
  // invertibility errors (det(B) = 2 over Z has no root and no inverse).
  const Mat3 b = phi_lambda2(h);
  const Scalar d = b.det();
  const auto root = d.sqrt();
  if (!root) return std::nullopt;
  require_iso(h, q, qp);
  if (!d.is_unit()) throw std::domain_error("section_s_prime: det(phi_lambda2) is not a unit");
  const Mat3 g = conjugated_inverse_transpose(b) * (*root);
  Similarity s{g, Scalar::one(q.ring())};
  if (!is_valid_similarity(s, q, qp))
    throw std::logic_error("section_s_prime: constructed pair is not an isometry");
  if (!(induced_iso(s, q, qp) == h))
    throw std::logic_error("section_s_prime: section does not induce h");
  return s;
}

std::vector<StabW> all_isomorphisms(const Algebra4& a, const Algebra4& b) {
  const Ring& field = a.ring();
  if (field != b.ring()) throw std::invalid_argument("all_isomorphisms: ring mismatch");
  if (!field.is_finite())
    throw std::invalid_argument("all_isomorphisms: not a finite field");
  const std::uint64_t n = field.cardinality();
  std::vector<Scalar> elems;
  for (std::uint64_t i = 0; i < n; ++i) elems.push_back(finite_element(field, i));
  std::vector<StabW> found;
  std::array<std::uint64_t, 3> p{};
  bool done = false;
  while (!done) {
    for_each_gl3(field, [&](const Mat3& blk) {
      Mat4 h(field);
      h.at(0, 0) = Scalar::one(field);
      for (int j = 0; j < 3; ++j) h.at(0, j + 1) = elems[p[static_cast<std::size_t>(j)]];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i + 1, j + 1) = blk.at(i, j);
      std::array<Element4, 4> img = {Element4::basis(field, 0), Element4(field), Element4(field),
                                     Element4(field)};
      for (int j = 1; j < 4; ++j)
        for (int i = 0; i < 4; ++i) img[static_cast<std::size_t>(j)][i] = h.at(i, j);
      for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
          Element4 lhs(field);
          for (int m = 0; m < 4; ++m) {
            if (a.c(i, j, m).is_zero()) continue;
            lhs = lhs + img[static_cast<std::size_t>(m)] * a.c(i, j, m);
          }
          if (!(lhs == b.multiply(img[static_cast<std::size_t>(i)],
                                  img[static_cast<std::size_t>(j)])))
            return true;
        }
      found.push_back(StabW(h));
      return true;
    });
    int pos = 2;
    while (pos >= 0 && p[static_cast<std::size_t>(pos)] == n - 1) {
      p[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) done = true;
    else ++p[static_cast<std::size_t>(pos)];
  }
  return found;
}

std::vector<StabW> all_automorphisms(const Algebra4& a) { return all_isomorphisms(a, a); }

std::optional<bool> automorphism_determinant_check(const TernaryForm& q) {
  if (!q.ring().is_finite())
    throw std::invalid_argument("automorphism_determinant_check: not a finite field");
  if (!is_semiregular(q)) return std::nullopt;
  const Algebra4 a = theta(theta_point(q));
  for (const StabW& h : all_automorphisms(a))
    if (!h.det().is_one()) return false;
  return true;
}

bool kernel_check(const Similarity& s, const TernaryForm& q) {
  const StabW h = induced_iso(s, q, q);
  if (!(h == StabW::identity(q.ring()))) return true;
  const Scalar factor = s.multiplier.invert() * s.g.det();
  if (!(s.g == Mat3::identity(q.ring()) * factor)) return false;
  if (s.multiplier.is_one()) {
    const Scalar d = s.g.det();
    if (!(d * d).is_one()) return false;
  }
  return true;
}

std::optional<std::array<Scalar, 3>> twisted_unipotent_row(const Mat3& g, const ThetaPoint& p) {
  const Ring& r = g.ring();
  const Mat3 b2 = lambda2(g);
  if (!b2.det().is_unit()) throw std::domain_error("twisted_unipotent_row: singular g");
  const StabW heven = StabW::block(b2);
  const Algebra4 a1 = act_stabw(heven, theta(p));

  // g.t is the outer conjugation of the translation row: t . Lambda^2(g)^-1.
  const Mat3 b2inv = b2.inverse();
  std::array<Scalar, 3> gt = {Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      gt[static_cast<std::size_t>(j)] += p.t[static_cast<std::size_t>(i)] * b2inv.at(i, j);
  const ThetaPoint target{act(g, p.q), gt};
  const Algebra4 a2 = theta(target);

  // a1 is a specialised structure, so it is theta of a unique point; the
  // unipotent that carries it to a2 exists iff the q parts agree, and is
  // then the difference of the translation rows.
  const auto b1 = upsilon_inverse(a1);
  if (!b1) return std::nullopt;
  const ThetaPoint p1 = bilinear_to_theta(*b1);
  if (!(p1.q == target.q)) return std::nullopt;
  std::array<Scalar, 3> row = {gt[0] - p1.t[0], gt[1] - p1.t[1], gt[2] - p1.t[2]};
  if (!(act_stabw(StabW::unipotent(row), a1) == a2)) return std::nullopt;
  return row;
}

bool twisted_equivariance_check(const Mat3& g, const ThetaPoint& p) {
  return twisted_unipotent_row(g, p).has_value();
}

}  // namespace tqf
