#include "levelzero/qmodz.hpp"

namespace levelzero {

namespace {
// Canonical representative of r mod 1 in [0, 1).
Rat reduce_mod1(const Rat& r) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  Rat out = r - Rat(fl);
  out.canonicalize();
  return out;
}
}  // namespace

QmodZVector::QmodZVector(RatVec coords) : c_(std::move(coords)) {
  for (Rat& r : c_) r = reduce_mod1(r);
}

QmodZVector QmodZVector::zero(int dim) {
  return QmodZVector(RatVec(static_cast<size_t>(dim)));
}

bool QmodZVector::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

Int QmodZVector::order() const {
  Int o = 1;
  for (const Rat& r : c_) o = lcm(o, r.get_den());
  return o;
}

bool QmodZVector::order_coprime_to(const std::vector<Int>& primes) const {
  Int o = order();
  for (const Int& p : primes)
    if (o % p == 0) return false;
  return true;
}

QmodZVector QmodZVector::operator+(const QmodZVector& o) const {
  RatVec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return QmodZVector(std::move(r));
}

QmodZVector QmodZVector::operator-() const {
  RatVec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return QmodZVector(std::move(r));
}

bool QmodZVector::operator<(const QmodZVector& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

QmodZVector apply(const IntMatrix& m, const QmodZVector& s) {
  RatVec r(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += Rat(m(i, j)) * s[j];
    r[static_cast<size_t>(i)] = acc;
  }
  return QmodZVector(std::move(r));
}

QmodZVector scale(const Int& r, const QmodZVector& s) {
  RatVec out(static_cast<size_t>(s.dim()));
  for (int i = 0; i < s.dim(); ++i) out[static_cast<size_t>(i)] = Rat(r) * s[i];
  return QmodZVector(std::move(out));
}

bool pairs_to_integer(const QmodZVector& s, const IntVec& y) {
  Rat acc = 0;
  for (int i = 0; i < s.dim(); ++i)
    acc += s[i] * Rat(y[static_cast<size_t>(i)]);
  return acc.get_den() == 1;
}

}  // namespace levelzero
