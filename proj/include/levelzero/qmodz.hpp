// levelzero: vectors with entries in Q/Z, stored as canonical representatives
// in [0, 1). These are the coordinates of tame dual-torus points; lattice
// endomorphisms act on them exactly, and orders are read off denominators.
#pragma once

#include <vector>

#include "levelzero/matrix.hpp"

namespace levelzero {

class QmodZVector {
 public:
  QmodZVector() = default;
  explicit QmodZVector(RatVec coords);  // reduces every entry mod 1

  static QmodZVector zero(int dim);

  int dim() const { return static_cast<int>(c_.size()); }
  const RatVec& coords() const { return c_; }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  // Least common multiple of the entry denominators: the order in (Q/Z)^n.
  Int order() const;
  // True if the order is coprime to every listed prime.
  bool order_coprime_to(const std::vector<Int>& primes) const;

  QmodZVector operator+(const QmodZVector& o) const;
  QmodZVector operator-() const;

  bool operator==(const QmodZVector& o) const { return c_ == o.c_; }
  bool operator!=(const QmodZVector& o) const { return c_ != o.c_; }
  bool operator<(const QmodZVector& o) const;  // lexicographic, exact

 private:
  RatVec c_;
};

// Matrix action m * s mod 1 (m integral, acting on the left).
QmodZVector apply(const IntMatrix& m, const QmodZVector& s);

// Scalar action r * s mod 1.
QmodZVector scale(const Int& r, const QmodZVector& s);

// Pairing <s, y> in Q/Z for an integer vector y (dot product mod 1);
// returns true when the pairing is 0 mod 1.
bool pairs_to_integer(const QmodZVector& s, const IntVec& y);

}  // namespace levelzero
