#include "wdrd/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace wdrd {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  ExactMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Rational& left = (*this)(r, k);
      if (left == 0) continue;
      for (int c = 0; c < n_; ++c)
        if (other(k, c) != 0) out(r, c) += left * other(k, c);
    }
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

ExactMatrix ExactMatrix::operator*(const Rational& scalar) const {
  ExactMatrix out(*this);
  for (auto& v : out.a_) v *= scalar;
  return out;
}

int PolySequence::degree(int i) const {
  const auto& c = coefficients[static_cast<std::size_t>(i)];
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (c[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

std::string PolySequence::to_string(int i) const {
  const auto& c = coefficients[static_cast<std::size_t>(i)];
  std::ostringstream out;
  bool any = false;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const Rational& v = c[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    if (any) out << (v > 0 ? " + " : " - ");
    else if (v < 0) out << "-";
    Rational mag = v < 0 ? Rational(-v) : v;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
    any = true;
  }
  return any ? out.str() : "0";
}

}  // namespace wdrd
