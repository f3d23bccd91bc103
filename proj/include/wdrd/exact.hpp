#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace wdrd {

using Rational = boost::multiprecision::cpp_rational;

/// Dense n x n matrix of exact rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  static ExactMatrix identity(int n);

  int size() const { return n_; }
  const Rational& operator()(int r, int c) const { return a_[at(r, c)]; }
  Rational& operator()(int r, int c) { return a_[at(r, c)]; }

  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix operator*(const Rational& scalar) const;
  bool operator==(const ExactMatrix& other) const = default;

 private:
  std::size_t at(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  int n_;
  std::vector<Rational> a_;
};

/// Polynomials v_0..v_d; coefficients[i][k] is the coefficient of x^k in v_i.
struct PolySequence {
  std::vector<std::vector<Rational>> coefficients;

  int count() const { return static_cast<int>(coefficients.size()); }
  /// Degree of v_i (-1 for the zero polynomial).
  int degree(int i) const;
  /// Human-readable form such as "1/2*x^2".
  std::string to_string(int i) const;
};

}  // namespace wdrd
