#pragma once

// Dense univariate polynomials with exact rational coefficients; just enough
// surface for three-term recursions and coefficient inspection.

#include "hamspec/combinatorics.hpp"

namespace hamspec {

class ExactPoly {
 public:
  ExactPoly() = default;  // zero polynomial, degree -1

  static ExactPoly constant(const ExactRat& a) {
    ExactPoly p;
    if (a != 0) p.c_ = {a};
    return p;
  }
  static ExactPoly x() {
    ExactPoly p;
    p.c_ = {ExactRat(0), ExactRat(1)};
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }

  ExactRat coeff(int i) const {
    if (i < 0 || i > degree()) return ExactRat(0);
    return c_[static_cast<size_t>(i)];
  }

  // Horner evaluation
  ExactRat operator()(const ExactRat& at) const {
    ExactRat acc(0);
    for (int i = degree(); i >= 0; --i) {
      acc *= at;
      acc += c_[static_cast<size_t>(i)];
    }
    return acc;
  }

  ExactPoly times_x() const {
    if (c_.empty()) return ExactPoly();
    ExactPoly r;
    r.c_.reserve(c_.size() + 1);
    r.c_.push_back(ExactRat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  ExactPoly scaled(const ExactRat& a) const {
    ExactPoly r;
    if (a == 0) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v *= a;
    return r;
  }

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), ExactRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }

  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    return a + b.scaled(ExactRat(-1));
  }

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<ExactRat> c_;  // c_[i] * x^i, trailing zeros trimmed
};

}  // namespace hamspec
