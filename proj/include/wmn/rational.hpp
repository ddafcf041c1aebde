#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace wmn {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using SpMatQ = Eigen::SparseMatrix<Rat>;

inline Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline Int binomial(int a, int k) {
    if (k < 0 || k > a) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) { r *= (a - i); r /= (i + 1); }
    return r;
}

// Falling factorial a!/(a-k)!, the P^a_k of the degree conventions.
inline Int falling(int a, int k) {
    if (k < 0 || k > a) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= (a - i);
    return r;
}

} // namespace wmn
