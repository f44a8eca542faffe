#pragma once

namespace hulthen {

/// Rising factorial x(x+1)...(x+n-1); 1 for n = 0.
double pochhammer(double x, int n);

/// Terminating Gauss series 2F1(-n, b; c; x) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) x^k.
/// Exact finite sum, ascending k with compensated summation.
/// Throws pole_error if c is 0, -1, ..., -(n-1) (a series denominator vanishes).
double hyp2f1_terminating(int n, double b, double c, double x);

/// Jacobi polynomial P_n^{(alpha,beta)}(x) for real alpha, beta > -1,
/// evaluated through the terminating hypergeometric connection
/// P_n^{(alpha,beta)}(x) = (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
/// Throws std::invalid_argument outside the parameter domain.
double jacobi_p(int n, double alpha, double beta, double x);

} // namespace hulthen
