#include "hulthen/specfun.hpp"

#include "hulthen/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hulthen {

double pochhammer(double x, int n)
{
    if (n < 0) throw std::invalid_argument("pochhammer needs n >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= x + k;
    return p;
}

double hyp2f1_terminating(int n, double b, double c, double x)
{
    if (n < 0) throw std::invalid_argument("hyp2f1_terminating needs n >= 0");
    for (int k = 0; k < n; ++k) {
        if (c + k == 0.0)
            throw pole_error("2F1 parameter c = " + std::to_string(c) +
                             " hits a pole at series index " + std::to_string(k));
    }
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0; // Kahan carry
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<double>(-n + k) * (b + k)) / ((c + k) * (k + 1)) * x;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double jacobi_p(int n, double alpha, double beta, double x)
{
    if (n < 0) throw std::invalid_argument("jacobi_p needs n >= 0");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("jacobi_p needs alpha, beta > -1");
    double fact = 1.0;
    for (int k = 1; k <= n; ++k) fact *= k;
    return pochhammer(alpha + 1.0, n) / fact *
           hyp2f1_terminating(n, n + alpha + beta + 1.0, alpha + 1.0, 0.5 * (1.0 - x));
}

} // namespace hulthen
