#include "hdbf/normal.hpp"

#include <cmath>
#include <limits>

#include "hdbf/errors.hpp"

namespace hdbf {

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_upper_tail(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

namespace {

double polevl(double x, const double* c) {
    // degree-7 polynomial, c[0] is the constant term
    return c[0] + x * (c[1] + x * (c[2] + x * (c[3] + x * (c[4] + x * (c[5] + x * (c[6] + x * c[7]))))));
}

constexpr double kA[8] = {3.3871328727963666080e0,  1.3314166789178437745e2,
                          1.9715909503065514427e3,  1.3731693765509461125e4,
                          4.5921953931549871457e4,  6.7265770927008700853e4,
                          3.3430575583588128105e4,  2.5090809287301226727e3};
constexpr double kB[8] = {1.0,                      4.2313330701600911252e1,
                          6.8718700749205790830e2,  5.3941960214247511077e3,
                          2.1213794301586595867e4,  3.9307895800092710610e4,
                          2.8729085735721942674e4,  5.2264952788528545610e3};
constexpr double kC[8] = {1.42343711074968357734e0, 4.63033784615654529590e0,
                          5.76949722146069140550e0, 3.64784832476320460504e0,
                          1.27045825245236838258e0, 2.41780725177450611770e-1,
                          2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double kD[8] = {1.0,                      2.05319162663775882187e0,
                          1.67638483018380384940e0, 6.89767334985100004550e-1,
                          1.48103976427480074590e-1, 1.51986665636164571966e-2,
                          5.47593808499534494600e-4, 1.05075007164441684324e-9};
constexpr double kE[8] = {6.65790464350110377720e0, 5.46378491116411436990e0,
                          1.78482653991729133580e0, 2.96560571828504891230e-1,
                          2.65321895265761230930e-2, 1.24266094738807843860e-3,
                          2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kF[8] = {1.0,                      5.99832206555887937690e-1,
                          1.36929880922735805310e-1, 1.48753612908506148525e-2,
                          7.86869131145613259100e-4, 1.84631831751005468180e-5,
                          1.42151175831644588870e-7, 2.04426310338993978564e-15};

}  // namespace

double normal_quantile(double prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        if (prob == 0.0) return -std::numeric_limits<double>::infinity();
        if (prob == 1.0) return std::numeric_limits<double>::infinity();
        throw Error("normal_quantile: probability outside [0, 1]");
    }
    const double q = prob - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * polevl(r, kA) / polevl(r, kB);
    }
    double r = q < 0.0 ? prob : 1.0 - prob;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = polevl(r, kC) / polevl(r, kD);
    } else {
        r -= 5.0;
        value = polevl(r, kE) / polevl(r, kF);
    }
    return q < 0.0 ? -value : value;
}

double upper_quantile(double alpha) { return normal_quantile(1.0 - alpha); }

}  // namespace hdbf
