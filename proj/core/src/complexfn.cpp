#include "nz/complexfn.hpp"

#include <cmath>
#include <numbers>

namespace nz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

// Bernoulli numbers B_0 .. B_36 (odd ones beyond B_1 vanish), enough for the
// log-series of Li_2 at double precision.
constexpr double kBernoulli[] = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
    0.0,
    -7709321041217.0 / 510.0,
    0.0,
    2577687858367.0 / 6.0,
    0.0,
    -26315271553053477373.0 / 1919190.0,
};

// log(z) with the cut convention matching li2: for real z > 0 this is the
// usual real log; arguments on the negative real axis take arg = +pi.
cplx principal_log(cplx z) { return std::log(z); }

// Series sum_{k>=0} B_k w^{k+1} / (k+1)!, which equals Li_2(1 - e^{-w});
// converges for |w| < 2 pi and fast for |w| <~ 3.
cplx li2_log_series(cplx w) {
  cplx term = w;  // w^{k+1}/(k+1)! accumulated incrementally
  cplx sum = kBernoulli[0] * term;
  for (int k = 1; k < static_cast<int>(sizeof(kBernoulli) / sizeof(double));
       ++k) {
    term *= w / static_cast<double>(k + 1);
    if (kBernoulli[k] != 0.0) {
      cplx add = kBernoulli[k] * term;
      sum += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
  }
  return sum;
}

// Direct power series, used for small |z|.
cplx li2_power_series(cplx z) {
  cplx term = z;
  cplx sum = z;
  for (int n = 2; n <= 80; ++n) {
    term *= z;
    cplx add = term / static_cast<double>(n * n);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

}  // namespace

cplx li2(cplx z) {
  // Evaluate on-cut arguments (real z > 1) as the limit from above.
  if (z.imag() == 0.0 && z.real() > 1.0) z = cplx(z.real(), 1e-300);

  if (z == cplx(0.0, 0.0)) return 0.0;
  if (z == cplx(1.0, 0.0)) return kPi2Over6;

  double az = std::abs(z);
  if (az < 0.25) return li2_power_series(z);

  if (az > 1.0) {
    // Inversion: Li_2(z) = -Li_2(1/z) - pi^2/6 - (1/2) log^2(-z).
    cplx l = principal_log(-z);
    return -li2(1.0 / z) - kPi2Over6 - 0.5 * l * l;
  }
  if (z.real() > 0.5) {
    // Reflection: Li_2(z) = pi^2/6 - log z log(1-z) - Li_2(1-z).
    return kPi2Over6 - principal_log(z) * principal_log(1.0 - z) -
           li2(1.0 - z);
  }
  // |z| <= 1, Re z <= 1/2: the log-series argument w = -log(1-z) is small.
  return li2_log_series(-principal_log(1.0 - z));
}

cplx rogers_l(cplx z) {
  if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
    throw DomainError("rogers_l: logarithmic singularity at z in {0, 1}");
  return li2(z) + 0.5 * principal_log(z) * principal_log(1.0 - z);
}

double bloch_wigner(cplx z) {
  if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
    throw DomainError("bloch_wigner: singular at z in {0, 1}");
  if (z.imag() == 0.0) return 0.0;
  return li2(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

double lobachevsky(double theta) {
  // Lob(theta) = (1/2) Im Li_2(e^{2 i theta}) = (1/2) Cl_2(2 theta).
  double t = std::remainder(theta, kPi);
  if (t == 0.0) return 0.0;
  return 0.5 * li2(std::polar(1.0, 2.0 * t)).imag();
}

namespace {

// Integrand of the Faddeev integral, e^{-i phi x} / (4 sinh(gamma x)
// sinh(pi x) x), evaluated on the shifted contour.
cplx faddeev_integrand(double gamma, cplx phi, cplx x) {
  return std::exp(cplx(0.0, -1.0) * phi * x) /
         (4.0 * std::sinh(gamma * x) * std::sinh(kPi * x) * x);
}

// Trapezoid value over [-X, X] + i delta with n panels.
cplx faddeev_trapezoid(double gamma, cplx phi, double delta, double big_x,
                       int n) {
  double h = 2.0 * big_x / n;
  cplx sum = 0.5 * (faddeev_integrand(gamma, phi, cplx(-big_x, delta)) +
                    faddeev_integrand(gamma, phi, cplx(big_x, delta)));
  for (int k = 1; k < n; ++k)
    sum += faddeev_integrand(gamma, phi, cplx(-big_x + k * h, delta));
  return sum * h;
}

// log Phi_gamma inside the strip |Im phi| < pi + gamma with a safety margin;
// this is the contour integral itself, so it carries no branch ambiguity.
cplx phi_gamma_log_strip(const QDilogParams& params, cplx phi) {
  double gamma = params.gamma;
  double delta = 0.5 * std::min(1.0, kPi / gamma);
  // The contour shift turns the e^{-i phi x} factor into decay at rate
  // pi + gamma - |Im phi|; choose the truncation so the tail is negligible.
  double rate = kPi + gamma - std::abs(phi.imag());
  double big_x = 10.0;
  for (int i = 0; i < 4; ++i)
    big_x = (std::log(10.0 / params.abs_tol) +
             std::log(1.0 + 1.0 / (rate * big_x))) /
            rate;
  big_x = std::max(big_x, 10.0);

  int n = 64;
  cplx prev = faddeev_trapezoid(gamma, phi, delta, big_x, n);
  while (2 * n <= params.max_panels) {
    n *= 2;
    cplx cur = faddeev_trapezoid(gamma, phi, delta, big_x, n);
    if (std::abs(cur - prev) <= 0.5 * params.abs_tol) return cur;
    prev = cur;
  }
  throw QuadratureFailure("phi_gamma: tolerance unreachable within max_panels");
}

}  // namespace

cplx phi_gamma(const QDilogParams& params, cplx phi) {
  if (!(params.gamma > 0.0))
    throw DomainError("phi_gamma: gamma must be positive");
  double gamma = params.gamma;

  // Reject arguments on the zero/pole lattice -+ i((2a+1) gamma + (2b+1) pi).
  if (std::abs(phi.real()) < 1e-12) {
    double y = std::abs(phi.imag());
    for (int a = 0; (2 * a + 1) * gamma <= y + 1e-9; ++a) {
      double rem = y - (2 * a + 1) * gamma;  // should be (2b+1) pi for a pole
      double k = std::round(rem / kPi);
      if (k >= 1.0 && std::fmod(k, 2.0) == 1.0 &&
          std::abs(rem - k * kPi) < 1e-9)
        throw PoleHit("phi_gamma: argument on the zero/pole lattice");
    }
  }

  // Reduce into the strip |Im phi| < pi (well inside pi + gamma) with the
  // difference equation in steps of 2 i gamma.
  cplx value_factor = 1.0;
  int guard = 0;
  while (std::abs(phi.imag()) >= kPi) {
    if (++guard > 100000)
      throw QuadratureFailure("phi_gamma: strip reduction did not terminate");
    if (phi.imag() > 0.0) {
      // Phi(phi) = Phi(phi - 2 i gamma) / (1 + e^{phi - i gamma})
      value_factor /= 1.0 + std::exp(phi - cplx(0.0, gamma));
      phi -= cplx(0.0, 2.0 * gamma);
    } else {
      // Phi(phi) = Phi(phi + 2 i gamma) (1 + e^{phi + i gamma})
      value_factor *= 1.0 + std::exp(phi + cplx(0.0, gamma));
      phi += cplx(0.0, 2.0 * gamma);
    }
  }
  return value_factor * std::exp(phi_gamma_log_strip(params, phi));
}

std::vector<double> phi_gamma_classical_err(const std::vector<double>& gammas,
                                            cplx phi) {
  std::vector<double> errs;
  errs.reserve(gammas.size());
  for (double gamma : gammas) {
    QDilogParams params;
    params.gamma = gamma;
    params.abs_tol = 1e-12;
    if (std::abs(phi.imag()) >= kPi)
      throw DomainError("phi_gamma_classical_err: phi outside |Im phi| < pi");
    cplx lhs = cplx(0.0, 2.0 * gamma) * phi_gamma_log_strip(params, phi);
    errs.push_back(std::abs(lhs - li2(-std::exp(phi))));
  }
  return errs;
}

}  // namespace nz
