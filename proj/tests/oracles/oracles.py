"""High-precision reference values frozen into the C++ tests.

Run with `python3 tests/oracles/oracles.py`; requires mpmath.
"""
from mpmath import mp, mpf, asinh, acosh, atan, sinh, cosh, coth, exp, log, pi, sqrt, findroot

mp.dps = 40

eps0 = 2 * asinh(1)


def collar_width(ell):
    return asinh(1 / sinh(ell / 2))


def flat_halfwidth(ell):
    return 2 * pi * atan(1 / sinh(ell / 2)) / ell


def boundary_length(ell):
    return ell * cosh(collar_width(ell))


def b(x):
    return 2 * pi * exp(mpf("0.502") * pi) * exp(-pi**2 / (sqrt(exp(1)) * x))


def u3(eps, R):
    return log((1 + 3 * coth(eps / 2) ** 2) * coth(R / 2) ** 2) / 2


def lower_side(x):
    return abs(-b(x) - log(2 * pi / x))


def r0_objective(ell):
    return collar_width(ell) - acosh(sinh(eps0 / 4) / sinh(ell / 2))


def rdeps_objective(ell):
    inj = asinh(sinh(ell / 2) * eps0 / ell)
    return acosh(eps0 / ell) - acosh(sinh(inj / 2) / sinh(ell / 2))


def decay(m):
    return exp(m) / (exp(m) - 1) ** 2


def estcore(ell, W):
    m = flat_halfwidth(ell)
    q = decay(m)
    e = exp(mpf("2.8"))
    return 1 + sqrt(2) * W * e * pi * q + 2 * W * q * ell + 4 * sqrt(2) * W * e * pi * ell * q**2


def G(ell, W=mpf("3.7")):
    return min(exp(mpf("2.8")), estcore(ell, W))


def Gbar(ell, W=mpf("3.7")):
    return (W * G(ell, W) * (mpf(16) / 15) ** 2) ** 2


def eq_bound(ell, W=mpf("3.7")):
    return 8 * pi**4 * Gbar(ell, W) * exp(-pi**2 / ell) / ell + 113 * pi**2 * exp(-pi**2 / (2 * ell)) / ell


def alpha_distance(ell, target):
    return collar_width(ell) - acosh(target / ell)


# R0 limit: the objective decreases toward ell -> 0.
R0 = r0_objective(mpf("1e-30"))
Rdeps = rdeps_objective(mpf("1e-6"))

values = {
    "eps0": eps0,
    "L(1)": collar_width(1),
    "L(eps0)": collar_width(eps0),
    "m(eps0)": flat_halfwidth(eps0),
    "exp(-m(eps0))": exp(-flat_halfwidth(eps0)),
    "m(1)": flat_halfwidth(1),
    "exp(-m(1))": exp(-flat_halfwidth(1)),
    "exp(-pi^2/2)": exp(-pi**2 / 2),
    "boundary_length(eps0)": boundary_length(eps0),
    "boundary_length(1)": boundary_length(1),
    "boundary_length(1e-4)": boundary_length(mpf("1e-4")),
    "inj(d=0, eps0)": asinh(sinh(eps0 / 2) * cosh(collar_width(eps0))),
    "alpha_distance(1, eps0)": alpha_distance(1, eps0),
    "b(2.5)": b(mpf("2.5")),
    "b(eps0)": b(eps0),
    "W(2.5)": lower_side(mpf("2.5")),
    "W0": lower_side(eps0),
    "W(boundary_length(eps0))": lower_side(boundary_length(eps0)),
    "R0 limit": R0,
    "Rdeps(1e-6)": Rdeps,
    "coth^2(R0/2)": coth(R0 / 2) ** 2,
    "coth^2(eps0/8)": coth(eps0 / 8) ** 2,
    "u3(eps0/4, R0)": u3(eps0 / 4, R0),
    "u3 at d_eps": u3(asinh(eps0 / 2), Rdeps),
    "G(1, 3.7)": G(1),
    "G(eps0)": G(eps0),
    "G(0.5)": G(mpf("0.5")),
    "Gbar limit": (mpf("3.7") * (mpf(16) / 15) ** 2) ** 2,
    "(16/15)^4": (mpf(16) / 15) ** 4,
    "eq_bound(1)": eq_bound(1),
    "B2 bound at eps0": 113 * pi**2 * exp(-flat_halfwidth(eps0)) / eps0,
    "mainVR(1, 1)": 113 * pi**2 * exp(-pi**2 / 2) + 142 * pi**4 * G(1) ** 2 * exp(-pi**2),
    "kra_maskit(0.5)": coth(mpf("0.25")) ** 2 / 2,
    "(1 + 4 pi^2)/2": (1 + 4 * pi**2) / 2,
    "gardiner(1)": pi / 4 + pi**3,
    "vr_asymptotic(1, 0.5)": -pi**3 / mpf("0.5") + pi**3 + (mpf("0.5") - 1) * pi / 4,
    "1/cosh(2.8)": 1 / cosh(mpf("2.8")),
    "pi^2 + 1/4": pi**2 + mpf("0.25"),
}

if __name__ == "__main__":
    for k, v in values.items():
        print(f"{k:28s} {mp.nstr(v, 17)}")
