"""Independent reference values, computed with mpmath.

Run:  python3 tests/oracles/reference_values.py > tests/unit/oracle_values.hpp

Nothing here calls the C++ library. Each quantity is computed straight from
its defining sum, product or integral at 40 digits.
"""
from mpmath import mp, mpf, mpc, quad, exp, sqrt, pi, cos, sin, erfc, log, loggamma, zeta, inf, polyroots, hermite, legendre, binomial, asinh

mp.dps = 40

out = []


def emit(name, value):
    out.append(f"inline constexpr double {name} = {mp.nstr(value, 25, min_fixed=-inf, max_fixed=inf) if False else mp.nstr(value, 25)};")


def emit_arr(name, values):
    body = ", ".join(mp.nstr(v, 25) for v in values)
    out.append(f"inline constexpr double {name}[] = {{{body}}};")


# theta-like functions from the plain series
def theta0(t):
    return 1 - 4 / pi * mp.nsum(lambda k: (-1) ** k * exp(-(pi ** 2 / 4) * (2 * k + 1) ** 2 / t) / (2 * k + 1), [0, inf])


def theta1(t):
    return 1 + 2 * mp.nsum(lambda k: (-1) ** k * exp(-(pi * k) ** 2 / t), [1, inf])


theta_t = [mpf("0.1"), mpf("0.5"), 1, 3, 10, 30]
emit_arr("kThetaT", theta_t)
emit_arr("kTheta0", [theta0(t) for t in theta_t])
emit_arr("kTheta1", [theta1(t) for t in theta_t])

# special functions
def dbeta(s):
    return (zeta(s, mpf(1) / 4) - zeta(s, mpf(3) / 4)) / 4 ** s


emit("kZeta3", zeta(3))
emit("kZeta1_5", zeta(mpf("1.5")))
emit("kBeta2", dbeta(2))
emit("kBeta0_5", dbeta(mpf("0.5")))
emit("kBeta3", dbeta(3))
emit("kFourBeta2", 4 * dbeta(2))
emit("kSevenZeta3", 7 * zeta(3))
emit("kFourteenZeta3", 14 * zeta(3))

# Mellin transform of Theta_d at a complex point, by quadrature of the series
sig = mpc(1, 2)
emit("kMellinTheta0_1p2i_re", quad(lambda t: theta0(t) * t ** (sig - 1), [0, 1, 5, 20, 80, inf]).real)
emit("kMellinTheta0_1p2i_im", quad(lambda t: theta0(t) * t ** (sig - 1), [0, 1, 5, 20, 80, inf]).imag)
emit("kMellinTheta1_half", quad(lambda t: theta1(t) * t ** (mpf(1) / 2 - 1), [0, 1, 5, 20, 80, inf]))

# int t^(s-1)/cosh t and int t^(s-1)/sinh t
hd_s0 = [mpf("0.5"), mpf("1.5"), 2, mpf("3.5")]
hd_s1 = [mpf("1.5"), 2, 3, mpf("4.5")]
emit_arr("kHd0S", hd_s0)
emit_arr("kHd0", [quad(lambda t: t ** (s - 1) / mp.cosh(t), [0, 1, 10, inf]) for s in hd_s0])
emit_arr("kHd1S", hd_s1)
emit_arr("kHd1", [quad(lambda t: t ** (s - 1) / mp.sinh(t), [0, 1, 10, inf]) for s in hd_s1])

# complex log-gamma
for tag, z in (("A", mpc("0.3", 2)), ("B", mpc(5, -3)), ("C", mpc("-2.5", "0.7"))):
    lg = loggamma(z)
    emit(f"kLogGamma{tag}_re", lg.real)
    emit(f"kLogGamma{tag}_im", lg.imag)


# B-splines from the truncated power divided difference
def bspline(knots, t):
    knots = [mpf(k) for k in knots]
    N = len(knots) - 2
    total = mpf(0)
    for i, v in enumerate(knots):
        if v <= t:
            continue
        w = mpf(1)
        for j, x in enumerate(knots):
            if j != i:
                w *= v - x
        total += (v - t) ** N / w
    return (N + 1) * total


def cheb_T_zeros(m):
    # positive zeros of T_m
    return sorted(cos((2 * k - 1) * pi / (2 * m)) for k in range(1, m // 2 + 1))


emit_arr("kB2_0123", [bspline([0, 1, 2, 3], t) for t in (mpf("0.5"), mpf("1.5"), mpf("2.5"))])
emit("kCardinalCubicCenter", bspline([-2, -1, 0, 1, 2], 0))

N, u = 4, mpf(2)
xs = cheb_T_zeros(2 * N)
omega = sorted([mpf(0), u * u] + [x * x for x in xs])
ev_t = [mpf("0.05"), mpf("0.3"), mpf("0.9"), mpf("2.5")]
emit_arr("kChebT4EvalT", ev_t)
emit_arr("kChebT4B", [bspline(omega, t) for t in ev_t])
emit_arr("kChebT4Assoc", [bspline(omega, t) / t ** N for t in ev_t])


# g_N by the direct route: integral of B*_N t^(sigma-1) over the knots
def g_direct(N, d, u, s, zeros):
    omega = sorted([mpf(0), u * u] + [x * x for x in zeros])
    sigma = (s - d) / 2
    beta = 2 * N + d
    prod = mpf(1)
    for x in zeros:
        prod *= x * x

    def assoc(t):
        # the divided difference cancels badly near 0; 400 digits cover t ** N
        with mp.workdps(400):
            return +(bspline(omega, t) / t ** N)

    # B*_N is constant below the first interior knot; quad loses digits at the
    # t^(sigma-1) endpoint, so that piece is exact
    c = assoc(omega[1] / 2)
    I = c * omega[1] ** sigma / sigma + quad(lambda t: assoc(t) * t ** (sigma - 1), omega[1:])
    return u * u * beta ** (s - d) * mpf(N) ** (-1 - sigma) * prod * I


emit("kGnT8u2s05", g_direct(8, 0, mpf(2), mpf("0.5"), cheb_T_zeros(16)))
emit("kGnT8u2s25", g_direct(8, 0, mpf(2), mpf("2.5"), cheb_T_zeros(16)))


# raw contour integral for the (r, beta) probe, product over zeros
def rbeta_lhs(N, u, r, v):
    zeros = cheb_T_zeros(2 * N)
    s = mpc(r, v)

    def f(t):
        G = mpf(1)
        for x in zeros:
            G *= 1 + (t / x) ** 2
        return t ** (s - 1) / ((1 + (t / u) ** 2) * G)

    J = quad(f, [0, mpf("0.05"), mpf("0.2"), 1, 3, inf])
    return (2 * N) ** r * abs(J)


emit("kRBetaT10v1", rbeta_lhs(10, mpf(1), 2, 1))
emit("kRBetaT10v5", rbeta_lhs(10, mpf(1), 2, 5))


# Lagrange remainder u^sigma - L(u) over Omega minus {u}
def lagrange(nodes, vals, x):
    total = mpf(0)
    for i, xi in enumerate(nodes):
        w = vals[i]
        for j, xj in enumerate(nodes):
            if j != i:
                w *= (x - xj) / (xi - xj)
        total += w
    return total


def remainder(omega, k, f):
    nodes = [w for i, w in enumerate(omega) if i != k]
    return f(omega[k]) - lagrange(nodes, [f(w) for w in nodes], omega[k])


o = [mpf(0), 1, 2, 3]
emit("kRem0123u2s05", remainder(o, 2, lambda x: x ** mpf("0.25")))
emit("kRem0123u1log1", remainder(o, 1, lambda x: x * log(x) / 2 if x > 0 else mpf(0)))

# zeros of Legendre (Gegenbauer 1/2) and Hermite polynomials, largest positive zero
emit("kLegendre10MaxZero", mp.findroot(lambda x: legendre(10, x), mpf("0.97")))
emit("kHermite8MaxZero", mp.findroot(lambda x: hermite(8, x), mpf("2.93")))
emit("kHermite9MinPosZero", mp.findroot(lambda x: hermite(9, x), mpf("0.72")))

# Gaussian and cosh limits at t = 0
emit("kGaussAt0", 1 / sqrt(2 * pi))
emit("kCoshAt0", 2 / pi)

print("#pragma once")
print()
print("// Generated by tests/oracles/reference_values.py. Do not edit by hand.")
print()
print("namespace oracle {")
print()
for line in out:
    print(line)
print()
print("}  // namespace oracle")
