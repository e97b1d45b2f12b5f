"""Independent high-precision derivation of the reference values frozen in
tests/oracles/frozen.hpp. Run with `python3 tests/oracles/derive.py`; needs
mpmath only."""

from mpmath import mp, mpf, gamma, sqrt, sin, pi

mp.dps = 30


def lp_area(p):
    # Area of {|x|^p + |y|^p <= 1}: 4 * Gamma(1 + 1/p)^2 / Gamma(1 + 2/p).
    p = mpf(p)
    return 4 * gamma(1 + 1 / p) ** 2 / gamma(1 + 2 / p)


def golden_min(f, lo, hi, iters=120):
    g = (sqrt(5) - 1) / 2
    a, b = lo + (1 - g) * (hi - lo), lo + g * (hi - lo)
    fa, fb = f(a), f(b)
    for _ in range(iters):
        if fa < fb:
            hi, b, fb = b, a, fa
            a = lo + (1 - g) * (hi - lo)
            fa = f(a)
        else:
            lo, a, fa = a, b, fb
            b = lo + g * (hi - lo)
            fb = f(b)
    return min(fa, fb)


def half_ball_gap(p):
    # Largest distance from the tip diamond |x| + |y| <= 1 to L_p (p < 1).
    # By symmetry the worst point lies on the edge x + y = 1; for each edge
    # point u we minimise the distance to the curve x^p + y^p = 1 in the
    # first quadrant, then maximise over u.
    p = mpf(p)

    def dist_to_curve(u):
        q = (u, 1 - u)

        def d2(t):
            x = t
            y = (1 - x ** p) ** (1 / p)
            return (x - q[0]) ** 2 + (y - q[1]) ** 2

        best = min((d2(mpf(k) / 400), mpf(k) / 400) for k in range(0, 401))
        return sqrt(golden_min(d2, max(best[1] - mpf(1) / 400, 0), min(best[1] + mpf(1) / 400, 1)))

    grid = [mpf(k) / 200 for k in range(1, 200)]
    best = max((dist_to_curve(u), u) for u in grid)
    lo, hi = best[1] - mpf(1) / 200, best[1] + mpf(1) / 200
    return -golden_min(lambda u: -dist_to_curve(u), lo, hi, iters=60)


def closed_form(measure, p):
    p = mpf(p)
    if measure == "cihi":
        return (sqrt(2) + 1) / (sqrt(2) + mpf(3) / 2 - (mpf(1) / 2) ** (1 / p))
    if measure == "env":
        return 1 / (2 ** (1 / p) - 1)
    if measure == "maxdist":
        return 4 ** (1 - 1 / p)
    if measure == "ce":
        return gamma(1 / p) ** 2 / gamma(2 / p)
    if measure == "ci":
        return 2 ** (2 - 2 / p) * p * gamma(2 / p) / gamma(1 / p) ** 2
    raise ValueError(measure)


def main():
    out = []
    for name, p in [("0_05", "0.05"), ("third", mpf(1) / 3), ("half", "0.5"), ("one", "1"),
                    ("three_halves", "1.5"), ("two", "2")]:
        out.append(f"kLpArea_{name} = {mp.nstr(lp_area(p), 20)}")
    n = 4096
    out.append(f"kRegularPolygonArea4096 = {mp.nstr(n * sin(2 * pi / n) / 2, 20)}")
    s = half_ball_gap("0.5")
    out.append(f"kHalfBallSupDistance = {mp.nstr(s, 20)}")
    out.append(f"kHalfBallMaxdist = {mp.nstr(1 / (1 + s), 20)}")
    out.append(f"kSqrt2Minus1 = {mp.nstr(sqrt(2) - 1, 20)}")
    for m in ["cihi", "env", "maxdist", "ce", "ci"]:
        for p in ["0.3", "0.7"]:
            out.append(f"closed form {m} {p} = {mp.nstr(closed_form(m, p), 20)}")
    print("\n".join(out))


if __name__ == "__main__":
    main()
