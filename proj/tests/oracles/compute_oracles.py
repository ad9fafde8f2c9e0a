"""Independent high-precision reference values for the unit tests.

Uses mpmath with 40 significant digits and the unscaled dispersion relation
e^{nu_m d} = -/+ (r - 1)/(r + 1), r = eps_m nu0 / (eps_d nu_m). Nothing here
shares code with the C++ implementation. Run:

    python3 tests/oracles/compute_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40
C = mp.mpf(299792458)
HBAR = mp.mpf("1.054571817e-34")
EPS0 = mp.mpf("8.8541878128e-12")
WP = mp.mpf("14.02e15")
GAMMA = mp.mpf("6.25e13")


def drude(w, wp=WP, g=GAMMA):
    return 1 - wp**2 / (w**2 + 1j * g * w)


def root(z):
    v = mp.sqrt(z)
    if mp.re(v) < 0 or (mp.re(v) == 0 and mp.im(v) < 0):
        v = -v
    return v


def nus(k, ed, em, k0):
    return root(k * k - ed * k0**2), root(k * k - em * k0**2)


def residual(k, sign, d, ed, em, k0):
    # sign = +1 upper (antisymmetric), -1 lower (symmetric)
    n0, nm = nus(k, ed, em, k0)
    r = em * n0 / (ed * nm)
    return mp.exp(nm * d) + sign * (r - 1) / (r + 1)


def slab_root(sign, d, ed, em, k0):
    seed = k0 * root(em * ed / (em + ed))
    f = lambda k: residual(k, sign, d, ed, em, k0)

    def scaled(k):
        n0, nm = nus(k, ed, em, k0)
        r = em * n0 / (ed * nm)
        return (r + 1) + sign * (r - 1) * mp.exp(-nm * d)

    k = mp.findroot(scaled, seed, tol=mp.mpf("1e-60"), verify=False, maxsteps=200)
    assert abs(f(k)) < mp.mpf("1e-25") * abs(mp.exp(nus(k, ed, em, k0)[1] * d))
    return k


def bracket(z, k, n0, nm, A, sign, d):
    # vector potential z-bracket (x, z components); sign = +1 upper
    if z < 0:
        return (mp.exp(n0 * z), -1j * k / n0 * mp.exp(n0 * z))
    if z > d:
        e = mp.exp(-n0 * (z - d))
        return (-sign * e, -sign * 1j * k / n0 * e)
    a = mp.exp(-nm * z)
    b = mp.exp(nm * (z - d))
    return (A * (a - sign * b), A * (1j * k / nm * a + sign * 1j * k / nm * b))


def weighted_norm(k, ed, em, k0, sign, d, wd, wm):
    n0, nm = nus(k, ed, em, k0)
    A = 1 / (1 - sign * mp.exp(-nm * d))

    def sq(z):
        bx, bz = bracket(z, k, n0, nm, A, sign, d)
        return bx * mp.conj(bx) + bz * mp.conj(bz)

    lo = mp.quad(sq, [-mp.inf, 0])
    mid = mp.quad(sq, [0, d / 2, d])
    hi = mp.quad(sq, [d, mp.inf])
    return wd * (lo + hi) + wm * mid


def show(label, z):
    z = mp.mpc(z)
    print(f"{label}: {mp.nstr(mp.re(z), 17)} {mp.nstr(mp.im(z), 17)}")


if __name__ == "__main__":
    w = mp.mpf("4.8e15")
    k0 = w / C
    show("eps_d(1.9726,-0.081)", (mp.mpf("1.9726") - 0.081j) ** 2)
    em = drude(w)
    show("drude(4.8e15)", em)
    ed = mp.mpf("3.89115")
    n0, _ = nus(mp.mpf("1.6e7") * mp.mpf("2.2"), ed, em, k0)
    show("nu0(k=3.52e7, eps_d=3.89115)", n0)
    show("alpha_m(4.8e15)", 2 * HBAR * w**2 * EPS0 * mp.im(em))
    d = mp.mpf("60e-9")
    for nd, kap in [("1.9726", "-0.081"), ("0.9726", "-0.08"), ("0.9726", "0")]:
        ed = (mp.mpf(nd) + 1j * mp.mpf(kap)) ** 2
        show(f"single n={nd} kappa={kap}", k0 * root(em * ed / (em + ed)))
        for sign, name in [(+1, "antisymmetric"), (-1, "symmetric")]:
            k = slab_root(sign, d, ed, em, k0)
            show(f"root {name} n={nd} kappa={kap} d=60nm", k)
    # Normalization integral (eps-weighted |bracket|^2) and beta' integral
    # for the lossy gain case n=0.9726-0.08i, symmetric mode.
    ed = (mp.mpf("0.9726") - 0.08j) ** 2
    for sign, name in [(+1, "antisymmetric"), (-1, "symmetric")]:
        k = slab_root(sign, d, ed, em, k0)
        show(f"N' integral {name}", weighted_norm(k, ed, em, k0, sign, d, ed, em))
        wd = 2 * HBAR * w**2 * EPS0 * mp.im(ed)
        wm = 2 * HBAR * w**2 * EPS0 * mp.im(em)
        show(f"beta' integral {name}", weighted_norm(k, ed, em, k0, sign, d, wd, wm))
