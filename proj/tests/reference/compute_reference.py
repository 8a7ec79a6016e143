"""High-precision reference values for the frozen constants in the unit tests.

Independent of the C++ implementation: every quantity is summed directly in
mpmath at 30 digits. Run with `python3 compute_reference.py`.
"""
import mpmath as mp

mp.mp.dps = 30


def qint(n, q):
    return mp.fsum(q ** (2 * k) for k in range(n))


def qfact(n, q):
    return mp.fprod(qint(k, q) for k in range(1, n + 1))


def eq(x, q, terms=4000):
    s, t = mp.mpf(0), mp.mpf(1)
    for n in range(terms):
        s += t
        t = t * x / qint(n + 1, q)
        if abs(t) < mp.mpf(10) ** -50 and n > 10:
            break
    return s


def ratio(x, q):
    return eq(-x, q) / eq(x, q)


def F(x, q, even):
    r = ratio(x, q)
    return (1 - r) / (1 + r) if even else (1 + r) / (1 - r)


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


q = mp.mpf("0.9")
show("qfact(3,0.9)", qfact(3, q))
show("E_q(1,0.9)", eq(1, q))
show("E_q(-1,0.9)", eq(-1, q))
show("R(1,0.9)", ratio(1, q))
show("coherent c2 alpha=1 q=0.9", 1 / mp.sqrt(qfact(2, q) * eq(1, q)))
show("R(3.24,0.9)", ratio(mp.mpf("3.24"), q))
show("F+(3.24,0.9)", F(mp.mpf("3.24"), q, True))
show("mean_AdagA even 1.8 q0.9", mp.mpf("3.24") * F(mp.mpf("3.24"), q, True))

# lhs^2 - rhs^2 for real alpha even cat is (x/4)(F + q^2 x F^2 - x)
def gur_gap(a, q):
    x = a * a
    f = F(x, q, True)
    return (x / 4) * (f + q * q * x * f * f - x)

for a in ["1.5", "2.0", "2.2", "2.25", "2.2648", "2.28"]:
    show(f"gur_gap(a={a},q=0.9)", gur_gap(mp.mpf(a), q))

# simultaneous squeezing: even cat derived Mandel < 0 <=> F > q
def mandel_derived_even(a, q):
    x = a * a
    f = F(x, q, True)
    return x * (q * q - f * f) / f

lo, hi = mp.mpf("0.5"), mp.mpf("2.2")
for _ in range(45):
    mid = (lo + hi) / 2
    if F(mid * mid, q, True) - q < 0:
        lo = mid
    else:
        hi = mid
root = (lo + hi) / 2
show("simultaneous-squeezing lower endpoint alpha (q=0.9)", root)
show("Mandel derived at 2.1", mandel_derived_even(mp.mpf("2.1"), q))
show("odd Mandel derived a=0.05 q=1", (lambda x: x * (1 - F(x, 1, False) ** 2) / F(x, 1, False))(mp.mpf("0.0025")))
for qq in ["0.5", "0.8", "0.95"]:
    print(qq, [mp.nstr(gur_gap(mp.mpf(a), mp.mpf(qq)), 6) for a in ["0.3", "0.8", "1.0", "1.1"]])
