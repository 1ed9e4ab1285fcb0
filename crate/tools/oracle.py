"""Multiprecision reference values used by the Rust test suites.

Run with `python3 tools/oracle.py`; the printed literals are frozen into the
crate tests. Everything here is evaluated independently of the Rust code,
straight from the integral representations.
"""
from mpmath import mp, mpf, mpc, quad, sin, sinh, exp, pi, inf, loggamma, linspace

mp.dps = 50


def pieces(hi, n):
    return list(linspace(0, hi, n)) + [inf]


def log_e(ap, am, z):
    ap, am, z = mpf(ap), mpf(am), mpc(z)

    def f(y):
        with mp.workdps(150):
            return g(y)

    def g(y):
        t = (1 - exp(-2j * y * z)) / (sinh(ap * y) * sinh(am * y))
        t -= 2j * z / (ap * am * y)
        t -= z * z / (ap * am) * (exp(-2 * ap * y) + exp(-2 * am * y))
        return t / (4 * y)

    return quad(f, pieces(60, 121))


def log_g(ap, am, z):
    ap, am, z = mpf(ap), mpf(am), mpc(z)

    def f(y):
        with mp.workdps(150):
            return (sin(2 * y * z) / (2 * sinh(ap * y) * sinh(am * y)) - z / (ap * am * y)) / y

    return 1j * quad(f, pieces(60, 121))


def show(name, v):
    v = mpc(v)
    print(f"{name}: {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")


if __name__ == "__main__":
    show("log_e(1,1;0.5)", log_e(1, 1, 0.5))
    show("log_e(1,0.8;0.3-0.4i)", log_e(1, 0.8, mpc(0.3, -0.4)))
    show("log_e(2,0.5;-1.1+0.6i)", log_e(2, 0.5, mpc(-1.1, 0.6)))
    show("G(1,1;0.5)", exp(log_e(1, 1, 0.5) - log_e(1, 1, -0.5)))
    show("G(1,1;0.5) direct", exp(log_g(1, 1, 0.5)))
    show("G(1,0.8;0.3+0.2i)", exp(log_g(1, 0.8, mpc(0.3, 0.2))))
    show("G(2,0.5;-2.5-0.4i)", exp(log_g(2, 0.5, mpc(-2.5, -0.4))))
    show("G(1,sqrt2;1.7+0.9i)", exp(log_g(1, mp.sqrt(2), mpc(1.7, 0.9))))
    show("lngamma(3+4i)", loggamma(mpc(3, 4)))
    show("lngamma(-7.3+0.2i)", loggamma(mpc(-7.3, 0.2)))
    show("lngamma(0.1-30i)", loggamma(mpc(0.1, -30)))
    osc = quad(lambda t: exp(2j * pi * t) * exp(-abs(t)), linspace(-80, 80, 641))
    show("int exp(2 pi i z - |z|)", osc)
    # c(b;z) = G(z+ia-ib)/G(z+ia), a=(1,1), b=0.7, z=0.3; the first argument has
    # Im = 0.3 < a, the second sits on the strip edge and is brought down by
    # G(w) = 2 cosh(pi (w - i/2)) G(w - i).
    z = mpf("0.3")
    num = exp(log_g(1, 1, z + 0.3j))
    w = z + 1j
    den = 2 * mp.cosh(pi * (w - 0.5j)) * exp(log_g(1, 1, w - 1j))
    show("c(1,1;b=0.7;z=0.3)", num / den)
