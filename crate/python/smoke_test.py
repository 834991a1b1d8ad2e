"""Smoke test for the quadisc_py extension.

Build and install first, e.g.

    cd crates/py && maturin develop --release
"""

import quadisc_py as qd
from quadisc_py import GaussianRational as Q, Polynomial


def check(label, got, want):
    if got != want:
        raise SystemExit(f"FAIL {label}: got {got!r}, want {want!r}")
    print(f"ok   {label}")


def main():
    a = Q("3/4-2i")
    check("parse and render", str(a), "3/4-2i")
    check("int coercion", Q(5) + 1, Q("6"))
    check("field inverse", a * (1 / a), Q(1))
    check("conjugate product", str(a * a.conj()), "73/16")
    check("ratios", (a.real, a.imag), ((3, 4), (-2, 1)))
    check("hash agrees with eq", hash(Q("2/4")) == hash(Q("1/2")), True)
    try:
        Q(1) / 0
    except ZeroDivisionError:
        print("ok   division by zero raises")
    else:
        raise SystemExit("FAIL division by zero did not raise")

    f = Polynomial("x^3 + x^2 + x + 1")
    check("degree", f.degree, 3)
    check("oracle cubic", qd.discriminant_oracle(f).value, Q(-16))
    check("closed cubic", qd.disc_cubic(1, 1, 1), Q(-16))
    check("derivative", str(f.derivative()), "3*x^2 + 2*x + 1")

    r = qd.disc_quad_k2(4, 1, 1, 1)
    check("k2 value", r.value, Q(257))
    check("k2 method", r.method, "CLOSED_FORM_K2")

    g = Polynomial("x^8 - i*x^3 + i*x + 1")
    auto = qd.discriminant(g)
    oracle = qd.discriminant_oracle(g)
    check("dispatch agrees with oracle", auto.value, oracle.value)
    check("dispatch picked a closed form", auto.method.startswith("CLOSED_FORM"), True)

    for n in range(6, 12):
        h = Polynomial(f"x^{n} + (1/2-i)*x^{n-1} + 3*x^{n-3} - 2/3")
        check(
            f"recip3 n={n}",
            qd.disc_recip_n3(n, "1/2-i", 3, "-2/3").value,
            qd.discriminant_oracle(h).value,
        )

    h = Polynomial("x^14 + 2*x^7 + (1+i)*x^2 - 5")
    check("two_n pipeline", qd.disc_2n_pipeline(7, 2, 2, "1+i", -5).value, qd.discriminant_oracle(h).value)

    check(
        "t_r closed vs recurrence",
        qd.tr_closed("1/3", "-2+i", 5, 9),
        qd.tr_recurrence("1/3", "-2+i", 5, 9),
    )
    check("resultant of linears", qd.resultant("x - 3", "x - 7"), Q(-4))

    try:
        qd.disc_quad_k2(3, 1, 1, 1)
    except ValueError:
        print("ok   precondition raises ValueError")
    else:
        raise SystemExit("FAIL precondition did not raise")

    print("all smoke checks passed")


if __name__ == "__main__":
    main()
