"""Regenerate ``oracle.json`` from mpmath at 40 digits.

The frozen file is what the test-suite reads; mpmath is only needed to
rebuild it::

    python tests/data/make_oracle.py
"""
import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40
TWO_PI_E = 2 * mp.pi * mp.e


def f(x):
    return float(x)


def theta_def(t):
    # arg Gamma(1/4 + it/2) - t ln(pi)/2 via the continuous log-Gamma
    return mp.im(mp.loggamma(mp.mpc(0.25, t / 2))) - t * mp.log(mp.pi) / 2


def main():
    out = {}
    out["log_gamma"] = [
        [f(z.real), f(z.imag), f(mp.re(mp.loggamma(z))), f(mp.im(mp.loggamma(z)))]
        for z in (mp.mpc(1, 0), mp.mpc(0.25, 0), mp.mpc(0.25, 7.0673625708673),
                  mp.mpc(0.5, 3), mp.mpc(2, -40), mp.mpc(0.25, 250), mp.mpc(0.25, 5000))
    ]
    # evaluate at the double-rounded input: W is ill-conditioned near -1/e
    xs = (mp.mpf(1), mp.mpf("1e-6"), mp.mpf(10), mp.mpf("1e12"), -1 / mp.e + mp.mpf("1e-9"), mp.mpf(-0.2))
    out["lambert_w0"] = [[f(x), f(mp.lambertw(mp.mpf(f(x))))] for x in xs]
    ts = [mp.mpf(x) for x in ("5", "10", "14.134725141734694", "17.845599449497613",
                              "20", "30", "100", "1000", "9999.5")]
    out["theta"] = [[f(t), f(theta_def(t)), f(mp.siegeltheta(t))] for t in ts]
    out["theta_approx"] = [[f(t), f(t / 2 * mp.log(t / TWO_PI_E) - mp.pi / 8)]
                           for t in (mp.mpf(100), mp.mpf("17.8456"))]
    out["theta_approx_root"] = f(mp.findroot(
        lambda t: t / 2 * mp.log(t / TWO_PI_E) - mp.pi / 8, 17.8))
    out["gram_inverse_approx"] = [[f(t), f(t * mp.log(t / TWO_PI_E) / (2 * mp.pi) + mp.mpf(7) / 8)]
                                  for t in (mp.mpf(20), mp.mpf(100))]
    zt = [mp.mpf(0), mp.mpf(5), mp.mpf(14.134725141734694), mp.mpf(17.845599540410861),
          mp.mpf(50), mp.mpf(100), mp.mpf(1000.25), mp.mpf(9000.5)]
    out["zeta_half"] = [[f(t), f(mp.re(mp.zeta(mp.mpc(0.5, t)))), f(mp.im(mp.zeta(mp.mpc(0.5, t))))]
                        for t in zt]
    grams = []
    for n in range(1, 201):
        g = mp.grampoint(n - 1)  # mpmath counts from g_0 with theta = 0
        z = mp.zeta(mp.mpc(0.5, g))
        grams.append([n, f(g), f(mp.re(z)) < 0])
    out["gram"] = grams
    out["gram_gap"] = [[n, f(abs(mp.grampoint(n - 1)
                                  - (8 * n - 7) * mp.pi / (4 * mp.lambertw(mp.mpf(8 * n - 7) / (8 * mp.e)))))]
                       for n in (1, 2, 3)]
    mp.mp.dps = 25
    out["zeros"] = [f(mp.im(mp.zetazero(n))) for n in range(1, 301)]
    path = Path(__file__).with_name("oracle.json")
    path.write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
