#!/usr/bin/env python3
"""Independent arithmetic oracle for the certificate constants.

Evaluates the closed-form certificate chains at the golden parameter
points with 30-digit precision and freezes the nearest doubles into
tests/golden/certificates.json.  The C++ implementation is compared
against these values to 12 significant digits; keep this script free
of any dependency on the C++ code.
"""

import json
import os
from mpmath import mp, mpf, cosh, sinh, exp, sqrt, pi

mp.dps = 30


def argmax(vals):
    best = 0
    for i, v in enumerate(vals):
        if v > vals[best]:
            best = i
    return best


def argmin(vals):
    best = 0
    for i, v in enumerate(vals):
        if v < vals[best]:
            best = i
    return best


def thm1(a, c, mu, r):
    a, c, mu, r = map(mpf, (a, c, mu, r))
    m_bulk = 2 * (1 + mu) * cosh(r) / (c * r)
    m_bdry = (2 / (a * c)) * (exp(r) * (1 - a * c) ** 2 - exp(-r) * (1 + a * c) ** 2)
    cands = [m_bulk, m_bdry]
    M = max(cands)
    omega = c * r * exp(-r) / (4 * (M + 2 * exp(-r)))
    K1 = (2 * (1 + mu) + M ** 2) * cosh(r) / (2 * omega * c * r)
    K2 = (c ** 2 / (2 * omega)) * (
        M / (2 * a) + 4 * (cosh(r) - a * c * sinh(r)) ** 2 / (a * M) + c * sinh(r)
    )
    cmin = min(mpf(1), c ** 2)
    cmax = max(mpf(1), c ** 2)
    G = sqrt((M + 2 * exp(r)) / (M + 2 * exp(-r))) * sqrt(cmax / cmin)
    g1 = sqrt(2 * K1 / ((M + 2 * exp(-r)) * cmin))
    g2 = g1 * sqrt(K2 / K1)
    return {
        "M": M, "M_branch": argmax(cands), "M_candidates": cands,
        "omega": omega, "K1": K1, "K2": K2, "G": G, "gamma1": g1, "gamma2": g2,
    }


def thm2(a, c, mu, b, k, lam, r):
    a, c, mu, b, k, lam, r = map(mpf, (a, c, mu, b, k, lam, r))
    coupling = max(mpf(1), 2 * lam / k)
    m_bulk = coupling * (2 * (1 + b + mu) / (c * r)) * cosh(r)
    m_bdry = (2 / (a * c)) * (exp(r) * (1 - a * c) ** 2 - exp(-r) * (1 + a * c) ** 2)
    cands = [m_bulk, m_bdry]
    M = max(cands)
    om_cands = [c * r / (2 * (2 + M * exp(r))), k * pi ** 2]
    omega = min(om_cands) / 2
    K1 = (2 * (1 + b + mu) + M ** 2) * cosh(r) / (2 * omega * c * r)
    K2 = (c ** 2 / (2 * omega)) * (
        M / (2 * a) + 4 * (cosh(r) - a * c * sinh(r)) ** 2 / (a * M) + c * sinh(r)
    )
    cmin = min(mpf(1), c ** 2)
    cmax = max(mpf(1), c ** 2)
    mlo_cands = [cmin * (M / 2 + exp(-r)), b * M / (2 * lam)]
    mhi_cands = [cmax * (M / 2 + exp(r)), b * M / (2 * lam)]
    mlo = min(mlo_cands)
    mhi = max(mhi_cands)
    return {
        "M": M, "M_branch": argmax(cands), "M_candidates": cands,
        "coupling_factor": coupling,
        "omega": omega, "omega_branch": argmin(om_cands),
        "K1": K1, "K2": K2,
        "m_lo": mlo, "m_lo_branch": argmin(mlo_cands),
        "m_hi": mhi, "m_hi_branch": argmax(mhi_cands),
        "G": sqrt(mhi / mlo),
        "gamma1": sqrt(K1 / mlo), "gamma2": sqrt(K2 / mlo),
    }


def thm3(a, c, mu, b, k, lam, sigma, r):
    a, c, mu, b, k, lam, sg, r = map(mpf, (a, c, mu, b, k, lam, sigma, r))
    Q = (c ** 2 + (1 + b) * sg) / (2 * sg) + sg * c ** 2 * (1 + b) / (
        2 * (c ** 2 + (1 + mu + b) * sg)
    )
    R = c * r / (8 * Q * cosh(r))
    Bc = a * sg * (exp(r) * (1 - a * c) + exp(-r) * (1 + a * c))
    bulk = 2 * (1 + mu + b + sg * r) * cosh(r)
    m_cands = [
        bulk / c + 4 * sinh(r) ** 2 / (c * R),
        (1 + mu + b) * sg * R / (2 * c ** 2) + bulk / (c * r),
        (2 * lam / k) * (bulk / (c * r) + ((sg + 1) / (2 * sg * c ** 2)) * (c ** 2 + (1 + mu + b) * sg) * R),
        (1 / (a * c)) * (exp(r) * (1 - a * c) ** 2 - exp(-r) * (1 + a * c) ** 2),
        R - 2 * exp(-r),
        -Bc / (a * sg),
    ]
    M = mpf("1.01") * max(m_cands)
    c1_cands = [
        (M - R) / 2 + exp(-r),
        c ** 2 * (M / 2 + exp(-r)),
        b * M / (2 * lam),
        (a * sg * M + Bc) / 2,
        R * sg ** 2 / 4,
    ]
    c2_cands = [
        M / 2 + exp(r) + R,
        c ** 2 * (M / 2 + exp(r)),
        b * M / (2 * lam),
        (a * sg * M + Bc) / 2,
        R * sg ** 2,
    ]
    C1 = min(c1_cands)
    C2 = max(c2_cands)
    K = ((sg + 1) / (2 * sg * c ** 2)) * (c ** 2 + (1 + mu + b) * sg) * R \
        + bulk / (c * r) + M ** 2 / (4 * Q * R)
    phi_cands = [
        c * r * exp(-r) / 8,
        c ** 3 * r * exp(-r) / 8,
        a * c ** 2 * M / 2,
        sg * c ** 2 * R / 4,
        b * k * M * pi ** 2 / (2 * lam),
    ]
    phi = min(phi_cands)
    omega = phi / (2 * C2)
    return {
        "Q": Q, "R": R, "B": Bc,
        "M": M, "M_branch": argmax(m_cands), "M_candidates": m_cands,
        "C1": C1, "C1_branch": argmin(c1_cands), "C1_candidates": c1_cands,
        "C2": C2, "C2_branch": argmax(c2_cands), "C2_candidates": c2_cands,
        "K": K,
        "phi": phi, "phi_branch": argmin(phi_cands),
        "omega": omega,
        "G": sqrt(C2 / C1), "gamma": sqrt(K / (2 * omega * C1)),
    }


def freeze(d):
    out = {}
    for key, v in d.items():
        if isinstance(v, list):
            out[key] = [float(x) for x in v]
        elif isinstance(v, int):
            out[key] = v
        else:
            out[key] = float(v)
    return out


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    golden = {
        "thm1": [
            {"inputs": {"a": 1.0, "c": 1.0, "mu": 0.0, "r": 1.0},
             "expected": freeze(thm1(1, 1, 0, 1))},
            {"inputs": {"a": 0.2, "c": 1.0, "mu": 0.1, "r": 2.0},
             "expected": freeze(thm1("0.2", 1, "0.1", 2))},
        ],
        "thm2": [
            {"inputs": {"a": 1.0, "c": 1.0, "mu": 0.0, "b": 1.0, "k": 1.0,
                        "lambda": 1.0, "r": 1.0},
             "expected": freeze(thm2(1, 1, 0, 1, 1, 1, 1))},
            {"inputs": {"a": 0.3, "c": 5.0, "mu": 0.0, "b": 0.5, "k": 0.01,
                        "lambda": 0.004, "r": 0.5},
             "expected": freeze(thm2("0.3", 5, 0, "0.5", "0.01", "0.004", "0.5"))},
        ],
        "thm3": [
            {"inputs": {"a": 1.0, "c": 1.0, "mu": 0.0, "b": 1.0, "k": 1.0,
                        "lambda": 1.0, "sigma": 1.0, "r": 1.0},
             "expected": freeze(thm3(1, 1, 0, 1, 1, 1, 1, 1))},
            {"inputs": {"a": 1.2, "c": 0.8, "mu": 0.2, "b": 0.6, "k": 1.5,
                        "lambda": 0.7, "sigma": 0.5, "r": 1.2},
             "expected": freeze(thm3("1.2", "0.8", "0.2", "0.6", "1.5", "0.7", "0.5", "1.2"))},
            {"inputs": {"a": 1.0, "c": 1.0, "mu": 0.0, "b": 1.0, "k": 0.1,
                        "lambda": 5.0, "sigma": 1.0, "r": 1.0},
             "expected": freeze(thm3(1, 1, 0, 1, "0.1", 5, 1, 1))},
        ],
    }

    with open(os.path.join(here, "..", "golden", "certificates.json"), "w") as f:
        json.dump(golden, f, indent=1)
        f.write("\n")

    sane1 = golden["thm1"][0]["expected"]
    print("thm1 golden: M=%.17g (2cosh1=%.17g) omega=%.17g"
          % (sane1["M"], float(2 * cosh(1)), sane1["omega"]))
    sane2 = golden["thm2"][0]["expected"]
    print("thm2 golden: M=%.17g (8cosh1=%.17g) omega=%.17g"
          % (sane2["M"], float(8 * cosh(1)), sane2["omega"]))
    sane3 = golden["thm3"][0]["expected"]
    print("thm3 golden: M=%.17g C1=%.17g C2=%.17g omega=%.17g gamma=%.17g"
          % (sane3["M"], sane3["C1"], sane3["C2"], sane3["omega"], sane3["gamma"]))

    print("\nsigma sweep, a=c=1 mu=0.5 b=k=lambda=1 r=1:")
    prev_gamma, prev_omega = None, None
    gains = {}
    for s in ["1", "0.3", "0.1", "0.03", "0.01"]:
        res = thm3(1, 1, "0.5", 1, 1, 1, s, 1)
        gains[s] = res["gamma"]
        print("  sigma=%-5s gamma=%.6g omega=%.6g M_branch=%d C1_branch=%d phi_branch=%d"
              % (s, float(res["gamma"]), float(res["omega"]),
                 res["M_branch"], res["C1_branch"], res["phi_branch"]))
        if prev_gamma is not None:
            assert res["gamma"] > prev_gamma, "gamma not increasing as sigma drops"
            assert res["omega"] < prev_omega, "omega not decreasing as sigma drops"
        prev_gamma, prev_omega = res["gamma"], res["omega"]
    ratio = gains["0.01"] / gains["1"]
    print("  gamma(0.01)/gamma(1) = %.4g" % float(ratio))
    assert ratio > 10


if __name__ == "__main__":
    main()
