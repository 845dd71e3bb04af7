"""Independent replay of witness certificates.

Never trusts the stored ``n``: the congruence is re-evaluated directly and the
frames are re-run from the base case.
"""

from __future__ import annotations

import logging
from math import gcd

from anbn.arith.factor import DEFAULT_FACTOR_BOUND, factorize
from anbn.arith.modular import pow_mod
from anbn.errors import AnbnError
from anbn.witness.construct import lift, reduced_query, totient_multiplier
from anbn.witness.schemas import Verdict, WitnessCertificate, WitnessFrame

logger = logging.getLogger(__name__)


def replay_frames(
    frames: tuple[WitnessFrame, ...] | list[WitnessFrame],
    a: int,
    b: int,
    r: int,
    modulus: int,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> tuple[int | None, str]:
    """Rebuild the coprime witness for ``modulus`` from ``frames``.

    Returns:
        ``(n, "")`` on success, ``(None, reason)`` on the first broken frame.
    """
    if not frames:
        if modulus != 1:
            return None, f"no frames but modulus is {modulus}"
        return 1, ""

    n = 1
    expected_reduced = 1
    for i, frame in enumerate(frames):
        if frame.reduced_modulus != expected_reduced:
            return None, f"frame {i}: reduced modulus {frame.reduced_modulus} != {expected_reduced}"
        if frame.modulus != frame.largest_prime * frame.reduced_modulus:
            return None, f"frame {i}: modulus is not largest_prime * reduced_modulus"
        if factorize(frame.modulus, bound=factor_bound).largest_prime != frame.largest_prime:
            return None, f"frame {i}: {frame.largest_prime} is not the largest prime"
        if frame.k != n:
            return None, f"frame {i}: inherited k={frame.k} but replay has {n}"
        if not 0 <= frame.q < frame.largest_prime:
            return None, f"frame {i}: q={frame.q} outside [0, {frame.largest_prime})"

        multiplier = totient_multiplier(frame.modulus, bound=factor_bound)
        expected_q = lift(a, b, r, frame.modulus, frame.largest_prime, n, multiplier)
        if frame.q != expected_q:
            return None, f"frame {i}: q={frame.q} but the lift gives {expected_q}"
        n += frame.reduced_modulus * frame.q * multiplier
        if (pow_mod(a, n, frame.modulus) + b * n - r) % frame.modulus:
            return None, f"frame {i}: congruence fails modulo {frame.modulus}"
        expected_reduced = frame.modulus

    if expected_reduced != modulus:
        return None, f"frames end at modulus {expected_reduced}, expected {modulus}"
    return n, ""


def _check(cert: WitnessCertificate, factor_bound: int) -> Verdict:
    q, d, n = cert.query, cert.decomposition, cert.n
    a, b, m, r = q.a, q.b, q.m, q.r

    if gcd(b, m) != 1:
        return Verdict(False, f"b={b} not coprime to m={m}")
    if not 1 <= n <= m * m:
        return Verdict(False, f"n={n} outside [1, {m * m}]")
    if (pow_mod(a, n, m) + b * n - r) % m:
        return Verdict(False, f"a^n + bn is not congruent to r modulo {m}")

    if d.u < 1 or d.v < 1 or d.u * d.v != m:
        return Verdict(False, f"u*v = {d.u}*{d.v} != m = {m}")
    if any(a % p for p in factorize(d.u, bound=factor_bound).primes):
        return Verdict(False, f"some prime of u={d.u} does not divide a={a}")
    if gcd(a, d.v) != 1:
        return Verdict(False, f"a={a} not coprime to v={d.v}")
    if not 0 <= d.s < d.u:
        return Verdict(False, f"s={d.s} outside [0, {d.u})")
    if (b * d.s - r) % d.u:
        return Verdict(False, f"b*s is not congruent to r modulo u={d.u}")

    a_v, b_v, r_v = reduced_query(a, b, r, d.u, d.v, d.s)
    k, reason = replay_frames(cert.frames, a_v, b_v, r_v, d.v, factor_bound=factor_bound)
    if k is None:
        return Verdict(False, reason)
    if d.u * k + d.s != n:
        return Verdict(False, f"replay gives n={d.u * k + d.s}, certificate has {n}")
    return Verdict(True)


def verify_certificate(
    cert: WitnessCertificate,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> Verdict:
    """Check every certificate invariant; returns a falsy ``Verdict`` with a reason."""
    try:
        verdict = _check(cert, factor_bound)
    except AnbnError as exc:
        verdict = Verdict(False, str(exc))
    if not verdict:
        logger.warning("Certificate rejected: %s", verdict.reason)
    return verdict
