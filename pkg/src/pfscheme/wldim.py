"""Weisfeiler-Leman dimension classification for Frobenius circulants.

The pipeline certifies dimwl = 2 for a circulant graph whose coherent
closure is the scheme of a Frobenius group, provided the number of
vertices avoids the arithmetic exception set {p, p^2, p^3, pq, p^2*q}.
The chain of implications is: separable closure implies dimwl <= 2, and
a regular graph that is neither empty nor complete has dimwl >= 2.
The module never evaluates the logic definition of dimwl directly; when
the implication chain does not apply it reports the case as unresolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arith import factorize
from .autgrp import FrobeniusCertificate, frobenius_certificate
from .circulants import (
    Circulant,
    CirculantSpec,
    certificate_unit_groups,
    color_matrix,
    frobenius_circulant,
)
from .parabolic import (
    SeparabilityVerdict,
    divide_check,
    enumerate_parabolics,
    indistinguishing_number,
    separability_verdict,
)
from .perms import PermGroup, Permutation
from .scheme import Scheme, partition_equal, wl_closure

EXCEPTION_SHAPES = {
    (1,): "p",
    (2,): "p^2",
    (3,): "p^3",
    (1, 1): "p*q",
    (2, 1): "p^2*q",
}

SEARCH_LIMIT = 256


def factorization_string(n: int) -> str:
    return "*".join(
        str(p) if e == 1 else "%d^%d" % (p, e) for p, e in sorted(factorize(n).items())
    )


@dataclass(frozen=True)
class ExceptionCheck:
    """Membership of n in the exception set {p, p^2, p^3, pq, p^2*q}."""

    n: int
    in_exception_set: bool
    shape: Optional[str]
    omega: int
    big_omega: int
    reason: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "in_exception_set": self.in_exception_set,
            "shape": self.shape,
            "omega": self.omega,
            "big_omega": self.big_omega,
            "reason": self.reason,
        }


def exception_check(n: int) -> ExceptionCheck:
    """Decide whether n has one of the shapes p, p^2, p^3, pq, p^2*q.

    Equivalently n is outside the set exactly when it has at least three
    distinct prime factors or at least four prime factors with
    multiplicity.  Both formulations are computed and compared.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    fac = factorize(n)
    exponents = tuple(sorted(fac.values(), reverse=True))
    shape = EXCEPTION_SHAPES.get(exponents)
    omega = len(fac)
    big_omega = sum(fac.values())
    by_formula = not (omega >= 3 or big_omega >= 4)
    if (shape is not None) != by_formula:
        raise AssertionError(
            "shape and omega formulations disagree at n=%d" % n)
    if shape is not None:
        reason = "n = %s has shape %s" % (factorization_string(n), shape)
    elif omega >= 3:
        reason = "n = %s has %d distinct prime factors" % (
            factorization_string(n), omega)
    else:
        reason = "n = %s has %d prime factors with multiplicity" % (
            factorization_string(n), big_omega)
    return ExceptionCheck(n, shape is not None, shape, omega, big_omega, reason)


def _prime_table(limit: int) -> np.ndarray:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.flatnonzero(sieve)


def exception_set_crosscheck(limit: int = 10 ** 6) -> int:
    """Compare the two formulations of the exception set for all n <= limit.

    One side enumerates the shapes p, p^2, p^3, pq, p^2*q directly; the
    other sieves omega(n) and Omega(n) and applies the inequality test.
    Raises AssertionError at the first disagreement, otherwise returns the
    number of members.
    """
    primes = _prime_table(limit)

    omega = np.zeros(limit + 1, dtype=np.int8)
    big = np.zeros(limit + 1, dtype=np.int8)
    for p in primes:
        p = int(p)
        omega[p::p] += 1
        pk = p
        while pk <= limit:
            big[pk::pk] += 1
            pk *= p
    by_formula = (omega <= 2) & (big <= 3)
    by_formula[:2] = False

    by_shape = np.zeros(limit + 1, dtype=bool)
    for p in primes:
        p = int(p)
        for pk in (p, p * p, p ** 3):
            if pk <= limit:
                by_shape[pk] = True
    for i, p in enumerate(primes):
        p = int(p)
        if p * p > limit:
            break
        qs = primes[i + 1:]
        qs = qs[qs <= limit // p]
        by_shape[p * qs] = True
    for p in primes:
        p = int(p)
        sq = p * p
        if 2 * sq > limit:
            break
        qs = primes[primes != p]
        qs = qs[qs <= limit // sq]
        by_shape[sq * qs] = True

    if not np.array_equal(by_formula, by_shape):
        bad = int(np.flatnonzero(by_formula != by_shape)[0])
        raise AssertionError("formulations disagree at n=%d" % bad)
    return int(by_shape.sum())


@dataclass(frozen=True)
class FrobeniusScreen:
    """Necessary numeric conditions for a scheme of a Frobenius group."""

    equivalenced: bool
    valency: Optional[int]
    indistinguishing_ok: bool
    divide_ok: bool

    @property
    def passed(self) -> bool:
        return self.equivalenced and self.indistinguishing_ok and self.divide_ok

    def to_json_dict(self) -> dict:
        return {
            "equivalenced": self.equivalenced,
            "valency": self.valency,
            "indistinguishing_ok": self.indistinguishing_ok,
            "divide_ok": self.divide_ok,
            "passed": self.passed,
        }


def frobenius_screen(scheme: Scheme) -> FrobeniusScreen:
    k = scheme.is_equivalenced()
    if k is None or k < 2:
        return FrobeniusScreen(False, k, False, False)
    indist_ok = indistinguishing_number(scheme) == k - 1
    paras = enumerate_parabolics(scheme)
    divide_ok = all(rec.ok for rec in divide_check(scheme, paras))
    return FrobeniusScreen(True, k, indist_ok, divide_ok)


@dataclass(frozen=True)
class WlVerdict:
    """Outcome of the dimwl classification of a circulant graph."""

    n: int
    factorization: str
    connection_size: int
    in_exception_set: bool
    closure_rank: int
    closure_valency: Optional[int]
    screen: FrobeniusScreen
    certification: Optional[str]
    group_order: Optional[int]
    separability: Optional[SeparabilityVerdict]
    verdict: str
    reason: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "factorization": self.factorization,
            "connection_size": self.connection_size,
            "in_exception_set": self.in_exception_set,
            "closure_rank": self.closure_rank,
            "closure_valency": self.closure_valency,
            "screen": self.screen.to_json_dict(),
            "certification": self.certification,
            "group_order": self.group_order,
            "separability": None
            if self.separability is None
            else self.separability.to_json_dict(),
            "verdict": self.verdict,
            "reason": self.reason,
        }


def _construction_certificate(circ: Circulant, closure: Scheme):
    """Try to match the closure with the orbital scheme of Z_n x| K for a
    fixed-point-free unit group K read off from the connection set.

    Only composite n qualifies: there the semidirect product acts
    imprimitively, hence equals the full automorphism group of its own
    orbital scheme, so a partition match certifies the Frobenius property
    of the closure's automorphism group.
    """
    n = circ.n
    fac = factorize(n)
    if len(fac) == 1 and next(iter(fac.values())) == 1:
        return None
    translation = Permutation(tuple((i + 1) % n for i in range(n)))
    for K in certificate_unit_groups(circ):
        gens = [translation]
        gens.extend(
            Permutation(tuple((u * i) % n for i in range(n))) for u in sorted(K))
        group = PermGroup(gens, n)
        labels = np.asarray(group.orbitals(), dtype=np.int64).reshape(n, n)
        if partition_equal(labels, closure.colors):
            return len(K), n * len(K)
    return None


def dimwl_verdict(circ) -> WlVerdict:
    """Classify the WL dimension of a circulant graph.

    Accepts a Circulant or a CirculantSpec.  Returns Exactly2 when the
    coherent closure is certified as the scheme of a Frobenius group and
    the separability criteria apply, ExceptionUnresolved when n lies in
    the arithmetic exception set, and NotFrobeniusCertified otherwise.
    """
    if isinstance(circ, CirculantSpec):
        circ = frobenius_circulant(circ)
    if not isinstance(circ, Circulant):
        raise TypeError("expected a Circulant or CirculantSpec")
    n = circ.n
    closure = wl_closure(color_matrix(circ))
    screen = frobenius_screen(closure)
    exc = exception_check(n)
    base = {
        "n": n,
        "factorization": factorization_string(n),
        "connection_size": len(circ.connection),
        "in_exception_set": exc.in_exception_set,
        "closure_rank": closure.rank,
        "closure_valency": screen.valency,
        "screen": screen,
    }
    if not screen.passed:
        return WlVerdict(
            certification=None,
            group_order=None,
            separability=None,
            verdict="NotFrobeniusCertified",
            reason="closure fails the Frobenius screen",
            **base,
        )

    certification = None
    group_order = None
    built = _construction_certificate(circ, closure)
    if built is not None:
        certification = "construction"
        group_order = built[1]
    elif n <= SEARCH_LIMIT:
        cert: FrobeniusCertificate = frobenius_certificate(closure)
        if cert.frobenius:
            certification = "search"
            group_order = cert.group_order
        else:
            return WlVerdict(
                certification=None,
                group_order=None,
                separability=None,
                verdict="NotFrobeniusCertified",
                reason="automorphism search: %s" % cert.reason,
                **base,
            )
    else:
        return WlVerdict(
            certification=None,
            group_order=None,
            separability=None,
            verdict="NotFrobeniusCertified",
            reason="no construction certificate and n exceeds the search limit %d"
            % SEARCH_LIMIT,
            **base,
        )

    if exc.in_exception_set:
        return WlVerdict(
            certification=certification,
            group_order=group_order,
            separability=None,
            verdict="ExceptionUnresolved",
            reason=exc.reason,
            **base,
        )

    sep = separability_verdict(closure)
    if not sep.separable:
        raise AssertionError(
            "certified Frobenius closure outside the exception set must be "
            "separable, n=%d" % n)
    if not 1 <= len(circ.connection) <= n - 2:
        raise AssertionError("empty or complete graph cannot reach Exactly2")
    return WlVerdict(
        certification=certification,
        group_order=group_order,
        separability=sep,
        verdict="Exactly2",
        reason="Frobenius closure (%s) with separability certificate (%s)"
        % (certification, sep.reason),
        **base,
    )
