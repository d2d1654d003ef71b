"""Seeded cross-verification of all routes on random arrangements."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arrangement import Arrangement, serialize
from .examples import random_arrangement
from .jumping import jc_cor1, jc_cor2, jc_unit_interval
from .lattice import betti_complement, build, euler_complement_closedform_n3, moebius_ranks, nu_tables
from .polyoracle import independence_rank
from .spectrum import (FULL, check_sum_rule, compare_tables, spectrum_hrr, spectrum_n3,
                       spectrum_n4_low, spectrum_unit_general)
from .wonderful.classes import chern_total
from .wonderful.hrr import engine_for

CHECKS = ("moebius", "betti", "chi", "spectrum", "sum_rule", "hrr", "independence", "jumping")


def check_arrangement(arr: Arrangement) -> dict[str, str | None]:
    """Run every applicable cross-check; None means pass, a string explains a failure."""
    out: dict[str, str | None] = {}
    lat = build(arr)

    def run(name, fn):
        try:
            out[name] = fn()
        except (AssertionError, ArithmeticError) as exc:
            out[name] = f"{type(exc).__name__}: {exc}"

    run("moebius", lambda: (moebius_ranks(lat), None)[1])

    def betti():
        b = betti_complement(lat).betti
        if arr.n == 3 and arr.is_reduced and b[1] != arr.d - 1:
            return f"b_1 = {b[1]}, expected d - 1 = {arr.d - 1}"
        return None
    run("betti", betti)

    def chi():
        if arr.n != 3 or not arr.is_reduced:
            return None
        a, b = betti_complement(lat).chi, euler_complement_closedform_n3(lat)
        return None if a == b else f"Betti route {a} != closed form {b}"
    run("chi", chi)

    hrr_table = None

    def spectrum():
        nonlocal hrr_table
        hrr_table = spectrum_hrr(arr, FULL)
        oracle = spectrum_unit_general(arr, lat)
        diffs = compare_tables(oracle, hrr_table)
        if arr.is_reduced and arr.n == 3:
            diffs += compare_tables(spectrum_n3(lat), hrr_table)
            diffs += compare_tables(spectrum_n3(lat), oracle)
        if arr.is_reduced and arr.n == 4:
            diffs += compare_tables(spectrum_n4_low(lat), oracle)
        return None if not diffs else f"routes disagree at {[(str(a), x, y) for a, x, y in diffs]}"
    run("spectrum", spectrum)

    def sum_rule():
        if hrr_table is None:
            return "no Riemann-Roch table"
        rep = check_sum_rule(hrr_table, lat)
        return None if rep.ok else f"violations {rep.violations}"
    run("sum_rule", sum_rule)

    def hrr():
        eng = engine_for(arr)
        ring = eng.ring
        td = ring.integrate(eng.todd)
        if td != 1:
            return f"integral of Td = {td}"
        if arr.n == 3:
            top = ring.integrate(chern_total(ring))
            nu = sum(nu_tables(lat).nu2.values())
            if top != 3 + nu:
                return f"integral of c_top = {top}, expected {3 + nu}"
        for p in range(ring.top + 1):
            eng.chi(p, ring.zero())  # raises on a non-integral value
        return None
    run("hrr", hrr)

    def independence():
        if arr.n != 3 or not arr.is_reduced:
            return None
        for j in range(1, arr.d + 1):
            r, e = independence_rank(arr, j, lat)
            if r != e:
                return f"j={j}: rank {r} != {e}"
        return None
    run("independence", independence)

    def jumping():
        prop = jc_unit_interval(arr, lat).as_set
        if arr.is_reduced and arr.n == 3:
            other = jc_cor1(lat).as_set
        elif arr.is_reduced and arr.n == 4:
            other = jc_cor2(lat).as_set
        else:
            return None
        if prop != other:
            return f"prop1 {sorted(map(str, prop))} != corollary {sorted(map(str, other))}"
        for a in prop:
            if not 0 < a < 1:
                return f"{a} outside (0, 1)"
        return None
    run("jumping", jumping)
    return out


@dataclass
class VerifyReport:
    seed: int
    trials: int
    dmax: int
    n: int
    passed: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    failed: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def lines(self) -> list[str]:
        out = [f"verify seed={self.seed} trials={self.trials} dmax={self.dmax} n={self.n}"]
        for c in CHECKS:
            out.append(f"  {c:<13} pass={self.passed[c]} fail={self.failed[c]}")
        if self.counterexample:
            out.append(f"  first failure: {self.counterexample['check']}: {self.counterexample['reason']}")
            out.append(f"  replay input: {self.counterexample['input']}")
        out.append("OK" if self.ok else "FAILED")
        return out

    def to_record(self) -> dict:
        return {"seed": self.seed, "trials": self.trials, "dmax": self.dmax, "n": self.n,
                "passed": self.passed, "failed": self.failed,
                "counterexample": self.counterexample, "ok": self.ok}


def verify(seed: int, trials: int, dmax: int, n: int) -> VerifyReport:
    rng = random.Random(seed)
    rep = VerifyReport(seed, trials, dmax, n)
    for _ in range(trials):
        arr = random_arrangement(rng, n, dmax)
        for name, reason in check_arrangement(arr).items():
            if reason is None:
                rep.passed[name] += 1
            else:
                rep.failed[name] += 1
                if rep.counterexample is None:
                    rep.counterexample = {"check": name, "reason": reason, "input": serialize(arr)}
    return rep
