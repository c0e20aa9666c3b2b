"""Verification batteries behind the CLI, producing schema-stable reports."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field

from .. import __version__
from ..clifford import clifford_iso_check, commutator_trace_check, fiber_clifford_check
from ..correspondence import (check_divisor_relation, divisor_of_function, forward_spectral_data,
                              round_trip)
from ..errors import CycspecError, RetryBudgetExhausted, UnsupportedRegime
from ..higgs import (common_component_check, from_spectral_module, to_spectral_module,
                     verify_equivariance, verify_loop_relation, verify_support)
from ..polyalg.fields import PrimeField
from ..quiver import center_matches_diagonal, pushforward_kernel_check, truncated_center
from ..reduction import (associativity_exhaustive, fiber_at, matrix_iso, mth_roots, rank_check,
                         reduced_center_check, rt_ring, simplicity_check)
from ..serialize import poly_to_json
from .instances import InstanceSpec, random_instance

SUITES = ("center", "reduce", "spectral", "correspond", "clifford")
SCAN_LIMIT = 101     # fibers are scanned exhaustively over prime fields up to this size


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "pass": self.passed, "witness": self.witness}
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class Report:
    name: str
    field: object
    seed: int
    checks: list = dc_field(default_factory=list)
    unsupported: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: dict | None = None, seconds: float = 0.0) -> Check:
        c = Check(name, bool(passed), witness or {}, seconds)
        self.checks.append(c)
        return c

    def run(self, name: str, fn):
        """Time ``fn() -> (passed, witness)`` and record it."""
        t0 = time.perf_counter()
        passed, witness = fn()
        return self.add(name, passed, witness, time.perf_counter() - t0)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "report": self.name,
            "version": __version__,
            "field": self.field.to_json(),
            "seed": self.seed,
            "pass": self.passed,
            "checks": [c.to_json(timing) for c in self.checks],
        }

    def summary(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in self.checks]
        lines.append(f"{self.name}: {sum(c.passed for c in self.checks)}/{len(self.checks)} passed")
        return "\n".join(lines)


# ------------------------------------------------------------------ individual batteries

def center_checks(rep: Report, ms, N=None):
    F = rep.field
    for m in ms:
        n = N if N is not None else 3 * m

        def chk(m=m, n=n):
            basis = truncated_center(m, n, F)
            want = n // m + 1
            ok = len(basis) == want and center_matches_diagonal(basis, m, n, F)
            return ok, {"m": m, "N": n, "dimension": len(basis), "expected": want}
        rep.run(f"center m={m} N={n}", chk)


def pushforward_checks(rep: Report, ms):
    for m in ms:
        rep.run(f"pushforward kernel m={m} N={2 * m}",
                lambda m=m: (pushforward_kernel_check(m, 2 * m, rep.field), {"m": m, "N": 2 * m}))


def fiber_points(F, x0=0):
    if isinstance(F, PrimeField) and F.p <= SCAN_LIMIT:
        return list(F.elements())
    return [F.convert(v) for v in range(8)]


def fiber_checks(rep: Report, m: int, t0s=None, x0=0):
    F = rep.field
    t0s = fiber_points(F) if t0s is None else [F.convert(v) for v in t0s]

    def chk():
        bad, isos = [], 0
        for t0 in t0s:
            f = fiber_at(m, x0, t0, F)
            simple = simplicity_check(f)
            # for m = 1 the fiber is k itself, simple everywhere
            if simple != (m == 1 or not F.is_zero(t0)):
                bad.append({"t0": F.to_str(t0), "simple": simple})
            if not F.is_zero(t0) and isinstance(F, PrimeField):
                for s0 in mth_roots(t0, m, F):
                    isos += 1
                    if not matrix_iso(f, s0).verified:
                        bad.append({"t0": F.to_str(t0), "s0": F.to_str(s0), "matrix_iso": False})
        return not bad, {"m": m, "points": len(t0s), "matrix_isos_verified": isos, "failures": bad}
    rep.run(f"fibers m={m}", chk)


def reduce_checks(rep: Report, ms):
    F = rep.field
    for m in ms:
        rep.run(f"rank m={m}", lambda m=m: (rank_check(m) == m * m, {"m": m, "rank": rank_check(m)}))
        rep.run(f"associativity m={m}", lambda m=m: (associativity_exhaustive(m, F), {"m": m}))
        rep.run(f"reduced center m={m}", lambda m=m: (reduced_center_check(m, F), {"m": m}))
        fiber_checks(rep, m)


def _draw_shape(rng: random.Random, max_m=4, max_p=3, equal=False):
    m = rng.randint(1, max_m)
    if equal:
        p = rng.randint(1, max_p)
        return m, (p,) * m
    return m, tuple(rng.randint(1, max_p) for _ in range(m))


def spectral_checks(rep: Report, count: int, cap: int = 2):
    F = rep.field
    rng = random.Random(rep.seed)
    for k in range(count):
        m, dims = _draw_shape(rng, equal=(k % 2 == 0))
        H = random_instance(InstanceSpec(m, dims, F, cap, rng.randrange(2 ** 31)))

        def chk(H=H):
            S = to_spectral_module(H)
            w = {"m": H.m, "dims": list(H.dims)}
            ok = verify_loop_relation(S) and verify_equivariance(S)
            ok = ok and all(verify_support(S, i) for i in range(H.m))
            ok = ok and from_spectral_module(S) == H
            cc = common_component_check(H)
            w["q"] = list(cc.q)
            w["strict"] = cc.strict
            if len(set(H.dims)) == 1:
                ok = ok and cc.strict and not any(cc.q)
            return ok, w
        rep.run(f"spectral instance {k}", chk)


def correspond_checks(rep: Report, count: int, cap: int = 2, max_m: int = 3, max_p: int = 2):
    F = rep.field
    rng = random.Random(rep.seed)
    for k in range(count):
        m, dims = _draw_shape(rng, max_m=max_m, max_p=max_p, equal=True)
        spec = InstanceSpec(m, dims, F, cap, rng.randrange(2 ** 31), filter="smooth")

        def chk(spec=spec):
            w = {"m": spec.m, "dims": list(spec.dims)}
            try:
                H = random_instance(spec)
            except RetryBudgetExhausted as e:
                return False, dict(w, error=str(e))
            sd = forward_spectral_data(H, checked=True)
            rel = check_divisor_relation(sd.divisors, sd.c)
            lengths = [D.length for D in sd.divisors]
            lt = divisor_of_function(sd.c.ring.gen, sd.c).length
            rt = round_trip(H, checked=True)
            w.update(c=poly_to_json(sd.c), lengths=lengths, length_div_t=lt, relation=rel, **rt.to_json())
            ok = rel and sum(lengths) == lt and rt.spectral_invariants_equal
            return ok, w
        rep.run(f"correspond instance {k}", chk)


def clifford_checks(rep: Report, fibers=None):
    F = rep.field

    def iso():
        r = clifford_iso_check(F)
        w = {"products_checked": r.products_checked, "bijective": r.bijective,
             "associative": r.associative, "discriminant": poly_to_json(r.discriminant),
             "uniqueness": r.uniqueness}
        if r.failures:
            f0 = r.failures[0]
            w["first_failure"] = {"a": f0["a"], "b": f0["b"],
                                  "lhs": [poly_to_json(v) for v in f0["lhs"]],
                                  "rhs": [poly_to_json(v) for v in f0["rhs"]]}
        return r.ok, w
    rep.run("clifford isomorphism", iso)
    rep.run("commutator trace", lambda: (commutator_trace_check(ring=rt_ring(F)), {}))
    pts = fiber_points(F) if fibers is None else fibers

    def fib():
        bad = []
        for t0 in pts:
            fr = fiber_clifford_check(t0, F)
            if not fr.ok:
                bad.append({"t0": F.to_str(fr.t0), "path_simple": fr.path_simple,
                            "clifford_simple": fr.clifford_simple, "iso": fr.iso_specializes})
        return not bad, {"points": len(pts), "failures": bad}
    rep.run("clifford fibers", fib)


# ------------------------------------------------------------------ entry point

def run_suite(name: str, field, seed: int = 0, count: int = 20, m=None, N=None) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = Report(name, field, seed)
    try:
        if name == "center":
            ms = [m] if m else [1, 2, 3, 4]
            center_checks(rep, ms, N)
            if N is None:
                pushforward_checks(rep, [k for k in ms if k <= 3])
        elif name == "reduce":
            reduce_checks(rep, [m] if m else [1, 2, 3])
        elif name == "spectral":
            spectral_checks(rep, count)
        elif name == "correspond":
            correspond_checks(rep, count)
        elif name == "clifford":
            clifford_checks(rep)
    except UnsupportedRegime as e:
        rep.unsupported = True
        rep.add("regime", False, {"error": str(e)})
    except CycspecError as e:
        rep.add("error", False, {"error": str(e)})
    return rep
