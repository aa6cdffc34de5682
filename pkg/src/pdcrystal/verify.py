"""Per-permutation invariant checks and the S_n sweep behind ``pdcrystal verify``."""

from __future__ import annotations

import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .crystal import decompose, is_highest_weight, lower, raise_
from .keylab import TRUNCATIONS, algorithm_d_tilde, decompose_schubert, insertion_tableau, lift
from .perm import Permutation, all_permutations, simple_root
from .pipedream import enumerate_rp, enumerate_rp_bruteforce, schubert_pipedreams, weight
from .poly import schubert_divdiff
from .rfc import enumerate_rfc, lower_rfc, phi, phi_inverse, raise_rfc, schubert_compatible, schubert_rfc

PROPERTIES = (
    "schubert_methods_agree",
    "rp_matches_bruteforce",
    "operators_inverse",
    "weight_shift",
    "phi_bijection",
    "phi_equivariant",
    "one_highest_weight_per_component",
    "insertion_rows_are_blocks",
    "d_tilde_matches_lift",
    "key_expansion",
)

BRUTEFORCE_MAX_N = 5
MAX_N = 7


@dataclass
class VerifyConfig:
    n: int
    jobs: int = 1
    truncation: str = "d_tilde"
    bruteforce_max_n: int = BRUTEFORCE_MAX_N

    def __post_init__(self):
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"n must lie in [2, {MAX_N}], got {self.n}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")
        if self.truncation not in TRUNCATIONS:
            raise ValueError(f"unknown truncation {self.truncation!r}")


@dataclass
class PermReport:
    window: tuple[int, ...]
    results: dict = field(default_factory=dict)  # property -> True / False / None (skipped)
    details: dict = field(default_factory=dict)  # property -> message for failures

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.results.values())


def _weight_minus(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _check_operators(w: Permutation, rp) -> tuple[bool, bool, str]:
    inverse_ok, shift_ok, msg = True, True, ""
    for D in rp:
        for i in range(1, w.n):
            alpha = simple_root(i, w.n)
            E = lower(D, i)
            if E is not None:
                if raise_(E, i) != D:
                    inverse_ok, msg = False, f"e_{i} f_{i} D != D for D={D.key_text()}"
                if weight(E) != _weight_minus(weight(D), alpha) or E not in rp:
                    shift_ok, msg = False, f"f_{i} D has weight {weight(E)} for D={D.key_text()}"
            F = raise_(D, i)
            if F is not None:
                if lower(F, i) != D:
                    inverse_ok, msg = False, f"f_{i} e_{i} D != D for D={D.key_text()}"
                if weight(D) != _weight_minus(weight(F), alpha) or F not in rp:
                    shift_ok, msg = False, f"e_{i} D has weight {weight(F)} for D={D.key_text()}"
    return inverse_ok, shift_ok, msg


def _check_phi(w: Permutation, rp) -> tuple[bool, bool, str]:
    rfcs = enumerate_rfc(w.inverse())
    images = {phi(D) for D in rp}
    bij = images == set(rfcs) and len(images) == len(rp) and all(phi_inverse(phi(D)) == D for D in rp)
    msg = "" if bij else f"phi(RP) has {len(images)} elements, RFC(w^-1) has {len(rfcs)}"
    equi = True
    for D in rp:
        r = phi(D)
        for i in range(1, w.n):
            for op_pd, op_rfc, name in ((lower, lower_rfc, "f"), (raise_, raise_rfc, "e")):
                E = op_pd(D, i)
                lhs = None if E is None else phi(E)
                if lhs != op_rfc(r, i):
                    equi, msg = False, f"phi({name}_{i} D) != {name}_{i} phi(D) for D={D.key_text()}"
    return bij, equi, msg


def check_permutation(w: Permutation, truncation: str = "d_tilde", bruteforce_max_n: int = BRUTEFORCE_MAX_N) -> PermReport:
    """Run every property in :data:`PROPERTIES` on w."""
    rep = PermReport(w.window)
    res, det = rep.results, rep.details

    def record(name, ok, msg=""):
        res[name] = ok
        if ok is False:
            det[name] = msg

    try:
        polys = {
            "pipedreams": schubert_pipedreams(w),
            "compatible": schubert_compatible(w),
            "rfc": schubert_rfc(w),
            "divdiff": schubert_divdiff(w),
        }
        ok = len(set(polys.values())) == 1
        record("schubert_methods_agree", ok, "" if ok else str({k: str(v) for k, v in polys.items()}))

        rp = enumerate_rp(w)
        if w.n <= bruteforce_max_n:
            brute = enumerate_rp_bruteforce(w)
            record("rp_matches_bruteforce", brute == rp, f"{len(brute)} by subsets vs {len(rp)} by words")
        else:
            record("rp_matches_bruteforce", None)

        inv, shift, msg = _check_operators(w, rp)
        record("operators_inverse", inv, msg)
        record("weight_shift", shift, msg)

        bij, equi, msg = _check_phi(w, rp)
        record("phi_bijection", bij, msg)
        record("phi_equivariant", equi, msg)

        try:
            comps = decompose(w)
            record("one_highest_weight_per_component", True)
        except AssertionError as exc:
            record("one_highest_weight_per_component", False, str(exc))
            comps = []

        rows_ok, lift_ok, msg = True, True, ""
        for c in comps:
            D = c.highest
            r = phi(D)
            P = insertion_tableau(r.reading_word())
            if P.rows != tuple(b for b in r.blocks if b):
                rows_ok, msg = False, f"P(phi(D)) = {P.rows} for D={D.key_text()}"
            if algorithm_d_tilde(D).weight(w.n) != lift(P).weight(w.n):
                lift_ok, msg = False, f"wt(D~) != wt(lift P) for D={D.key_text()}"
        record("insertion_rows_are_blocks", rows_ok, msg)
        record("d_tilde_matches_lift", lift_ok, msg)

        report = decompose_schubert(w, check=False, truncation=truncation)
        bad = [c.summary() for c in report.components if not c.verified]
        record("key_expansion", report.verified, "; ".join(bad) or "sum mismatch")
    except Exception:  # noqa: BLE001 - any crash is a reported failure
        res["crashed"] = False
        det["crashed"] = traceback.format_exc()
    return rep


def _worker(args):
    window, truncation, bmax = args
    return check_permutation(Permutation(window), truncation, bmax)


@dataclass
class SweepSummary:
    n: int
    truncation: str
    permutations: int
    counts: dict  # property -> {"pass", "fail", "skip"}
    failures: list  # [{"permutation", "property", "detail"}]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return asdict(self) | {"ok": self.ok}

    def lines(self) -> list[str]:
        out = [f"n={self.n} permutations={self.permutations} truncation={self.truncation}"]
        for name, c in self.counts.items():
            status = "PASS" if c["fail"] == 0 else "FAIL"
            out.append(f"{status} {name}: pass={c['pass']} fail={c['fail']} skip={c['skip']}")
        return out


def sweep(config: VerifyConfig) -> SweepSummary:
    """Check every w in S_n; reports are reduced in lexicographic window order."""
    tasks = [(w.window, config.truncation, config.bruteforce_max_n) for w in all_permutations(config.n)]
    if config.jobs == 1:
        reports = [_worker(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * config.jobs))))
    reports.sort(key=lambda r: r.window)
    names = list(PROPERTIES) + (["crashed"] if any("crashed" in r.results for r in reports) else [])
    counts = {p: {"pass": 0, "fail": 0, "skip": 0} for p in names}
    failures = []
    for r in reports:
        for p in names:
            v = r.results.get(p)
            counts[p]["pass" if v is True else "fail" if v is False else "skip"] += 1
            if v is False:
                failures.append({"permutation": list(r.window), "property": p, "detail": r.details.get(p, "")})
    return SweepSummary(config.n, config.truncation, len(reports), counts, failures)
