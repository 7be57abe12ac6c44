"""Exact lower/upper bounds on FHS set parameters, all in integer arithmetic.

For a set of N length-n sequences over ell symbols, two classical lower
bounds on the maximum nontrivial Hamming correlation are

    PF1 = (nN - ell) * n / ((nN - 1) * ell)
    PF2 = (2*I*nN - (I+1)*I*ell) / ((nN - 1) * N),   I = floor(nN / ell),

and their ceilings coincide whenever nN >= ell.  Writing nN = I*ell + J,
the exact difference is PF2 - PF1 = (ell - J)*J / ((nN - 1) * ell * N);
cross-multiplied by the common denominator this is a pure integer identity,
which is what the sweep checks.  The Singleton and sphere-packing bounds cap
the set size N from above.  No floating point anywhere in this module.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from .errors import DegenerateParameters, InconsistentParameters, PreconditionViolated


def _ceil_ratio(a: int, b: int) -> int:
    # exact ceiling of a/b for b > 0, any sign of a
    return -(-a // b)


def peng_fan_1(n: int, count: int, ell: int) -> int:
    """Ceiling of the first Peng-Fan lower bound on M(F)."""
    _check_pf(n, count, ell)
    nn = n * count
    return _ceil_ratio((nn - ell) * n, (nn - 1) * ell)


def peng_fan_2(n: int, count: int, ell: int) -> int:
    """Ceiling of the second Peng-Fan lower bound on M(F)."""
    _check_pf(n, count, ell)
    nn = n * count
    big_i = nn // ell
    return _ceil_ratio(2 * big_i * nn - (big_i + 1) * big_i * ell, (nn - 1) * count)


def _check_pf(n, count, ell):
    if n < 1 or count < 1 or ell < 1 or n * count < 2:
        raise DegenerateParameters(
            f"need n, N, ell >= 1 and nN >= 2, got ({n}, {count}, {ell})"
        )


def singleton_max_size(n: int, lam: int, ell: int) -> int:
    """Upper bound on N from the Singleton bound: floor(ell^(lam+1) / n)."""
    if not (0 <= lam < n and ell > 1):
        raise PreconditionViolated(
            f"need 0 <= lambda < n and ell > 1, got ({n}, {lam}, {ell})"
        )
    return ell ** (lam + 1) // n


def sphere_packing_max_size(n: int, lam: int, ell: int) -> int:
    """Upper bound on N from the sphere-packing bound:
    floor( ell^n / ( n * sum_{i<=floor((n-lam-1)/2)} C(n,i) (ell-1)^i ) )."""
    if not (0 <= lam < n and ell > 1):
        raise PreconditionViolated(
            f"need 0 <= lambda < n and ell > 1, got ({n}, {lam}, {ell})"
        )
    radius = (n - lam - 1) // 2
    ball = sum(comb(n, i) * (ell - 1) ** i for i in range(radius + 1))
    return ell**n // (n * ball)


@dataclass(frozen=True)
class BoundReport:
    n: int
    N: int
    ell: int
    lam: int
    I: int
    J: int
    pf1: int
    pf2: int
    singleton_max_N: int
    sphere_max_N: int
    meets_peng_fan: bool
    meets_singleton: bool
    meets_sphere: bool
    lambda_source: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "ell": self.ell,
            "lambda": self.lam,
            "I": self.I,
            "J": self.J,
            "pf1": self.pf1,
            "pf2": self.pf2,
            "singleton_max_N": str(self.singleton_max_N),
            "sphere_max_N": str(self.sphere_max_N),
            "meets": {
                "peng_fan": self.meets_peng_fan,
                "singleton": self.meets_singleton,
                "sphere": self.meets_sphere,
            },
            "lambda_source": self.lambda_source,
        }


def optimality_report(
    n: int, count: int, ell: int, lam: int, lambda_source: str = "claimed"
) -> BoundReport:
    """Evaluate all four bounds at (n, N, ell, lambda) and record which are met."""
    if n < 1 or count < 1 or ell <= 1 or not 0 <= lam < n or n * count < 2:
        raise InconsistentParameters(
            f"parameters ({n}, {count}, {lam}; {ell}) are out of range"
        )
    nn = n * count
    big_i, j = divmod(nn, ell)
    pf1 = peng_fan_1(n, count, ell)
    pf2 = peng_fan_2(n, count, ell)
    singleton = singleton_max_size(n, lam, ell)
    sphere = sphere_packing_max_size(n, lam, ell)
    return BoundReport(
        n=n,
        N=count,
        ell=ell,
        lam=lam,
        I=big_i,
        J=j,
        pf1=pf1,
        pf2=pf2,
        singleton_max_N=singleton,
        sphere_max_N=sphere,
        meets_peng_fan=(lam == pf2),
        meets_singleton=(count == singleton),
        meets_sphere=(count == sphere),
        lambda_source=lambda_source,
    )


@dataclass(frozen=True)
class PfSweepReport:
    n_max: int
    N_max: int
    ell_max: int
    triples_checked: int
    counterexamples: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "grid": {"n_max": self.n_max, "N_max": self.N_max, "ell_max": self.ell_max},
            "triples_checked": self.triples_checked,
            "counterexamples": [list(c) for c in self.counterexamples],
            "ok": self.ok,
        }


def _sweep_chunk(args) -> tuple[int, list[tuple]]:
    n_lo, n_hi, count_max, ell_max = args
    checked = 0
    bad = []
    for n in range(n_lo, n_hi):
        for count in range(1, count_max + 1):
            nn = n * count
            if nn < 2:
                continue
            top = min(ell_max, nn)
            for ell in range(1, top + 1):
                big_i, j = divmod(nn, ell)
                a1 = (nn - ell) * n
                b1 = (nn - 1) * ell
                a2 = 2 * big_i * nn - (big_i + 1) * big_i * ell
                b2 = (nn - 1) * count
                checked += 1
                # equal ceilings; exact difference and sign, cross-multiplied
                # by the common denominator (nN-1)*ell*N
                if (
                    -(-a1 // b1) != -(-a2 // b2)
                    or a2 * ell - a1 * count != (ell - j) * j
                    or a2 * ell < a1 * count
                ):
                    bad.append((n, count, ell, -(-a1 // b1), -(-a2 // b2)))
    return checked, bad


def pf_identity_sweep(
    n_max: int, count_max: int, ell_max: int, threads: int = 1
) -> PfSweepReport:
    """Check both Peng-Fan assertions on every grid triple with nN >= max(ell, 2):
    the two ceilings agree, and the difference identity holds exactly."""
    if n_max < 1 or count_max < 1 or ell_max < 1:
        raise DegenerateParameters("grid limits must be positive")
    # pool spawn costs dwarf small grids; stay sequential below ~10^5 cells
    if threads > 1 and n_max > 1 and n_max * count_max * ell_max >= 100_000:
        step = max(1, n_max // (4 * threads))
        chunks = [
            (lo, min(lo + step, n_max + 1), count_max, ell_max)
            for lo in range(1, n_max + 1, step)
        ]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_sweep_chunk, chunks))
    else:
        results = [_sweep_chunk((1, n_max + 1, count_max, ell_max))]
    checked = sum(r[0] for r in results)
    bad = sorted(c for r in results for c in r[1])
    return PfSweepReport(n_max, count_max, ell_max, checked, tuple(bad))
